#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kcross/error.hpp"

namespace kcross {

// Arbitrary-precision natural number. Limbs are little-endian base 2^32
// with no trailing zero limb; zero is the empty limb vector. Only the
// operations the counting code needs: add, multiply, divide by a small
// divisor, compare, decimal I/O.
class BigNat {
public:
    BigNat() = default;

    BigNat(std::uint64_t v) {  // NOLINT(google-explicit-constructor)
        if (v) limbs_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }

    static BigNat from_decimal(std::string_view s) {
        if (s.empty()) throw validation_error("bignat: empty decimal string");
        BigNat r;
        for (std::size_t i = 0; i < s.size(); i += 9) {
            std::size_t len = std::min<std::size_t>(9, s.size() - i);
            std::uint32_t chunk = 0, scale = 1;
            for (std::size_t j = 0; j < len; ++j) {
                char c = s[i + j];
                if (c < '0' || c > '9')
                    throw validation_error("bignat: non-digit in decimal string");
                chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
                scale *= 10;
            }
            r.mul_small(scale);
            r.add_small(chunk);
        }
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }

    friend bool operator==(const BigNat&, const BigNat&) = default;

    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() <=> b.limbs_.size();
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
        return std::strong_ordering::equal;
    }

    BigNat& operator+=(const BigNat& o) {
        if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t cur = carry + limbs_[i];
            if (i < o.limbs_.size()) cur += o.limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        return *this;
    }

    friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }

    friend BigNat operator*(const BigNat& a, const BigNat& b) {
        if (a.is_zero() || b.is_zero()) return {};
        BigNat r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] + carry +
                                    static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j];
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r.limbs_[i + b.limbs_.size()] = static_cast<std::uint32_t>(carry);
        }
        r.trim();
        return r;
    }

    BigNat& operator*=(const BigNat& o) { return *this = *this * o; }

    void mul_small(std::uint32_t m) {
        if (m == 0) { limbs_.clear(); return; }
        std::uint64_t carry = 0;
        for (auto& limb : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }

    void add_small(std::uint32_t v) { *this += BigNat(v); }

    // In-place division by a small divisor; returns the remainder.
    std::uint32_t div_small(std::uint32_t d) {
        if (d == 0) throw validation_error("bignat: division by zero");
        std::uint64_t rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return static_cast<std::uint32_t>(rem);
    }

    std::string to_decimal() const {
        if (is_zero()) return "0";
        BigNat tmp = *this;
        std::string out;
        while (!tmp.is_zero()) {
            std::uint32_t part = tmp.div_small(1000000000u);
            std::string digits = std::to_string(part);
            if (!tmp.is_zero()) digits.insert(0, 9 - digits.size(), '0');
            out.insert(0, digits);
        }
        return out;
    }

    bool fits_u64() const { return limbs_.size() <= 2; }

    std::uint64_t to_u64() const {
        if (!fits_u64()) throw domain_error("bignat: value does not fit in 64 bits");
        std::uint64_t v = 0;
        if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
        if (!limbs_.empty()) v |= limbs_[0];
        return v;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint32_t> limbs_;
};

}  // namespace kcross
