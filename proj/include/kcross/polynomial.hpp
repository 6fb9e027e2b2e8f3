#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kcross/bignat.hpp"
#include "kcross/error.hpp"

namespace kcross {

// Dense polynomial in t with exact nonnegative integer coefficients,
// index = power. No trailing zero coefficients; the zero polynomial has
// an empty coefficient list.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<BigNat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(BigNat v) {
        Polynomial p;
        if (!v.is_zero()) p.c_.push_back(std::move(v));
        return p;
    }

    // (1 + t)^m, coefficients C(m, j).
    static Polynomial one_plus_t_pow(int m);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const BigNat& coeff(int power) const {
        static const BigNat zero;
        if (power < 0 || power > degree()) return zero;
        return c_[static_cast<std::size_t>(power)];
    }

    const std::vector<BigNat>& coeffs() const { return c_; }

    void add_term(int power, const BigNat& v) {
        if (v.is_zero()) return;
        if (power < 0) throw validation_error("polynomial: negative power");
        if (static_cast<std::size_t>(power) >= c_.size())
            c_.resize(static_cast<std::size_t>(power) + 1);
        c_[static_cast<std::size_t>(power)] += v;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Polynomial r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, BigNat());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    Polynomial scaled(const BigNat& s) const {
        if (s.is_zero()) return {};
        Polynomial r;
        r.c_.reserve(c_.size());
        for (const auto& v : c_) r.c_.push_back(v * s);
        return r;
    }

    // Multiply by t^s.
    Polynomial shifted(int s) const {
        if (is_zero()) return {};
        if (s < 0) throw validation_error("polynomial: negative shift");
        Polynomial r;
        r.c_.assign(static_cast<std::size_t>(s), BigNat());
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    BigNat value_at_one() const {
        BigNat s;
        for (const auto& v : c_) s += v;
        return s;
    }

    // Coefficient sequence reads the same from both ends of its nonzero
    // support (e.g. the Narayana rows).
    bool palindromic() const {
        if (is_zero()) return true;
        std::size_t lo = 0;
        while (c_[lo].is_zero()) ++lo;
        std::size_t hi = c_.size() - 1;
        while (lo < hi) {
            if (c_[lo] != c_[hi]) return false;
            ++lo;
            --hi;
        }
        return true;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    static std::optional<int> first_mismatch(const Polynomial& a, const Polynomial& b) {
        int top = std::max(a.degree(), b.degree());
        for (int i = 0; i <= top; ++i)
            if (a.coeff(i) != b.coeff(i)) return i;
        return std::nullopt;
    }

    // "t + 6t^2 + 6t^3 + t^4"; "0" for the zero polynomial.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            bool unit = c_[i] == BigNat(1);
            if (i == 0) {
                out += c_[i].to_decimal();
            } else {
                if (!unit) out += c_[i].to_decimal();
                out += "t";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<BigNat> c_;
};

}  // namespace kcross
