#pragma once

#include <stdexcept>
#include <string>

namespace kcross {

// Malformed input values (bad blocks, bad JSON shapes, bad arguments).
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// Structurally valid input outside an operation's domain (membership or
// image failures, missing rewrite patterns).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Violation of an invariant the algorithms guarantee; signals a bug, not
// a bad input. Never compiled out.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void check_internal(bool ok, const std::string& what) {
    if (!ok) throw internal_error(what);
}

}  // namespace kcross
