#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace yoneda {

using Z = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;

/// Bad user input (files, expressions, malformed data). CLI exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A mathematically justified refusal (non-admissible set, unproven
/// finite-dimensionality, failed hypotheses, ...). CLI exit code 1.
struct refusal : std::runtime_error {
    std::string code;
    refusal(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

/// Violated internal invariant; indicates a bug, not bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Coefficient field: GF(p) for a prime p, or the rationals.
/// GF(p) elements are canonical representatives 0..p-1; rationals are kept
/// in lowest terms with positive denominator (cpp_rational normalizes).
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    static Field prime(std::int64_t p);

    bool is_rational() const { return p_ == 0; }
    std::int64_t p() const { return p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    /// Canonical form of a scalar in this field.
    Q normalize(const Q& x) const;
    /// Parse "a" or "a/b" (decimal strings).
    Q parse(const std::string& s) const;
    std::string format(const Q& x) const;
    std::string name() const;

private:
    std::int64_t p_ = 0; // 0 = rationals
};

} // namespace yoneda
