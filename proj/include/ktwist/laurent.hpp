#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace ktwist {

using Integer = boost::multiprecision::cpp_int;

// Exact one-variable Laurent polynomial with arbitrary-precision integer
// coefficients.  Zero coefficients are never stored, so operator== is
// coefficient-wise equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long value);  // NOLINT(google-explicit-constructor)
    static LaurentPoly monomial(const Integer& coeff, int exponent);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Integer>& terms() const { return terms_; }

    const Integer& coeff(int exponent) const;
    int min_exponent() const;  // requires non-zero
    int max_exponent() const;  // requires non-zero

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& other) const;

    bool operator==(const LaurentPoly& other) const { return terms_ == other.terms_; }
    bool operator!=(const LaurentPoly& other) const { return terms_ != other.terms_; }

    // Substitutes x -> x^-1.
    LaurentPoly inverted_variable() const;
    // Multiplies by x^shift.
    LaurentPoly shifted(int shift) const;
    // Evaluates at an integer point (useful at x = -1).
    Integer evaluate(const Integer& x) const;

    // Exact division; throws std::domain_error when the division leaves a
    // remainder.
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    // Serialized with exponents ascending, e.g. "1x^-2 + -1x^-1 + 1".
    std::string to_string(const std::string& var = "x") const;

private:
    void set_coeff(int exponent, Integer value);

    std::map<int, Integer> terms_;
};

}  // namespace ktwist
