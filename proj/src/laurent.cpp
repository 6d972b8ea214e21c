#include "ktwist/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace ktwist {

LaurentPoly::LaurentPoly(long value) {
    if (value != 0) terms_[0] = value;
}

LaurentPoly LaurentPoly::monomial(const Integer& coeff, int exponent) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exponent] = coeff;
    return p;
}

const Integer& LaurentPoly::coeff(int exponent) const {
    static const Integer zero = 0;
    auto it = terms_.find(exponent);
    return it == terms_.end() ? zero : it->second;
}

int LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::set_coeff(int exponent, Integer value) {
    if (value == 0)
        terms_.erase(exponent);
    else
        terms_[exponent] = std::move(value);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) set_coeff(e, coeff(e) + c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) set_coeff(e, coeff(e) - c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly r = *this;
    r += other;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
    LaurentPoly r = *this;
    r -= other;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) r.set_coeff(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::inverted_variable() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + shift] = c;
    return r;
}

Integer LaurentPoly::evaluate(const Integer& x) const {
    if (terms_.empty()) return 0;
    if (x == 0) throw std::domain_error("cannot evaluate Laurent polynomial at 0");
    // Evaluate p(x)*x^(-min) by Horner, then divide by x^(-min) exactly.
    int lo = min_exponent();
    int hi = max_exponent();
    Integer acc = 0;
    for (int e = hi; e >= lo; --e) {
        acc *= x;
        acc += coeff(e);
    }
    if (lo < 0) {
        Integer denom = 1;
        for (int i = 0; i < -lo; ++i) denom *= x;
        if (acc % denom != 0) throw std::domain_error("non-integral Laurent evaluation");
        acc /= denom;
    }
    return acc;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return LaurentPoly();
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const int dlead = divisor.max_exponent();
    const Integer& dc = divisor.terms().rbegin()->second;
    while (!rem.is_zero() && rem.max_exponent() - rem.min_exponent() >= dlead - divisor.min_exponent()) {
        int e = rem.max_exponent() - dlead;
        Integer c = rem.coeff(rem.max_exponent());
        if (c % dc != 0) throw std::domain_error("inexact Laurent division");
        Integer q = c / dc;
        LaurentPoly qm = monomial(q, e);
        quot += qm;
        rem -= qm * divisor;
    }
    if (!rem.is_zero()) throw std::domain_error("inexact Laurent division");
    return quot;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        if (e == 0) {
            out << c;
        } else {
            out << c << var << "^" << e;
        }
    }
    return out.str();
}

}  // namespace ktwist
