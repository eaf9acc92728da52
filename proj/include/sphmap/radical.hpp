#pragma once

/*
 * RadicalScalar: exact elements of the ring  Q[sqrt(2), sqrt(3), sqrt(5), ...]
 * spanned over the rationals by square roots of squarefree positive integers.
 *
 * A value is stored as a map  radicand -> rational coefficient, representing
 *   sum_n  q_n * sqrt(n),
 * where every key n is squarefree and n = 1 carries the rational part.
 * The ring is closed under + and *:  sqrt(a)*sqrt(b) = s*sqrt(d)  with d the
 * squarefree part of a*b and s^2 = a*b/d.  Division is supported only by
 * single-term values (q*sqrt(n)), which is all the geometry ever needs.
 */

#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "sphmap/errors.hpp"

namespace sphmap {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// n = square * squarefree; returns {squarefree, sqrt(square)}.
std::pair<std::uint64_t, std::uint64_t> squarefree_part(std::uint64_t n);

class RadicalScalar {
public:
    RadicalScalar() = default;  // zero
    RadicalScalar(int value);
    RadicalScalar(const Rational& value);

    // q * sqrt(n) with n >= 1 arbitrary (reduced to squarefree form here).
    static RadicalScalar term(const Rational& q, std::uint64_t n);
    static RadicalScalar sqrt_of(std::uint64_t n) { return term(1, n); }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    // Throws UnsupportedDivision when a radical part is present.
    Rational as_rational() const;

    bool operator==(const RadicalScalar& other) const { return terms_ == other.terms_; }
    bool operator!=(const RadicalScalar& other) const { return !(*this == other); }

    RadicalScalar operator-() const;
    RadicalScalar operator+(const RadicalScalar& other) const;
    RadicalScalar operator-(const RadicalScalar& other) const;
    RadicalScalar operator*(const RadicalScalar& other) const;
    RadicalScalar& operator+=(const RadicalScalar& other);
    RadicalScalar& operator-=(const RadicalScalar& other);
    RadicalScalar& operator*=(const RadicalScalar& other);

    // (q*sqrt(n))^-1 = (1/(q n)) * sqrt(n).  Zero or multi-term input throws.
    RadicalScalar inverted() const;

    // Square root of a non-negative rational value, e.g. sqrt(3/4) = (1/2)sqrt(3).
    // Anything else throws RadiusNotRepresentable.
    RadicalScalar sqrt() const;

    double to_double() const;

    // Canonical text, e.g. "1/2", "sqrt(6)", "-3/4*sqrt(2)", "1 + sqrt(2)".
    std::string str() const;

    const std::map<std::uint64_t, Rational>& terms() const { return terms_; }

private:
    std::map<std::uint64_t, Rational> terms_;

    void add_term(std::uint64_t radicand, const Rational& q);
};

RadicalScalar operator*(const Rational& q, const RadicalScalar& s);

}  // namespace sphmap
