#pragma once

/*
 * Sparse multivariate polynomials over RadicalScalar.
 *
 * A monomial is its exponent vector (one entry per variable); a polynomial is
 * a map monomial -> coefficient with no zero coefficients stored, so equality
 * of term maps is equality of polynomials.  The map is ordered by the
 * exponent-vector lexicographic order with x1 highest, which doubles as the
 * term order for division: rbegin() is the leading term.
 *
 * normal_form() reduces modulo the sphere ideal (x1^2+...+xN^2 - 1); the
 * single generator is a Groebner basis of the ideal it generates, so the
 * remainder is canonical and two polynomials agree on the unit sphere iff
 * their normal forms are equal.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sphmap/radical.hpp"

namespace sphmap {

using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

class Polynomial {
public:
    explicit Polynomial(int nvars);

    static Polynomial constant(int nvars, const RadicalScalar& c);
    static Polynomial variable(int nvars, int index);
    static Polynomial monomial(int nvars, const Monomial& m, const RadicalScalar& c);
    // x1^2 + ... + xN^2 restricted to variables [lo, hi); the full range by default.
    static Polynomial radius_sq(int nvars, int lo = 0, int hi = -1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, RadicalScalar>& terms() const { return terms_; }

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);

    Polynomial scaled(const RadicalScalar& c) const;
    Polynomial pow(unsigned exponent) const;

    Polynomial partial_derivative(int index) const;

    RadicalScalar evaluate(const std::vector<Rational>& point) const;
    double evaluate(const std::vector<double>& point) const;

    // Canonical remainder modulo x1^2+...+xN^2-1 (or the product-sphere ideal
    // when block boundaries are supplied: one generator per block).
    Polynomial normal_form() const;
    Polynomial normal_form(const std::vector<std::pair<int, int>>& blocks) const;

    std::optional<int> homogeneous_degree() const;

    // Exact quotient by x1^2+...+xN^2 when it exists; verified by re-multiplication.
    std::optional<Polynomial> divide_by_radius_sq() const;
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

    int degree() const;  // total degree, -1 for the zero polynomial
    bool is_constant() const;
    RadicalScalar constant_value() const;  // coefficient of the 1-monomial

    // Canonical text in descending monomial order; parses back to the same
    // polynomial under the expression grammar.
    std::string str() const;

private:
    int nvars_;
    std::map<Monomial, RadicalScalar> terms_;

    void add_term(const Monomial& m, const RadicalScalar& c);
    void check_same_space(const Polynomial& other) const;
};

Polynomial operator*(const RadicalScalar& c, const Polynomial& p);

}  // namespace sphmap
