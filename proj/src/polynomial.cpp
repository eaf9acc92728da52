#include "sphmap/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace sphmap {

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw DimensionMismatch("polynomial needs at least one variable");
}

Polynomial Polynomial::constant(int nvars, const RadicalScalar& c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_[Monomial(nvars, 0)] = c;
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    if (index < 0 || index >= nvars)
        throw DimensionMismatch("variable index out of range");
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    p.terms_[m] = RadicalScalar(1);
    return p;
}

Polynomial Polynomial::monomial(int nvars, const Monomial& m, const RadicalScalar& c) {
    if (static_cast<int>(m.size()) != nvars)
        throw DimensionMismatch("monomial length does not match variable count");
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
}

Polynomial Polynomial::radius_sq(int nvars, int lo, int hi) {
    if (hi < 0) hi = nvars;
    Polynomial p(nvars);
    for (int i = lo; i < hi; ++i) {
        Monomial m(nvars, 0);
        m[i] = 2;
        p.terms_[m] = RadicalScalar(1);
    }
    return p;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
}

void Polynomial::check_same_space(const Polynomial& other) const {
    if (nvars_ != other.nvars_)
        throw DimensionMismatch("polynomials live in different variable counts");
}

void Polynomial::add_term(const Monomial& m, const RadicalScalar& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_same_space(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_same_space(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out = *this;
    out += other;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out = *this;
    out -= other;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_same_space(other);
    Polynomial out(nvars_);
    Monomial prod(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            for (int i = 0; i < nvars_; ++i) prod[i] = ma[i] + mb[i];
            out.add_term(prod, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const RadicalScalar& c) const {
    Polynomial out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : terms_) out.terms_[m] = coeff * c;
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial acc = Polynomial::constant(nvars_, RadicalScalar(1));
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u) acc = acc * base;
        base = base * base;
        exponent >>= 1u;
    }
    return acc;
}

Polynomial Polynomial::partial_derivative(int index) const {
    if (index < 0 || index >= nvars_)
        throw DimensionMismatch("derivative index out of range");
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[index] == 0) continue;
        Monomial d = m;
        d[index] -= 1;
        out.add_term(d, RadicalScalar(Rational(m[index])) * c);
    }
    return out;
}

namespace {

Rational rational_pow(const Rational& base, int exponent) {
    Rational acc(1);
    for (int i = 0; i < exponent; ++i) acc *= base;
    return acc;
}

}  // namespace

RadicalScalar Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw DimensionMismatch("evaluation point has wrong length");
    RadicalScalar acc;
    for (const auto& [m, c] : terms_) {
        Rational mono(1);
        for (int i = 0; i < nvars_; ++i)
            if (m[i] > 0) mono *= rational_pow(point[i], m[i]);
        acc += RadicalScalar(mono) * c;
    }
    return acc;
}

double Polynomial::evaluate(const std::vector<double>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw DimensionMismatch("evaluation point has wrong length");
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        double mono = 1.0;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < m[i]; ++e) mono *= point[i];
        acc += c.to_double() * mono;
    }
    return acc;
}

Polynomial Polynomial::normal_form() const {
    return normal_form({{0, nvars_}});
}

Polynomial Polynomial::normal_form(const std::vector<std::pair<int, int>>& blocks) const {
    // Reduce by g_b = sum_{i in block b} x_i^2 - 1.  Leading monomials are the
    // squares of the blocks' first variables, pairwise coprime, so the
    // generators are a Groebner basis and the remainder is reduction-order
    // independent.
    Polynomial r = *this;
    while (true) {
        Monomial m;
        RadicalScalar c;
        int blo = -1, bhi = -1;
        for (auto it = r.terms_.rbegin(); it != r.terms_.rend() && blo < 0; ++it) {
            for (const auto& [lo, hi] : blocks) {
                if (it->first[lo] >= 2) {
                    m = it->first;
                    c = it->second;
                    blo = lo;
                    bhi = hi;
                    break;
                }
            }
        }
        if (blo < 0) return r;
        // r -= c * x^(m / x_lo^2) * g_b ; this cancels the c*m term exactly
        Monomial t = m;
        t[blo] -= 2;
        r.add_term(t, c);
        for (int i = blo; i < bhi; ++i) {
            t[i] += 2;
            r.add_term(t, -c);
            t[i] -= 2;
        }
    }
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int k = total_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) != k) return std::nullopt;
    return k;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
    check_same_space(divisor);
    if (divisor.is_zero()) return std::nullopt;
    const auto& lead = *divisor.terms_.rbegin();
    Polynomial rem = *this;
    Polynomial quot(nvars_);
    while (!rem.is_zero()) {
        const auto& top = *rem.terms_.rbegin();
        Monomial q = top.first;
        for (int i = 0; i < nvars_; ++i) {
            q[i] -= lead.first[i];
            if (q[i] < 0) return std::nullopt;  // leading term not divisible: not exact
        }
        RadicalScalar coeff = top.second * lead.second.inverted();
        Polynomial piece = Polynomial::monomial(nvars_, q, coeff);
        quot += piece;
        rem -= piece * divisor;
    }
    if (quot * divisor != *this) return std::nullopt;  // exactness re-checked
    return quot;
}

std::optional<Polynomial> Polynomial::divide_by_radius_sq() const {
    return divide_exact(radius_sq(nvars_));
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

RadicalScalar Polynomial::constant_value() const {
    auto it = terms_.find(Monomial(nvars_, 0));
    return it == terms_.end() ? RadicalScalar() : it->second;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending monomial order, one printed term per (monomial, radicand) pair
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        for (const auto& [n, q] : it->second.terms()) {
            Rational mag = q < 0 ? Rational(-q) : q;
            if (first) {
                if (q < 0) os << "-";
            } else {
                os << (q < 0 ? " - " : " + ");
            }
            first = false;
            bool printed = false;
            if (mag != 1 || (n == 1 && total_degree(m) == 0)) {
                os << mag;
                printed = true;
            }
            if (n != 1) {
                if (printed) os << "*";
                os << "sqrt(" << n << ")";
                printed = true;
            }
            for (int i = 0; i < nvars_; ++i) {
                if (m[i] == 0) continue;
                if (printed) os << "*";
                os << "x" << (i + 1);
                if (m[i] > 1) os << "^" << m[i];
                printed = true;
            }
        }
    }
    return os.str();
}

Polynomial operator*(const RadicalScalar& c, const Polynomial& p) {
    return p.scaled(c);
}

}  // namespace sphmap
