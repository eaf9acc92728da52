#include "sphmap/radical.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace sphmap {

std::pair<std::uint64_t, std::uint64_t> squarefree_part(std::uint64_t n) {
    std::uint64_t square_root = 1;
    std::uint64_t free = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        unsigned exp = 0;
        while (n % p == 0) {
            n /= p;
            ++exp;
        }
        for (unsigned i = 0; i + 1 < exp; i += 2) square_root *= p;
        if (exp % 2 == 1) free *= p;
    }
    free *= n;  // remaining prime factor, exponent 1
    return {free, square_root};
}

RadicalScalar::RadicalScalar(int value) {
    if (value != 0) terms_[1] = Rational(value);
}

RadicalScalar::RadicalScalar(const Rational& value) {
    if (value != 0) terms_[1] = value;
}

RadicalScalar RadicalScalar::term(const Rational& q, std::uint64_t n) {
    if (n == 0) throw Error("radicand must be positive");
    RadicalScalar out;
    if (q == 0) return out;
    auto [free, root] = squarefree_part(n);
    out.terms_[free] = q * Rational(root);
    return out;
}

bool RadicalScalar::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational RadicalScalar::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw UnsupportedDivision("value has an irrational part: " + str());
    return terms_.begin()->second;
}

void RadicalScalar::add_term(std::uint64_t radicand, const Rational& q) {
    auto it = terms_.find(radicand);
    if (it == terms_.end()) {
        if (q != 0) terms_[radicand] = q;
        return;
    }
    it->second += q;
    if (it->second == 0) terms_.erase(it);
}

RadicalScalar RadicalScalar::operator-() const {
    RadicalScalar out;
    for (const auto& [n, q] : terms_) out.terms_[n] = -q;
    return out;
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& other) {
    for (const auto& [n, q] : other.terms_) add_term(n, q);
    return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& other) {
    for (const auto& [n, q] : other.terms_) add_term(n, -q);
    return *this;
}

RadicalScalar RadicalScalar::operator+(const RadicalScalar& other) const {
    RadicalScalar out = *this;
    out += other;
    return out;
}

RadicalScalar RadicalScalar::operator-(const RadicalScalar& other) const {
    RadicalScalar out = *this;
    out -= other;
    return out;
}

RadicalScalar RadicalScalar::operator*(const RadicalScalar& other) const {
    RadicalScalar out;
    for (const auto& [a, qa] : terms_) {
        for (const auto& [b, qb] : other.terms_) {
            // a, b squarefree: with g = gcd(a,b), sqrt(a)sqrt(b) = g*sqrt(ab/g^2)
            // and ab/g^2 is squarefree again.
            std::uint64_t g = std::gcd(a, b);
            std::uint64_t d = (a / g) * (b / g);
            out.add_term(d, qa * qb * Rational(g));
        }
    }
    return out;
}

RadicalScalar& RadicalScalar::operator*=(const RadicalScalar& other) {
    *this = *this * other;
    return *this;
}

RadicalScalar RadicalScalar::inverted() const {
    if (terms_.empty()) throw UnsupportedDivision("division by zero");
    if (terms_.size() != 1)
        throw UnsupportedDivision("division by multi-term radical value: " + str());
    const auto& [n, q] = *terms_.begin();
    RadicalScalar out;
    out.terms_[n] = Rational(1) / (q * Rational(n));
    return out;
}

RadicalScalar RadicalScalar::sqrt() const {
    if (terms_.empty()) return RadicalScalar();
    if (!is_rational())
        throw RadiusNotRepresentable("sqrt of non-rational value " + str());
    Rational q = terms_.begin()->second;
    if (q < 0) throw RadiusNotRepresentable("sqrt of negative value " + str());
    // sqrt(p/den) = sqrt(p*den)/den
    Int p = numerator(q) * denominator(q);
    if (p > Int(std::uint64_t(1) << 62))
        throw RadiusNotRepresentable("radicand too large: " + str());
    auto [free, root] = squarefree_part(p.convert_to<std::uint64_t>());
    RadicalScalar out;
    out.terms_[free] = Rational(root) / Rational(denominator(q));
    return out;
}

namespace {

double cached_sqrt(std::uint64_t n) {
    thread_local std::unordered_map<std::uint64_t, double> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    double v = std::sqrt(static_cast<double>(n));
    cache.emplace(n, v);
    return v;
}

}  // namespace

double RadicalScalar::to_double() const {
    double acc = 0.0;
    for (const auto& [n, q] : terms_) acc += q.convert_to<double>() * cached_sqrt(n);
    return acc;
}

std::string RadicalScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, q] : terms_) {
        Rational mag = q < 0 ? Rational(-q) : q;
        if (first) {
            if (q < 0) os << "-";
        } else {
            os << (q < 0 ? " - " : " + ");
        }
        first = false;
        if (n == 1) {
            os << mag;
        } else if (mag == 1) {
            os << "sqrt(" << n << ")";
        } else {
            os << mag << "*sqrt(" << n << ")";
        }
    }
    return os.str();
}

RadicalScalar operator*(const Rational& q, const RadicalScalar& s) {
    return RadicalScalar(q) * s;
}

}  // namespace sphmap
