#include "sphmap/parser.hpp"

#include <cctype>

#include "sphmap/gallery.hpp"

namespace sphmap {

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, int nvars) : text_(text), nvars_(nvars) {}

    Polynomial parse() {
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("end of input or operator");
        return p;
    }

    // Highest 1-based variable index mentioned anywhere; drives inference.
    static int scan_max_var(const std::string& text) {
        int max_var = 1;
        std::size_t i = 0;
        while (i < text.size()) {
            char c = text[i];
            if (c == 's' && text.compare(i, 4, "sqrt") == 0) {
                i += 4;
                continue;
            }
            if (c == 'x') {
                std::size_t j = i + 1;
                int idx = 0;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                    idx = idx * 10 + (text[j] - '0');
                    ++j;
                }
                max_var = std::max(max_var, j == i + 1 ? 1 : idx);
                i = j;
                continue;
            }
            if (c == 'y') max_var = std::max(max_var, 2);
            if (c == 'z') max_var = std::max(max_var, 3);
            if (c == 'w') max_var = std::max(max_var, 4);
            ++i;
        }
        return max_var;
    }

private:
    const std::string& text_;
    int nvars_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& expected) { throw ParseError(pos_, expected); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_char(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept_char(char c) {
        if (!peek_char(c)) return false;
        ++pos_;
        return true;
    }

    void expect_char(char c) {
        if (!accept_char(c)) fail(std::string("'") + c + "'");
    }

    bool digit_ahead(std::size_t offset = 0) {
        return pos_ + offset < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_ + offset]));
    }

    std::uint64_t parse_uint() {
        skip_ws();
        if (!digit_ahead()) fail("unsigned integer");
        std::uint64_t v = 0;
        while (digit_ahead()) v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
        return v;
    }

    Int parse_int_magnitude() {
        skip_ws();
        if (!digit_ahead()) fail("integer");
        Int v = 0;
        while (digit_ahead()) v = v * 10 + (text_[pos_++] - '0');
        return v;
    }

    Polynomial parse_expr() {
        skip_ws();
        bool negate = false;
        if (peek_char('-')) {
            ++pos_;
            negate = true;
        } else if (peek_char('+')) {
            ++pos_;
        }
        Polynomial acc = parse_term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            if (accept_char('+')) {
                acc += parse_term();
            } else if (accept_char('-')) {
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (accept_char('*')) acc = acc * parse_factor();
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (accept_char('^')) {
            std::uint64_t e = parse_uint();
            if (e > 64) fail("exponent <= 64");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial parse_base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("rational, sqrt, variable or '('");
        char c = text_[pos_];
        if (accept_char('(')) {
            Polynomial inner = parse_expr();
            expect_char(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            ((c == '-' || c == '+') && digit_ahead(1))) {
            return Polynomial::constant(nvars_, RadicalScalar(parse_rational_token()));
        }
        if (c == 's') {
            if (text_.compare(pos_, 4, "sqrt") != 0) fail("'sqrt'");
            pos_ += 4;
            expect_char('(');
            std::uint64_t n = parse_uint();
            expect_char(')');
            if (n == 0) fail("positive radicand");
            return Polynomial::constant(nvars_, RadicalScalar::sqrt_of(n));
        }
        return parse_variable();
    }

    Rational parse_rational_token() {
        skip_ws();
        bool neg = false;
        if (peek_char('-')) {
            ++pos_;
            neg = true;
        } else if (peek_char('+')) {
            ++pos_;
        }
        Int num = parse_int_magnitude();
        Int den = 1;
        if (accept_char('/')) {
            den = parse_int_magnitude();
            if (den == 0) fail("nonzero denominator");
        }
        Rational q(num, den);
        return neg ? Rational(-q) : q;
    }

    Polynomial parse_variable() {
        skip_ws();
        if (pos_ >= text_.size()) fail("variable");
        char c = text_[pos_];
        int index;
        if (c == 'x') {
            ++pos_;
            if (digit_ahead()) {
                std::uint64_t idx = parse_uint();
                if (idx == 0) fail("variable index >= 1");
                index = static_cast<int>(idx) - 1;
            } else {
                index = 0;
            }
        } else if (c == 'y') {
            ++pos_;
            index = 1;
        } else if (c == 'z') {
            ++pos_;
            index = 2;
        } else if (c == 'w') {
            ++pos_;
            index = 3;
        } else {
            fail("rational, sqrt, variable or '('");
        }
        if (index >= nvars_)
            throw ParseError(pos_, "variable within the declared count of " +
                                       std::to_string(nvars_));
        return Polynomial::variable(nvars_, index);
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int nvars) {
    if (nvars < 0) nvars = PolyParser::scan_max_var(text);
    return PolyParser(text, nvars).parse();
}

Rational parse_rational(const std::string& text) {
    Polynomial p = parse_polynomial(text, 1);
    if (!p.is_constant()) throw ParseError(0, "a rational constant");
    RadicalScalar c = p.constant_value();
    if (!c.is_rational()) throw ParseError(0, "a rational constant");
    return c.as_rational();
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Splits "f(a, b, c)" arguments at top-level commas.
std::vector<std::string> split_args(const std::string& inner) {
    std::vector<std::string> out;
    int depth = 0;
    std::string current;
    for (char c : inner) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(current));
            current.clear();
            continue;
        }
        current += c;
    }
    if (!trim(current).empty() || !out.empty()) out.push_back(trim(current));
    return out;
}

MapSource auto_meta(PolyMap map, std::string description) {
    SphereMapMeta meta = sphere_restriction_check(map);
    return {std::move(map), meta, std::move(description)};
}

}  // namespace

MapSource parse_map_source(const std::string& text) {
    std::string s = trim(text);
    if (s.empty()) throw ParseError(0, "a map source");

    std::size_t open = s.find('(');
    bool is_call = open != std::string::npos && s.back() == ')' &&
                   s.find(':') > open;  // keeps circle:<k> out of the call branch
    if (!is_call) {
        std::string name = s;
        if (name.rfind("gallery:", 0) == 0) name = name.substr(8);
        GalleryEntry entry = named_form(name);
        return {entry.map, entry.meta, "gallery:" + entry.name};
    }

    std::string func = trim(s.substr(0, open));
    std::vector<std::string> args = split_args(s.substr(open + 1, s.size() - open - 2));

    auto need_args = [&](std::size_t n) {
        if (args.size() != n)
            throw ParseError(0, func + " takes " + std::to_string(n) + " arguments");
    };

    if (func == "map") {
        if (args.empty()) throw ParseError(0, "at least one component");
        int nvars = 1;
        for (const auto& a : args) nvars = std::max(nvars, PolyParser::scan_max_var(a));
        std::vector<Polynomial> comps;
        comps.reserve(args.size());
        for (const auto& a : args) comps.push_back(parse_polynomial(a, nvars));
        return auto_meta(PolyMap(std::move(comps)), "inline map");
    }
    if (func == "xg") {
        need_args(1);
        MapSource inner = parse_map_source(args[0]);
        return auto_meta(x_times_g(inner.map), "xg(" + inner.description + ")");
    }
    if (func == "tmap") {
        need_args(1);
        MapSource inner = parse_map_source(args[0]);
        return auto_meta(t_transform_curve(inner.map), "tmap(" + inner.description + ")");
    }
    if (func == "rmul") {
        need_args(2);
        MapSource inner = parse_map_source(args[0]);
        int p = static_cast<int>(parse_rational(args[1]).convert_to<long>());
        return auto_meta(radial_multiple(inner.map, p),
                         "rmul(" + inner.description + ", " + args[1] + ")");
    }
    if (func == "diagonal" || func == "product") {
        need_args(3);
        MapSource a = parse_map_source(args[0]);
        MapSource b = parse_map_source(args[1]);
        RadicalScalar r1_sq{parse_rational(args[2])};
        auto [map, meta] = func == "diagonal" ? diagonal_sum(a.map, b.map, r1_sq)
                                              : product_map(a.map, b.map, r1_sq);
        return {std::move(map), meta,
                func + "(" + a.description + ", " + b.description + ", " + args[2] + ")"};
    }
    if (func == "dstack") {
        need_args(2);
        MapSource a = parse_map_source(args[0]);
        MapSource b = parse_map_source(args[1]);
        auto [map, meta] = diagonal_stack(a.map, b.map);
        return {std::move(map), meta, "dstack(" + a.description + ", " + b.description + ")"};
    }
    throw ParseError(0, "one of map/xg/tmap/rmul/diagonal/product/dstack or a gallery name");
}

}  // namespace sphmap
