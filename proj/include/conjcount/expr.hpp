#pragma once

#include "conjcount/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

namespace conjcount {

namespace expr_detail {

struct Parser {
    const std::string& src;
    size_t pos = 0;
    const std::vector<std::string>& vars;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
    }

    SparsePolynomial parse_expr() {
        SparsePolynomial out = parse_term();
        while (true) {
            if (eat('+')) out += parse_term();
            else if (eat('-')) out -= parse_term();
            else return out;
        }
    }

    SparsePolynomial parse_term() {
        SparsePolynomial out = parse_factor();
        while (eat('*')) out = out * parse_factor();
        return out;
    }

    SparsePolynomial parse_factor() {
        SparsePolynomial base = parse_base();
        if (eat('^')) {
            skip_ws();
            size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            if (pos == start) fail("expected integer exponent");
            base = base.pow(std::stoi(src.substr(start, pos - start)));
        }
        return base;
    }

    SparsePolynomial parse_base() {
        skip_ws();
        if (eat('(')) {
            SparsePolynomial inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (peek() == '-') {
            ++pos;
            return -parse_factor();
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            std::string num = src.substr(start, pos - start);
            if (eat('/')) {
                skip_ws();
                size_t ds = pos;
                while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
                if (pos == ds) fail("expected denominator");
                return SparsePolynomial::constant(
                    static_cast<int>(vars.size()),
                    make_rat(Int(num), Int(src.substr(ds, pos - ds))));
            }
            return SparsePolynomial::constant(static_cast<int>(vars.size()), Rat(Int(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
            size_t start = pos;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
                ++pos;
            std::string name = src.substr(start, pos - start);
            auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end()) fail("unknown variable '" + name + "'");
            return SparsePolynomial::variable(static_cast<int>(vars.size()),
                                              static_cast<int>(it - vars.begin()));
        }
        fail("unexpected character");
    }
};

} // namespace expr_detail

/// Parses a polynomial expression (+, -, *, ^, parentheses, rational
/// constants "p/q") over the named variables.
inline SparsePolynomial parse_polynomial(const std::string& src, const std::vector<std::string>& vars) {
    expr_detail::Parser p{src, 0, vars};
    SparsePolynomial out = p.parse_expr();
    p.skip_ws();
    if (p.pos != src.size())
        throw std::invalid_argument("parse error: trailing input '" + src.substr(p.pos) + "'");
    return out;
}

/// Identifiers appearing in an expression, in order of first appearance.
inline std::vector<std::string> collect_identifiers(const std::string& src) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < src.size()) {
        if (std::isalpha(static_cast<unsigned char>(src[i]))) {
            size_t start = i;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            std::string name = src.substr(start, i - start);
            if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
        } else {
            ++i;
        }
    }
    return out;
}

/// Canonical variable table for a comma-separated component list: the
/// letters x, y, z, w keep that order, anything else sorts lexicographically.
inline std::vector<std::string> canonical_variables(const std::vector<std::string>& exprs) {
    std::vector<std::string> names;
    for (const auto& e : exprs)
        for (const auto& id : collect_identifiers(e))
            if (std::find(names.begin(), names.end(), id) == names.end()) names.push_back(id);
    auto rank = [](const std::string& s) {
        static const std::vector<std::string> letters = {"x", "y", "z", "w"};
        auto it = std::find(letters.begin(), letters.end(), s);
        return it == letters.end() ? static_cast<int>(letters.size()) : static_cast<int>(it - letters.begin());
    };
    std::sort(names.begin(), names.end(), [&](const std::string& a, const std::string& b) {
        if (rank(a) != rank(b)) return rank(a) < rank(b);
        return a < b;
    });
    return names;
}

inline std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        } else if (s[i] == '(') {
            ++depth;
        } else if (s[i] == ')') {
            --depth;
        }
    }
    return out;
}

/// Parses "p0, p1, ..." into a polynomial map over the canonical variables.
inline PolynomialMap parse_polynomial_map(const std::string& src) {
    auto parts = split_commas(src);
    auto vars = canonical_variables(parts);
    if (vars.empty()) vars.push_back("x");
    std::vector<SparsePolynomial> comps;
    for (const auto& part : parts) comps.push_back(parse_polynomial(part, vars));
    return PolynomialMap(comps);
}

} // namespace conjcount
