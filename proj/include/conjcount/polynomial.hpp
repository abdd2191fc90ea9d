#pragma once

#include "conjcount/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace conjcount {

using ExpVec = std::vector<int>;

/// Multivariate polynomial with exact rational coefficients and a fixed
/// arity. Dense exponent vectors per term; no stored term has a zero
/// coefficient. Arithmetic between mismatched arities throws.
class SparsePolynomial {
  public:
    static constexpr int kMaxArity = 16;

    SparsePolynomial() : arity_(1) {}
    explicit SparsePolynomial(int arity) : arity_(arity) { check_arity(arity); }

    static SparsePolynomial constant(int arity, const Rat& c) {
        SparsePolynomial p(arity);
        if (c != 0) p.terms_[ExpVec(arity, 0)] = c;
        return p;
    }
    static SparsePolynomial variable(int arity, int index, int power = 1) {
        SparsePolynomial p(arity);
        if (index < 0 || index >= arity)
            throw std::invalid_argument("SparsePolynomial::variable: index out of range");
        ExpVec e(arity, 0);
        e[index] = power;
        p.terms_[e] = 1;
        return p;
    }
    static SparsePolynomial monomial(const ExpVec& exps, const Rat& c) {
        SparsePolynomial p(static_cast<int>(exps.size()));
        if (c != 0) p.terms_[exps] = c;
        return p;
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, Rat>& terms() const { return terms_; }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            if (s > d) d = s;
        }
        return d; // -1 for the zero polynomial
    }

    int degree_in(int var) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    bool is_homogeneous(int* degree_out = nullptr) const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            if (d == -1) d = s;
            else if (s != d) return false;
        }
        if (degree_out) *degree_out = d;
        return true;
    }

    void add_term(const ExpVec& e, const Rat& c) {
        if (static_cast<int>(e.size()) != arity_)
            throw std::invalid_argument("add_term: exponent arity mismatch");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePolynomial& operator+=(const SparsePolynomial& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SparsePolynomial& operator-=(const SparsePolynomial& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }

    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
        a.check_same(b);
        SparsePolynomial out(a.arity_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e(a.arity_);
                for (int i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    SparsePolynomial& operator*=(const Rat& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [e, coef] : terms_) coef *= c;
        return *this;
    }
    friend SparsePolynomial operator*(SparsePolynomial a, const Rat& c) { return a *= c; }
    friend SparsePolynomial operator*(const Rat& c, SparsePolynomial a) { return a *= c; }
    friend SparsePolynomial operator-(SparsePolynomial a) { return a *= Rat(-1); }

    bool operator==(const SparsePolynomial& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }

    SparsePolynomial pow(int e) const {
        if (e < 0) throw std::invalid_argument("pow: negative exponent");
        SparsePolynomial out = constant(arity_, 1);
        SparsePolynomial base = *this;
        while (e > 0) {
            if (e & 1) out = out * base;
            base = e > 1 ? base * base : base;
            e >>= 1;
        }
        return out;
    }

    Rat eval(const std::vector<Rat>& point) const {
        if (static_cast<int>(point.size()) != arity_)
            throw std::invalid_argument("eval: point arity mismatch");
        std::vector<std::vector<Rat>> powers(arity_);
        for (int v = 0; v < arity_; ++v) {
            powers[v].push_back(Rat(1));
            int d = degree_in(v);
            for (int k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * point[v]);
        }
        Rat out(0);
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (int v = 0; v < arity_; ++v)
                if (e[v]) t *= powers[v][e[v]];
            out += t;
        }
        return out;
    }

    /// Substitutes args[v] for variable v. All args must share one arity.
    SparsePolynomial compose(const std::vector<SparsePolynomial>& args) const {
        if (static_cast<int>(args.size()) != arity_)
            throw std::invalid_argument("compose: wrong number of arguments");
        int d = args.empty() ? 1 : args[0].arity();
        for (const auto& a : args)
            if (a.arity() != d) throw std::invalid_argument("compose: argument arity mismatch");
        std::vector<std::vector<SparsePolynomial>> powers(arity_);
        for (int v = 0; v < arity_; ++v) {
            powers[v].push_back(SparsePolynomial::constant(d, 1));
            int dv = degree_in(v);
            for (int k = 1; k <= dv; ++k) powers[v].push_back(powers[v].back() * args[v]);
        }
        SparsePolynomial out(d);
        for (const auto& [e, c] : terms_) {
            SparsePolynomial t = SparsePolynomial::constant(d, c);
            for (int v = 0; v < arity_; ++v)
                if (e[v]) t = t * powers[v][e[v]];
            out += t;
        }
        return out;
    }

    SparsePolynomial derivative(int var) const {
        if (var < 0 || var >= arity_) throw std::invalid_argument("derivative: bad variable");
        SparsePolynomial out(arity_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            ExpVec d = e;
            d[var] -= 1;
            out.add_term(d, c * e[var]);
        }
        return out;
    }

    /// Applies a multi-index differential operator (order j_v in variable v).
    SparsePolynomial derivative_multi(const ExpVec& orders) const {
        SparsePolynomial out = *this;
        for (int v = 0; v < arity_; ++v)
            for (int k = 0; k < orders[v]; ++k) out = out.derivative(v);
        return out;
    }

    SparsePolynomial swap_vars(int i, int j) const {
        SparsePolynomial out(arity_);
        for (const auto& [e, c] : terms_) {
            ExpVec s = e;
            std::swap(s[i], s[j]);
            out.add_term(s, c);
        }
        return out;
    }

    bool is_symmetric() const {
        for (int i = 0; i + 1 < arity_; ++i)
            if (!(swap_vars(i, i + 1) == *this)) return false;
        return true;
    }

    /// Exact division; throws std::runtime_error when the remainder is
    /// nonzero (indicates a bug for alternant quotients, never valid input).
    SparsePolynomial divide_exact(const SparsePolynomial& divisor) const {
        check_same(divisor);
        if (divisor.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
        SparsePolynomial rem = *this, quot(arity_);
        const auto& dl = *divisor.terms_.rbegin(); // leading term under lex
        while (!rem.is_zero()) {
            const auto& rl = *rem.terms_.rbegin();
            ExpVec q(arity_);
            for (int v = 0; v < arity_; ++v) {
                q[v] = rl.first[v] - dl.first[v];
                if (q[v] < 0) throw std::runtime_error("divide_exact: nonzero remainder");
            }
            Rat qc = rl.second / dl.second;
            quot.add_term(q, qc);
            SparsePolynomial t = SparsePolynomial::monomial(q, qc);
            rem -= t * divisor;
        }
        return quot;
    }

    /// Extends to a larger arity (new trailing variables unused).
    SparsePolynomial widen(int new_arity) const {
        if (new_arity < arity_) throw std::invalid_argument("widen: smaller arity");
        check_arity(new_arity);
        SparsePolynomial out(new_arity);
        for (const auto& [e, c] : terms_) {
            ExpVec w = e;
            w.resize(new_arity, 0);
            out.terms_[w] = c;
        }
        return out;
    }

    /// Sets trailing variables to zero and truncates to a smaller arity.
    SparsePolynomial restrict_prefix(int new_arity) const {
        if (new_arity > arity_) throw std::invalid_argument("restrict_prefix: larger arity");
        SparsePolynomial out(new_arity);
        for (const auto& [e, c] : terms_) {
            bool tail_zero = true;
            for (int v = new_arity; v < arity_; ++v)
                if (e[v]) { tail_zero = false; break; }
            if (!tail_zero) continue;
            out.add_term(ExpVec(e.begin(), e.begin() + new_arity), c);
        }
        return out;
    }

    std::string to_string(const std::string& var_prefix = "T") const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rat& c = it->second;
            bool neg = c < 0;
            Rat a = neg ? Rat(-c) : c;
            std::string mono;
            for (int v = 0; v < arity_; ++v) {
                if (it->first[v] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += var_prefix + std::to_string(v);
                if (it->first[v] > 1) mono += "^" + std::to_string(it->first[v]);
            }
            std::string body;
            if (mono.empty()) body = rat_to_string(a);
            else if (a == 1) body = mono;
            else body = rat_to_string(a) + "*" + mono;
            if (s.empty()) s = (neg ? "-" : "") + body;
            else s += (neg ? " - " : " + ") + body;
        }
        return s;
    }

  private:
    static void check_arity(int a) {
        if (a < 1 || a > kMaxArity)
            throw std::invalid_argument("SparsePolynomial: arity must be in [1, 16]");
    }
    void check_same(const SparsePolynomial& o) const {
        if (arity_ != o.arity_)
            throw std::invalid_argument("SparsePolynomial: arity mismatch");
    }

    int arity_;
    std::map<ExpVec, Rat> terms_;
};

/// Polynomial map p = (p_0, ..., p_{tau-1}) with shared input arity.
struct PolynomialMap {
    std::vector<SparsePolynomial> components;

    PolynomialMap() = default;
    explicit PolynomialMap(std::vector<SparsePolynomial> comps) : components(std::move(comps)) {
        if (components.empty()) throw std::invalid_argument("PolynomialMap: empty");
        for (const auto& c : components)
            if (c.arity() != components[0].arity())
                throw std::invalid_argument("PolynomialMap: mixed arities");
    }

    int arity() const { return components[0].arity(); }
    int size() const { return static_cast<int>(components.size()); }
};

} // namespace conjcount
