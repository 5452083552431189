#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <vector>

#include "skein/cyclotomic.hpp"

namespace skein {

// Exponent vector for a fixed ordered set of formal variables.
using Expo = std::vector<int>;

// Multivariate Laurent polynomial over Q(zeta_M). Canonical form: no zero
// coefficients stored. A default-constructed value is zero (any context).
class Laurent {
public:
    Laurent() = default;
    Laurent(const CycloCtx* cyclo, int nvars) : cyclo_(cyclo), nvars_(nvars) {}

    static Laurent constant(const CycloCtx* cyclo, int nvars, const Cyclo& c) {
        Laurent l(cyclo, nvars);
        if (!c.is_zero()) l.terms_[Expo(nvars, 0)] = c;
        return l;
    }

    // coefficient * prod_i var_i^{e_i}
    static Laurent monomial(const CycloCtx* cyclo, Expo e, const Cyclo& c) {
        Laurent l(cyclo, static_cast<int>(e.size()));
        if (!c.is_zero()) l.terms_[std::move(e)] = c;
        return l;
    }

    bool is_zero() const { return terms_.empty(); }
    int nvars() const { return nvars_; }
    const std::map<Expo, Cyclo>& terms() const { return terms_; }
    const CycloCtx* cyclo() const { return cyclo_; }

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    Laurent operator-() const {
        Laurent r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    Laurent operator+(const Laurent& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        check(o);
        Laurent r = *this;
        for (const auto& [e, c] : o.terms_) {
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) r.terms_[e] = c;
            else {
                it->second = it->second + c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        if (r.terms_.empty()) return Laurent();
        return r;
    }
    Laurent operator-(const Laurent& o) const { return *this + (-o); }

    Laurent operator*(const Laurent& o) const {
        if (is_zero() || o.is_zero()) return Laurent();
        check(o);
        Laurent r(cyclo_ ? cyclo_ : o.cyclo_, nvars_ ? nvars_ : o.nvars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Expo e = e1;
                for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                Cyclo prod = c1 * c2;
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) r.terms_[std::move(e)] = prod;
                else {
                    it->second = it->second + prod;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        if (r.terms_.empty()) return Laurent();
        return r;
    }

    Laurent operator*(const Cyclo& c) const {
        if (is_zero() || c.is_zero()) return Laurent();
        Laurent r = *this;
        for (auto& [e, v] : r.terms_) v = v * c;
        return r;
    }

    // exact division by a single term
    Laurent div_term(const Expo& e, const Cyclo& c) const {
        if (is_zero()) return Laurent();
        Laurent r(cyclo_, nvars_);
        Cyclo inv = c.inverse();
        for (const auto& [e1, c1] : terms_) {
            Expo e2 = e1;
            for (size_t i = 0; i < e2.size(); ++i) e2[i] -= e[i];
            r.terms_[std::move(e2)] = c1 * inv;
        }
        return r;
    }

    // lexicographically smallest exponent vector (the "trailing term")
    std::pair<Expo, Cyclo> trailing_term() const {
        if (is_zero()) throw error("trailing term of zero polynomial");
        const auto& [e, c] = *terms_.begin();
        return {e, c};
    }

    // smallest exponent of variable i; throws on the zero polynomial
    int min_degree(int var) const {
        if (is_zero()) throw error("valuation of zero polynomial");
        int m = std::numeric_limits<int>::max();
        for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
        return m;
    }

    // Substitute exact field values for all variables. The values may live in
    // a larger cyclotomic field; coefficients are embedded into it.
    Cyclo eval(const std::vector<Cyclo>& vals) const {
        const CycloCtx* target = cyclo_;
        for (const auto& v : vals)
            if (v.ctx()) { target = v.ctx(); break; }
        Cyclo acc;
        for (const auto& [e, c] : terms_) {
            Cyclo t = target ? c.embed_into(target) : c;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                Cyclo p = e[i] > 0 ? vals[i] : vals[i].inverse();
                for (int j = 0; j < std::abs(e[i]); ++j) t = t * p;
            }
            acc = acc + t;
        }
        return acc;
    }

    std::complex<double> eval_complex(const std::vector<std::complex<double>>& vals) const {
        std::complex<double> acc = 0;
        for (const auto& [e, c] : terms_) {
            std::complex<double> t = c.to_complex();
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) t *= std::pow(vals[i], e[i]);
            acc += t;
        }
        return acc;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (is_zero()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) s += "*" + names[i] + "^" + std::to_string(e[i]);
        }
        return s;
    }

private:
    const CycloCtx* cyclo_ = nullptr;
    int nvars_ = 0;
    std::map<Expo, Cyclo> terms_;

    void check(const Laurent& o) const {
        if (cyclo_ && o.cyclo_ && cyclo_ != o.cyclo_)
            throw mode_error("mixing Laurent polynomials from different contexts");
        if (!terms_.empty() && !o.terms_.empty() && nvars_ != o.nvars_)
            throw mode_error("mixing Laurent polynomials with different variable sets");
    }
};

inline Laurent operator*(const Cyclo& c, const Laurent& l) { return l * c; }

// Rational function num/den over Q(zeta_M) Laurent polynomials, normalized so
// that the denominator has trailing coefficient 1 and trailing exponent 0.
class RatFun {
public:
    RatFun() = default; // zero

    RatFun(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw error("rational function with zero denominator");
        normalize();
    }

    static RatFun from_laurent(Laurent l) {
        if (l.is_zero()) return RatFun();
        Laurent one = Laurent::constant(l.cyclo(), l.nvars(),
                                        Cyclo::from_rational(l.cyclo(), 1));
        return RatFun(std::move(l), std::move(one));
    }

    bool is_zero() const { return num_.is_zero(); }
    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool operator==(const RatFun& o) const {
        if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
        return (num_ * o.den_) == (o.num_ * den_);
    }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun operator-() const {
        if (is_zero()) return RatFun();
        RatFun r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    RatFun operator+(const RatFun& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFun operator-(const RatFun& o) const { return *this + (-o); }

    RatFun operator*(const RatFun& o) const {
        if (is_zero() || o.is_zero()) return RatFun();
        return RatFun(num_ * o.num_, den_ * o.den_);
    }

    RatFun operator/(const RatFun& o) const { return *this * o.inverse(); }

    RatFun inverse() const {
        if (is_zero()) throw error("inverse of zero rational function");
        return RatFun(den_, num_);
    }

    // discrete valuation in variable var: v(0) = +infinity (represented by
    // nullopt), v(f) = min-degree of num minus min-degree of den.
    std::optional<long> valuation(int var) const {
        if (is_zero()) return std::nullopt;
        return static_cast<long>(num_.min_degree(var)) - den_.min_degree(var);
    }

    Cyclo eval(const std::vector<Cyclo>& vals) const {
        if (is_zero()) return Cyclo();
        Cyclo d = den_.eval(vals);
        if (d.is_zero()) throw degenerate_error("pole at evaluation point");
        return num_.eval(vals) / d;
    }

    std::complex<double> eval_complex(const std::vector<std::complex<double>>& vals,
                                      double tol = 1e-12) const {
        if (is_zero()) return {0.0, 0.0};
        std::complex<double> d = den_.eval_complex(vals);
        if (std::abs(d) < tol) throw degenerate_error("pole at evaluation point");
        return num_.eval_complex(vals) / d;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (is_zero()) return "0";
        return "(" + num_.str(names) + ") / (" + den_.str(names) + ")";
    }

private:
    Laurent num_, den_; // num empty <=> zero (den then unused)

    void normalize() {
        if (num_.is_zero()) { num_ = Laurent(); den_ = Laurent(); return; }
        auto [e, c] = den_.trailing_term();
        num_ = num_.div_term(e, c);
        den_ = den_.div_term(e, c);
    }
};

} // namespace skein
