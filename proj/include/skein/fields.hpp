#pragma once

#include <complex>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "skein/affine.hpp"
#include "skein/laurent.hpp"
#include "skein/rootdata.hpp"

namespace skein {

// The three scalar backends share one duck-typed interface:
//
//   using Elt = ...;                     // ring element with +,-,*,/,==
//   Elt zero(), one(), from_rational(r)
//   Elt A_pow(Affine z)                  // A^z,    z in chi = alpha/k units
//   Elt q_pow(Affine z)                  // q^z = A^(2z)
//   Elt A_pow_prod(Affine a, Affine b)   // A^(a*b), when representable
//   bool is_zero(Elt, double scale = 1)
//   std::complex<double> to_complex(Elt)
//
// Weight parameters are global integer ids; each backend decides whether a
// parameter is bound to a concrete value or kept formal.

inline long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

// ---------------------------------------------------------------------------
// Exact backend with all parameters bound to rational chi-values. Elements
// live in one cyclotomic field Q(zeta_M).
class CycloField {
public:
    using Elt = Cyclo;

    CycloField(RootData rd, std::map<int, Rational> bindings = {}, long extra_conductor = 1)
        : rd_(rd), bindings_(std::move(bindings)) {
        long M = 2 * rd_.N;
        for (const auto& [id, v] : bindings_) {
            long den = static_cast<long>(v.get_den().get_si());
            M = lcm_long(M, 2 * rd_.N * den);
        }
        M = lcm_long(M, extra_conductor);
        cy_ = std::make_shared<CycloCtx>(M);
    }

    const RootData& root() const { return rd_; }
    const CycloCtx* cyclo() const { return cy_.get(); }
    long conductor() const { return cy_->conductor(); }

    void bind(int param, const Rational& chi) { bindings_.at(param) = chi; }

    Rational eval_affine(const Affine& z) const {
        Rational r = z.constant;
        for (const auto& [id, c] : z.coeffs) {
            auto it = bindings_.find(id);
            if (it == bindings_.end())
                throw nonrepresentable_error("unbound parameter p" + std::to_string(id) +
                                             " in concrete exact mode");
            r += c * it->second;
        }
        return r;
    }

    Elt zero() const { return Cyclo(); }
    Elt one() const { return from_rational(1); }
    Elt from_rational(const Rational& r) const { return Cyclo::from_rational(cy_.get(), r); }

    // A^z = exp(2 i pi kprime z / N)
    Elt A_pow(const Affine& z) const {
        Rational e = eval_affine(z) * rd_.kprime / rd_.N;
        return Cyclo::unit_root_pow(cy_.get(), e);
    }
    Elt q_pow(const Affine& z) const { return A_pow(z * Rational(2)); }

    Elt A_pow_prod(const Affine& a, const Affine& b) const {
        return A_pow(Affine(eval_affine(a) * eval_affine(b)));
    }

    // exp(2 i pi r) for rational r with r*M integral
    Elt unit_root(const Rational& r) const { return Cyclo::unit_root_pow(cy_.get(), r); }

    bool is_zero(const Elt& x, double /*scale*/ = 1) const { return x.is_zero(); }
    std::complex<double> to_complex(const Elt& x) const { return x.to_complex(); }
    std::string str(const Elt& x) const { return x.str(); }

private:
    RootData rd_;
    std::shared_ptr<CycloCtx> cy_;
    std::map<int, Rational> bindings_;
};

// ---------------------------------------------------------------------------
// Exact symbolic backend. Selected parameters stay formal: parameter id
// var_params[i] is represented by the Laurent variable u_i = A^{chi_i}.
// Remaining parameters may be bound to rationals.
class SymField {
public:
    using Elt = RatFun;

    SymField(RootData rd, std::vector<int> var_params, std::map<int, Rational> bindings = {},
             long extra_conductor = 1)
        : rd_(rd), vars_(std::move(var_params)), bindings_(std::move(bindings)) {
        long M = 2 * rd_.N;
        for (const auto& [id, v] : bindings_)
            M = lcm_long(M, 2 * rd_.N * static_cast<long>(v.get_den().get_si()));
        M = lcm_long(M, extra_conductor);
        cy_ = std::make_shared<CycloCtx>(M);
        for (size_t i = 0; i < vars_.size(); ++i) var_index_[vars_[i]] = static_cast<int>(i);
    }

    const RootData& root() const { return rd_; }
    const CycloCtx* cyclo() const { return cy_.get(); }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<int>& var_params() const { return vars_; }

    // Rational value of a combination with no remaining formal parameters.
    Rational eval_affine(const Affine& z) const {
        Affine r = reduce(z);
        if (!r.is_constant())
            throw nonrepresentable_error("affine combination depends on a formal parameter");
        return r.constant;
    }

    Elt zero() const { return RatFun(); }
    Elt one() const { return from_rational(1); }
    Elt from_rational(const Rational& r) const {
        if (r == 0) return RatFun();
        return RatFun::from_laurent(
            Laurent::constant(cy_.get(), nvars(), Cyclo::from_rational(cy_.get(), r)));
    }
    Elt from_cyclo(const Cyclo& c) const {
        if (c.is_zero()) return RatFun();
        return RatFun::from_laurent(Laurent::constant(cy_.get(), nvars(), c));
    }

    Elt A_pow(const Affine& z) const {
        Expo e(nvars(), 0);
        Rational rest = z.constant;
        for (const auto& [id, c] : z.coeffs) {
            auto vit = var_index_.find(id);
            if (vit != var_index_.end()) {
                if (!is_integer(c))
                    throw nonrepresentable_error("A^z with non-integer coefficient " +
                                                 to_string(c) + " on a formal parameter");
                e[vit->second] = static_cast<int>(to_long(c));
            } else {
                auto bit = bindings_.find(id);
                if (bit == bindings_.end())
                    throw nonrepresentable_error("unknown parameter p" + std::to_string(id));
                rest += c * bit->second;
            }
        }
        Cyclo coeff = Cyclo::unit_root_pow(cy_.get(), rest * rd_.kprime / rd_.N);
        return RatFun::from_laurent(Laurent::monomial(cy_.get(), std::move(e), coeff));
    }
    Elt q_pow(const Affine& z) const { return A_pow(z * Rational(2)); }

    Elt A_pow_prod(const Affine& a, const Affine& b) const {
        auto p = affine_product(reduce(a), reduce(b));
        if (!p)
            throw nonrepresentable_error("A^(w1*w2) is not monomial for two formal weights");
        return A_pow(*p);
    }

    Elt unit_root(const Rational& r) const {
        return from_cyclo(Cyclo::unit_root_pow(cy_.get(), r));
    }

    bool is_zero(const Elt& x, double /*scale*/ = 1) const { return x.is_zero(); }
    std::complex<double> to_complex(const Elt& x) const {
        std::vector<std::complex<double>> vals;
        for (int id : vars_) {
            (void)id;
            throw nonrepresentable_error("to_complex on symbolic value with free variables");
        }
        return x.eval_complex(vals);
    }
    std::string str(const Elt& x) const {
        std::vector<std::string> names;
        for (int id : vars_) names.push_back("u" + std::to_string(id));
        return x.str(names);
    }

    // substitute exact cyclotomic values (in a target field) for the variables
    Cyclo eval(const Elt& x, const std::vector<Cyclo>& var_values) const {
        if (x.is_zero()) return Cyclo();
        Cyclo d = x.den().eval(var_values);
        if (d.is_zero()) throw degenerate_error("pole at exact evaluation point");
        return x.num().eval(var_values) / d;
    }

private:
    RootData rd_;
    std::shared_ptr<CycloCtx> cy_;
    std::vector<int> vars_;
    std::map<int, int> var_index_;
    std::map<int, Rational> bindings_;

    Affine reduce(const Affine& z) const {
        Affine r;
        r.constant = z.constant;
        for (const auto& [id, c] : z.coeffs) {
            auto bit = bindings_.find(id);
            if (bit != bindings_.end()) r.constant += c * bit->second;
            else r += Affine::param(id, c);
        }
        return r;
    }
};

// ---------------------------------------------------------------------------
// Floating backend: complex doubles, parameters bound to complex chi-values,
// zero tests against a relative tolerance.
class ComplexField {
public:
    using Elt = std::complex<double>;

    ComplexField(RootData rd, std::map<int, std::complex<double>> bindings = {},
                 double tolerance = 1e-9)
        : rd_(rd), bindings_(std::move(bindings)), tol_(tolerance) {}

    const RootData& root() const { return rd_; }
    double tolerance() const { return tol_; }
    void bind(int param, std::complex<double> chi) { bindings_[param] = chi; }

    std::complex<double> eval_affine(const Affine& z) const {
        std::complex<double> r = to_double(z.constant);
        for (const auto& [id, c] : z.coeffs) {
            auto it = bindings_.find(id);
            if (it == bindings_.end())
                throw nonrepresentable_error("unbound parameter p" + std::to_string(id));
            r += to_double(c) * it->second;
        }
        return r;
    }

    Elt zero() const { return {0.0, 0.0}; }
    Elt one() const { return {1.0, 0.0}; }
    Elt from_rational(const Rational& r) const { return {to_double(r), 0.0}; }

    Elt A_pow(const Affine& z) const {
        std::complex<double> e = eval_affine(z);
        const std::complex<double> i(0.0, 1.0);
        return std::exp(2.0 * M_PI * i * e * double(rd_.kprime) / double(rd_.N));
    }
    Elt q_pow(const Affine& z) const { return A_pow(z * Rational(2)); }

    Elt A_pow_prod(const Affine& a, const Affine& b) const {
        std::complex<double> e = eval_affine(a) * eval_affine(b);
        const std::complex<double> i(0.0, 1.0);
        return std::exp(2.0 * M_PI * i * e * double(rd_.kprime) / double(rd_.N));
    }

    Elt unit_root(const Rational& r) const {
        const std::complex<double> i(0.0, 1.0);
        return std::exp(2.0 * M_PI * i * to_double(r));
    }

    bool is_zero(const Elt& x, double scale = 1) const {
        return std::abs(x) <= tol_ * (1.0 + scale);
    }
    std::complex<double> to_complex(const Elt& x) const { return x; }
    std::string str(const Elt& x) const {
        return std::to_string(x.real()) + (x.imag() < 0 ? "-" : "+") +
               std::to_string(std::abs(x.imag())) + "i";
    }

private:
    RootData rd_;
    std::map<int, std::complex<double>> bindings_;
    double tol_;
};

} // namespace skein
