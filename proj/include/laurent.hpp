#pragma once

#include "rat.hpp"
#include "util.hpp"

#include <array>
#include <cstdint>
#include <json.hpp>
#include <map>
#include <string>
#include <vector>

namespace ring {

// Global variable table.  A fixed set of names is interned at startup in a
// fixed order so that monomial comparisons and printed output are stable
// across runs; further names are appended on first use.
constexpr int MAXVARS = 24;
int var_id(const std::string &name);
const std::string &var_name(int id);
int var_count();

struct Mono {
    std::array<int8_t, MAXVARS> e{};

    bool operator==(const Mono &o) const { return e == o.e; }
    bool operator<(const Mono &o) const { return e < o.e; }
    Mono operator+(const Mono &o) const {
        Mono r;
        for (int i = 0; i < MAXVARS; i++) {
            int s = e[i] + o.e[i];
            check(s > -120 && s < 120, "monomial exponent overflow");
            r.e[i] = (int8_t)s;
        }
        return r;
    }
    Mono operator-(const Mono &o) const {
        Mono r;
        for (int i = 0; i < MAXVARS; i++) {
            int s = e[i] - o.e[i];
            check(s > -120 && s < 120, "monomial exponent overflow");
            r.e[i] = (int8_t)s;
        }
        return r;
    }
    bool is_one() const {
        for (int i = 0; i < MAXVARS; i++)
            if (e[i]) return false;
        return true;
    }
    int total_degree() const {
        int t = 0;
        for (int i = 0; i < MAXVARS; i++) t += e[i];
        return t;
    }
};

// Sparse multivariate Laurent polynomial with exact rational coefficients.
// Invariant: no zero coefficients stored.
struct Laurent {
    std::map<Mono, Rat> t;

    Laurent() = default;
    explicit Laurent(const Rat &c) {
        if (c != 0) t.emplace(Mono{}, c);
    }
    explicit Laurent(long c) : Laurent(Rat(c)) {}

    static Laurent var(const std::string &name, int exp = 1) {
        Laurent p;
        Mono m;
        m.e[var_id(name)] = (int8_t)exp;
        p.t.emplace(m, Rat(1));
        return p;
    }
    static Laurent term(const Mono &m, const Rat &c) {
        Laurent p;
        if (c != 0) p.t.emplace(m, c);
        return p;
    }

    bool is_zero() const { return t.empty(); }
    bool is_constant() const { return t.empty() || (t.size() == 1 && t.begin()->first.is_one()); }
    Rat constant_value() const {
        check(is_constant(), "not a constant");
        return t.empty() ? Rat(0) : t.begin()->second;
    }
    bool is_single_term() const { return t.size() == 1; }
    size_t nterms() const { return t.size(); }

    void add_term(const Mono &m, const Rat &c) {
        if (c == 0) return;
        auto it = t.find(m);
        if (it == t.end()) {
            t.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
    }

    Laurent &operator+=(const Laurent &o) {
        for (auto &[m, c] : o.t) add_term(m, c);
        return *this;
    }
    Laurent &operator-=(const Laurent &o) {
        for (auto &[m, c] : o.t) add_term(m, -c);
        return *this;
    }
    Laurent operator+(const Laurent &o) const {
        Laurent r = *this;
        r += o;
        return r;
    }
    Laurent operator-(const Laurent &o) const {
        Laurent r = *this;
        r -= o;
        return r;
    }
    Laurent operator-() const {
        Laurent r;
        for (auto &[m, c] : t) r.t.emplace(m, -c);
        return r;
    }
    Laurent operator*(const Laurent &o) const {
        Laurent r;
        for (auto &[m1, c1] : t)
            for (auto &[m2, c2] : o.t) r.add_term(m1 + m2, c1 * c2);
        return r;
    }
    Laurent &operator*=(const Laurent &o) { return *this = *this * o; }
    Laurent operator*(const Rat &c) const {
        Laurent r;
        if (c == 0) return r;
        for (auto &[m, cc] : t) r.t.emplace(m, cc * c);
        return r;
    }
    bool operator==(const Laurent &o) const { return t == o.t; }
    bool operator!=(const Laurent &o) const { return t != o.t; }

    // Exact division; aborts if *this is not a multiple of d.
    Laurent divexact(const Laurent &d) const;

    // Substitute a single term c*M for a variable (supports negative powers).
    Laurent subst_term(int var, const Laurent &val) const;

    // Substitute u -> 1 + y for each (u,y) pair, truncating at total degree
    // `cap` in the y variables.  Handles negative u exponents by binomial
    // series, exact to the truncation order.
    Laurent subst_one_plus(const std::vector<std::pair<int, int>> &u_to_y, int cap) const;

    // Keep only terms whose total degree in the listed vars equals deg.
    Laurent homogeneous_part(const std::vector<int> &vars, int deg) const;
    int min_degree(const std::vector<int> &vars) const;  // INT_MAX/2 when zero

    Rat eval(const std::vector<Rat> &point) const;  // indexed by var id

    // Smallest exponent of one variable across all terms (huge when zero).
    int val(int var) const;

    std::string str() const;
    nlohmann::json to_json() const;
    static Laurent from_json(const nlohmann::json &j);
};

inline Laurent operator*(const Rat &c, const Laurent &p) { return p * c; }

// Rational function as a numerator/denominator pair; no gcd reduction,
// equality by cross-multiplication.
struct RatFunc {
    Laurent num, den;

    RatFunc() : num(Rat(0)), den(Rat(1)) {}
    explicit RatFunc(const Laurent &n) : num(n), den(Rat(1)) {}
    RatFunc(const Laurent &n, const Laurent &d) : num(n), den(d) { check(!den.is_zero(), "zero denominator"); }

    RatFunc operator*(const RatFunc &o) const { return {num * o.num, den * o.den}; }
    RatFunc operator+(const RatFunc &o) const { return {num * o.den + o.num * den, den * o.den}; }
    RatFunc operator-(const RatFunc &o) const { return {num * o.den - o.num * den, den * o.den}; }
    bool operator==(const RatFunc &o) const { return (num * o.den - o.num * den).is_zero(); }

    Rat eval(const std::vector<Rat> &point) const {
        Rat d = den.eval(point);
        check(d != 0, "rational function pole");
        return num.eval(point) / d;
    }
    // q-valuation: val_q(num) - val_q(den).  Requires num nonzero.
    int val(int var) const { return num.val(var) - den.val(var); }
};

}  // namespace ring
