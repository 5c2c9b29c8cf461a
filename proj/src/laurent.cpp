#include "laurent.hpp"

#include <climits>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace ring {

namespace {
struct VarTable {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> ids;
    std::mutex mu;

    VarTable() {
        // Fixed canonical order so output is reproducible no matter which
        // module touches the table first.
        const char *pre[] = {"q", "a", "z"};
        for (const char *p : pre) intern(p);
        for (int i = 1; i <= 7; i++) intern("u" + std::to_string(i));
        for (int i = 1; i <= 7; i++) intern("t" + std::to_string(i));
        for (int i = 1; i <= 7; i++) intern("y" + std::to_string(i));
    }
    int intern(const std::string &name) {
        auto it = ids.find(name);
        if (it != ids.end()) return it->second;
        check((int)names.size() < MAXVARS, "variable table full");
        int id = (int)names.size();
        names.push_back(name);
        ids.emplace(name, id);
        return id;
    }
};
VarTable &table() {
    static VarTable t;
    return t;
}
}  // namespace

int var_id(const std::string &name) {
    VarTable &t = table();
    std::lock_guard<std::mutex> lk(t.mu);
    return t.intern(name);
}

const std::string &var_name(int id) {
    VarTable &t = table();
    std::lock_guard<std::mutex> lk(t.mu);
    check(id >= 0 && id < (int)t.names.size(), "bad variable id");
    return t.names[id];
}

int var_count() {
    VarTable &t = table();
    std::lock_guard<std::mutex> lk(t.mu);
    return (int)t.names.size();
}

Laurent Laurent::divexact(const Laurent &d) const {
    check(!d.is_zero(), "division by zero");
    Laurent r = *this, q;
    auto lead = [](const Laurent &p) { return std::prev(p.t.end()); };
    auto dl = lead(d);
    long guard = 0;
    while (!r.is_zero()) {
        check(++guard < 2000000, "non-exact division");
        auto rl = lead(r);
        Mono m = rl->first - dl->first;
        Rat c = rl->second / dl->second;
        q.add_term(m, c);
        for (auto &[dm, dc] : d.t) r.add_term(dm + m, -(dc * c));
    }
    return q;
}

Laurent Laurent::subst_term(int var, const Laurent &val) const {
    check(val.is_single_term(), "substitution value must be a single term");
    Mono vm = val.t.begin()->first;
    Rat vc = val.t.begin()->second;
    Laurent out;
    for (auto &[m, c] : t) {
        int e = m.e[var];
        Mono m2 = m;
        m2.e[var] = 0;
        Rat c2 = c;
        Mono shift{};
        for (int i = 0; i < MAXVARS; i++) {
            int s = vm.e[i] * e;
            check(s > -120 && s < 120, "monomial exponent overflow");
            shift.e[i] = (int8_t)s;
        }
        if (e >= 0) {
            for (int k = 0; k < e; k++) c2 *= vc;
        } else {
            check(vc != 0, "substituting zero with negative exponent");
            for (int k = 0; k < -e; k++) c2 /= vc;
        }
        out.add_term(m2 + shift, c2);
    }
    return out;
}

namespace {
// (1+y)^e truncated at y-degree cap, e may be negative.
Laurent one_plus_pow(int yvar, int e, int cap) {
    Laurent out;
    Rat binom(1);
    for (int m = 0; m <= cap; m++) {
        if (m > 0) binom = binom * Rat(e - m + 1) / Rat(m);
        if (binom == 0 && m > 0 && e >= 0) break;
        Mono mo{};
        mo.e[yvar] = (int8_t)m;
        out.add_term(mo, binom);
    }
    return out;
}

Laurent truncate_total(const Laurent &p, const std::vector<int> &vars, int cap) {
    Laurent out;
    for (auto &[m, c] : p.t) {
        int d = 0;
        for (int v : vars) d += m.e[v];
        if (d <= cap) out.add_term(m, c);
    }
    return out;
}
}  // namespace

Laurent Laurent::subst_one_plus(const std::vector<std::pair<int, int>> &u_to_y, int cap) const {
    if (cap < 0) return Laurent();
    std::vector<int> yvars;
    for (auto &[u, y] : u_to_y) yvars.push_back(y);
    Laurent out;
    for (auto &[m, c] : t) {
        Mono base = m;
        Laurent term(c);
        for (auto &[u, y] : u_to_y) {
            int e = base.e[u];
            if (e == 0) continue;
            base.e[u] = 0;
            term = truncate_total(term * one_plus_pow(y, e, cap), yvars, cap);
        }
        Laurent shifted;
        for (auto &[tm, tc] : term.t) shifted.add_term(tm + base, tc);
        out += shifted;
    }
    return out;
}

Laurent Laurent::homogeneous_part(const std::vector<int> &vars, int deg) const {
    Laurent out;
    for (auto &[m, c] : t) {
        int d = 0;
        for (int v : vars) d += m.e[v];
        if (d == deg) out.add_term(m, c);
    }
    return out;
}

int Laurent::min_degree(const std::vector<int> &vars) const {
    int best = INT_MAX / 2;
    for (auto &[m, c] : t) {
        int d = 0;
        for (int v : vars) d += m.e[v];
        best = std::min(best, d);
    }
    return best;
}

Rat Laurent::eval(const std::vector<Rat> &point) const {
    Rat out(0);
    for (auto &[m, c] : t) {
        Rat v = c;
        for (int i = 0; i < MAXVARS; i++) {
            int e = m.e[i];
            if (!e) continue;
            check(i < (int)point.size(), "evaluation point missing variable " + var_name(i));
            const Rat &x = point[i];
            if (e > 0) {
                for (int k = 0; k < e; k++) v *= x;
            } else {
                check(x != 0, "zero raised to negative power");
                for (int k = 0; k < -e; k++) v /= x;
            }
        }
        out += v;
    }
    return out;
}

int Laurent::val(int var) const {
    int best = INT_MAX / 2;
    for (auto &[m, c] : t) best = std::min(best, (int)m.e[var]);
    return best;
}

std::string Laurent::str() const {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending monomial order reads naturally: "1 - u3/u2", "y1 - y2".
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        const Mono &m = it->first;
        Rat c = it->second;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        Rat ac = neg ? Rat(-c) : c;
        std::string numpart, denpart;
        for (int i = 0; i < MAXVARS; i++) {
            int e = m.e[i];
            if (!e) continue;
            std::string piece = var_name(i);
            int ae = e > 0 ? e : -e;
            if (ae != 1) piece += "^" + std::to_string(ae);
            std::string &side = e > 0 ? numpart : denpart;
            if (!side.empty()) side += "*";
            side += piece;
        }
        if (numpart.empty() && denpart.empty()) {
            os << rat_str(ac);
        } else {
            if (ac != 1 || numpart.empty())
                numpart = numpart.empty() ? rat_str(ac) : rat_str(ac) + "*" + numpart;
            os << numpart;
            if (!denpart.empty()) os << "/" << denpart;
        }
    }
    return os.str();
}

nlohmann::json Laurent::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        nlohmann::json exps = nlohmann::json::object();
        for (int i = 0; i < MAXVARS; i++)
            if (it->first.e[i]) exps[var_name(i)] = (int)it->first.e[i];
        terms.push_back({{"exps", exps}, {"coef", rat_str(it->second)}});
    }
    return {{"terms", terms}};
}

Laurent Laurent::from_json(const nlohmann::json &j) {
    Laurent p;
    for (auto &term : j.at("terms")) {
        Mono m;
        for (auto &[k, v] : term.at("exps").items()) m.e[var_id(k)] = (int8_t)(int)v;
        p.add_term(m, rat_parse(term.at("coef").get<std::string>()));
    }
    return p;
}

}  // namespace ring
