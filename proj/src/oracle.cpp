#include "oracle.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "util.hpp"

namespace orc {

using lab::Str;
using ring::Laurent;
using ::Rat;

namespace {

Laurent uvar(int c) { return Laurent::var("u" + std::to_string(c)); }

// invert a single-term Laurent
Laurent inv_term(const Laurent &m) {
    check(m.t.size() == 1, "grid parameter must be a single term");
    auto &[mono, coef] = *m.t.begin();
    Laurent r;
    ring::Mono neg{};
    for (int i = 0; i < ring::MAXVARS; i++) neg.e[i] = (int8_t)-mono.e[i];
    r.t.emplace(neg, Rat(1) / coef);
    return r;
}

// Vertex weights at a cell, reading (left, bottom) -> (top, right):
//   top=left,  right=bottom, left <= bottom : 1           (lines not crossing)
//   top=left,  right=bottom, left >  bottom : t/u         (crossed further SW)
//   top=bottom, right=left,  left <  bottom : 1 - t/u     (lines crossing)
// Branch over the possibilities during the row sweep.
struct RowSweep {
    int n;
    Laurent tr;                    // this row's parameter
    std::vector<Laurent> ratio;    // tr / u_c per column, 0-based
    const std::vector<int> *state; // labels below this row
    std::map<Str, Laurent> *next;
    Str scratch;

    void go(int col, int left, const Laurent &w, int d) {
        if (col == n) {
            if (left == d) {
                auto it = next->find(scratch);
                if (it == next->end()) next->emplace(scratch, w);
                else it->second += w;
            }
            return;
        }
        int below = (*state)[col];
        if (left <= below) {
            scratch[col] = left;  // pass through
            go(col + 1, below, w, d);
            if (left < below) {
                scratch[col] = below;  // cross
                go(col + 1, left, w * (Laurent(1) - ratio[col]), d);
            }
        } else {
            scratch[col] = left;   // already crossed southwest of here
            go(col + 1, below, w * ratio[col], d);
        }
    }
};

}  // namespace

Laurent statesum_with(const Str &lam, int d, const Param &trow, const Param &ucol) {
    int n = (int)lam.size();
    for (int x : lam) check(0 <= x && x <= d, "letter out of range");
    Str omega = lab::omega_of_content(lab::content_of(lam, d));
    std::vector<Laurent> uinv(n);
    for (int c = 1; c <= n; c++) uinv[c - 1] = inv_term(ucol(c));

    std::map<Str, Laurent> dp;
    dp.emplace(Str(n, d), Laurent(1));
    for (int r = n; r >= 1; r--) {
        std::map<Str, Laurent> next;
        RowSweep sweep;
        sweep.n = n;
        sweep.tr = trow(r);
        sweep.ratio.resize(n);
        for (int c = 0; c < n; c++) sweep.ratio[c] = sweep.tr * uinv[c];
        sweep.next = &next;
        sweep.scratch.assign(n, 0);
        for (auto &[state, w] : dp) {
            sweep.state = &state;
            sweep.go(0, omega[r - 1], w, d);
        }
        dp = std::move(next);
    }
    auto it = dp.find(lam);
    return it == dp.end() ? Laurent() : it->second;
}

Laurent statesum(const Str &lam, int d) {
    return statesum_with(
        lam, d, [](int r) { return Laurent::var("t" + std::to_string(r)); },
        [](int c) { return uvar(c); });
}

Laurent restrict_lift(const Str &lam, const std::vector<int> &lift, int d) {
    return statesum_with(
        lam, d, [&](int r) { return uvar(lift[r - 1] + 1); },
        [](int c) { return uvar(c); });
}

Laurent restrict_at(const Str &lam, const Str &sigma, int d) {
    return restrict_lift(lam, lab::min_lift(sigma), d);
}

Laurent pipe_dream_sum(const Str &lam, int d) {
    int n = (int)lam.size();
    std::vector<int> pi = lab::min_lift(lam);  // left row r -> top column pi[r]
    Str omega = lab::omega_of_content(lab::content_of(lam, d));

    // free cells (r, c), 1-based, r + c <= n; the rest are elbows
    std::vector<std::pair<int, int>> cells;
    for (int r = 1; r <= n; r++)
        for (int c = 1; r + c <= n; c++) cells.emplace_back(r, c);
    check(cells.size() < 22, "pipe dream grid too large to enumerate");

    Laurent total;
    for (unsigned long mask = 0; mask < (1ul << cells.size()); mask++) {
        std::vector<std::vector<bool>> crossing(n + 1, std::vector<bool>(n + 1, false));
        for (size_t k = 0; k < cells.size(); k++)
            if (mask >> k & 1) crossing[cells[k].first][cells[k].second] = true;

        // route pipes bottom row to top; pipe ids: left pipes 0..n-1,
        // bottom pipes n..2n-1
        std::vector<int> top(n + 1);  // pipe on the top edge of column c
        for (int c = 1; c <= n; c++) top[c] = n + (c - 1);
        std::vector<int> exit_col(n, 0);
        std::set<std::pair<int, int>> crossed;
        int absorbable = 0;
        Laurent w(1);
        for (int r = n; r >= 1; r--) {
            int left = r - 1;  // pipe id entering row r from the left
            for (int c = 1; c <= n; c++) {
                int bottom = top[c];
                if (crossing[r][c]) {
                    w *= Laurent(1) - Laurent::var("t" + std::to_string(r)) *
                                          Laurent::var("u" + std::to_string(c), -1);
                    std::pair<int, int> pr = std::minmax(left, bottom);
                    if (crossed.count(pr)) {
                        absorbable++;  // acts like an elbow for connectivity
                        top[c] = left;
                        left = bottom;
                    } else {
                        crossed.insert(pr);
                        top[c] = bottom;
                        // left keeps going right
                    }
                } else {
                    top[c] = left;
                    left = bottom;
                }
            }
        }
        for (int c = 1; c <= n; c++)
            if (top[c] < n) exit_col[top[c]] = c - 1;
        bool ok = true;
        for (int c = 1; c <= n && ok; c++) ok = top[c] < n;  // all tops are left pipes
        for (int r = 0; r < n && ok; r++) ok = exit_col[r] == pi[r];
        if (!ok) continue;
        total += (absorbable % 2 ? -w : w);
    }
    return total;
}

namespace {

// Restrictions depend only on the content class, so they are shared between
// all products on one shape.  Lookups are locked; the (pure) evaluations run
// outside the lock, so concurrent solves at worst duplicate a computation.
struct Solver {
    int d;
    bool zline;  // evaluate on u_i := z^i
    std::vector<Str> cosets;
    std::map<std::pair<int, int>, Laurent> rest;  // (class, fixed point)
    std::mutex mu;

    Laurent restriction(int v, int s) {
        auto key = std::make_pair(v, s);
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = rest.find(key);
            if (it != rest.end()) return it->second;
        }
        Laurent r;
        if (lab::bruhat_leq(cosets[v], cosets[s])) {
            std::vector<int> lift = lab::min_lift(cosets[s]);
            if (zline)
                r = statesum_with(
                    cosets[v], d,
                    [&](int row) { return Laurent::var("z", lift[row - 1] + 1); },
                    [](int col) { return Laurent::var("z", col); });
            else
                r = restrict_lift(cosets[v], lift, d);
        }
        std::lock_guard<std::mutex> lock(mu);
        rest.emplace(key, r);
        return r;
    }
};

Solver &solver_for(int d, const std::vector<int> &content, bool zline) {
    static std::mutex reg_mu;
    static std::map<std::tuple<int, std::vector<int>, bool>, std::unique_ptr<Solver>> reg;
    std::lock_guard<std::mutex> lock(reg_mu);
    auto &slot = reg[std::make_tuple(d, content, zline)];
    if (!slot) {
        slot = std::make_unique<Solver>();
        slot->d = d;
        slot->zline = zline;
        slot->cosets = lab::strings_of_content(content);
        std::stable_sort(slot->cosets.begin(), slot->cosets.end(), [](const Str &a, const Str &b) {
            return lab::inversions(a) < lab::inversions(b);
        });
    }
    return *slot;
}

Table solve(int d, const Str &lam, const Str &mu, bool zline) {
    auto content = lab::content_of(lam, d);
    check(lab::content_of(mu, d) == content, "factors live on different shapes");
    Solver &sv = solver_for(d, content, zline);
    int nc = (int)sv.cosets.size();
    int li = -1, mi = -1;
    for (int i = 0; i < nc; i++) {
        if (sv.cosets[i] == lam) li = i;
        if (sv.cosets[i] == mu) mi = i;
    }
    check(li >= 0 && mi >= 0, "factors are not cosets of their own content");

    Table out;
    std::vector<std::pair<int, Laurent>> found;
    for (int s = 0; s < nc; s++) {
        if (!lab::bruhat_leq(lam, sv.cosets[s]) || !lab::bruhat_leq(mu, sv.cosets[s])) continue;
        Laurent lhs = sv.restriction(li, s) * sv.restriction(mi, s);
        for (auto &[v, c] : found) lhs -= c * sv.restriction(v, s);
        if (lhs.is_zero()) continue;
        Laurent diag = sv.restriction(s, s);
        check(!diag.is_zero(), "diagonal restriction vanished");
        Laurent c = lhs.divexact(diag);
        found.emplace_back(s, c);
        out.emplace(sv.cosets[s], c);
    }
    return out;
}

std::vector<int> uvars(int n) {
    std::vector<int> v;
    for (int i = 1; i <= n; i++) v.push_back(ring::var_id("u" + std::to_string(i)));
    return v;
}

}  // namespace

Table constants(int d, const Str &lam, const Str &mu) { return solve(d, lam, mu, false); }
Table constants_z(int d, const Str &lam, const Str &mu) { return solve(d, lam, mu, true); }

Table specialize_K(const Table &kt) {
    Table out;
    for (auto &[nu, val] : kt) {
        Laurent v = val;
        int zv = ring::var_id("z");
        v = v.subst_term(zv, Laurent(1));
        for (int u : uvars((int)nu.size())) v = v.subst_term(u, Laurent(1));
        if (!v.is_zero()) out.emplace(nu, v);
    }
    return out;
}

Table specialize_HT(const Table &kt, long lensum) {
    std::vector<std::pair<int, int>> map;
    Table out;
    for (auto &[nu, val] : kt) {
        long D = lensum - lab::inversions(nu);
        if (D < 0) continue;  // pure K corrections sit above the excess
        if (map.empty())
            for (int i = 1; i <= (int)nu.size(); i++)
                map.push_back({ring::var_id("u" + std::to_string(i)),
                               ring::var_id("y" + std::to_string(i))});
        std::vector<int> yv;
        for (auto &[u, y] : map) yv.push_back(y);
        Laurent y = val.subst_one_plus(map, (int)D);
        for (int j = 0; j < (int)D; j++)
            check(y.homogeneous_part(yv, j).is_zero(), "terms below the excess degree survive");
        Laurent top = y.homogeneous_part(yv, (int)D);
        if (!top.is_zero()) out.emplace(nu, top);
    }
    return out;
}

Table specialize_H(const Table &kt, long lensum) {
    Table k = specialize_K(kt);
    Table out;
    for (auto &[nu, val] : k)
        if (lab::inversions(nu) == lensum) out.emplace(nu, val);
    return out;
}

Table dual_constants(int d, const Str &lam, const Str &mu) {
    auto content = lab::content_of(lam, d);
    check(lab::content_of(mu, d) == content, "factors live on different shapes");
    auto cosets = lab::strings_of_content(content);
    int nc = (int)cosets.size();
    std::map<Str, int> index;
    for (int i = 0; i < nc; i++) index.emplace(cosets[i], i);

    // full nonequivariant table c[a][b][nu] and pairing matrix P = sum_nu c
    std::vector<std::vector<std::vector<Rat>>> c(
        nc, std::vector<std::vector<Rat>>(nc, std::vector<Rat>(nc)));
    std::vector<std::vector<Rat>> P(nc, std::vector<Rat>(nc));
    for (int a = 0; a < nc; a++)
        for (int b = 0; b < nc; b++) {
            Table t = specialize_K(constants_z(d, cosets[a], cosets[b]));
            for (auto &[nu, val] : t) {
                check(val.t.size() == 1 && val.t.begin()->first.is_one(),
                      "nonequivariant constant is not a number");
                Rat x = val.t.begin()->second;
                c[a][b][index[nu]] = x;
                P[a][b] += x;
            }
        }

    // invert P by Gauss elimination over the rationals
    std::vector<std::vector<Rat>> inv(nc, std::vector<Rat>(nc));
    for (int i = 0; i < nc; i++) inv[i][i] = 1;
    {
        auto M = P;
        for (int col = 0; col < nc; col++) {
            int piv = -1;
            for (int r = col; r < nc; r++)
                if (M[r][col] != 0) { piv = r; break; }
            check(piv >= 0, "pairing matrix is singular");
            std::swap(M[piv], M[col]);
            std::swap(inv[piv], inv[col]);
            Rat f = M[col][col];
            for (int j = 0; j < nc; j++) { M[col][j] /= f; inv[col][j] /= f; }
            for (int r = 0; r < nc; r++) {
                if (r == col || M[r][col] == 0) continue;
                Rat g = M[r][col];
                for (int j = 0; j < nc; j++) {
                    M[r][j] -= g * M[col][j];
                    inv[r][j] -= g * inv[col][j];
                }
            }
        }
    }

    // Both factors are dual classes: S_lam S_mu
    //   = sum_{a,b} inv[lam][a] inv[mu][b] S^a S^b
    //   = sum_{a,b,g} inv[lam][a] inv[mu][b] c^g_{ab} S^g,  S^g = sum_nu P[g][nu] S_nu.
    int L = index[lam], M0 = index[mu];
    std::vector<Rat> ordinary(nc);  // coefficient of S^g in S_lam S_mu
    for (int a = 0; a < nc; a++) {
        if (inv[L][a] == 0) continue;
        for (int b = 0; b < nc; b++) {
            if (inv[M0][b] == 0) continue;
            Rat f = inv[L][a] * inv[M0][b];
            for (int g = 0; g < nc; g++)
                if (c[a][b][g] != 0) ordinary[g] += f * c[a][b][g];
        }
    }
    Table out;
    for (int nu = 0; nu < nc; nu++) {
        Rat acc;
        for (int g = 0; g < nc; g++)
            if (ordinary[g] != 0) acc += ordinary[g] * P[g][nu];
        if (acc != 0) out.emplace(cosets[nu], Laurent(acc));
    }
    return out;
}

}  // namespace orc
