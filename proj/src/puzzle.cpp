#include "puzzle.hpp"

#include <algorithm>

#include "lattice.hpp"
#include "util.hpp"

namespace puz {

namespace {

// cell walk: bands k = 0..n-1; within band k the cells left to right are
// up(k,0), down(k-1,0), up(k-1,1), down(k-2,1), ..., up(0,k)
struct Walker {
    const pz::Catalog &cat;
    int n;
    const Str &lam, &mu;
    const Str *nu;
    const std::function<void(const Filling &)> &visit;
    // edge state; markers for pair p are encoded as -(1+p) in s[]
    std::vector<int> s, ne, se;  // s/ne per up-cell, se per down-cell
    Filling fill;

    Walker(const pz::Catalog &c, const Str &l, const Str &m, const Str *v,
           const std::function<void(const Filling &)> &fn)
        : cat(c), n((int)l.size()), lam(l), mu(m), nu(v), visit(fn) {
        s.assign(n * n, -1);
        ne.assign(n * n, -1);
        se.assign(n * n, -1);
        fill.n = n;
        fill.up.assign(n * n, -1);
        fill.down.assign(n * n, -1);
    }

    int nw_of(int a, int b) const { return b == 0 ? lab::mn_leaf(lam[n - 1 - a]) : se[a * n + b - 1]; }

    void go(int band, int step) {
        if (band == n) {
            visit(fill);
            return;
        }
        // step 0..2*band: even -> up(band-step/2- ... derive cell from step
        if (step == 2 * band + 1) {
            go(band + 1, 0);
            return;
        }
        if (step % 2 == 0) {
            int b = step / 2, a = band - b;
            up_cell(a, b, band, step);
        } else {
            int b = (step - 1) / 2, a = band - 1 - b;
            down_cell(a, b, band, step);
        }
    }

    void up_cell(int a, int b, int band, int step) {
        int nw = nw_of(a, b);
        int idx = a * n + b;
        bool bottom = (a + b == n - 1);
        int want_s = (bottom && nu) ? lab::mn_leaf((*nu)[n - 1 - a]) : -1;
        int want_ne = (a == 0) ? lab::mn_leaf(mu[b]) : -1;
        auto it = cat.up_by_nw.find(nw);
        if (it != cat.up_by_nw.end()) {
            for (int pi : it->second) {
                const pz::Up &p = cat.up[pi];
                if (want_s >= 0 && p.s != want_s) continue;
                if (want_ne >= 0 && p.ne != want_ne) continue;
                s[idx] = p.s;
                ne[idx] = p.ne;
                fill.up[idx] = pi;
                go(band, step + 1);
            }
        }
        if (!bottom) {  // a vertical equivariant rhombus may start here
            auto pit = cat.pairs_by_q.find(nw);
            if (pit != cat.pairs_by_q.end()) {
                for (int k : pit->second) {
                    const pz::Pair &pr = cat.pairs[k];
                    if (want_ne >= 0 && pr.p != want_ne) continue;
                    s[idx] = -(1 + k);
                    ne[idx] = pr.p;
                    fill.up[idx] = -(1 + k);
                    go(band, step + 1);
                }
            }
        }
        s[idx] = ne[idx] = -1;
        fill.up[idx] = -1;
    }

    void down_cell(int a, int b, int band, int step) {
        int idx = a * n + b;
        int nlab = s[idx];
        int sw = ne[(a + 1) * n + b];
        if (nlab < 0) {  // pair marker: the bottom half is forced
            const pz::Pair &pr = cat.pairs[-nlab - 1];
            if (sw != pr.p) return;
            se[idx] = pr.q;
            fill.down[idx] = -1;
            go(band, step + 1);
            se[idx] = -1;
            return;
        }
        auto it = cat.down_by_n_sw.find({nlab, sw});
        if (it == cat.down_by_n_sw.end()) return;
        for (int pi : it->second) {
            se[idx] = cat.down[pi].se;
            fill.down[idx] = pi;
            go(band, step + 1);
        }
        se[idx] = -1;
        fill.down[idx] = -1;
    }
};

}  // namespace

void enumerate_puzzles(const pz::Catalog &c, const Str &lambda, const Str &mu, const Str *nu,
                       const std::function<void(const Filling &)> &visit) {
    check(lambda.size() == mu.size(), "boundary strings must have equal length");
    if (nu) check(nu->size() == lambda.size(), "boundary strings must have equal length");
    int n = (int)lambda.size();
    for (int x : lambda) check(0 <= x && x <= c.d, "boundary digit out of range");
    for (int x : mu) check(0 <= x && x <= c.d, "boundary digit out of range");
    if (nu)
        for (int x : *nu) check(0 <= x && x <= c.d, "boundary digit out of range");
    if (n == 0) {
        visit(Filling{});
        return;
    }
    if (lab::content_of(lambda, c.d) != lab::content_of(mu, c.d)) return;
    if (nu && lab::content_of(*nu, c.d) != lab::content_of(lambda, c.d)) return;
    Walker w(c, lambda, mu, nu, visit);
    w.go(0, 0);
}

namespace {

// column indices (i, j) of the vertical stack at up-cell (a, b): follow the
// SW and SE rays to the south edge
inline std::pair<int, int> stack_columns(int n, int a, int b) { return {b + 1, n - a}; }

}  // namespace

ring::Laurent fugacity(const pz::Catalog &c, const Filling &f) {
    ring::Laurent out(1);
    int n = f.n;
    for (int a = 0; a < n; a++)
        for (int b = 0; a + b <= n - 1; b++) {
            int ch = f.up[a * n + b];
            auto [i, j] = stack_columns(n, a, b);
            if (ch < 0) {
                out *= pz::pair_fugacity(c.theory, i, j);
                continue;
            }
            out *= pz::tri_fugacity(c.theory, pz::inv(c.up[ch], c.d));
            if (a + b <= n - 2 && c.kt_monomials) {
                int dn = f.down[a * n + b];
                check(dn >= 0, "factored stack lost its bottom half");
                if (pz::kt_monomial(c.up[ch], c.down[dn], c.d))
                    out *= ring::Laurent::var("u" + std::to_string(j), 1) *
                           ring::Laurent::var("u" + std::to_string(i), -1);
            }
        }
    for (int a = 0; a < n; a++)
        for (int b = 0; a + b <= n - 2; b++) {
            int ch = f.down[a * n + b];
            if (ch < 0) continue;  // consumed by the pair above
            out *= pz::tri_fugacity(c.theory, pz::inv(c.down[ch], c.d));
        }
    return out;
}

long inversion_sum(const pz::Catalog &c, const Filling &f) {
    long total = 0;
    int n = f.n;
    for (int a = 0; a < n; a++)
        for (int b = 0; a + b <= n - 1; b++) {
            int ch = f.up[a * n + b];
            if (ch < 0) {
                const pz::Pair &pr = c.pairs[-ch - 1];
                total += lat::inv_rhombus(pr.p, pr.q, pr.p, pr.q, c.d);
            } else {
                total += pz::inv(c.up[ch], c.d);
            }
        }
    for (int a = 0; a < n; a++)
        for (int b = 0; a + b <= n - 2; b++)
            if (f.down[a * n + b] >= 0) total += pz::inv(c.down[f.down[a * n + b]], c.d);
    return total;
}

Str south_string(const pz::Catalog &c, const Filling &f) {
    Str out;
    int n = f.n;
    for (int a = n - 1; a >= 0; a--) {
        int ch = f.up[a * n + (n - 1 - a)];
        check(ch >= 0, "pair piece on the south row");
        int m = c.up[ch].s;
        check(lab::mn_is_leaf(m), "south label is not a single number");
        out.push_back(lab::mn_digit(m));
    }
    return out;
}

ring::Laurent structure_constant(int d, pz::Theory t, const Str &lambda, const Str &mu,
                                 const Str &nu) {
    pz::Catalog c = pz::catalog(d, t);
    ring::Laurent total(0);
    enumerate_puzzles(c, lambda, mu, &nu,
                      [&](const Filling &f) { total += fugacity(c, f); });
    return total;
}

std::map<Str, ring::Laurent> expand_product(int d, pz::Theory t, const Str &lambda,
                                            const Str &mu) {
    pz::Catalog c = pz::catalog(d, t);
    std::map<Str, ring::Laurent> table;
    enumerate_puzzles(c, lambda, mu, nullptr, [&](const Filling &f) {
        table[south_string(c, f)] += fugacity(c, f);
    });
    for (auto it = table.begin(); it != table.end();)
        it = it->second.is_zero() ? table.erase(it) : std::next(it);
    return table;
}

ring::Laurent dual_structure_constant(int d, const Str &lambda, const Str &mu, const Str &nu) {
    pz::Catalog c = pz::catalog(d, pz::Theory::KDUAL);
    Str rl = lab::reversed(lambda), rm = lab::reversed(mu), rn = lab::reversed(nu);
    ring::Laurent total(0);
    enumerate_puzzles(c, rl, rm, &rn, [&](const Filling &f) { total += fugacity(c, f); });
    return total;
}

std::string render(const pz::Catalog &c, const Filling &f) {
    int n = f.n;
    std::string out;
    for (int band = 0; band < n; band++) {
        std::string line;
        for (int step = 0; step <= 2 * band; step++) {
            if (!line.empty()) line += "  ";
            if (step % 2 == 0) {
                int b = step / 2, a = band - b;
                int ch = f.up[a * n + b];
                if (ch < 0) {
                    const pz::Pair &pr = c.pairs[-ch - 1];
                    line += "R[" + lab::mn_str(pr.q) + "|" + lab::mn_str(pr.p) +
                            "]:" + std::to_string(lat::inv_rhombus(pr.p, pr.q, pr.p, pr.q, c.d));
                } else {
                    const pz::Up &p = c.up[ch];
                    line += "^[" + lab::mn_str(p.nw) + "|" + lab::mn_str(p.s) + "|" +
                            lab::mn_str(p.ne) + "]:" + std::to_string(pz::inv(p, c.d));
                }
            } else {
                int b = (step - 1) / 2, a = band - 1 - b;
                int ch = f.down[a * n + b];
                if (ch < 0) {
                    line += ".";
                } else {
                    const pz::Down &p = c.down[ch];
                    line += "v[" + lab::mn_str(p.sw) + "|" + lab::mn_str(p.n) + "|" +
                            lab::mn_str(p.se) + "]:" + std::to_string(pz::inv(p, c.d));
                }
            }
        }
        out += line;
        out += "\n";
    }
    return out;
}

}  // namespace puz
