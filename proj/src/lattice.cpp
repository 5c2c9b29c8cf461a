#include "lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "util.hpp"

namespace lat {

using lab::MN;
using ring::Laurent;

static int dim_of(int d) { return 2 * (d + 1); }

WVec wv_zero(int d) { return WVec(dim_of(d), 0); }

WVec basis_f(int d, int i) {
    check(0 <= i && i <= d, "basis_f: digit out of range");
    WVec v = wv_zero(d);
    v[2 * i] = 1;
    return v;
}

WVec wv_add(const WVec &a, const WVec &b) {
    check(a.size() == b.size(), "weight vector size mismatch");
    WVec r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = a[i] + b[i];
    return r;
}

WVec wv_sub(const WVec &a, const WVec &b) {
    check(a.size() == b.size(), "weight vector size mismatch");
    WVec r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = a[i] - b[i];
    return r;
}

WVec wv_neg(const WVec &a) {
    WVec r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = -a[i];
    return r;
}

bool wv_is_zero(const WVec &a) {
    for (long x : a)
        if (x) return false;
    return true;
}

WVec tau(const WVec &v) {
    WVec r(v.size());
    for (size_t i = 0; i + 1 < v.size(); i += 2) {
        long c = v[i], e = v[i + 1];
        r[i] = -e;
        r[i + 1] = c - e;
    }
    return r;
}

WVec weight_of(MN m, int d) {
    if (lab::mn_is_leaf(m)) return basis_f(d, lab::mn_digit(m));
    WVec l = weight_of(lab::mn_left(m), d);
    WVec r = weight_of(lab::mn_right(m), d);
    return wv_sub(wv_neg(tau(r)), tau(tau(l)));
}

// Symmetric form on basis elements, as (constant, coefficient of a).
static void gram_base(int p, int q, long &c0, long &c1) {
    if (p > q) std::swap(p, q);
    int i = p / 2, r = p % 2, j = q / 2, s = q % 2;
    c1 = 0;
    if (i == j) {
        c0 = (r == s) ? 2 : -1;
        return;
    }
    if (r == 0 && s == 0) {
        c0 = 2, c1 = -1;  // 2 - a
    } else if (r == 0 && s == 1) {
        c0 = -1;
    } else if (r == 1 && s == 0) {
        c0 = -1, c1 = 1;  // a - 1
    } else {
        c0 = 2, c1 = -1;  // 2 - a
    }
}

Laurent gram_inner(const WVec &v, const WVec &w) {
    check(v.size() == w.size(), "weight vector size mismatch");
    long long k0 = 0, k1 = 0;
    for (size_t p = 0; p < v.size(); p++) {
        if (!v[p]) continue;
        for (size_t q = 0; q < w.size(); q++) {
            if (!w[q]) continue;
            long c0, c1;
            gram_base((int)p, (int)q, c0, c1);
            k0 += (long long)v[p] * w[q] * c0;
            k1 += (long long)v[p] * w[q] * c1;
        }
    }
    Laurent out(Rat((long)k0));
    out += Laurent::var("a") * Rat((long)k1);
    return out;
}

Rat gram_inner_at(const WVec &v, const WVec &w, const Rat &a) {
    check(v.size() == w.size(), "weight vector size mismatch");
    Rat acc(0);
    for (size_t p = 0; p < v.size(); p++) {
        if (!v[p]) continue;
        for (size_t q = 0; q < w.size(); q++) {
            if (!w[q]) continue;
            long c0, c1;
            gram_base((int)p, (int)q, c0, c1);
            acc += Rat(v[p]) * Rat(w[q]) * (Rat(c0) + Rat(c1) * a);
        }
    }
    return acc;
}

std::vector<std::vector<Rat>> gram_matrix_at(int d, const Rat &a) {
    int n = dim_of(d);
    std::vector<std::vector<Rat>> G(n, std::vector<Rat>(n));
    for (int p = 0; p < n; p++)
        for (int q = 0; q < n; q++) {
            long c0, c1;
            gram_base(p, q, c0, c1);
            G[p][q] = Rat(c0) + Rat(c1) * a;
        }
    return G;
}

ring::Laurent gram_det_normalized(int d) {
    check(1 <= d && d <= 8, "gram_det_normalized: d must be 1..8");
    int n = dim_of(d);
    std::vector<std::vector<Laurent>> M(n, std::vector<Laurent>(n));
    for (int p = 0; p < n; p++)
        for (int q = 0; q < n; q++) {
            long c0, c1;
            gram_base(p, q, c0, c1);
            M[p][q] = Laurent(c0) + Laurent::var("a") * Rat(c1);
        }
    // Fraction-free elimination keeps every intermediate entry polynomial.
    Laurent prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; k++) {
        if (M[k][k].is_zero()) {
            int r = -1;
            for (int i = k + 1; i < n; i++)
                if (!M[i][k].is_zero()) {
                    r = i;
                    break;
                }
            if (r < 0) return Laurent();
            std::swap(M[k], M[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; i++)
            for (int j = k + 1; j < n; j++)
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]).divexact(prev);
        prev = M[k][k];
    }
    Laurent det = M[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det * Laurent::var("a", -2 * d);
}

static long b_base(int i, int r, int j, int s) {
    if (i == j) return 0;
    int sg = i > j ? 1 : -1;
    int diff = ((s - r) % 3 + 3) % 3;
    if (diff == 0) return sg;
    if (diff == (sg == 1 ? 1 : 2)) return -sg;
    return 0;
}

long b_form(const WVec &v, const WVec &w) {
    check(v.size() == w.size(), "weight vector size mismatch");
    long long acc = 0;
    for (size_t p = 0; p < v.size(); p++) {
        if (!v[p]) continue;
        for (size_t q = 0; q < w.size(); q++) {
            if (!w[q]) continue;
            acc += (long long)v[p] * w[q] * b_base((int)p / 2, (int)p % 2, (int)q / 2, (int)q % 2);
        }
    }
    return (long)acc;
}

static long half_b(const WVec &x, const WVec &y, long extra = 0) {
    long b = b_form(x, y) + extra;
    check(b % 2 == 0, "odd inversion pairing");
    return b / 2;
}

long inv_up(MN nw, MN s, MN ne, int d) {
    (void)ne;
    return half_b(tau(tau(weight_of(nw, d))), weight_of(s, d));
}

long inv_down(MN se, MN n, MN sw, int d) {
    (void)sw;
    return half_b(tau(tau(weight_of(se, d))), weight_of(n, d));
}

long inv_rhombus(MN sw, MN se, MN ne, MN nw, int d) {
    long b1 = b_form(tau(tau(weight_of(sw, d))), weight_of(se, d));
    long b2 = b_form(tau(tau(weight_of(ne, d))), weight_of(nw, d));
    check((b1 + b2) % 2 == 0, "odd inversion pairing");
    return (b1 + b2) / 2;
}

Rat path_inversion(const std::vector<WVec> &weights) {
    long long acc = 0;
    for (size_t i = 0; i < weights.size(); i++)
        for (size_t j = i + 1; j < weights.size(); j++) acc += b_form(weights[i], weights[j]);
    return Rat((long)acc) / 2;
}

std::vector<MN> valid_labels(int d) {
    check(1 <= d && d <= 4, "valid_labels: d must be 1..4");
    // Vectors of norm 2 independent of the parameter: search at one definite
    // value, keep those whose symbolic norm is the constant 2.
    const Rat a0 = (d <= 3) ? Rat(1) : Rat(1, 2);
    const Laurent two(2);
    std::vector<WVec> S;
    for (auto &v : norm2_vectors(d, a0))
        if (gram_inner(v, v) == two) S.push_back(v);
    std::map<WVec, int> index;
    for (size_t i = 0; i < S.size(); i++) index.emplace(S[i], (int)i);
    // Match each vector to the smallest tree producing it, if any: a leaf
    // f_i directly, or v = -tau f_R - tau^2 f_L with f_L, f_R matched
    // vectors.  Distinct trees can share a vector (e.g. the tree 0(10)
    // produces f_1), so minimality decides.
    std::vector<MN> best(S.size(), -1);
    std::vector<int> card(S.size(), 1 << 20);
    for (int i = 0; i <= d; i++) {
        auto it = index.find(basis_f(d, i));
        check(it != index.end(), "single-number weight is not norm-2");
        best[it->second] = lab::mn_leaf(i);
        card[it->second] = 1;
    }
    // canonical-form preference: catalog trees read with weakly decreasing
    // digits left to right (cf. the derived families k(ji), (kj)i with
    // k > j > i), so prefer those among equal-size alternatives
    auto leafword = [](MN m) {
        std::string w;
        std::function<void(MN)> rec = [&](MN x) {
            if (lab::mn_is_leaf(x)) {
                w += char('0' + lab::mn_digit(x));
                return;
            }
            rec(lab::mn_left(x));
            rec(lab::mn_right(x));
        };
        rec(m);
        return w;
    };
    auto sorted_word = [&](MN m) {
        std::string w = leafword(m);
        for (size_t i = 1; i < w.size(); i++)
            if (w[i - 1] < w[i]) return false;
        return true;
    };
    auto prefer = [&](MN x, MN y) {  // true when x is the better equal-card choice
        bool sx = sorted_word(x), sy = sorted_word(y);
        if (sx != sy) return sx;
        return lab::mn_str(x) < lab::mn_str(y);
    };
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t iv = 0; iv < S.size(); iv++) {
            for (size_t iu = 0; iu < S.size(); iu++) {
                if (best[iu] < 0) continue;
                // v = -tau u - tau^2 w  <=>  w = -tau v - tau^2 u
                WVec w = wv_sub(wv_neg(tau(S[iv])), tau(tau(S[iu])));
                auto it = index.find(w);
                if (it == index.end() || best[it->second] < 0) continue;
                int iw = it->second;
                int c = card[iw] + card[iu];
                if (c > card[iv]) continue;
                MN cand = lab::mn_node(best[iw], best[iu]);
                if (c == card[iv] && (best[iv] == cand || !prefer(cand, best[iv]))) continue;
                best[iv] = cand;
                card[iv] = c;
                grew = true;
            }
        }
    }
    std::set<MN> uniq;
    for (size_t iv = 0; iv < S.size(); iv++)
        if (best[iv] >= 0) uniq.insert(best[iv]);
    std::vector<MN> out(uniq.begin(), uniq.end());
    std::sort(out.begin(), out.end(), [](MN x, MN y) {
        int cx = lab::mn_card(x), cy = lab::mn_card(y);
        if (cx != cy) return cx < cy;
        return lab::mn_str(x) < lab::mn_str(y);
    });
    return out;
}

namespace {

struct LDL {
    int n = 0;
    std::vector<std::vector<Rat>> L;
    std::vector<Rat> D;
};

LDL ldl_decompose(const std::vector<std::vector<Rat>> &G) {
    int n = (int)G.size();
    LDL f;
    f.n = n;
    f.L.assign(n, std::vector<Rat>(n, Rat(0)));
    f.D.assign(n, Rat(0));
    for (int j = 0; j < n; j++) {
        Rat dj = G[j][j];
        for (int k = 0; k < j; k++) dj -= f.L[j][k] * f.L[j][k] * f.D[k];
        check(dj > 0, "form is not positive definite");
        f.D[j] = dj;
        f.L[j][j] = Rat(1);
        for (int i = j + 1; i < n; i++) {
            Rat v = G[i][j];
            for (int k = 0; k < j; k++) v -= f.L[i][k] * f.L[j][k] * f.D[k];
            f.L[i][j] = v / dj;
        }
    }
    return f;
}

Int rat_floor_int(const Rat &r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    Int q = num / den;
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

Int rat_ceil_int(const Rat &r) { return -rat_floor_int(-r); }

// All integer v with v^T G v == 2, via the exact LDL^T factorization:
// Q(v) = sum_j D_j (v_j + c_j)^2 with c_j depending on v_{j+1..}.
void enum_rec(const LDL &f, int i, std::vector<long> &v, const Rat &rem, std::vector<WVec> &out) {
    if (i < 0) {
        if (rem == 0) out.push_back(v);
        return;
    }
    Rat c(0);
    for (int k = i + 1; k < f.n; k++)
        if (v[k]) c += f.L[k][i] * v[k];
    Rat bound = rem / f.D[i];
    if (bound < 0) return;
    Int bn = boost::multiprecision::numerator(bound);
    Int bd = boost::multiprecision::denominator(bound);
    // radius >= sqrt(bound); candidates are verified exactly below
    Int prod = bn * bd;
    Int root = boost::multiprecision::sqrt(prod);
    Rat radius = Rat(root + 1) / Rat(bd);
    Int lo = rat_ceil_int(-c - radius), hi = rat_floor_int(-c + radius);
    for (Int t = lo; t <= hi; t++) {
        Rat vc = Rat(t) + c;
        Rat q = f.D[i] * vc * vc;
        if (q > rem) continue;
        v[i] = t.convert_to<long>();
        enum_rec(f, i - 1, v, rem - q, out);
    }
    v[i] = 0;
}

std::vector<WVec> enum_norm2(const std::vector<std::vector<Rat>> &G) {
    LDL f = ldl_decompose(G);
    std::vector<long> v(f.n, 0);
    std::vector<WVec> out;
    enum_rec(f, f.n - 1, v, Rat(2), out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<WVec> norm2_vectors(int d, const Rat &a) { return enum_norm2(gram_matrix_at(d, a)); }

long count_norm2(int d, const Rat &a) {
    int m = 2 * (1 + d);
    auto G = gram_matrix_at(d, a);
    // radical = rational kernel of the Gram matrix
    auto M = G;
    std::vector<int> col_of_row;
    std::vector<bool> is_pivot(m, false);
    int row = 0;
    for (int c = 0; c < m && row < m; c++) {
        int pr = -1;
        for (int r = row; r < m; r++)
            if (M[r][c] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(M[pr], M[row]);
        Rat inv = Rat(1) / M[row][c];
        for (int cc = 0; cc < m; cc++) M[row][cc] *= inv;
        for (int r = 0; r < m; r++)
            if (r != row && M[r][c] != 0) {
                Rat f = M[r][c];
                for (int cc = 0; cc < m; cc++) M[r][cc] -= f * M[row][cc];
            }
        is_pivot[c] = true;
        col_of_row.push_back(c);
        row++;
    }
    if (row == m) return (long)enum_norm2(G).size();  // nondegenerate; PD checked inside
    std::vector<std::vector<Int>> K;
    for (int c = 0; c < m; c++) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(m, Rat(0));
        v[c] = 1;
        for (int r = 0; r < (int)col_of_row.size(); r++) v[col_of_row[r]] = -M[r][c];
        Int l = 1;
        for (auto &x : v) l = boost::multiprecision::lcm(l, Int(boost::multiprecision::denominator(x)));
        std::vector<Int> w(m);
        for (int i = 0; i < m; i++) w[i] = Int(boost::multiprecision::numerator(v[i] * Rat(l)));
        Int g = 0;
        for (auto &x : w) g = boost::multiprecision::gcd(g, x);
        if (g > 1)
            for (auto &x : w) x /= g;
        K.push_back(w);
    }
    // echelonize the radical basis insisting on unit pivots, so the
    // complementary coordinates represent a basis of the quotient lattice
    std::vector<int> pivots;
    int kr = 0;
    for (int c = 0; c < m && kr < (int)K.size(); c++) {
        int pr = -1;
        for (int r = kr; r < (int)K.size(); r++)
            if (K[r][c] == 1 || K[r][c] == -1) {
                pr = r;
                break;
            }
        if (pr < 0) {
            for (int r = kr; r < (int)K.size(); r++)
                check(K[r][c] == 0, "radical basis is not unimodularly triangular");
            continue;
        }
        std::swap(K[pr], K[kr]);
        if (K[kr][c] == -1)
            for (auto &x : K[kr]) x = -x;
        for (int r = 0; r < (int)K.size(); r++) {
            if (r == kr || K[r][c] == 0) continue;
            Int f = K[r][c];
            for (int cc = 0; cc < m; cc++) K[r][cc] -= f * K[kr][cc];
        }
        pivots.push_back(c);
        kr++;
    }
    check(kr == (int)K.size(), "radical basis echelon failed");
    std::vector<int> rest;
    for (int c = 0; c < m; c++)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) rest.push_back(c);
    std::vector<std::vector<Rat>> Q(rest.size(), std::vector<Rat>(rest.size()));
    for (size_t i = 0; i < rest.size(); i++)
        for (size_t j = 0; j < rest.size(); j++) Q[i][j] = G[rest[i]][rest[j]];
    return (long)enum_norm2(Q).size();
}

std::vector<std::vector<Rat>> alpha_gram(int d, const Rat &a) {
    check(d >= 1, "alpha_gram: d must be >= 1");
    std::vector<WVec> basis;
    for (int i = 1; i <= d; i++) {
        WVec ai = wv_sub(basis_f(d, i - 1), basis_f(d, i));
        basis.push_back(ai);
        basis.push_back(tau(ai));
    }
    int m = 2 * d;
    std::vector<std::vector<Rat>> G(m, std::vector<Rat>(m));
    for (int p = 0; p < m; p++)
        for (int q = 0; q < m; q++) G[p][q] = gram_inner_at(basis[p], basis[q], a);
    return G;
}

long count_norm2_alpha_sublattice(int d, const Rat &a) {
    return (long)enum_norm2(alpha_gram(d, a)).size();
}

bool match_norm2_to_labels(int d, const Rat &a, std::string *err) {
    auto labels = valid_labels(d);
    std::map<WVec, std::string> table;
    for (MN x : labels) {
        WVec w = weight_of(x, d);
        for (int r = 0; r < 3; r++) {
            for (int sg = 0; sg < 2; sg++) {
                WVec v = sg ? wv_neg(w) : w;
                std::string name =
                    std::string(sg ? "-" : "+") + "tau^" + std::to_string(r) + " f_" + lab::mn_str(x);
                auto ins = table.emplace(v, name);
                if (!ins.second) {
                    if (err) *err = "weight collision: " + name + " vs " + ins.first->second;
                    return false;
                }
            }
            w = tau(w);
        }
    }
    auto vecs = norm2_vectors(d, a);
    if (vecs.size() != table.size()) {
        if (err)
            *err = "norm-2 vector count " + std::to_string(vecs.size()) + " != 6 * " +
                   std::to_string(labels.size()) + " labels";
        return false;
    }
    for (const auto &v : vecs)
        if (!table.count(v)) {
            if (err) *err = "norm-2 vector is not a label weight";
            return false;
        }
    return true;
}

std::vector<std::vector<long>> simple_system_rows() {
    return {
        {1, 0, 0, 0, 0, 0, 0, 0},     // a
        {-1, -1, 0, 0, 0, 0, 0, 0},   // a'
        {0, 0, 1, 0, 0, 0, 0, 0},     // b
        {-1, 0, -1, -1, 0, 0, 0, 0},  // b'
        {0, 0, 0, 0, 1, 0, 0, 0},     // c
        {0, 1, -1, 0, -1, -1, 0, 0},  // c'
        {0, 0, 0, 0, 0, 0, 1, 0},     // d
        {0, 1, -1, 1, -2, 0, -2, -1}, // d'
    };
}

std::vector<std::vector<long>> dynkin_adjacency(int d) {
    check(1 <= d && d <= 4, "dynkin_adjacency: d must be 1..4");
    auto rows = simple_system_rows();
    auto G = alpha_gram(d, Rat(1));
    int m = 2 * d;
    for (int i = 0; i < m; i++)
        for (int p = m; p < 8; p++) check(rows[i][p] == 0, "simple root leaves the sublattice");
    std::vector<std::vector<long>> A(m, std::vector<long>(m, 0));
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++) {
            Rat s(0);
            for (int p = 0; p < m; p++) {
                if (!rows[i][p]) continue;
                for (int q = 0; q < m; q++)
                    if (rows[j][q]) s += Rat(rows[i][p]) * G[p][q] * Rat(rows[j][q]);
            }
            if (i == j) {
                check(s == 2, "simple root norm is not 2");
            } else {
                check(s == 0 || s == -1, "simple root pairing not 0/-1");
                A[i][j] = (s == -1) ? 1 : 0;
            }
        }
    return A;
}

WVec nu_vector(int d) {
    WVec acc = wv_zero(d);
    for (int i = 0; i <= d; i++) {
        WVec w = basis_f(d, i);
        for (int k = 0; k < (2 * i) % 3; k++) w = tau(w);
        if (i % 2) w = wv_neg(w);
        acc = wv_add(acc, w);
    }
    return acc;
}

const char *CRYSTAL_EDGES[36][3] = {
    {"3", "c", "2"},
    {"2", "b", "1"},
    {"1", "a", "0"},
    {"0", "a'", "10"},
    {"0", "b'", "21"},
    {"10", "c'", "32"},
    {"10", "b'", "2(10)"},
    {"32", "b'", "3(2(10))"},
    {"21", "a'", "2(10)"},
    {"2(10)", "c'", "3(2(10))"},
    {"2(10)", "a", "20"},
    {"3(2(10))", "a", "3(21)"},
    {"20", "c'", "3(21)"},
    {"20", "b", "(21)0"},
    {"3(21)", "a'", "3(20)"},
    {"3(21)", "b", "31"},
    {"3(20)", "b", "3(10)"},
    {"(21)0", "c'", "31"},
    {"(21)0", "c", "((32)1)0"},
    {"31", "a'", "3(10)"},
    {"31", "c", "(32)1"},
    {"3(10)", "a", "30"},
    {"3(10)", "c", "(32)(10)"},
    {"30", "b'", "3((21)0)"},
    {"30", "c", "(32)0"},
    {"3((21)0)", "c", "(32)((21)0)"},
    {"((32)1)0", "c'", "(32)1"},
    {"(32)1", "a'", "(32)(10)"},
    {"(32)(10)", "a", "(32)0"},
    {"(32)0", "b'", "(32)((21)0)"},
    {"(32)0", "b", "(31)0"},
    {"(32)((21)0)", "b", "(3(21))(10)"},
    {"(31)0", "b'", "(3(21))(10)"},
    {"(3(21))(10)", "a", "(3(21))0"},
    {"(3(21))0", "a'", "(3(2(10)))0"},
    {"(3(2(10)))0", "c'", "3(((32)1)0)"},
};

// diff = x*u + y*w over Q, checked on every coordinate.
static bool in_span2(const WVec &diff, const WVec &u, const WVec &w) {
    int n = (int)diff.size();
    int p0 = -1, p1 = -1;
    for (int p = 0; p < n && p1 < 0; p++) {
        if (p0 < 0) {
            if (u[p] || w[p]) p0 = p;
            continue;
        }
        long det = u[p0] * w[p] - u[p] * w[p0];
        if (det) p1 = p;
    }
    check(p0 >= 0 && p1 >= 0, "span vectors are dependent");
    Rat det = Rat(u[p0]) * Rat(w[p1]) - Rat(u[p1]) * Rat(w[p0]);
    Rat x = (Rat(diff[p0]) * Rat(w[p1]) - Rat(diff[p1]) * Rat(w[p0])) / det;
    Rat y = (Rat(u[p0]) * Rat(diff[p1]) - Rat(u[p1]) * Rat(diff[p0])) / det;
    for (int p = 0; p < n; p++)
        if (x * Rat(u[p]) + y * Rat(w[p]) != Rat(diff[p])) return false;
    return true;
}

bool crystal_check(std::string *err) {
    const int d = 3;
    const Rat a(3, 2);
    WVec nu = nu_vector(d), tnu = tau(nu);
    for (int p = 0; p < 2 * (d + 1); p++) {
        WVec e = wv_zero(d);
        e[p] = 1;
        if (gram_inner_at(nu, e, a) != 0 || gram_inner_at(tnu, e, a) != 0) {
            if (err) *err = "nu is not in the radical at a=3/2";
            return false;
        }
    }
    auto rows = simple_system_rows();
    std::vector<WVec> alpha_basis;
    for (int i = 1; i <= d; i++) {
        WVec ai = wv_sub(basis_f(d, i - 1), basis_f(d, i));
        alpha_basis.push_back(ai);
        alpha_basis.push_back(tau(ai));
    }
    static const char *LETTERS[6] = {"a", "a'", "b", "b'", "c", "c'"};
    std::vector<WVec> root(6, wv_zero(d));
    for (int r = 0; r < 6; r++) {
        for (int p = 6; p < 8; p++) check(rows[r][p] == 0, "root leaves the d=3 sublattice");
        for (int p = 0; p < 6; p++)
            if (rows[r][p]) {
                WVec scaled = alpha_basis[p];
                for (auto &x : scaled) x *= rows[r][p];
                root[r] = wv_add(root[r], scaled);
            }
    }
    for (const auto &edge : CRYSTAL_EDGES) {
        MN X = lab::mn_parse(edge[0], d), Y = lab::mn_parse(edge[2], d);
        int li = -1;
        for (int k = 0; k < 6; k++)
            if (std::string(edge[1]) == LETTERS[k]) li = k;
        check(li >= 0, "unknown edge letter");
        WVec diff = wv_sub(wv_sub(weight_of(Y, d), weight_of(X, d)), root[li]);
        if (!in_span2(diff, nu, tnu)) {
            if (err)
                *err = std::string("edge ") + edge[0] + " -" + edge[1] + "-> " + edge[2] +
                       ": weight change is not the root modulo the radical";
            return false;
        }
    }
    return true;
}

}  // namespace lat
