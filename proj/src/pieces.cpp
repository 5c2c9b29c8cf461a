#include "pieces.hpp"

#include <algorithm>
#include <set>

#include "lattice.hpp"
#include "util.hpp"

namespace pz {

Theory theory_parse(const std::string &name) {
    if (name == "H") return Theory::H;
    if (name == "HT") return Theory::HT;
    if (name == "K") return Theory::K;
    if (name == "Kdual" || name == "KDUAL" || name == "kdual") return Theory::KDUAL;
    if (name == "KT") return Theory::KT;
    die("unknown theory: " + name + " (expected H, HT, K, Kdual, KT)");
}

std::string theory_name(Theory t) {
    switch (t) {
        case Theory::H: return "H";
        case Theory::HT: return "HT";
        case Theory::K: return "K";
        case Theory::KDUAL: return "Kdual";
        case Theory::KT: return "KT";
    }
    return "?";
}

namespace {

// base up-triangles as {NW, S, NE}; the full zero-inversion catalog is the
// rotation closure of these
const char *D1_BASE[][3] = {
    {"0", "0", "0"},
    {"1", "1", "1"},
    {"1", "10", "0"},
};

const char *D2_BASE[][3] = {
    {"0", "0", "0"},
    {"1", "1", "1"},
    {"2", "2", "2"},
    {"1", "10", "0"},
    {"2", "20", "0"},
    {"2", "21", "1"},
    {"21", "(21)0", "0"},
    {"2", "2(10)", "10"},
};

const char *D3_BASE[][3] = {
    {"0", "0", "0"},
    {"1", "1", "1"},
    {"2", "2", "2"},
    {"3", "3", "3"},
    {"1", "10", "0"},
    {"2", "20", "0"},
    {"3", "30", "0"},
    {"2", "21", "1"},
    {"3", "31", "1"},
    {"3", "32", "2"},
    {"21", "(21)0", "0"},
    {"31", "(31)0", "0"},
    {"32", "(32)0", "0"},
    {"32", "(32)1", "1"},
    {"2", "2(10)", "10"},
    {"3", "3(10)", "10"},
    {"3", "3(20)", "20"},
    {"3", "3(21)", "21"},
    {"32", "(32)(10)", "10"},
    {"3(2(10))", "(3(2(10)))0", "0"},
    {"3(21)", "(3(21))(10)", "10"},
    {"32", "(32)((21)0)", "(21)0"},
    {"3", "3(((32)1)0)", "((32)1)0"},
};

// the d=2 K-theory pieces; used exactly as printed, no rotations
const char *D2_K_UP[][3] = {
    {"10", "10", "10"},
    {"20", "20", "20"},
    {"21", "21", "21"},
    {"2(10)", "20", "21"},
    {"21", "2(10)", "20"},
    {"20", "21", "2(10)"},
    {"(21)0", "10", "20"},
    {"10", "20", "(21)0"},
    {"(21)0", "1", "2(10)"},
};

// {SE, N, SW}
const char *D2_K_DOWN[][3] = {
    {"20", "(21)0", "10"},
    {"1", "2(10)", "(21)0"},
    {"2(10)", "(21)0", "1"},
    {"(21)0", "(21)0", "(21)0"},
};

const char *EQ_PAIRS[][2] = {
    {"1", "0"},     {"2", "0"},      {"2", "1"},      {"21", "0"},
    {"2", "10"},    {"21", "10"},    {"2(10)", "0"},  {"2", "(21)0"},
};

bool digits_fit(const char *s, int d) {
    for (const char *p = s; *p; p++)
        if (*p >= '0' && *p <= '9' && *p - '0' > d) return false;
    return true;
}

}  // namespace

void close_under_rotation(const std::vector<Up> &base, std::vector<Up> &up,
                          std::vector<Down> &down) {
    std::set<Up> us;
    std::set<Down> ds;
    for (const Up &t : base) {
        int x = t.nw, y = t.s, z = t.ne;
        us.insert({x, y, z});
        us.insert({z, x, y});
        us.insert({y, z, x});
        ds.insert({x, y, z});
        ds.insert({z, x, y});
        ds.insert({y, z, x});
    }
    up.assign(us.begin(), us.end());
    down.assign(ds.begin(), ds.end());
}

void Catalog::build_indexes() {
    up_by_nw.clear();
    down_by_n_sw.clear();
    pairs_by_q.clear();
    for (int i = 0; i < (int)up.size(); i++) up_by_nw[up[i].nw].push_back(i);
    for (int i = 0; i < (int)down.size(); i++)
        down_by_n_sw[{down[i].n, down[i].sw}].push_back(i);
    for (int i = 0; i < (int)pairs.size(); i++) pairs_by_q[pairs[i].q].push_back(i);
}

Catalog catalog(int d, Theory t) {
    check(1 <= d && d <= 3, "catalog: d must be 1..3");
    check(d <= 2 || t == Theory::H, "catalog: d = 3 supports only the H rule");
    Catalog c;
    c.d = d;
    c.theory = t;
    std::vector<Up> base;
    auto add_base = [&](const char *(*rows)[3], int n) {
        for (int i = 0; i < n; i++)
            base.push_back({lab::mn_parse(rows[i][0], d), lab::mn_parse(rows[i][1], d),
                            lab::mn_parse(rows[i][2], d)});
    };
    if (d == 1) add_base(D1_BASE, sizeof(D1_BASE) / sizeof(D1_BASE[0]));
    if (d == 2) add_base(D2_BASE, sizeof(D2_BASE) / sizeof(D2_BASE[0]));
    if (d == 3) add_base(D3_BASE, sizeof(D3_BASE) / sizeof(D3_BASE[0]));
    close_under_rotation(base, c.up, c.down);

    auto add_k_pieces = [&](bool rotated) {
        // the K pieces enter exactly as printed; under the 180-degree dual
        // convention the same label tuples swap orientation
        if (d == 1) {
            int ten = lab::mn_parse("10", 1);
            if (!rotated)
                c.up.push_back({ten, ten, ten});
            else
                c.down.push_back({ten, ten, ten});
        } else if (d == 2) {
            for (auto &row : D2_K_UP) {
                int x = lab::mn_parse(row[0], d), y = lab::mn_parse(row[1], d),
                    z = lab::mn_parse(row[2], d);
                if (!rotated)
                    c.up.push_back({x, y, z});
                else
                    c.down.push_back({x, y, z});
            }
            for (auto &row : D2_K_DOWN) {
                int x = lab::mn_parse(row[0], d), y = lab::mn_parse(row[1], d),
                    z = lab::mn_parse(row[2], d);
                if (!rotated)
                    c.down.push_back({x, y, z});
                else
                    c.up.push_back({x, y, z});
            }
        }
    };
    if (t == Theory::K || t == Theory::KT) add_k_pieces(false);
    if (t == Theory::KDUAL) add_k_pieces(true);
    if (t == Theory::HT || t == Theory::KT) {
        for (auto &row : EQ_PAIRS) {
            if (!digits_fit(row[0], d) || !digits_fit(row[1], d)) continue;
            c.pairs.push_back({lab::mn_parse(row[0], d), lab::mn_parse(row[1], d)});
        }
    }
    c.kt_monomials = (t == Theory::KT);
    {
        std::set<Up> us(c.up.begin(), c.up.end());
        std::set<Down> ds(c.down.begin(), c.down.end());
        check(us.size() == c.up.size() && ds.size() == c.down.size(),
              "catalog contains duplicate pieces");
    }
    c.build_indexes();
    return c;
}

long inv(const Up &t, int d) { return lat::inv_up(t.nw, t.s, t.ne, d); }
long inv(const Down &t, int d) { return lat::inv_down(t.se, t.n, t.sw, d); }

ring::Laurent tri_fugacity(Theory t, long inversions) {
    if (t == Theory::H || t == Theory::HT) {
        check(inversions == 0, "non-K rule saw a positive-inversion triangle");
        return ring::Laurent(1);
    }
    return ring::Laurent(inversions % 2 ? -1 : 1);
}

ring::Laurent pair_fugacity(Theory t, int i, int j) {
    check(i < j, "equivariant pair needs i < j");
    using ring::Laurent;
    if (t == Theory::HT)
        return Laurent::var("y" + std::to_string(i), 1) - Laurent::var("y" + std::to_string(j), 1);
    check(t == Theory::KT, "equivariant pairs only arise in HT and KT");
    return Laurent(1) - Laurent::var("u" + std::to_string(j), 1) *
                            Laurent::var("u" + std::to_string(i), -1);
}

// A vertical rhombus carries the column monomial u_j/u_i exactly when the
// weight exchanged across it, delta = f(SW) - f(NE), points "down": at the
// highest index i where the (f_i, tau f_i) block of delta is nonzero, both
// coordinates are <= 0.  Stacks with delta = 0 (the 180-degree-rotation-
// invariant ones) never fire, and a stack fires iff its rotation does not.
bool kt_monomial(const Up &top, const Down &under, int d) {
    lat::WVec delta = lat::wv_sub(lat::weight_of(under.sw, d), lat::weight_of(top.ne, d));
    for (int i = d; i >= 0; --i) {
        long a = delta[2 * i], b = delta[2 * i + 1];
        if (a == 0 && b == 0) continue;
        return a <= 0 && b <= 0;
    }
    return false;
}

std::string str(const Up &t) {
    return "up(" + lab::mn_str(t.nw) + "," + lab::mn_str(t.s) + "," + lab::mn_str(t.ne) + ")";
}
std::string str(const Down &t) {
    return "down(" + lab::mn_str(t.se) + "," + lab::mn_str(t.n) + "," + lab::mn_str(t.sw) + ")";
}
std::string str(const Pair &p) {
    return "pair(" + lab::mn_str(p.p) + "," + lab::mn_str(p.q) + ")";
}

}  // namespace pz
