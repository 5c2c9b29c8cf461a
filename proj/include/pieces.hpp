#pragma once
// Puzzle piece catalogs for the d-step rules, their inversion numbers and
// fugacities, and the lookup indexes the enumerator drives.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "labels.hpp"
#include "laurent.hpp"

namespace pz {

enum class Theory { H, HT, K, KDUAL, KT };

Theory theory_parse(const std::string &name);
std::string theory_name(Theory t);

// up-pointing triangle: edges NW, S, NE (labels are lab::MN handles)
struct Up {
    int nw, s, ne;
    bool operator<(const Up &o) const {
        return std::tie(nw, s, ne) < std::tie(o.nw, o.s, o.ne);
    }
    bool operator==(const Up &o) const { return nw == o.nw && s == o.s && ne == o.ne; }
};

// down-pointing triangle: edges SE, N, SW
struct Down {
    int se, n, sw;
    bool operator<(const Down &o) const {
        return std::tie(se, n, sw) < std::tie(o.se, o.n, o.sw);
    }
    bool operator==(const Down &o) const { return se == o.se && n == o.n && sw == o.sw; }
};

// vertical equivariant rhombus with SW = NE = p and SE = NW = q; never
// rotated, and excluded from the bottom row of a puzzle
struct Pair {
    int p, q;
    bool operator<(const Pair &o) const { return std::tie(p, q) < std::tie(o.p, o.q); }
};

struct Catalog {
    int d = 0;
    Theory theory = Theory::H;
    std::vector<Up> up;
    std::vector<Down> down;
    std::vector<Pair> pairs;
    bool kt_monomials = false;  // apply the K_T column-monomial rule

    // enumeration indexes
    std::map<int, std::vector<int>> up_by_nw;                 // NW label -> up indices
    std::map<std::pair<int, int>, std::vector<int>> down_by_n_sw;  // (N, SW) -> down indices
    std::map<int, std::vector<int>> pairs_by_q;               // NW label(=q) -> pair indices

    void build_indexes();
};

// pre: d <= 2 for any theory, d == 3 only for Theory::H
Catalog catalog(int d, Theory t);

// 120-degree rotation orbit closure of a base list of up-triangles:
// (NW,S,NE) = (X,Y,Z) -> (Z,X,Y) -> (Y,Z,X), plus the same tuples as
// down-triangles (the odd rotations)
void close_under_rotation(const std::vector<Up> &base, std::vector<Up> &up,
                          std::vector<Down> &down);

long inv(const Up &t, int d);
long inv(const Down &t, int d);

// triangle fugacity: 1 in H/HT, (-1)^inv in the K theories
ring::Laurent tri_fugacity(Theory t, long inversions);

// equivariant rhombus at column pair (i, j), i < j: y_i - y_j in HT,
// 1 - u_j/u_i in KT
ring::Laurent pair_fugacity(Theory t, int i, int j);

// K_T column rule for a factored vertical (up, down-under) stack: the stack
// contributes u_j/u_i iff |NW|+|NE| of the top exceeds |SW|+|SE| of the
// bottom, with ties broken by maxdigit(NE) > maxdigit(SE)
bool kt_monomial(const Up &top, const Down &under, int d);

std::string str(const Up &t);
std::string str(const Down &t);
std::string str(const Pair &p);

}  // namespace pz
