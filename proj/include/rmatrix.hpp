#pragma once

#include "labels.hpp"
#include "laurent.hpp"

#include <vector>

namespace rmx {

// Nonzero weights of the fused crossing vertex on two-step labels: a rhombus
// with bottom edges (SW,SE) and top edges (NE,NW).  Values are rational
// functions in q, u1, u2; inv is the inversion number drawn at the crossing.
struct CrossEntry {
    int inv;
    lab::MN sw, se, ne, nw;
    ring::RatFunc val;
};

// Triangle vertex weights (monomials in q).  Up rows are (NW,S,NE); down
// rows are (SE,N,SW).
struct TriWeight {
    int inv;
    lab::MN x0, x1, x2;
    ring::Laurent val;
};

const std::vector<CrossEntry> &cross_table();  // 160 entries
const std::vector<TriWeight> &up_table();      // 32 entries
const std::vector<TriWeight> &down_table();    // 32 entries

// nullptr when the entry is zero
const CrossEntry *cross_find(lab::MN sw, lab::MN se, lab::MN ne, lab::MN nw);

// Single-number crossing vertex: 9x9 in the basis (i,j), i,j in {0,1,2},
// ordered lexicographically.  Row (sw,se), column (ne,nw).
ring::RatFunc single_cross(int sw, int se, int ne, int nw);

// Crossing vertex of the degenerate divided-difference model: rows (sw,se),
// columns (ne,nw), entries in u1 (row rapidity) and u2 (column rapidity).
ring::RatFunc nil_cross(int sw, int se, int ne, int nw);

}  // namespace rmx
