#pragma once

#include <string>
#include <vector>

#include "labels.hpp"
#include "laurent.hpp"

namespace lat {

// Integer vector in the ordered basis (f_0, tau f_0, ..., f_d, tau f_d);
// tau^2 f is always rewritten as -f - tau f.
using WVec = std::vector<long>;

WVec wv_zero(int d);
WVec basis_f(int d, int i);
WVec wv_add(const WVec &a, const WVec &b);
WVec wv_sub(const WVec &a, const WVec &b);
WVec wv_neg(const WVec &a);
bool wv_is_zero(const WVec &a);

// 120-degree rotation: on each 2-block (c,e) -> (-e, c-e); order 3.
WVec tau(const WVec &v);

// f recursion: leaf i -> f_i; node(L,R) -> -tau f_R - tau^2 f_L.
WVec weight_of(lab::MN m, int d);

// Symmetric form, symbolic in the parameter a:
//   within a block: |f|^2=2, <f,tau f>=-1;
//   between blocks i<j: <f_i,f_j>=2-a, <f_i,tau f_j>=-1, <tau f_i,f_j>=a-1,
//   <tau f_i,tau f_j>=2-a.
ring::Laurent gram_inner(const WVec &v, const WVec &w);
Rat gram_inner_at(const WVec &v, const WVec &w, const Rat &a);

// Full Gram matrix at a rational a (basis as above).
std::vector<std::vector<Rat>> gram_matrix_at(int d, const Rat &a);

// a^{-2d} det G_d as a polynomial in a (exact, fraction-free elimination).
ring::Laurent gram_det_normalized(int d);

// Antisymmetric pairing: B(tau^r f_i, tau^s f_j) = sign(i-j) * (+1 if s=r,
// -1 if s=r+sign(i-j) mod 3, else 0), extended bilinearly.
long b_form(const WVec &v, const WVec &w);

// Piece inversion numbers.  Slot conventions: up-triangle (NW,S,NE),
// down-triangle (SE,N,SW), vertical rhombus (SW,SE,NE,NW).  Calibrated so
// inv_up(10,10,10) = +1.
long inv_up(lab::MN nw, lab::MN s, lab::MN ne, int d);
long inv_down(lab::MN se, lab::MN n, lab::MN sw, int d);
long inv_rhombus(lab::MN sw, lab::MN se, lab::MN ne, lab::MN nw, int d);

// Half-sum of B over ordered pairs of edge weights along a path.
Rat path_inversion(const std::vector<WVec> &weights);

// All multinumbers over digits 0..d with |f_X|^2 = 2 identically in a,
// ordered by (leaf count, text).
std::vector<lab::MN> valid_labels(int d);

// All integer vectors of norm 2 at a given a (form must be positive
// definite); exact lattice enumeration.
std::vector<WVec> norm2_vectors(int d, const Rat &a);

// number of norm-2 vectors at parameter a: full lattice when the form is
// definite; in the quotient by the radical when positive semidefinite
long count_norm2(int d, const Rat &a);

// Same count inside the sublattice spanned by (alpha_i = f_{i-1} - f_i,
// tau alpha_i), i = 1..d; used where the full form is only semidefinite.
long count_norm2_alpha_sublattice(int d, const Rat &a);

// Gram of that sublattice basis (2d x 2d).
std::vector<std::vector<Rat>> alpha_gram(int d, const Rat &a);

// Every norm-2 vector must be (+-) tau^r f_X for exactly one valid X and
// r in {0,1,2}; returns false and fills err on any mismatch.
bool match_norm2_to_labels(int d, const Rat &a, std::string *err);

// Fixed 8-row simple system in coordinates (alpha_1, tau alpha_1, ...,
// alpha_4, tau alpha_4); rows ordered a, a', b, b', c, c', d, d'.
std::vector<std::vector<long>> simple_system_rows();

// Adjacency matrix 2I - S G S^T of the first 2d rows at a=1; entries must
// be 0/1 off the diagonal.
std::vector<std::vector<long>> dynkin_adjacency(int d);

// sum_{i=0..d} (-tau^2)^i f_i; spans the radical (with its tau image) at
// the degeneration point of the d=3 and d=4 forms.
WVec nu_vector(int d);

// The 27-node crystal: every edge (X, simple root letter, Y) must satisfy
// f_Y - f_X = root modulo span(nu, tau nu) at a = 3/2.  Letters index rows
// a,a',b,b',c,c'.  Returns false and fills err on the first bad edge.
bool crystal_check(std::string *err);
extern const char *CRYSTAL_EDGES[36][3];  // {X, letter, Y}

}  // namespace lat
