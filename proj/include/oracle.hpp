#pragma once

#include <functional>
#include <map>
#include <vector>

#include "labels.hpp"
#include "laurent.hpp"

// Lattice-model side: divided-difference vertex weights on a square grid give
// double Grothendieck polynomials; fixed-point restrictions then determine
// the equivariant K structure constants by a triangular solve up the Bruhat
// order.  Everything here is independent of the triangle-puzzle counting.
namespace orc {

using Table = std::map<lab::Str, ring::Laurent>;

// Row/column spectral parameters for the grid: 1-based index -> a single-term
// Laurent (monomial) value.
using Param = std::function<ring::Laurent(int)>;

// Full grid sum over edge-label configurations: rows carry t_1..t_n (top to
// bottom, left boundary = the sorted string), columns carry u_1..u_n (bottom
// boundary = the letter d, top boundary = lam); right boundary = d.
ring::Laurent statesum(const lab::Str &lam, int d);

// Same sum with caller-supplied spectral parameters.
ring::Laurent statesum_with(const lab::Str &lam, int d, const Param &trow, const Param &ucol);

// Sum over pipe dreams whose connectivity is the minimal lift of lam, signed
// by absorbable crossings; equals statesum(lam, d).
ring::Laurent pipe_dream_sum(const lab::Str &lam, int d);

// Restriction to the fixed point labeled by the string sigma:
// t_i := u_{sigma's lift(i)}.  Any lift of the same string gives the same
// value; the minimal lift is used.
ring::Laurent restrict_at(const lab::Str &lam, const lab::Str &sigma, int d);
// Explicit-lift variant (0-based lift positions), for well-definedness tests.
ring::Laurent restrict_lift(const lab::Str &lam, const std::vector<int> &lift, int d);

// Equivariant K structure constants of lam * mu (values: Laurent in u's),
// from restrictions by induction up the Bruhat order.  Exact.
Table constants(int d, const lab::Str &lam, const lab::Str &mu);

// Same constants evaluated on the line u_i := z^i; enough for the u := 1
// specializations and much cheaper on large shapes.
Table constants_z(int d, const lab::Str &lam, const lab::Str &mu);

// u := 1 (kills the equivariance; z := 1 on constants_z output).
Table specialize_K(const Table &kt);
// u := 1 + y truncated at the excess degree len(lam)+len(mu)-len(nu); lower
// parts are asserted to vanish.  Input must be a full (u-variable) table.
Table specialize_HT(const Table &kt, long lensum);
// Keep the excess-degree-zero layer of the K specialization.
Table specialize_H(const Table &kt, long lensum);

// Nonequivariant dual-basis constants: with P the pairing matrix
// P[a][b] = sum_nu c^nu_{ab}, expand S^lam * S_mu = sum_nu d^nu S_nu.
Table dual_constants(int d, const lab::Str &lam, const lab::Str &mu);

}  // namespace orc
