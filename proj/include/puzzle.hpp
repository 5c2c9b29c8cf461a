#pragma once
// Triangle-grid puzzle model: constraint-propagating enumeration over a
// piece catalog, fugacity accumulation, structure constants (including the
// dual convention), and ASCII rendering.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "labels.hpp"
#include "laurent.hpp"
#include "pieces.hpp"

namespace puz {

using lab::Str;

// One complete filling of the size-n triangle.  Up-cells hold a catalog
// up-piece index, or -(1+k) when cell (a,b) and the cell under it are fused
// into equivariant pair k.  Down-cells hold a catalog down-piece index, or
// -1 when consumed by the pair above.
struct Filling {
    int n = 0;
    std::vector<int> up;    // indexed a*n+b for a+b <= n-1
    std::vector<int> down;  // indexed a*n+b for a+b <= n-2
};

// All fillings with NW = lambda, NE = mu, and (when nu != nullptr) S = nu,
// every string read left to right.  Content mismatch yields no fillings.
void enumerate_puzzles(const pz::Catalog &c, const Str &lambda, const Str &mu, const Str *nu,
                       const std::function<void(const Filling &)> &visit);

ring::Laurent fugacity(const pz::Catalog &c, const Filling &f);

// sum of piece inversion numbers (equivariant pairs count -1 each)
long inversion_sum(const pz::Catalog &c, const Filling &f);

// the string along the south side, read left to right
Str south_string(const pz::Catalog &c, const Filling &f);

ring::Laurent structure_constant(int d, pz::Theory t, const Str &lambda, const Str &mu,
                                 const Str &nu);

// full expansion over south boundaries of matching content
std::map<Str, ring::Laurent> expand_product(int d, pz::Theory t, const Str &lambda,
                                            const Str &mu);

// dual-basis constant (nonequivariant K): enumerates inverted-triangle
// puzzles via the 180-degree catalog on reversed boundary strings
ring::Laurent dual_structure_constant(int d, const Str &lambda, const Str &mu, const Str &nu);

std::string render(const pz::Catalog &c, const Filling &f);

}  // namespace puz
