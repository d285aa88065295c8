#pragma once

#include <utility>
#include <vector>

#include "valforge/poly.hpp"

namespace valforge {

// unit * prod factors[i]^mult[i], factors monic irreducible, sorted by
// (degree, canonical index)
struct PolyFactorization {
    FqElem unit;
    std::vector<std::pair<Poly, int>> factors;
};

// squarefree split / distinct-degree / equal-degree stages; the equal-degree
// stage draws from a fixed-seed generator, so results are reproducible
PolyFactorization factor_poly(const Poly& f);

}  // namespace valforge
