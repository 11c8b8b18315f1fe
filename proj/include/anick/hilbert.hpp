#pragma once

#include <vector>

#include "anick/chains.hpp"
#include "anick/groebner_comm.hpp"
#include "anick/groebner_nc.hpp"
#include "anick/series.hpp"

namespace anick {

// Coefficient n counts normal words (monomials) of degree n.
SeriesTrunc hilbert_from_normal_words(const NcGB& G, int d);
SeriesTrunc hilbert_from_normal_words(const CommGB& G, const RingPtr& ring, int d);

// Inverse of the alternating sum of chain generating functions.
// Throws BoundError if the deepest enumerated level still has chains of degree <= d.
SeriesTrunc hilbert_from_chains(const ChainSet& cs, int d);

// (H_A)^-1 + (H_B)^-1 - 1, inverted. Needs constant terms 1.
SeriesTrunc free_product_series(const SeriesTrunc& hA, const SeriesTrunc& hB);

// prod (1 - t^|x|)^-1, or prod (1 + t^|x|) for the exterior variant.
SeriesTrunc generator_product_series(const std::vector<int>& degrees, int d, bool exterior = false);

}  // namespace anick
