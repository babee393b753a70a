#pragma once

// Holographic reduced representation baseline: circular convolution as
// bind, circular correlation as the quasi-inverse unbind. Entries are iid
// normal with variance 1/D, so vectors have expected unit norm. Unbind is
// approximate by construction; this is the contrast case for the exact
// XOR-shift algebra.

#include <cstddef>
#include <vector>

#include "gf2hd/rng.hpp"

namespace gf2hd {

using RealVector = std::vector<double>;

RealVector random_real_vector(std::size_t dim, SplitMix64& rng);

// Circular convolution, O(D^2) schoolbook.
RealVector hrr_bind(const RealVector& r, const RealVector& f);

// Circular correlation (convolution with the involution of r).
RealVector hrr_unbind(const RealVector& b, const RealVector& r);

double cosine(const RealVector& a, const RealVector& b);

}  // namespace gf2hd
