#pragma once

// Tensor-product binding baseline: bind is the outer product, unbind is
// contraction against the role (exact up to the ||role||^2 scale). The
// point of contrast is dimension growth: a depth-k nesting of D-dimensional
// constituents occupies D^(k+1) components, so deep nestings are reported
// as size computations rather than allocated.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gf2hd/hrr.hpp"

namespace gf2hd {

struct TensorRep {
  int order = 0;
  std::vector<std::size_t> dims;
  std::vector<double> components;  // flat, row-major
};

// Outer product role (x) filler: order 2, dims {D, D}.
TensorRep tensor_bind(const RealVector& role, const RealVector& filler);

// Contraction over the first axis: sum_i role[i] * t[i, j] = ||role||^2 * filler[j].
RealVector tensor_unbind(const TensorRep& t, const RealVector& role);

// Component count of a depth-k nesting at dimension D: D^(k+1).
// Overflow-checked; throws std::overflow_error past 2^64.
std::uint64_t tensor_nesting_components(std::uint64_t dim, int depth);

}  // namespace gf2hd
