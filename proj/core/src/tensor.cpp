#include "gf2hd/tensor.hpp"

#include <stdexcept>

namespace gf2hd {

TensorRep tensor_bind(const RealVector& role, const RealVector& filler) {
  TensorRep t;
  t.order = 2;
  t.dims = {role.size(), filler.size()};
  t.components.resize(role.size() * filler.size());
  for (std::size_t i = 0; i < role.size(); ++i) {
    for (std::size_t j = 0; j < filler.size(); ++j) {
      t.components[i * filler.size() + j] = role[i] * filler[j];
    }
  }
  return t;
}

RealVector tensor_unbind(const TensorRep& t, const RealVector& role) {
  if (t.order != 2 || t.dims.size() != 2 || t.dims[0] != role.size()) {
    throw std::invalid_argument("tensor_unbind: shape mismatch");
  }
  const std::size_t cols = t.dims[1];
  RealVector out(cols, 0.0);
  for (std::size_t i = 0; i < role.size(); ++i) {
    const double ri = role[i];
    for (std::size_t j = 0; j < cols; ++j) {
      out[j] += ri * t.components[i * cols + j];
    }
  }
  return out;
}

std::uint64_t tensor_nesting_components(std::uint64_t dim, int depth) {
  if (depth < 0) throw std::invalid_argument("tensor nesting: negative depth");
  std::uint64_t n = 1;
  for (int i = 0; i <= depth; ++i) {
    if (dim != 0 && n > UINT64_MAX / dim) {
      throw std::overflow_error("tensor nesting: component count exceeds 2^64");
    }
    n *= dim;
  }
  return n;
}

}  // namespace gf2hd
