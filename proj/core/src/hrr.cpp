#include "gf2hd/hrr.hpp"

#include <cmath>
#include <stdexcept>

namespace gf2hd {

RealVector random_real_vector(std::size_t dim, SplitMix64& rng) {
  RealVector v(dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (double& x : v) x = rng.next_gaussian() * scale;
  return v;
}

RealVector hrr_bind(const RealVector& r, const RealVector& f) {
  const std::size_t n = r.size();
  if (f.size() != n) throw std::invalid_argument("hrr_bind: dimension mismatch");
  RealVector out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double ri = r[i];
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = i + j;
      if (k >= n) k -= n;
      out[k] += ri * f[j];
    }
  }
  return out;
}

RealVector hrr_unbind(const RealVector& b, const RealVector& r) {
  const std::size_t n = b.size();
  if (r.size() != n) throw std::invalid_argument("hrr_unbind: dimension mismatch");
  // correlation: out[j] = sum_i r[i] * b[(i + j) mod n]
  RealVector out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double ri = r[i];
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = i + j;
      if (k >= n) k -= n;
      out[j] += ri * b[k];
    }
  }
  return out;
}

double cosine(const RealVector& a, const RealVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("cosine: dimension mismatch");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / std::sqrt(na * nb);
}

}  // namespace gf2hd
