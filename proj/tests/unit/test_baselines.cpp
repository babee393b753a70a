#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "gf2hd/hrr.hpp"
#include "gf2hd/rng.hpp"
#include "gf2hd/tensor.hpp"

using namespace gf2hd;

TEST_SUITE_BEGIN("baselines");

TEST_CASE("hrr bind/unbind is a lossy quasi-inverse") {
  SplitMix64 rng(41);
  // Band frozen from 1000-trial runs at D=512: cosine mean ~0.71,
  // observed extremes ~[0.51, 0.79].
  double total = 0.0;
  const int trials = 50;
  for (int t = 0; t < trials; ++t) {
    const RealVector r = random_real_vector(512, rng);
    const RealVector f = random_real_vector(512, rng);
    const double c = cosine(hrr_unbind(hrr_bind(r, f), r), f);
    CHECK(c > 0.45);
    CHECK(c < 0.90);
    CHECK(c < 0.999);  // never exact
    total += c;
  }
  CHECK(total / trials > 0.65);
  CHECK(total / trials < 0.77);
}

TEST_CASE("hrr zero filler recovers zero") {
  SplitMix64 rng(42);
  const RealVector r = random_real_vector(256, rng);
  const RealVector zero(256, 0.0);
  const RealVector rec = hrr_unbind(hrr_bind(r, zero), r);
  for (double x : rec) CHECK(x == 0.0);
  CHECK(cosine(rec, zero) == 0.0);
}

TEST_CASE("hrr recovery degrades with bundle arity on average") {
  SplitMix64 rng(43);
  const std::size_t D = 256;
  const int trials = 60;
  double prev_mean = 2.0;
  for (std::size_t k : {1, 2, 4, 8}) {
    double total = 0.0;
    for (int t = 0; t < trials; ++t) {
      RealVector bun(D, 0.0);
      RealVector role0, filler0;
      for (std::size_t i = 0; i < k; ++i) {
        RealVector r = random_real_vector(D, rng);
        RealVector f = random_real_vector(D, rng);
        const RealVector bf = hrr_bind(r, f);
        for (std::size_t d = 0; d < D; ++d) bun[d] += bf[d];
        if (i == 0) {
          role0 = std::move(r);
          filler0 = std::move(f);
        }
      }
      total += cosine(hrr_unbind(bun, role0), filler0);
    }
    const double mean = total / trials;
    CHECK(mean < prev_mean);
    prev_mean = mean;
  }
}

TEST_CASE("hrr dimension mismatch rejected") {
  SplitMix64 rng(44);
  const RealVector a = random_real_vector(8, rng);
  const RealVector b = random_real_vector(16, rng);
  CHECK_THROWS_AS(hrr_bind(a, b), std::invalid_argument);
  CHECK_THROWS_AS(hrr_unbind(a, b), std::invalid_argument);
  CHECK_THROWS_AS(cosine(a, b), std::invalid_argument);
}

TEST_CASE("tensor contraction is exact up to the role norm") {
  SplitMix64 rng(45);
  for (int t = 0; t < 20; ++t) {
    const RealVector r = random_real_vector(64, rng);
    const RealVector f = random_real_vector(64, rng);
    const TensorRep bound = tensor_bind(r, f);
    CHECK(bound.order == 2);
    CHECK(bound.components.size() == 64 * 64);
    const RealVector rec = tensor_unbind(bound, r);
    double r2 = 0.0;
    for (double x : r) r2 += x * x;
    for (std::size_t i = 0; i < rec.size(); ++i) {
      CHECK(std::abs(rec[i] - r2 * f[i]) <= 1e-9);
    }
  }
}

TEST_CASE("tensor nesting sizes grow multiplicatively") {
  CHECK(tensor_nesting_components(20, 0) == 20);
  CHECK(tensor_nesting_components(20, 1) == 400);
  CHECK(tensor_nesting_components(20, 5) == 64000000);  // ~1e7-order at depth 5
  for (int depth = 0; depth < 5; ++depth) {
    CHECK(tensor_nesting_components(20, depth + 1) ==
          20 * tensor_nesting_components(20, depth));
  }
  CHECK_THROWS_AS(tensor_nesting_components(1u << 16, 4), std::overflow_error);
}

TEST_SUITE_END();
