#pragma once

#include <cstdint>
#include <random>

#include "basechange/complex.hpp"
#include "basechange/oracle.hpp"

namespace basechange {

// Seeded std::mt19937_64 with rejection-sampled bounded draws; a seed gives
// the same sequence under any standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  // Uniform in [0, 1) with 53 bits.
  double unit();
  bool bernoulli(double probability) { return unit() < probability; }

 private:
  std::mt19937_64 engine_;
};

struct FuzzConfig {
  RingDescriptor ring = RingDescriptor::zmod_pk(2, 3);
  int num_degrees = 4;
  std::size_t max_rank = 4;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  double split_bias = 0.25;
  std::uint64_t cap = kDefaultEnumerationCap;  // oracle enumeration limit per module
};

// Uniform on finite rings. Infinite rings use a fixed small-height
// distribution:
//   p-local     n/d, n in [-2p^2, 2p^2], d in [1, p+1] with p not dividing d
//   rationals   n/d, n in [-9, 9], d in [1, 4]
//   trunc-poly over Q: coefficients n/d, n in [-3, 3], d in [1, 2]
RingElement random_element(const RingDescriptor& ring, Rng& rng);
RingElement random_unit(const RingDescriptor& ring, Rng& rng);
Matrix random_matrix(const RingDescriptor& ring, std::size_t rows, std::size_t cols, Rng& rng);

// Complex on degrees 0 .. num_degrees-1 with ranks uniform in [0, max_rank].
// Built from the top down: d^{p-1} = K R where the columns of K generate
// ker d^p (all of F^top at the top), so d o d = 0 by construction. R is
// uniform, except with probability split_bias it is a split block: units on
// the diagonal and entries of m elsewhere.
FreeComplex random_complex(const FuzzConfig& cfg);
// Trial t uses seed cfg.seed + t.
FreeComplex random_complex(const FuzzConfig& cfg, std::uint64_t trial);

}  // namespace basechange
