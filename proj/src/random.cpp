#include "basechange/random.hpp"

#include <limits>

#include "basechange/linalg.hpp"

namespace basechange {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

namespace {

mpq_class small_fraction(Rng& rng, std::int64_t height, std::int64_t max_den, std::int64_t avoid_prime) {
  std::int64_t den;
  do {
    den = rng.between(1, max_den);
  } while (avoid_prime != 0 && den % avoid_prime == 0);
  mpq_class q(mpz_class(static_cast<long>(rng.between(-height, height))), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

}  // namespace

RingElement random_element(const RingDescriptor& ring, Rng& rng) {
  switch (ring.kind()) {
    case RingKind::zmod_pk:
    case RingKind::prime_field:
      return RingElement::from_integer(ring, static_cast<std::int64_t>(rng.below(ring.modulus())));
    case RingKind::p_local: {
      const std::int64_t p = ring.prime();
      return RingElement::from_rational(ring, small_fraction(rng, 2 * p * p, p + 1, p));
    }
    case RingKind::rationals:
      return RingElement::from_rational(ring, small_fraction(rng, 9, 4, 0));
    case RingKind::trunc_poly: {
      std::vector<mpq_class> coeffs(ring.exponent());
      for (auto& c : coeffs) {
        if (ring.over_rationals())
          c = small_fraction(rng, 3, 2, 0);
        else
          c = mpq_class(mpz_class(static_cast<unsigned long>(rng.below(ring.prime()))));
      }
      return RingElement::polynomial(ring, coeffs);
    }
  }
  throw std::logic_error("unreachable");
}

RingElement random_unit(const RingDescriptor& ring, Rng& rng) {
  for (;;) {
    RingElement x = random_element(ring, rng);
    if (x.is_unit()) return x;
  }
}

Matrix random_matrix(const RingDescriptor& ring, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_element(ring, rng);
  return m;
}

namespace {

Matrix split_block(const RingDescriptor& ring, std::size_t rows, std::size_t cols, Rng& rng) {
  const RingElement pi = RingElement::uniformizer_power(ring, 1);
  Matrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = i == j ? random_unit(ring, rng) : random_element(ring, rng) * pi;
  return m;
}

}  // namespace

FreeComplex random_complex(const FuzzConfig& cfg) {
  if (cfg.num_degrees < 1) throw std::invalid_argument("random_complex: num_degrees must be positive");
  Rng rng(cfg.seed);
  const RingDescriptor& ring = cfg.ring;
  const auto degrees = static_cast<std::size_t>(cfg.num_degrees);

  std::vector<std::size_t> ranks(degrees);
  for (auto& r : ranks) r = static_cast<std::size_t>(rng.below(cfg.max_rank + 1));

  std::vector<Matrix> maps(degrees - 1, Matrix(ring, 0, 0));
  Matrix kernel = Matrix::identity(ring, ranks.back());
  for (std::size_t i = degrees - 1; i > 0; --i) {
    const std::size_t source_rank = ranks[i - 1];
    const Matrix coefficients = rng.bernoulli(cfg.split_bias)
                                    ? split_block(ring, kernel.cols(), source_rank, rng)
                                    : random_matrix(ring, kernel.cols(), source_rank, rng);
    maps[i - 1] = kernel * coefficients;
    kernel = kernel_generators(maps[i - 1]);
  }
  return FreeComplex(ring, 0, std::move(ranks), std::move(maps));
}

FreeComplex random_complex(const FuzzConfig& cfg, std::uint64_t trial) {
  FuzzConfig trial_cfg = cfg;
  trial_cfg.seed = cfg.seed + trial;
  return random_complex(trial_cfg);
}

}  // namespace basechange
