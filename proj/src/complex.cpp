#include "basechange/complex.hpp"

#include <algorithm>
#include <sstream>

#include "basechange/linalg.hpp"

namespace basechange {

FreeComplex::FreeComplex(const RingDescriptor& ring, int min_degree, std::vector<std::size_t> ranks,
                         std::vector<Matrix> maps)
    : ring_(ring), min_degree_(min_degree), ranks_(std::move(ranks)), maps_(std::move(maps)) {
  if (auto violation = validate(ring_, min_degree_, ranks_, maps_))
    throw ComplexError(violation->degree, violation->message);
}

FreeComplex FreeComplex::zero(const RingDescriptor& ring, int min_degree, std::vector<std::size_t> ranks) {
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i + 1 < ranks.size(); ++i) maps.emplace_back(ring, ranks[i + 1], ranks[i]);
  return FreeComplex(ring, min_degree, std::move(ranks), std::move(maps));
}

std::size_t FreeComplex::rank(int p) const noexcept {
  if (p < min_degree_ || p > max_degree()) return 0;
  return ranks_[static_cast<std::size_t>(p - min_degree_)];
}

Matrix FreeComplex::differential(int p) const {
  if (p >= min_degree_ && p < max_degree()) return maps_[static_cast<std::size_t>(p - min_degree_)];
  return Matrix(ring_, rank(p + 1), rank(p));
}

std::optional<ComplexViolation> validate(const RingDescriptor& ring, int min_degree,
                                         const std::vector<std::size_t>& ranks,
                                         const std::vector<Matrix>& maps) {
  const std::size_t expected = ranks.empty() ? 0 : ranks.size() - 1;
  if (maps.size() != expected)
    throw DimensionError("complex with " + std::to_string(ranks.size()) + " degrees needs " +
                         std::to_string(expected) + " maps, got " + std::to_string(maps.size()));
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const int p = min_degree + static_cast<int>(i);
    if (!(maps[i].ring() == ring))
      throw RingMismatchError("d^" + std::to_string(p) + " is over " + maps[i].ring().spec_string() +
                              ", complex is over " + ring.spec_string());
    if (maps[i].rows() != ranks[i + 1] || maps[i].cols() != ranks[i])
      throw DimensionError("d^" + std::to_string(p) + " must be " + std::to_string(ranks[i + 1]) + "x" +
                           std::to_string(ranks[i]) + ", got " + std::to_string(maps[i].rows()) + "x" +
                           std::to_string(maps[i].cols()));
  }
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    if (!(maps[i + 1] * maps[i]).is_zero()) {
      const int p = min_degree + static_cast<int>(i);
      return ComplexViolation{p, "d∘d ≠ 0 at degree " + std::to_string(p)};
    }
  }
  return std::nullopt;
}

std::optional<ComplexViolation> validate(const FreeComplex& c) {
  return validate(c.ring(), c.min_degree(), c.ranks(), c.maps());
}

std::string ModulePresentation::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "A";
    if (free_rank > 1) out << "^" << free_rank;
    first = false;
  }
  for (int a : torsion_exponents) {
    out << (first ? "" : " + ") << "A/(pi";
    if (a > 1) out << "^" << a;
    out << ")";
    first = false;
  }
  return out.str();
}

ModulePresentation cokernel_presentation(const Matrix& relations) {
  const SmithForm snf = smith_normal_form(relations);
  ModulePresentation out;
  out.free_rank = relations.rows() - snf.rank();
  for (int a : snf.exponents)
    if (a > 0) out.torsion_exponents.push_back(a);
  return out;
}

std::optional<std::uint64_t> module_order(const RingDescriptor& ring, const ModulePresentation& m) {
  const auto q = ring.residue_cardinality();
  const auto c = ring.nilpotency_degree();
  if (!ring.is_finite() || !q || !c) return std::nullopt;
  std::uint64_t exponent = static_cast<std::uint64_t>(*c) * m.free_rank;
  for (int a : m.torsion_exponents) exponent += static_cast<std::uint64_t>(a);
  __int128 order = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    order *= *q;
    if (order > (__int128{1} << 63)) return std::nullopt;
  }
  return static_cast<std::uint64_t>(order);
}

ModulePresentation cohomology(const FreeComplex& c, int p) {
  if (p < c.min_degree() || p > c.max_degree()) return {};
  const RingDescriptor& ring = c.ring();
  const KernelModule kernel = kernel_module(c.differential(p));
  const Matrix incoming = c.differential(p - 1);

  // Express im d^{p-1} in terms of the kernel generators: K * C = d^{p-1}.
  const auto coefficients = solve(kernel.generators, incoming);
  if (!coefficients)
    throw std::logic_error("cohomology: image of d^" + std::to_string(p - 1) +
                           " is not inside ker d^" + std::to_string(p));

  const std::size_t u = kernel.generators.cols();
  std::vector<std::size_t> torsion_generators;
  for (std::size_t j = 0; j < u; ++j)
    if (kernel.annihilator_exponent[j] > 0) torsion_generators.push_back(j);
  Matrix internal(ring, u, torsion_generators.size());
  for (std::size_t i = 0; i < torsion_generators.size(); ++i) {
    const std::size_t j = torsion_generators[i];
    internal(j, i) = RingElement::uniformizer_power(ring, kernel.annihilator_exponent[j]);
  }
  return cokernel_presentation(hconcat(*coefficients, internal));
}

FreeComplex tensor_residue(const FreeComplex& c) {
  std::vector<Matrix> maps;
  maps.reserve(c.maps().size());
  for (const Matrix& d : c.maps()) maps.push_back(mat_reduce(d));
  return FreeComplex(c.ring().residue_field(), c.min_degree(), c.ranks(), std::move(maps));
}

RingDescriptor quotient_ring(const RingDescriptor& ring, int n) {
  auto unsupported = [&]() {
    return UnsupportedBaseChangeError("no quotient A/m^" + std::to_string(n) + " of " + ring.spec_string());
  };
  if (n < 1) throw unsupported();
  if (n == 1) return ring.residue_field();
  switch (ring.kind()) {
    case RingKind::p_local:
      return RingDescriptor::zmod_pk(ring.prime(), n);
    case RingKind::zmod_pk:
      if (n > ring.exponent()) throw unsupported();
      return RingDescriptor::zmod_pk(ring.prime(), n);
    case RingKind::trunc_poly:
      if (n > ring.exponent()) throw unsupported();
      return ring.over_rationals() ? RingDescriptor::trunc_poly_q(n)
                                   : RingDescriptor::trunc_poly_fp(ring.prime(), n);
    case RingKind::prime_field:
    case RingKind::rationals:
      if (n != 1) throw unsupported();
      return ring;
  }
  throw unsupported();
}

std::vector<int> representable_quotients(const RingDescriptor& ring) {
  const int depth = ring.nilpotency_degree().value_or(kPLocalQuotientDepth);
  std::vector<int> out;
  for (int n = 1; n <= depth; ++n) out.push_back(n);
  return out;
}

RingElement project(const RingElement& x, const RingDescriptor& quotient) {
  const RingDescriptor& ring = x.ring();
  if (quotient.is_field() && !ring.is_field()) return residue(x);
  switch (ring.kind()) {
    case RingKind::p_local:
      return RingElement::from_rational(quotient, std::get<mpq_class>(x.value()));
    case RingKind::zmod_pk:
      return RingElement::from_integer(quotient, std::get<std::int64_t>(x.value()));
    case RingKind::trunc_poly: {
      std::vector<mpq_class> coeffs;
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::vector<std::int64_t>> ||
                          std::is_same_v<T, std::vector<mpq_class>>)
              for (const auto& coeff : v) coeffs.emplace_back(coeff);
          },
          x.value());
      return RingElement::polynomial(quotient, coeffs);
    }
    case RingKind::prime_field:
    case RingKind::rationals:
      return x;
  }
  throw std::logic_error("unreachable");
}

Matrix project(const Matrix& a, const RingDescriptor& quotient) {
  return a.map(quotient, [&](const RingElement& x) { return project(x, quotient); });
}

FreeComplex tensor_quotient(const FreeComplex& c, int n) {
  const RingDescriptor quotient = quotient_ring(c.ring(), n);
  std::vector<Matrix> maps;
  maps.reserve(c.maps().size());
  for (const Matrix& d : c.maps()) maps.push_back(project(d, quotient));
  return FreeComplex(quotient, c.min_degree(), c.ranks(), std::move(maps));
}

ModulePresentation tensor_presentation(const ModulePresentation& h, const RingDescriptor& ring, int n) {
  quotient_ring(ring, n);
  ModulePresentation out;
  out.free_rank = h.free_rank;
  for (int a : h.torsion_exponents) {
    if (std::min(a, n) >= n)
      ++out.free_rank;
    else
      out.torsion_exponents.push_back(a);
  }
  std::sort(out.torsion_exponents.begin(), out.torsion_exponents.end());
  return out;
}

}  // namespace basechange
