#include "basechange/oracle.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <vector>

#include <omp.h>

namespace basechange {

namespace {

// Elements of a finite ring as indices in [0, |A|), with addition and
// multiplication tabulated from the ring arithmetic when |A| is small.
class IndexedRing {
 public:
  static constexpr std::uint64_t kTableLimit = 1024;

  explicit IndexedRing(const RingDescriptor& ring) : size_(*ring.cardinality()) {
    elements_.reserve(size_);
    for (std::uint64_t i = 0; i < size_; ++i) elements_.push_back(element_at(ring, i));
    zero_ = static_cast<std::uint32_t>(index_of(RingElement::zero(ring)));
    residue_.resize(size_);
    in_m_.resize(size_);
    for (std::uint64_t i = 0; i < size_; ++i) {
      residue_[i] = static_cast<std::uint32_t>(index_of(residue(elements_[i])));
      in_m_[i] = elements_[i].valuation() >= 1;
    }
    if (size_ <= kTableLimit) {
      add_.resize(size_ * size_);
      mul_.resize(size_ * size_);
      for (std::uint64_t i = 0; i < size_; ++i)
        for (std::uint64_t j = 0; j < size_; ++j) {
          add_[i * size_ + j] = static_cast<std::uint32_t>(index_of(elements_[i] + elements_[j]));
          mul_[i * size_ + j] = static_cast<std::uint32_t>(index_of(elements_[i] * elements_[j]));
        }
    }
  }

  std::uint64_t size() const noexcept { return size_; }
  std::uint32_t zero() const noexcept { return zero_; }
  std::uint32_t residue_index(std::uint32_t a) const { return residue_[a]; }
  bool in_maximal_ideal(std::uint32_t a) const { return in_m_[a] != 0; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (!add_.empty()) return add_[a * size_ + b];
    return static_cast<std::uint32_t>(index_of(elements_[a] + elements_[b]));
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!mul_.empty()) return mul_[a * size_ + b];
    return static_cast<std::uint32_t>(index_of(elements_[a] * elements_[b]));
  }

 private:
  std::uint64_t size_;
  std::uint32_t zero_ = 0;
  std::vector<RingElement> elements_;
  std::vector<std::uint32_t> residue_;
  std::vector<std::uint8_t> in_m_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
};

// Tables are built once per ring and shared between calls and threads.
std::shared_ptr<const IndexedRing> indexed_ring(const RingDescriptor& ring) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const IndexedRing>> cache;
  const std::string key = ring.spec_string();
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[key];
  if (!slot) slot = std::make_shared<const IndexedRing>(ring);
  return slot;
}

using Vec = std::vector<std::uint32_t>;

// A map of free modules with entries replaced by element indices.
struct IndexedMatrix {
  std::size_t rows;
  std::size_t cols;
  Vec entries;
};

IndexedMatrix indexed(const Matrix& d) {
  IndexedMatrix m{d.rows(), d.cols(), {}};
  m.entries.reserve(d.rows() * d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) m.entries.push_back(static_cast<std::uint32_t>(index_of(d(i, j))));
  return m;
}

// Index <-> vector bijection for A^rank, little-endian in base |A|.
class FreeModuleEnumerator {
 public:
  FreeModuleEnumerator(std::size_t rank, std::uint64_t size, std::uint64_t base)
      : rank_(rank), size_(size), base_(base) {}

  std::uint64_t size() const noexcept { return size_; }
  std::size_t rank() const noexcept { return rank_; }

  void decode(std::uint64_t index, Vec& out) const {
    for (std::size_t j = 0; j < rank_; ++j) {
      out[j] = static_cast<std::uint32_t>(index % base_);
      index /= base_;
    }
  }

  std::uint64_t encode(const Vec& x) const {
    std::uint64_t index = 0;
    for (std::size_t j = rank_; j-- > 0;) index = index * base_ + x[j];
    return index;
  }

  Vec scratch() const { return Vec(rank_, 0); }

 private:
  std::size_t rank_;
  std::uint64_t size_;
  std::uint64_t base_;
};

void apply(const IndexedRing& ring, const IndexedMatrix& d, const Vec& x, Vec& y) {
  const std::uint32_t zero = ring.zero();
  for (std::size_t i = 0; i < d.rows; ++i) {
    std::uint32_t acc = zero;
    for (std::size_t j = 0; j < d.cols; ++j) {
      const std::uint32_t a = d.entries[i * d.cols + j];
      if (a != zero && x[j] != zero) acc = ring.add(acc, ring.mul(a, x[j]));
    }
    y[i] = acc;
  }
}

bool all_zero(const IndexedRing& ring, const Vec& y) {
  return std::all_of(y.begin(), y.end(), [&](std::uint32_t v) { return v == ring.zero(); });
}

bool all_in_maximal_ideal(const IndexedRing& ring, const Vec& y) {
  return std::all_of(y.begin(), y.end(), [&](std::uint32_t v) { return ring.in_maximal_ideal(v); });
}

std::uint64_t residue_class(const IndexedRing& ring, const Vec& x, std::uint64_t q) {
  std::uint64_t index = 0;
  for (std::size_t j = x.size(); j-- > 0;) index = index * q + ring.residue_index(x[j]);
  return index;
}

FreeModuleEnumerator enumerator(const FreeComplex& c, int p, std::uint64_t cap) {
  if (!c.ring().is_finite())
    throw std::invalid_argument("oracle: " + c.ring().spec_string() + " is not a finite ring");
  const auto size = free_module_size(c.ring(), c.rank(p));
  if (!size || *size > cap)
    throw OracleTooLargeError("F^" + std::to_string(p) + " over " + c.ring().spec_string() +
                              " has more than " + std::to_string(cap) + " elements");
  return FreeModuleEnumerator(c.rank(p), *size, *c.ring().cardinality());
}

std::uint64_t count_set(const std::vector<std::uint8_t>& bits) {
  return static_cast<std::uint64_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

// --- serial reference -----------------------------------------------------

std::uint64_t cohomology_order_serial(const IndexedRing& ring, const IndexedMatrix& out_map,
                                      const IndexedMatrix& in_map, const FreeModuleEnumerator& source,
                                      const FreeModuleEnumerator& middle) {
  auto x = middle.scratch();
  Vec y(out_map.rows, 0);
  std::uint64_t kernel = 0;
  for (std::uint64_t i = 0; i < middle.size(); ++i) {
    middle.decode(i, x);
    apply(ring, out_map, x, y);
    if (all_zero(ring, y)) ++kernel;
  }
  std::set<std::uint64_t> image;
  auto w = source.scratch();
  for (std::uint64_t i = 0; i < source.size(); ++i) {
    source.decode(i, w);
    apply(ring, in_map, w, x);
    image.insert(middle.encode(x));
  }
  return kernel / image.size();
}

bool phi_surjective_serial(const IndexedRing& ring, const IndexedMatrix& d, const FreeModuleEnumerator& module,
                           std::uint64_t q) {
  auto x = module.scratch();
  Vec y(d.rows, 0);
  std::set<std::uint64_t> kernel_classes;
  for (std::uint64_t i = 0; i < module.size(); ++i) {
    module.decode(i, x);
    apply(ring, d, x, y);
    if (all_zero(ring, y)) kernel_classes.insert(residue_class(ring, x, q));
  }
  for (std::uint64_t i = 0; i < module.size(); ++i) {
    module.decode(i, x);
    apply(ring, d, x, y);
    const bool lhs = kernel_classes.count(residue_class(ring, x, q)) > 0;
    const bool rhs = all_in_maximal_ideal(ring, y);
    if (lhs != rhs) return false;
  }
  return true;
}

// --- OpenMP kernels ---------------------------------------------------------

std::uint64_t cohomology_order_parallel(const IndexedRing& ring, const IndexedMatrix& out_map,
                                        const IndexedMatrix& in_map, const FreeModuleEnumerator& source,
                                        const FreeModuleEnumerator& middle) {
  const auto middle_size = static_cast<std::int64_t>(middle.size());
  const auto source_size = static_cast<std::int64_t>(source.size());
  std::uint64_t kernel = 0;
  std::vector<std::uint8_t> image(middle.size(), 0);

#pragma omp parallel
  {
    auto x = middle.scratch();
    auto w = source.scratch();
    Vec y(out_map.rows, 0);
    std::vector<std::uint8_t> local(middle.size(), 0);

#pragma omp for schedule(static) reduction(+ : kernel)
    for (std::int64_t i = 0; i < middle_size; ++i) {
      middle.decode(static_cast<std::uint64_t>(i), x);
      apply(ring, out_map, x, y);
      if (all_zero(ring, y)) ++kernel;
    }

#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < source_size; ++i) {
      source.decode(static_cast<std::uint64_t>(i), w);
      apply(ring, in_map, w, x);
      local[middle.encode(x)] = 1;
    }

#pragma omp critical(basechange_oracle_merge)
    for (std::size_t k = 0; k < local.size(); ++k) image[k] |= local[k];
  }
  return kernel / count_set(image);
}

bool phi_surjective_parallel(const IndexedRing& ring, const IndexedMatrix& d, const FreeModuleEnumerator& module,
                             std::uint64_t q) {
  const auto size = static_cast<std::int64_t>(module.size());
  std::uint64_t classes = 1;
  for (std::size_t j = 0; j < module.rank(); ++j) classes *= q;
  std::vector<std::uint8_t> kernel_classes(classes, 0);
  std::uint64_t mismatches = 0;

#pragma omp parallel
  {
    auto x = module.scratch();
    Vec y(d.rows, 0);
    std::vector<std::uint8_t> local(classes, 0);

#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < size; ++i) {
      module.decode(static_cast<std::uint64_t>(i), x);
      apply(ring, d, x, y);
      if (all_zero(ring, y)) local[residue_class(ring, x, q)] = 1;
    }

#pragma omp critical(basechange_oracle_merge)
    for (std::size_t k = 0; k < local.size(); ++k) kernel_classes[k] |= local[k];
#pragma omp barrier

#pragma omp for schedule(static) reduction(+ : mismatches)
    for (std::int64_t i = 0; i < size; ++i) {
      module.decode(static_cast<std::uint64_t>(i), x);
      apply(ring, d, x, y);
      const bool lhs = kernel_classes[residue_class(ring, x, q)] != 0;
      if (lhs != all_in_maximal_ideal(ring, y)) ++mismatches;
    }
  }
  return mismatches == 0;
}

}  // namespace

std::optional<std::uint64_t> free_module_size(const RingDescriptor& ring, std::size_t rank) {
  const auto base = ring.cardinality();
  if (!base) return std::nullopt;
  __int128 size = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    size *= *base;
    if (size > (__int128{1} << 62)) return std::nullopt;
  }
  return static_cast<std::uint64_t>(size);
}

bool oracle_can_enumerate(const FreeComplex& c, int p, std::uint64_t cap) {
  for (int q : {p - 1, p}) {
    const auto size = free_module_size(c.ring(), c.rank(q));
    if (!size || *size > cap) return false;
  }
  return true;
}

std::uint64_t brute_cohomology_order(const FreeComplex& c, int p, std::uint64_t cap, Execution execution) {
  const FreeModuleEnumerator middle = enumerator(c, p, cap);
  const FreeModuleEnumerator source = enumerator(c, p - 1, cap);
  const auto tables = indexed_ring(c.ring());
  const IndexedRing& ring = *tables;
  const IndexedMatrix out_map = indexed(c.differential(p));
  const IndexedMatrix in_map = indexed(c.differential(p - 1));
  if (execution == Execution::serial) return cohomology_order_serial(ring, out_map, in_map, source, middle);
  return cohomology_order_parallel(ring, out_map, in_map, source, middle);
}

bool brute_phi_surjective(const FreeComplex& c, int p, std::uint64_t cap, Execution execution) {
  const FreeModuleEnumerator module = enumerator(c, p, cap);
  const std::uint64_t q = *c.ring().residue_cardinality();
  const auto tables = indexed_ring(c.ring());
  const IndexedRing& ring = *tables;
  const IndexedMatrix d = indexed(c.differential(p));
  if (execution == Execution::serial) return phi_surjective_serial(ring, d, module, q);
  return phi_surjective_parallel(ring, d, module, q);
}

}  // namespace basechange
