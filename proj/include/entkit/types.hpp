// Shared tolerances and the party-structure types used across the toolkit.

#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace entkit {

// Numerical tolerances, sized for double-precision eigensolvers on total
// dimension <= 4096.
namespace tol {
inline constexpr double herm = 1e-9;    // Hermiticity of inputs
inline constexpr double norm = 1e-9;    // unit trace / unit vector norm
inline constexpr double psd = 1e-9;     // allowed negative eigenvalue slack
inline constexpr double rank = 1e-10;   // Schmidt coefficient cutoff
inline constexpr double recon = 1e-8;   // reconstruction residuals
inline constexpr double range = 1e-7;   // range-membership residual
inline constexpr double detect = 1e-9;  // criterion violation strictness
}  // namespace tol

// Ordered list of party dimensions d_1..d_N.  Party 0 is the slowest-varying
// tensor index (row-major convention).
class DimensionList {
 public:
  DimensionList() = default;
  explicit DimensionList(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("DimensionList: no parties");
    for (std::size_t d : dims_) {
      if (d < 2) throw std::invalid_argument("DimensionList: party dimension must be >= 2");
    }
  }
  DimensionList(std::initializer_list<std::size_t> dims)
      : DimensionList(std::vector<std::size_t>(dims)) {}

  std::size_t parties() const { return dims_.size(); }
  std::size_t operator[](std::size_t k) const { return dims_[k]; }
  std::size_t total() const {
    return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1},
                           std::multiplies<>());
  }
  const std::vector<std::size_t>& dims() const { return dims_; }
  bool operator==(const DimensionList& o) const { return dims_ == o.dims_; }

 private:
  std::vector<std::size_t> dims_;
};

// A bipartition of the parties into two nonempty complementary groups.
// Stored sorted; the merged bipartite ordering keeps ascending party index
// inside each group.
class BipartiteSplit {
 public:
  BipartiteSplit(std::vector<std::size_t> party_a, std::size_t n_parties);

  // Convenience: single-party-vs-rest split.
  static BipartiteSplit party_vs_rest(std::size_t party, std::size_t n_parties);
  // Canonical split of an already bipartite state: {0} vs {1}.
  static BipartiteSplit bipartite() { return BipartiteSplit({0}, 2); }

  const std::vector<std::size_t>& party_a() const { return a_; }
  const std::vector<std::size_t>& party_b() const { return b_; }
  std::size_t n_parties() const { return a_.size() + b_.size(); }

  std::size_t dim_a(const DimensionList& dims) const;
  std::size_t dim_b(const DimensionList& dims) const;

  bool operator<(const BipartiteSplit& o) const {
    return a_ != o.a_ ? a_ < o.a_ : b_ < o.b_;
  }
  bool operator==(const BipartiteSplit& o) const { return a_ == o.a_ && b_ == o.b_; }

 private:
  std::vector<std::size_t> a_, b_;
};

}  // namespace entkit
