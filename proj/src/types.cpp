#include "entkit/types.hpp"

#include <algorithm>

namespace entkit {

BipartiteSplit::BipartiteSplit(std::vector<std::size_t> party_a, std::size_t n_parties) {
  if (n_parties < 2) throw std::invalid_argument("BipartiteSplit: need at least two parties");
  std::sort(party_a.begin(), party_a.end());
  party_a.erase(std::unique(party_a.begin(), party_a.end()), party_a.end());
  if (party_a.empty()) throw std::invalid_argument("BipartiteSplit: side A empty");
  if (party_a.size() >= n_parties) throw std::invalid_argument("BipartiteSplit: side B empty");
  for (std::size_t p : party_a) {
    if (p >= n_parties) throw std::invalid_argument("BipartiteSplit: party index out of range");
  }
  a_ = std::move(party_a);
  for (std::size_t p = 0; p < n_parties; ++p) {
    if (!std::binary_search(a_.begin(), a_.end(), p)) b_.push_back(p);
  }
}

BipartiteSplit BipartiteSplit::party_vs_rest(std::size_t party, std::size_t n_parties) {
  return BipartiteSplit({party}, n_parties);
}

std::size_t BipartiteSplit::dim_a(const DimensionList& dims) const {
  if (dims.parties() != n_parties())
    throw std::invalid_argument("BipartiteSplit: party count mismatch");
  std::size_t d = 1;
  for (std::size_t p : a_) d *= dims[p];
  return d;
}

std::size_t BipartiteSplit::dim_b(const DimensionList& dims) const {
  if (dims.parties() != n_parties())
    throw std::invalid_argument("BipartiteSplit: party count mismatch");
  std::size_t d = 1;
  for (std::size_t p : b_) d *= dims[p];
  return d;
}

}  // namespace entkit
