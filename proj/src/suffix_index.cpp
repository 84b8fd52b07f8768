#include "orsti/suffix_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace orsti {

std::vector<index_t> map_pattern(std::string_view pattern, index_t shift) {
  validate_pattern(pattern);
  std::vector<index_t> out;
  out.reserve(pattern.size());
  for (char c : pattern) out.push_back(static_cast<index_t>(static_cast<unsigned char>(c)) + shift);
  return out;
}

SuffixIndex::SuffixIndex(Text text) : text_(std::move(text)) {
  std::vector<index_t> seq;
  seq.reserve(text_.bytes().size() + 1);
  for (char c : text_.bytes()) seq.push_back(static_cast<index_t>(static_cast<unsigned char>(c)));
  seq.push_back(0);
  table_ = SuffixTable::build(std::move(seq), 1);
}

SaRange SuffixIndex::sa_range(std::string_view pattern) const {
  return table_.find_range(map_pattern(pattern));
}

index_t SuffixIndex::lcp_len(index_t i, index_t j) const {
  const index_t n = size();
  if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("lcp_len: position out of range");
  if (i == j) return n - i + 1;
  return table_.lcp_between_ranks(table_.isa[i], table_.isa[j]);
}

std::vector<index_t> SuffixIndex::occurrences(std::string_view pattern) const {
  const SaRange r = sa_range(pattern);
  std::vector<index_t> out;
  out.reserve(static_cast<std::size_t>(r.length()));
  for (index_t rank = r.lo; rank <= r.hi; ++rank) out.push_back(table_.sa[rank]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace orsti
