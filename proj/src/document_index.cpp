#include "orsti/document_index.hpp"

#include <algorithm>
#include <stdexcept>

#include "orsti/suffix_index.hpp"

namespace orsti {

DocumentIndex::DocumentIndex(std::vector<Text> docs) : docs_(std::move(docs)) {
  if (docs_.empty()) throw std::invalid_argument("document collection is empty");
  const index_t k = doc_count();

  index_t total = 0;
  for (const Text& d : docs_) total += d.size();
  std::vector<index_t> seq;
  seq.reserve(static_cast<std::size_t>(total) + k);
  doc_start_.assign(k + 1, 0);
  for (index_t d = 1; d <= k; ++d) {
    doc_start_[d] = static_cast<index_t>(seq.size()) + 1;  // 1-based in the table
    for (index_t i = 1; i <= docs_[d - 1].size(); ++i)
      seq.push_back(static_cast<index_t>(docs_[d - 1].at(i)) + k - 1);
    if (d < k) seq.push_back(d);  // separator, ranked below every symbol
  }
  seq.push_back(0);  // sentinel
  table_ = SuffixTable::build(std::move(seq), k);

  const index_t m = table_.suffix_count();
  da_.assign(m + 1, 0);
  psi_.assign(m + 1, -1);
  std::vector<index_t> last(k + 1, -1);
  for (index_t r = 1; r <= m; ++r) {
    const index_t pos = table_.sa[r];
    const index_t doc = static_cast<index_t>(
        std::upper_bound(doc_start_.begin() + 1, doc_start_.end(), pos) -
        doc_start_.begin() - 1);
    da_[r] = doc;
    psi_[r] = last[doc];
    last[doc] = r;
  }
  psi_rmq_ = Rmq(std::vector<index_t>(psi_.begin() + 1, psi_.end()));
}

SaRange DocumentIndex::find_range(std::string_view pattern) const {
  const std::vector<index_t> mapped = map_pattern(pattern, doc_count() - 1);
  return table_.find_range(mapped);
}

std::pair<index_t, index_t> DocumentIndex::locate(index_t pos) const {
  const index_t doc = static_cast<index_t>(
      std::upper_bound(doc_start_.begin() + 1, doc_start_.end(), pos) -
      doc_start_.begin() - 1);
  if (doc < 1 || doc > doc_count() || pos - doc_start_[doc] >= docs_[doc - 1].size())
    throw std::invalid_argument("position is not inside a document");
  return {doc, pos - doc_start_[doc] + 1};
}

}  // namespace orsti
