#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "orsti/suffix_table.hpp"
#include "orsti/text.hpp"

namespace orsti {

// Generalized suffix array over a document collection. Documents are joined
// with one distinct separator symbol per boundary, all ranked below real
// symbols, and separator-initial suffixes are dropped from the sorted view.
// Rank r carries the owning document in da[r] and the previous rank of the
// same document in psi[r] (-1 when r is that document's first rank).
class DocumentIndex {
 public:
  explicit DocumentIndex(std::vector<Text> docs);

  [[nodiscard]] index_t doc_count() const { return static_cast<index_t>(docs_.size()); }
  [[nodiscard]] const std::vector<Text>& docs() const { return docs_; }
  [[nodiscard]] const SuffixTable& table() const { return table_; }
  [[nodiscard]] index_t suffix_count() const { return table_.suffix_count(); }
  [[nodiscard]] const std::vector<index_t>& da() const { return da_; }
  [[nodiscard]] const std::vector<index_t>& psi() const { return psi_; }
  [[nodiscard]] const Rmq& psi_rmq() const { return psi_rmq_; }

  // Rank range of the suffixes having `pattern` as a prefix.
  [[nodiscard]] SaRange find_range(std::string_view pattern) const;

  // Sequence position of offset `off` (1-based) inside document `doc`.
  [[nodiscard]] index_t seq_pos(index_t doc, index_t off) const {
    return doc_start_[doc] + off - 1;
  }
  // Inverse of seq_pos for positions inside documents.
  [[nodiscard]] std::pair<index_t, index_t> locate(index_t pos) const;

 private:
  std::vector<Text> docs_;
  std::vector<index_t> doc_start_;  // doc id (1-based) -> first sequence position
  SuffixTable table_;
  std::vector<index_t> da_, psi_;   // 1-based per rank
  Rmq psi_rmq_;
};

}  // namespace orsti
