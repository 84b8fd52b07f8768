#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orsti/approx_index.hpp"
#include "orsti/doc_retrieval.hpp"
#include "orsti/geo_text.hpp"
#include "orsti/grid.hpp"
#include "orsti/lz_index.hpp"
#include "orsti/restricted.hpp"
#include "orsti/suffix_index.hpp"
#include "orsti/weighted_anc.hpp"

namespace orsti {

enum class ArchiveKind : std::uint8_t {
  sa = 1,
  docs = 2,
  one_error = 3,
  lz = 4,
  scq = 5,
  restricted = 6,
  topk = 7,
  wanc = 8,
  gap = 9,
  geo = 10,
};

// Portable on-disk snapshot of one index's inputs. Text-backed kinds carry
// the text, plus the suffix array for kind sa and the phrase records for
// kind lz; both are re-checked against a rebuild when the index is opened.
// docs and topk carry the document table, wanc the tree description, geo the
// point set. Files are little-endian with a fixed magic and version; integer
// arrays use 32-bit entries unless a value needs 64 bits, which flips a
// header flag.
struct Archive {
  ArchiveKind kind = ArchiveKind::sa;
  std::string text;
  std::vector<std::string> documents;
  std::int64_t gap = 0;
  std::vector<index_t> sa;
  LzParse parse;
  std::vector<index_t> parent;
  std::vector<std::int64_t> weight;
  std::vector<Point2> points;

  friend bool operator==(const Archive&, const Archive&) = default;
};

// Serialized byte image of the archive; negative integers are rejected.
[[nodiscard]] std::string encode_archive(const Archive& a);
// Inverse of encode_archive. Malformed bytes throw std::invalid_argument.
[[nodiscard]] Archive decode_archive(const std::string& bytes);

// File wrappers around the codec; IO failures throw std::runtime_error.
void save_archive(const Archive& a, const std::string& path);
[[nodiscard]] Archive load_archive(const std::string& path);

// Index openers. Each rebuilds the index its payload describes, throwing
// std::invalid_argument when the archive kind does not match or when stored
// derived data disagrees with the rebuild.
[[nodiscard]] SuffixIndex open_sa(const Archive& a);
[[nodiscard]] DocumentIndex open_docs(const Archive& a);
[[nodiscard]] TopKIndex open_topk(const Archive& a);
[[nodiscard]] OneErrorIndex open_one_error(const Archive& a);
[[nodiscard]] Lz77Index open_lz(const Archive& a);
[[nodiscard]] ScqIndex open_scq(const Archive& a);
[[nodiscard]] RestrictedIndex open_restricted(const Archive& a);
[[nodiscard]] WeightedTree open_wanc(const Archive& a);
[[nodiscard]] GapIndex open_gap(const Archive& a);
[[nodiscard]] GeoTextIndex open_geo(const Archive& a);
// Substring locus queries share the sa archive kind.
[[nodiscard]] LocusIndex open_locus(const Archive& a);

}  // namespace orsti
