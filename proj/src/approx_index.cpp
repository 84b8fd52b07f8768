#include "orsti/approx_index.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace orsti {

namespace {

Text reversed(const Text& text) {
  return Text(std::string(text.bytes().rbegin(), text.bytes().rend()));
}

index_t checked_gap(index_t gap) {
  if (gap < 0) throw std::invalid_argument("gap must be non-negative");
  return gap;
}

void require_nonempty(std::string_view q, const char* what) {
  validate_pattern(q);
  if (q.empty()) throw std::invalid_argument(std::string(what) + " must be non-empty");
}

}  // namespace

OneErrorIndex::OneErrorIndex(Text text)
    : text_(std::move(text)), fwd_(text_), rev_(reversed(text_)) {
  const index_t n = text_.size();

  bool seen[256] = {};
  for (index_t i = 1; i <= n; ++i) seen[text_.at(i)] = true;
  for (int c = 1; c < 256; ++c)
    if (seen[c]) alphabet_.push_back(static_cast<unsigned char>(c));

  // Suffix ranks shifted up by one so the empty suffix occupies rank 1.
  const auto ext_fwd = [&](index_t i) { return i > n ? 1 : fwd_.isa()[i] + 1; };
  const auto ext_rev = [&](index_t j) { return j > n ? 1 : rev_.isa()[j] + 1; };

  std::vector<Point2> flat;
  std::vector<Point3> cube;
  flat.reserve(static_cast<std::size_t>(n));
  cube.reserve(static_cast<std::size_t>(n));
  for (index_t i = 2; i <= n + 1; ++i) {
    const index_t x = ext_fwd(i);
    const index_t y = ext_rev(n - i + 3);
    bool present = false;
    const index_t z = symbol_rank(text_.at(i - 1), present) + 1;
    flat.push_back({x, y, i});
    cube.push_back({x, y, z, i});
  }
  grid2_ = RankGrid2(std::move(flat),
                     {.require_distinct_x = true, .require_distinct_y = true});
  grid3_ = RankGrid3(std::move(cube));
}

SaRange OneErrorIndex::extended_range(const SuffixIndex& side,
                                      std::string_view part) const {
  if (part.empty()) return {1, side.size() + 1};
  const SaRange r = side.sa_range(part);
  if (r.empty()) return r;
  return {r.lo + 1, r.hi + 1};
}

index_t OneErrorIndex::symbol_rank(unsigned char c, bool& present) const {
  const auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), c);
  present = it != alphabet_.end() && *it == c;
  return static_cast<index_t>(it - alphabet_.begin());
}

std::vector<std::vector<index_t>> OneErrorIndex::one_mismatch_by_pivot(
    std::string_view q) const {
  require_nonempty(q, "pattern");
  const index_t m = static_cast<index_t>(q.size());
  std::vector<std::vector<index_t>> by_pivot(q.size());
  for (index_t l = 1; l <= m; ++l) {
    const SaRange xr = extended_range(fwd_, q.substr(static_cast<std::size_t>(l)));
    if (xr.empty()) continue;
    std::string left(q.substr(0, static_cast<std::size_t>(l - 1)));
    std::reverse(left.begin(), left.end());
    const SaRange yr = extended_range(rev_, left);
    if (yr.empty()) continue;
    const unsigned char pivot = static_cast<unsigned char>(q[static_cast<std::size_t>(l - 1)]);
    std::vector<index_t>& hits = by_pivot[static_cast<std::size_t>(l - 1)];
    for (const Point2& pt : grid2_.report(xr.lo, xr.hi, yr.lo, yr.hi))
      if (text_.at(pt.label - 1) != pivot) hits.push_back(pt.label - l);
    std::sort(hits.begin(), hits.end());
  }
  return by_pivot;
}

std::vector<index_t> OneErrorIndex::query_one_mismatch(std::string_view q) const {
  std::vector<index_t> out;
  for (const std::vector<index_t>& hits : one_mismatch_by_pivot(q))
    out.insert(out.end(), hits.begin(), hits.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<index_t> OneErrorIndex::query_at_most_one(std::string_view q) const {
  require_nonempty(q, "pattern");
  const index_t m = static_cast<index_t>(q.size());
  const index_t sigma = static_cast<index_t>(alphabet_.size());
  std::vector<index_t> out = fwd_.occurrences(q);
  for (index_t l = 1; l <= m; ++l) {
    const SaRange xr = extended_range(fwd_, q.substr(static_cast<std::size_t>(l)));
    if (xr.empty()) continue;
    std::string left(q.substr(0, static_cast<std::size_t>(l - 1)));
    std::reverse(left.begin(), left.end());
    const SaRange yr = extended_range(rev_, left);
    if (yr.empty()) continue;
    bool present = false;
    const index_t below = symbol_rank(static_cast<unsigned char>(q[static_cast<std::size_t>(l - 1)]), present);
    const index_t above_lo = below + (present ? 2 : 1);
    if (below >= 1)
      for (const Point3& pt : grid3_.report(xr.lo, xr.hi, yr.lo, yr.hi, 1, below))
        out.push_back(pt.label - l);
    if (above_lo <= sigma)
      for (const Point3& pt : grid3_.report(xr.lo, xr.hi, yr.lo, yr.hi, above_lo, sigma))
        out.push_back(pt.label - l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GapIndex::GapIndex(Text text, index_t gap)
    : text_(std::move(text)),
      gap_(checked_gap(gap)),
      fwd_(text_),
      rev_(reversed(text_)) {
  const index_t n = text_.size();
  std::vector<Point2> pts;
  if (n >= gap_ + 2) pts.reserve(static_cast<std::size_t>(n - gap_ - 1));
  for (index_t i = gap_ + 2; i <= n; ++i)
    pts.push_back({fwd_.isa()[i], rev_.isa()[n - i + gap_ + 2], i});
  grid_ = RankGrid2(std::move(pts),
                    {.require_distinct_x = true, .require_distinct_y = true});
}

std::vector<index_t> GapIndex::query(std::string_view q1, std::string_view q2) const {
  require_nonempty(q1, "first part");
  require_nonempty(q2, "second part");
  std::vector<index_t> out;
  const SaRange xr = fwd_.sa_range(q2);
  if (xr.empty()) return out;
  std::string left(q1);
  std::reverse(left.begin(), left.end());
  const SaRange yr = rev_.sa_range(left);
  if (yr.empty()) return out;
  const index_t off = gap_ + static_cast<index_t>(q1.size());
  for (const Point2& pt : grid_.report(xr.lo, xr.hi, yr.lo, yr.hi))
    out.push_back(pt.label - off);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace orsti
