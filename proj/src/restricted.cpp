#include "orsti/restricted.hpp"

#include <algorithm>
#include <stdexcept>

namespace orsti {

RestrictedIndex::RestrictedIndex(Text text) : sidx_(std::move(text)) {
  const index_t n = sidx_.size();
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (index_t p = 1; p <= n; ++p) pts.push_back({sidx_.isa()[p], p, p});
  grid_ = RankGrid2(std::move(pts),
                    {.require_distinct_x = true, .require_distinct_y = true});
}

std::pair<index_t, index_t> RestrictedIndex::start_window(std::string_view q,
                                                          index_t i, index_t j) {
  const index_t span = std::max<index_t>(static_cast<index_t>(q.size()), 1);
  return {i, j - span + 1};
}

std::vector<index_t> RestrictedIndex::pri_report(std::string_view q, index_t i,
                                                 index_t j) const {
  validate_pattern(q);
  if (i < 1 || j > sidx_.size() || i > j)
    throw std::invalid_argument("window out of bounds");
  std::vector<index_t> out;
  const SaRange r = sidx_.sa_range(q);
  if (r.empty()) return out;
  const auto [lo, hi] = start_window(q, i, j);
  if (lo > hi) return out;
  for (const Point2& pt : grid_.report(r.lo, r.hi, lo, hi)) out.push_back(pt.y);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t RestrictedIndex::pri_count(std::string_view q, index_t i, index_t j) const {
  validate_pattern(q);
  if (i < 1 || j > sidx_.size() || i > j)
    throw std::invalid_argument("window out of bounds");
  const SaRange r = sidx_.sa_range(q);
  if (r.empty()) return 0;
  const auto [lo, hi] = start_window(q, i, j);
  if (lo > hi) return 0;
  return grid_.count(r.lo, r.hi, lo, hi);
}

std::int64_t RestrictedIndex::substring_rank(std::string_view q, index_t k) const {
  validate_pattern(q);
  if (k < 1 || k > sidx_.size())
    throw std::invalid_argument("rank position out of bounds");
  const SaRange r = sidx_.sa_range(q);
  if (r.empty()) return 0;
  return grid_.count(r.lo, r.hi, 1, k);
}

std::optional<index_t> RestrictedIndex::substring_select(std::string_view q,
                                                         std::int64_t k) const {
  validate_pattern(q);
  if (k < 1) throw std::invalid_argument("select index must be positive");
  const SaRange r = sidx_.sa_range(q);
  if (r.empty()) return std::nullopt;
  const index_t n = sidx_.size();
  if (grid_.count(r.lo, r.hi, 1, n) < k) return std::nullopt;
  index_t lo = 1, hi = n;
  while (lo < hi) {
    const index_t mid = lo + (hi - lo) / 2;
    if (grid_.count(r.lo, r.hi, 1, mid) >= k)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

std::optional<index_t> RestrictedIndex::successive(std::string_view q, index_t i) const {
  validate_pattern(q);
  const SaRange r = sidx_.sa_range(q);
  if (r.empty()) return std::nullopt;
  if (const auto pt = grid_.successor_y(r.lo, r.hi, std::max<index_t>(i, 1), Dir::above))
    return pt->y;
  return std::nullopt;
}

std::vector<index_t> RestrictedIndex::non_overlapping(std::string_view q) const {
  validate_pattern(q);
  if (q.empty()) throw std::invalid_argument("pattern must be non-empty");
  std::vector<index_t> out;
  std::optional<index_t> p = successive(q, 1);
  while (p) {
    out.push_back(*p);
    const index_t next = *p + static_cast<index_t>(q.size());
    if (next > sidx_.size()) break;
    p = successive(q, next);
  }
  return out;
}

}  // namespace orsti
