#include "orsti/geo_text.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace orsti {

namespace {

index_t bits_for(index_t side) {
  index_t w = 1;
  while ((index_t{1} << w) < side) ++w;
  return w;
}

std::string bit_string(index_t enc, index_t width, bool reversed) {
  std::string out(width, '0');
  for (index_t b = 0; b < width; ++b)
    if (enc & (index_t{1} << b)) out[reversed ? b : width - 1 - b] = '1';
  return out;
}

std::string block_text(const std::vector<Point2>& pts, index_t side,
                       index_t width) {
  if (side == 0) throw std::invalid_argument("geo text: no points");
  std::string blocks;
  blocks.reserve(static_cast<std::size_t>(side) * (2 * width + 2));
  for (const Point2& p : pts) {
    if (p.x < 1 || p.x > side || p.y < 1 || p.y > side)
      throw std::invalid_argument("geo text: point outside the grid");
    if (!blocks.empty()) blocks.push_back('$');
    blocks += bit_string(p.x - 1, width, true);
    blocks.push_back('#');
    blocks += bit_string(p.y - 1, width, false);
  }
  return blocks;
}

}  // namespace

PrefixTrie::PrefixTrie(std::vector<index_t> values, index_t width)
    : width_(width), values_(std::move(values)) {
  if (width_ < 1 || width_ > 30)
    throw std::invalid_argument("prefix trie: bad width");
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  if (!values_.empty() &&
      (values_.front() < 1 || values_.back() > (index_t{1} << width_)))
    throw std::invalid_argument("prefix trie: value out of range");
  nodes_.assign(1, {});
  if (!values_.empty()) build_node(1, static_cast<index_t>(values_.size()));
}

index_t PrefixTrie::build_node(index_t first, index_t last) {
  const index_t id = static_cast<index_t>(nodes_.size());
  nodes_.push_back({});
  const index_t lo = values_[first - 1] - 1;
  const index_t hi = values_[last - 1] - 1;
  const index_t len =
      first == last ? width_
                    : width_ - static_cast<index_t>(std::bit_width(
                                   static_cast<std::uint32_t>(lo ^ hi)));
  nodes_[id].bits = lo >> (width_ - len);
  nodes_[id].len = len;
  nodes_[id].first = first;
  nodes_[id].last = last;
  if (first == last) return id;
  const index_t split =
      (nodes_[id].bits << (width_ - len)) | (index_t{1} << (width_ - len - 1));
  const auto mid = std::lower_bound(values_.begin() + first - 1,
                                    values_.begin() + last, split + 1);
  const index_t m = static_cast<index_t>(mid - values_.begin());
  const index_t left = build_node(first, m);
  const index_t right = build_node(m + 1, last);
  nodes_[id].left = left;
  nodes_[id].right = right;
  return id;
}

std::vector<index_t> PrefixTrie::decompose(index_t q, index_t r) const {
  if (q < 1 || r < q || r > (index_t{1} << width_))
    throw std::invalid_argument("prefix trie: invalid range");
  std::vector<index_t> out;
  if (root() == 0) return out;
  std::vector<index_t> walk{root()};
  while (!walk.empty()) {
    const index_t v = walk.back();
    walk.pop_back();
    const TrieNode& nd = nodes_[v];
    const index_t vmin = values_[nd.first - 1];
    const index_t vmax = values_[nd.last - 1];
    if (vmax < q || vmin > r) continue;
    if (q <= vmin && vmax <= r) {
      out.push_back(v);
      continue;
    }
    walk.push_back(nd.right);
    walk.push_back(nd.left);
  }
  return out;
}

GeoTextIndex::GeoTextIndex(std::vector<Point2> points)
    : points_(std::move(points)),
      side_(static_cast<index_t>(points_.size())),
      width_(bits_for(side_)),
      sidx_(Text(block_text(points_, side_, width_))) {
  std::vector<index_t> xs, ys;
  xs.reserve(points_.size());
  ys.reserve(points_.size());
  for (const Point2& p : points_) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  xtrie_ = PrefixTrie(std::move(xs), width_);
  ytrie_ = PrefixTrie(std::move(ys), width_);
}

std::vector<Point2> GeoTextIndex::report(index_t x1, index_t x2, index_t y1,
                                         index_t y2,
                                         index_t* pattern_queries) const {
  if (x1 < 1 || x2 < x1 || x2 > side_ || y1 < 1 || y2 < y1 || y2 > side_)
    throw std::invalid_argument("geo text: invalid rectangle");
  const std::vector<index_t> xcover = xtrie_.decompose(x1, x2);
  const std::vector<index_t> ycover = ytrie_.decompose(y1, y2);
  const index_t block = 2 * width_ + 2;
  index_t queries = 0;
  std::vector<Point2> out;
  for (const index_t xv : xcover)
    for (const index_t yv : ycover) {
      const TrieNode& xn = xtrie_.node(xv);
      const TrieNode& yn = ytrie_.node(yv);
      std::string pat;
      pat.reserve(xn.len + 1 + yn.len);
      for (index_t b = 0; b < xn.len; ++b)
        pat.push_back((xn.bits >> b) & 1 ? '1' : '0');
      pat.push_back('#');
      for (index_t b = yn.len; b-- > 0;)
        pat.push_back((yn.bits >> b) & 1 ? '1' : '0');
      ++queries;
      for (const index_t occ : sidx_.occurrences(pat)) {
        const index_t id = (occ + xn.len - width_ - 1) / block + 1;
        out.push_back(points_[id - 1]);
      }
    }
  std::sort(out.begin(), out.end(), [](const Point2& a, const Point2& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.label < b.label;
  });
  if (pattern_queries) *pattern_queries = queries;
  return out;
}

}  // namespace orsti
