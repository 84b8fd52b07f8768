#include "orsti/grid.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace orsti {

namespace {

void check_range(index_t lo, index_t hi, const char* what) {
  if (lo > hi) throw std::invalid_argument(std::string("inverted ") + what + " range");
}

bool point2_less(const Point2& a, const Point2& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.label < b.label;
}

bool point3_less(const Point3& a, const Point3& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  if (a.z != b.z) return a.z < b.z;
  return a.label < b.label;
}

bool heavier(const WeightedPoint& a, const WeightedPoint& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  return a.x < b.x;
}

}  // namespace

BitVector::BitVector(const std::vector<std::uint8_t>& bits) : size_(bits.size()) {
  const std::size_t nwords = size_ / 64 + 1;
  words_.assign(nwords, 0);
  for (std::size_t i = 0; i < size_; ++i)
    if (bits[i]) words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  word_rank_.assign(nwords + 1, 0);
  for (std::size_t w = 0; w < nwords; ++w)
    word_rank_[w + 1] = word_rank_[w] + static_cast<index_t>(std::popcount(words_[w]));
}

index_t BitVector::rank1(std::size_t i) const {
  const std::size_t w = i >> 6;
  const std::uint64_t mask = (std::uint64_t{1} << (i & 63)) - 1;
  return word_rank_[w] + static_cast<index_t>(std::popcount(words_[w] & mask));
}

WaveletTree::WaveletTree(const std::vector<index_t>& values, index_t universe)
    : universe_(universe), size_(static_cast<index_t>(values.size())) {
  if (size_ == 0 || universe_ <= 1) return;
  const int height = std::bit_width(static_cast<unsigned>(universe_ - 1));
  levels_.reserve(height);

  struct Seg {
    index_t start, lo, hi;
  };
  std::vector<index_t> cur = values;
  std::vector<index_t> nxt(cur.size());
  std::vector<Seg> segs{{0, 0, universe_ - 1}};
  std::vector<Seg> next_segs;
  std::vector<std::uint8_t> bits(cur.size());

  for (int lvl = 0; lvl < height; ++lvl) {
    next_segs.clear();
    for (std::size_t si = 0; si < segs.size(); ++si) {
      const index_t s = segs[si].start;
      const index_t e = si + 1 < segs.size() ? segs[si + 1].start : size_;
      const index_t lo = segs[si].lo;
      const index_t hi = segs[si].hi;
      if (lo == hi) {
        for (index_t i = s; i < e; ++i) {
          bits[i] = 0;
          nxt[i] = cur[i];
        }
        next_segs.push_back({s, lo, hi});
        continue;
      }
      const index_t mid = lo + (hi - lo) / 2;
      index_t zeros = 0;
      for (index_t i = s; i < e; ++i) {
        bits[i] = cur[i] > mid;
        zeros += bits[i] ? 0 : 1;
      }
      index_t at0 = s;
      index_t at1 = s + zeros;
      for (index_t i = s; i < e; ++i) {
        if (bits[i])
          nxt[at1++] = cur[i];
        else
          nxt[at0++] = cur[i];
      }
      if (zeros > 0) next_segs.push_back({s, lo, mid});
      if (zeros < e - s) next_segs.push_back({s + zeros, mid + 1, hi});
    }
    levels_.emplace_back(bits);
    std::swap(cur, nxt);
    std::swap(segs, next_segs);
  }
}

WaveletTree::Split WaveletTree::split(const Node& nd, index_t l, index_t r) const {
  const BitVector& bv = levels_[static_cast<std::size_t>(nd.level)];
  const index_t zeros_before = bv.rank0(static_cast<std::size_t>(nd.s));
  const index_t zeros = bv.rank0(static_cast<std::size_t>(nd.e)) - zeros_before;
  const index_t zl = bv.rank0(static_cast<std::size_t>(l)) - zeros_before;
  const index_t zr = bv.rank0(static_cast<std::size_t>(r)) - zeros_before;
  const index_t mid = nd.lo + (nd.hi - nd.lo) / 2;
  Split sp;
  sp.left = {nd.level + 1, nd.s, nd.s + zeros, nd.lo, mid};
  sp.right = {nd.level + 1, nd.s + zeros, nd.e, mid + 1, nd.hi};
  sp.l0 = nd.s + zl;
  sp.r0 = nd.s + zr;
  sp.l1 = nd.s + zeros + (l - nd.s - zl);
  sp.r1 = nd.s + zeros + (r - nd.s - zr);
  return sp;
}

std::int64_t WaveletTree::count(index_t l, index_t r, index_t v1, index_t v2) const {
  if (size_ == 0 || l >= r || v1 > v2) return 0;
  return count_rec({0, 0, size_, 0, universe_ - 1}, l, r, v1, v2);
}

std::int64_t WaveletTree::count_rec(const Node& nd, index_t l, index_t r,
                                    index_t v1, index_t v2) const {
  if (r <= l || v2 < nd.lo || nd.hi < v1) return 0;
  if (v1 <= nd.lo && nd.hi <= v2) return r - l;
  const Split sp = split(nd, l, r);
  return count_rec(sp.left, sp.l0, sp.r0, v1, v2) +
         count_rec(sp.right, sp.l1, sp.r1, v1, v2);
}

std::optional<index_t> WaveletTree::successor(index_t l, index_t r, index_t bound,
                                              Dir dir) const {
  if (size_ == 0 || l >= r) return std::nullopt;
  return successor_rec({0, 0, size_, 0, universe_ - 1}, l, r, bound,
                       dir == Dir::below);
}

std::optional<index_t> WaveletTree::successor_rec(const Node& nd, index_t l,
                                                  index_t r, index_t bound,
                                                  bool below) const {
  if (r <= l) return std::nullopt;
  if (below) {
    if (nd.lo > bound) return std::nullopt;
    if (nd.hi <= bound) return extreme(nd, l, r, true);
    const index_t mid = nd.lo + (nd.hi - nd.lo) / 2;
    const Split sp = split(nd, l, r);
    if (bound <= mid) return successor_rec(sp.left, sp.l0, sp.r0, bound, below);
    if (auto v = successor_rec(sp.right, sp.l1, sp.r1, bound, below)) return v;
    return extreme(sp.left, sp.l0, sp.r0, true);
  }
  if (nd.hi < bound) return std::nullopt;
  if (nd.lo >= bound) return extreme(nd, l, r, false);
  const index_t mid = nd.lo + (nd.hi - nd.lo) / 2;
  const Split sp = split(nd, l, r);
  if (bound > mid) return successor_rec(sp.right, sp.l1, sp.r1, bound, below);
  if (auto v = successor_rec(sp.left, sp.l0, sp.r0, bound, below)) return v;
  return extreme(sp.right, sp.l1, sp.r1, false);
}

std::optional<index_t> WaveletTree::extreme(Node nd, index_t l, index_t r,
                                            bool want_max) const {
  if (r <= l) return std::nullopt;
  while (nd.lo < nd.hi) {
    const Split sp = split(nd, l, r);
    const bool right_nonempty = sp.r1 > sp.l1;
    if (want_max ? right_nonempty : sp.r0 <= sp.l0) {
      nd = sp.right;
      l = sp.l1;
      r = sp.r1;
    } else {
      nd = sp.left;
      l = sp.l0;
      r = sp.r0;
    }
  }
  return nd.lo;
}

RankGrid2::RankGrid2(std::vector<Point2> pts, Grid2Options opt)
    : pts_(std::move(pts)) {
  std::sort(pts_.begin(), pts_.end(), point2_less);
  if (opt.require_distinct_x) {
    const auto dup = std::adjacent_find(
        pts_.begin(), pts_.end(),
        [](const Point2& a, const Point2& b) { return a.x == b.x; });
    if (dup != pts_.end()) throw std::invalid_argument("duplicate x-coordinate");
  }

  ys_.reserve(pts_.size());
  for (const Point2& p : pts_) ys_.push_back(p.y);
  std::sort(ys_.begin(), ys_.end());
  if (opt.require_distinct_y &&
      std::adjacent_find(ys_.begin(), ys_.end()) != ys_.end())
    throw std::invalid_argument("duplicate y-coordinate");
  ys_.erase(std::unique(ys_.begin(), ys_.end()), ys_.end());

  const index_t n = static_cast<index_t>(pts_.size());
  const index_t ny = static_cast<index_t>(ys_.size());
  std::vector<index_t> cv(pts_.size());
  for (index_t i = 0; i < n; ++i)
    cv[i] = static_cast<index_t>(
        std::lower_bound(ys_.begin(), ys_.end(), pts_[i].y) - ys_.begin());
  wt_ = WaveletTree(cv, ny);

  bucket_start_.assign(ny + 1, 0);
  for (index_t i = 0; i < n; ++i) ++bucket_start_[cv[i] + 1];
  for (index_t v = 0; v < ny; ++v) bucket_start_[v + 1] += bucket_start_[v];
  pos_by_y_.resize(pts_.size());
  std::vector<index_t> fill(bucket_start_.begin(), bucket_start_.end() - 1);
  for (index_t i = 0; i < n; ++i) pos_by_y_[fill[cv[i]]++] = i;
}

std::pair<index_t, index_t> RankGrid2::x_slice(index_t x1, index_t x2) const {
  const auto lo = std::lower_bound(
      pts_.begin(), pts_.end(), x1,
      [](const Point2& p, index_t x) { return p.x < x; });
  const auto hi = std::upper_bound(
      pts_.begin(), pts_.end(), x2,
      [](index_t x, const Point2& p) { return x < p.x; });
  return {static_cast<index_t>(lo - pts_.begin()),
          static_cast<index_t>(hi - pts_.begin())};
}

std::pair<index_t, index_t> RankGrid2::y_interval(index_t y1, index_t y2) const {
  const index_t c1 = static_cast<index_t>(
      std::lower_bound(ys_.begin(), ys_.end(), y1) - ys_.begin());
  const index_t c2 = static_cast<index_t>(
      std::upper_bound(ys_.begin(), ys_.end(), y2) - ys_.begin() - 1);
  return {c1, c2};
}

std::vector<Point2> RankGrid2::report(index_t x1, index_t x2, index_t y1,
                                      index_t y2) const {
  check_range(x1, x2, "x");
  check_range(y1, y2, "y");
  const auto [l, r] = x_slice(x1, x2);
  std::vector<Point2> out;
  for (index_t i = l; i < r; ++i)
    if (pts_[i].y >= y1 && pts_[i].y <= y2) out.push_back(pts_[i]);
  return out;
}

std::int64_t RankGrid2::count(index_t x1, index_t x2, index_t y1,
                              index_t y2) const {
  check_range(x1, x2, "x");
  check_range(y1, y2, "y");
  const auto [l, r] = x_slice(x1, x2);
  const auto [c1, c2] = y_interval(y1, y2);
  if (c1 > c2) return 0;
  return wt_.count(l, r, c1, c2);
}

const Point2& RankGrid2::first_in_bucket(index_t cv, index_t l) const {
  const auto begin = pos_by_y_.begin() + bucket_start_[cv];
  const auto end = pos_by_y_.begin() + bucket_start_[cv + 1];
  const auto it = std::lower_bound(begin, end, l);
  return pts_[*it];
}

std::optional<Point2> RankGrid2::successor_y(index_t x1, index_t x2, index_t bound,
                                             Dir dir) const {
  check_range(x1, x2, "x");
  const auto [l, r] = x_slice(x1, x2);
  const index_t ny = static_cast<index_t>(ys_.size());
  index_t cb;
  if (dir == Dir::below) {
    cb = static_cast<index_t>(
        std::upper_bound(ys_.begin(), ys_.end(), bound) - ys_.begin() - 1);
    if (cb < 0) return std::nullopt;
  } else {
    cb = static_cast<index_t>(
        std::lower_bound(ys_.begin(), ys_.end(), bound) - ys_.begin());
    if (cb >= ny) return std::nullopt;
  }
  const auto cv = wt_.successor(l, r, cb, dir);
  if (!cv) return std::nullopt;
  return first_in_bucket(*cv, l);
}

void RankGrid2::emit_bucket(index_t cv, index_t l, index_t r, std::int64_t max_take,
                            std::vector<Point2>& out) const {
  const auto begin = pos_by_y_.begin() + bucket_start_[cv];
  const auto end = pos_by_y_.begin() + bucket_start_[cv + 1];
  for (auto it = std::lower_bound(begin, end, l); it != end && *it < r; ++it) {
    if (max_take-- <= 0) return;
    out.push_back(pts_[*it]);
  }
}

std::vector<Point2> RankGrid2::sorted_slice(index_t l, index_t r, index_t bound,
                                            Dir dir,
                                            std::optional<std::int64_t> limit) const {
  std::vector<Point2> out;
  if (limit && *limit <= 0) return out;
  const index_t ny = static_cast<index_t>(ys_.size());
  index_t cur;
  if (dir == Dir::below) {
    cur = static_cast<index_t>(
        std::upper_bound(ys_.begin(), ys_.end(), bound) - ys_.begin() - 1);
    if (cur < 0) return out;
  } else {
    cur = static_cast<index_t>(
        std::lower_bound(ys_.begin(), ys_.end(), bound) - ys_.begin());
    if (cur >= ny) return out;
  }
  while (true) {
    const auto cv = wt_.successor(l, r, cur, dir);
    if (!cv) break;
    const std::int64_t room =
        limit ? *limit - static_cast<std::int64_t>(out.size())
              : std::numeric_limits<std::int64_t>::max();
    emit_bucket(*cv, l, r, room, out);
    if (limit && static_cast<std::int64_t>(out.size()) >= *limit) break;
    if (dir == Dir::below) {
      if (*cv == 0) break;
      cur = *cv - 1;
    } else {
      if (*cv == ny - 1) break;
      cur = *cv + 1;
    }
  }
  return out;
}

std::vector<Point2> RankGrid2::sorted_3sided(index_t x1, index_t x2, index_t bound,
                                             Dir dir,
                                             std::optional<std::int64_t> limit) const {
  check_range(x1, x2, "x");
  const auto [l, r] = x_slice(x1, x2);
  return sorted_slice(l, r, bound, dir, limit);
}

std::vector<Point2> RankGrid2::sorted_2sided(index_t xmax, index_t ymax,
                                             std::optional<std::int64_t> limit) const {
  const auto hi = std::upper_bound(
      pts_.begin(), pts_.end(), xmax,
      [](index_t x, const Point2& p) { return x < p.x; });
  return sorted_slice(0, static_cast<index_t>(hi - pts_.begin()), ymax, Dir::below,
                      limit);
}

RankGrid3::RankGrid3(std::vector<Point3> pts) : pts_(std::move(pts)) {
  build(0, static_cast<index_t>(pts_.size()), 0);
}

namespace {

index_t coord3(const Point3& p, int axis) {
  switch (axis) {
    case 0:
      return p.x;
    case 1:
      return p.y;
    default:
      return p.z;
  }
}

}  // namespace

void RankGrid3::build(index_t b, index_t e, int axis) {
  if (e - b <= 1) return;
  const index_t m = b + (e - b) / 2;
  std::nth_element(pts_.begin() + b, pts_.begin() + m, pts_.begin() + e,
                   [axis](const Point3& a, const Point3& c) {
                     return coord3(a, axis) < coord3(c, axis);
                   });
  const int next = (axis + 1) % 3;
  build(b, m, next);
  build(m + 1, e, next);
}

void RankGrid3::search(index_t b, index_t e, int axis, const index_t* lo,
                       const index_t* hi, std::vector<Point3>& out) const {
  if (e <= b) return;
  const index_t m = b + (e - b) / 2;
  const Point3& p = pts_[m];
  if (p.x >= lo[0] && p.x <= hi[0] && p.y >= lo[1] && p.y <= hi[1] &&
      p.z >= lo[2] && p.z <= hi[2])
    out.push_back(p);
  const index_t c = coord3(p, axis);
  const int next = (axis + 1) % 3;
  if (lo[axis] <= c) search(b, m, next, lo, hi, out);
  if (c <= hi[axis]) search(m + 1, e, next, lo, hi, out);
}

std::vector<Point3> RankGrid3::report(index_t x1, index_t x2, index_t y1,
                                      index_t y2, index_t z1, index_t z2) const {
  check_range(x1, x2, "x");
  check_range(y1, y2, "y");
  check_range(z1, z2, "z");
  const index_t lo[3] = {x1, y1, z1};
  const index_t hi[3] = {x2, y2, z2};
  std::vector<Point3> out;
  search(0, static_cast<index_t>(pts_.size()), 0, lo, hi, out);
  std::sort(out.begin(), out.end(), point3_less);
  return out;
}

WeightedGrid::WeightedGrid(std::vector<WeightedPoint> pts) : pts_(std::move(pts)) {
  std::sort(pts_.begin(), pts_.end(),
            [](const WeightedPoint& a, const WeightedPoint& b) { return a.x < b.x; });
  const auto dup = std::adjacent_find(
      pts_.begin(), pts_.end(),
      [](const WeightedPoint& a, const WeightedPoint& b) { return a.x == b.x; });
  if (dup != pts_.end()) throw std::invalid_argument("duplicate x-coordinate");
}

std::vector<WeightedPoint> WeightedGrid::topk(index_t x1, index_t x2, index_t ymax,
                                              std::int64_t k) const {
  check_range(x1, x2, "x");
  if (k < 0) throw std::invalid_argument("negative k");
  std::vector<WeightedPoint> out;
  if (k == 0) return out;
  const auto lo = std::lower_bound(
      pts_.begin(), pts_.end(), x1,
      [](const WeightedPoint& p, index_t x) { return p.x < x; });
  const auto hi = std::upper_bound(
      pts_.begin(), pts_.end(), x2,
      [](index_t x, const WeightedPoint& p) { return x < p.x; });
  for (auto it = lo; it != hi; ++it)
    if (it->y <= ymax) out.push_back(*it);
  if (static_cast<std::int64_t>(out.size()) > k) {
    std::nth_element(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k),
                     out.end(), heavier);
    out.resize(static_cast<std::size_t>(k));
  }
  std::sort(out.begin(), out.end(), heavier);
  return out;
}

}  // namespace orsti
