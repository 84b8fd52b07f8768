#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orsti/text.hpp"

namespace orsti {

struct Point2 {
  index_t x = 0;
  index_t y = 0;
  index_t label = 0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Point3 {
  index_t x = 0;
  index_t y = 0;
  index_t z = 0;
  index_t label = 0;

  friend bool operator==(const Point3&, const Point3&) = default;
};

struct WeightedPoint {
  index_t x = 0;
  index_t y = 0;
  std::int64_t weight = 0;
  index_t label = 0;

  friend bool operator==(const WeightedPoint&, const WeightedPoint&) = default;
};

enum class Dir { below, above };

// Plain bit array with O(1) rank support. Immutable once built.
class BitVector {
 public:
  BitVector() = default;
  // bits holds one 0/1 byte per position.
  explicit BitVector(const std::vector<std::uint8_t>& bits);

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  // Number of set bits in [0, i).
  [[nodiscard]] index_t rank1(std::size_t i) const;
  [[nodiscard]] index_t rank0(std::size_t i) const {
    return static_cast<index_t>(i) - rank1(i);
  }

 private:
  std::vector<std::uint64_t> words_;
  std::vector<index_t> word_rank_;
  std::size_t size_ = 0;
};

// Levelwise wavelet tree over a sequence of values in [0, universe).
// Supports value-range counting and directional value successor queries
// restricted to a contiguous slice of positions.
class WaveletTree {
 public:
  WaveletTree() = default;
  WaveletTree(const std::vector<index_t>& values, index_t universe);

  // Number of positions in [l, r) holding a value in [v1, v2].
  [[nodiscard]] std::int64_t count(index_t l, index_t r, index_t v1, index_t v2) const;
  // below: greatest value <= bound present in positions [l, r).
  // above: least value >= bound present there. Empty slice yields nullopt.
  [[nodiscard]] std::optional<index_t> successor(index_t l, index_t r, index_t bound,
                                                 Dir dir) const;

 private:
  struct Node {
    int level;
    index_t s, e;    // node slot in the level array
    index_t lo, hi;  // value span
  };
  struct Split {
    Node left, right;
    index_t l0, r0;  // range mapped into the left child
    index_t l1, r1;  // range mapped into the right child
  };

  [[nodiscard]] Split split(const Node& nd, index_t l, index_t r) const;
  [[nodiscard]] std::int64_t count_rec(const Node& nd, index_t l, index_t r,
                                       index_t v1, index_t v2) const;
  [[nodiscard]] std::optional<index_t> successor_rec(const Node& nd, index_t l,
                                                     index_t r, index_t bound,
                                                     bool below) const;
  [[nodiscard]] std::optional<index_t> extreme(Node nd, index_t l, index_t r,
                                               bool want_max) const;

  std::vector<BitVector> levels_;
  index_t universe_ = 0;
  index_t size_ = 0;
};

struct Grid2Options {
  bool require_distinct_x = false;
  bool require_distinct_y = false;
};

// Static plane of labeled integer points. All queries are read-only.
class RankGrid2 {
 public:
  RankGrid2() = default;
  explicit RankGrid2(std::vector<Point2> pts, Grid2Options opt = {});

  [[nodiscard]] const std::vector<Point2>& points() const { return pts_; }
  [[nodiscard]] index_t size() const { return static_cast<index_t>(pts_.size()); }

  // Points with x in [x1,x2] and y in [y1,y2], ascending (x, y, label).
  [[nodiscard]] std::vector<Point2> report(index_t x1, index_t x2, index_t y1,
                                           index_t y2) const;
  [[nodiscard]] std::int64_t count(index_t x1, index_t x2, index_t y1,
                                   index_t y2) const;
  // below: point with maximal y <= bound among x in [x1,x2]; above: minimal
  // y >= bound. Ties resolve to the smallest x, then the smallest label.
  [[nodiscard]] std::optional<Point2> successor_y(index_t x1, index_t x2,
                                                  index_t bound, Dir dir) const;
  // below: points with y <= bound in decreasing y; above: y >= bound in
  // increasing y. Equal y emits smaller x first. Truncated at limit.
  [[nodiscard]] std::vector<Point2> sorted_3sided(
      index_t x1, index_t x2, index_t bound, Dir dir,
      std::optional<std::int64_t> limit = std::nullopt) const;
  // Points with x <= xmax and y <= ymax in decreasing y. Never throws.
  [[nodiscard]] std::vector<Point2> sorted_2sided(
      index_t xmax, index_t ymax,
      std::optional<std::int64_t> limit = std::nullopt) const;

 private:
  // Position slice [l, r) of the points whose x lies in [x1, x2].
  [[nodiscard]] std::pair<index_t, index_t> x_slice(index_t x1, index_t x2) const;
  // Compressed y-rank interval covering raw values in [y1, y2]; empty when
  // first > second.
  [[nodiscard]] std::pair<index_t, index_t> y_interval(index_t y1, index_t y2) const;
  // First entry of the bucket for compressed y-value cv at position >= l.
  [[nodiscard]] const Point2& first_in_bucket(index_t cv, index_t l) const;
  // Appends bucket entries with position in [l, r), at most max_take of them.
  void emit_bucket(index_t cv, index_t l, index_t r, std::int64_t max_take,
                   std::vector<Point2>& out) const;
  [[nodiscard]] std::vector<Point2> sorted_slice(index_t l, index_t r,
                                                 index_t bound, Dir dir,
                                                 std::optional<std::int64_t> limit) const;

  std::vector<Point2> pts_;           // sorted by (x, y, label)
  std::vector<index_t> ys_;           // distinct y values, ascending
  WaveletTree wt_;                    // compressed y per position
  std::vector<index_t> bucket_start_; // per distinct y, offset into pos_by_y_
  std::vector<index_t> pos_by_y_;     // positions grouped by y, ascending
};

// Static labeled points in three dimensions; answers box reports.
class RankGrid3 {
 public:
  RankGrid3() = default;
  explicit RankGrid3(std::vector<Point3> pts);

  [[nodiscard]] index_t size() const { return static_cast<index_t>(pts_.size()); }
  // Points inside [x1,x2]x[y1,y2]x[z1,z2], ascending (x, y, z, label).
  [[nodiscard]] std::vector<Point3> report(index_t x1, index_t x2, index_t y1,
                                           index_t y2, index_t z1,
                                           index_t z2) const;

 private:
  void build(index_t b, index_t e, int axis);
  void search(index_t b, index_t e, int axis, const index_t* lo,
              const index_t* hi, std::vector<Point3>& out) const;

  std::vector<Point3> pts_;  // kd order: segment midpoints split on a cycling axis
};

// Static weighted points with pairwise distinct x-coordinates.
class WeightedGrid {
 public:
  WeightedGrid() = default;
  explicit WeightedGrid(std::vector<WeightedPoint> pts);

  [[nodiscard]] index_t size() const { return static_cast<index_t>(pts_.size()); }
  [[nodiscard]] const std::vector<WeightedPoint>& points() const { return pts_; }
  // The min(k, hits) heaviest points with x in [x1,x2] and y <= ymax, by
  // decreasing weight; equal weights emit smaller x first.
  [[nodiscard]] std::vector<WeightedPoint> topk(index_t x1, index_t x2,
                                                index_t ymax, std::int64_t k) const;

 private:
  std::vector<WeightedPoint> pts_;  // sorted by x
};

}  // namespace orsti
