#include "orsti/rmq.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace orsti {

Rmq::Rmq(std::vector<index_t> values) {
  values_.reserve(values.size() + 1);
  values_.push_back(0);
  values_.insert(values_.end(), values.begin(), values.end());

  const index_t n = size();
  const index_t nblocks = (n + kBlock - 1) / kBlock;
  block_argmin_.resize(static_cast<std::size_t>(nblocks));
  for (index_t b = 0; b < nblocks; ++b) {
    const index_t lo = b * kBlock + 1;
    const index_t hi = std::min(n, lo + kBlock - 1);
    block_argmin_[static_cast<std::size_t>(b)] = scan_argmin(lo, hi);
  }

  const int levels = nblocks > 0 ? std::bit_width(static_cast<unsigned>(nblocks)) : 1;
  table_.assign(static_cast<std::size_t>(levels), {});
  table_[0] = block_argmin_;
  for (int k = 1; k < levels; ++k) {
    const index_t span = index_t{1} << k;
    const index_t count = nblocks - span + 1;
    if (count <= 0) break;
    table_[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(count));
    for (index_t b = 0; b < count; ++b) {
      const index_t left = table_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(b)];
      const index_t right =
          table_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(b + span / 2)];
      table_[static_cast<std::size_t>(k)][static_cast<std::size_t>(b)] =
          values_[right] < values_[left] ? right : left;
    }
  }
}

void Rmq::check_range(index_t i, index_t j) const {
  if (i < 1 || j > size() || i > j) throw std::invalid_argument("Rmq: invalid range");
}

index_t Rmq::scan_argmin(index_t i, index_t j) const {
  index_t best = i;
  for (index_t p = i + 1; p <= j; ++p)
    if (values_[p] < values_[best]) best = p;
  return best;
}

index_t Rmq::argmin(index_t i, index_t j) const {
  check_range(i, j);
  const index_t bi = (i - 1) / kBlock;
  const index_t bj = (j - 1) / kBlock;
  if (bi == bj) return scan_argmin(i, j);

  // Partial head and tail blocks, full blocks in between via the table.
  index_t best = scan_argmin(i, (bi + 1) * kBlock);
  if (bj - bi >= 2) {
    const index_t lo = bi + 1, hi = bj - 1;
    const int k = std::bit_width(static_cast<unsigned>(hi - lo + 1)) - 1;
    const index_t left = table_[static_cast<std::size_t>(k)][static_cast<std::size_t>(lo)];
    const index_t right = table_[static_cast<std::size_t>(k)]
                                [static_cast<std::size_t>(hi - (index_t{1} << k) + 1)];
    const index_t mid = values_[right] < values_[left] ? right : left;
    if (values_[mid] < values_[best]) best = mid;
  }
  const index_t tail = scan_argmin(bj * kBlock + 1, j);
  if (values_[tail] < values_[best]) best = tail;
  return best;
}

std::vector<index_t> Rmq::bounded_report(index_t i, index_t j, index_t bound,
                                         std::uint64_t* argmin_calls) const {
  check_range(i, j);
  std::vector<index_t> out;
  // In-order recursion: the minimum splits the range, so every reported
  // position costs O(1) argmin calls and output stays ascending.
  struct Frame {
    index_t lo, hi;
    index_t emit;  // 0 = plain segment, else emit this position after left part
  };
  std::vector<Frame> frames;
  frames.push_back({i, j, 0});
  while (!frames.empty()) {
    Frame f = frames.back();
    frames.pop_back();
    if (f.emit != 0) {
      out.push_back(f.emit);
      continue;
    }
    if (f.lo > f.hi) continue;
    if (argmin_calls != nullptr) ++*argmin_calls;
    const index_t p = argmin(f.lo, f.hi);
    if (values_[p] >= bound) continue;
    if (p < f.hi) frames.push_back({p + 1, f.hi, 0});
    frames.push_back({0, 0, p});
    if (f.lo < p) frames.push_back({f.lo, p - 1, 0});
  }
  return out;
}

}  // namespace orsti
