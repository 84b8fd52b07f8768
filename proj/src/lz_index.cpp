#include "orsti/lz_index.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace orsti {

namespace {

Text reversed(const Text& text) {
  return Text(std::string(text.bytes().rbegin(), text.bytes().rend()));
}

// Longest copy for the suffix at k from sources in [cand_lo, k-1], capped at
// the window end `hi`; among equally long sources the nearest (largest) one
// wins. Returns {0, 0} when no symbol can be copied.
std::pair<index_t, index_t> longest_back_copy(const SuffixTable& table,
                                              const RankGrid2& grid, index_t k,
                                              index_t cand_lo, index_t hi) {
  if (cand_lo > k - 1) return {0, 0};
  const index_t yk = table.isa[k];
  index_t len = 0;
  if (const auto below = grid.successor_y(cand_lo, k - 1, yk - 1, Dir::below))
    len = std::max(len, table.lcp_between_ranks(below->y, yk));
  if (const auto above = grid.successor_y(cand_lo, k - 1, yk + 1, Dir::above))
    len = std::max(len, table.lcp_between_ranks(yk, above->y));
  len = std::min(len, hi - k + 1);
  if (len == 0) return {0, 0};
  const auto band = table.rank_band(yk, len);
  index_t lo = cand_lo, r = k - 1;
  while (lo < r) {
    const index_t mid = lo + (r - lo + 1) / 2;
    if (grid.count(mid, k - 1, band.first, band.second) > 0)
      lo = mid;
    else
      r = mid - 1;
  }
  return {lo, len};
}

// Greedy parse of window positions [lo, hi] with copy sources allowed from
// cand_lo on; `at` reads the byte at a window position.
template <typename ByteAt>
LzParse parse_window(const SuffixTable& table, const RankGrid2& grid, ByteAt at,
                     index_t lo, index_t hi, index_t cand_lo) {
  LzParse out;
  out.source_length = hi - lo + 1;
  index_t k = lo;
  while (k <= hi) {
    LzPhrase ph;
    const auto [t, len] = longest_back_copy(table, grid, k, cand_lo, hi);
    if (len == 0) {
      ph.has_c = true;
      ph.c = at(k);
      k += 1;
    } else {
      ph.f = k - t;
      ph.l = len;
      if (k + len <= hi) {
        ph.has_c = true;
        ph.c = at(k + len);
        k += len + 1;
      } else {
        k += len;
      }
    }
    out.phrases.push_back(ph);
  }
  return out;
}

RankGrid2 position_rank_grid(const SuffixTable& table, index_t first,
                             index_t last) {
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(last - first + 1));
  for (index_t i = first; i <= last; ++i) pts.push_back({i, table.isa[i], i});
  return RankGrid2(std::move(pts),
                   {.require_distinct_x = true, .require_distinct_y = true});
}

}  // namespace

LzParse lz_parse(const Text& s) {
  const SuffixIndex sidx(s);
  const index_t n = sidx.size();
  const RankGrid2 grid = position_rank_grid(sidx.table(), 1, n);
  return parse_window(
      sidx.table(), grid,
      [&](index_t p) { return static_cast<char>(s.at(p)); }, 1, n, 1);
}

Text lz_decompress(const LzParse& parse) {
  if (parse.source_length < 1)
    throw std::invalid_argument("parse: declared length must be positive");
  std::string out;
  out.reserve(static_cast<std::size_t>(parse.source_length));
  for (const LzPhrase& ph : parse.phrases) {
    if (ph.f < 0 || ph.l < 0)
      throw std::invalid_argument("parse: negative phrase field");
    const index_t written = static_cast<index_t>(out.size());
    if (written + ph.l + (ph.has_c ? 1 : 0) > parse.source_length)
      throw std::invalid_argument("parse: phrase overruns the declared length");
    if (ph.l > 0) {
      if (ph.f < 1 || ph.f > written)
        throw std::invalid_argument("parse: copy reaches before the start");
      const std::size_t src = static_cast<std::size_t>(written - ph.f);
      for (index_t i = 0; i < ph.l; ++i)
        out.push_back(out[src + static_cast<std::size_t>(i)]);
    }
    if (ph.has_c) out.push_back(ph.c);
  }
  if (static_cast<index_t>(out.size()) != parse.source_length)
    throw std::invalid_argument("parse: declared length mismatch");
  return Text(std::move(out));
}

LzParse lz_conditional(const Text& s, std::string_view context) {
  validate_pattern(context);
  const index_t ctx = static_cast<index_t>(context.size());
  const index_t total = ctx + 1 + s.size();
  std::vector<index_t> seq;
  seq.reserve(static_cast<std::size_t>(total) + 1);
  for (const char b : context)
    seq.push_back(static_cast<index_t>(static_cast<unsigned char>(b)) + 1);
  seq.push_back(1);  // separator, below every byte symbol
  for (const char b : s.bytes())
    seq.push_back(static_cast<index_t>(static_cast<unsigned char>(b)) + 1);
  seq.push_back(0);
  const SuffixTable table = SuffixTable::build(std::move(seq), 1);
  const RankGrid2 grid = position_rank_grid(table, 1, total);
  const index_t lo = ctx + 2;
  return parse_window(
      table, grid,
      [&](index_t p) { return s.bytes()[static_cast<std::size_t>(p - lo)]; },
      lo, total, 1);
}

std::vector<index_t> phrase_starts(const LzParse& parse) {
  std::vector<index_t> u{1};
  u.reserve(parse.phrases.size() + 1);
  for (const LzPhrase& ph : parse.phrases)
    u.push_back(u.back() + ph.l + (ph.has_c ? 1 : 0));
  return u;
}

ScqIndex::ScqIndex(Text s) : sidx_(std::move(s)) {
  grid_ = position_rank_grid(sidx_.table(), 1, sidx_.size());
}

std::pair<index_t, index_t> ScqIndex::ilcp(index_t k, index_t l, index_t r) const {
  const index_t n = sidx_.size();
  if (l < 1 || r > n || l > r) throw std::invalid_argument("ilcp: invalid range");
  if (k < 1 || k > n) throw std::invalid_argument("ilcp: position out of bounds");
  if (k >= l && k <= r) return {k, n - k + 1};
  const index_t yk = sidx_.isa()[k];
  index_t best_t = 0;
  index_t best_len = -1;
  if (const auto below = grid_.successor_y(l, r, yk - 1, Dir::below)) {
    best_t = below->x;
    best_len = sidx_.table().lcp_between_ranks(below->y, yk);
  }
  if (const auto above = grid_.successor_y(l, r, yk + 1, Dir::above)) {
    const index_t len = sidx_.table().lcp_between_ranks(yk, above->y);
    if (len > best_len) {
      best_t = above->x;
      best_len = len;
    }
  }
  return {best_t, best_len};
}

LzParse ScqIndex::scq(index_t i, index_t j) const {
  const index_t n = sidx_.size();
  if (i < 1 || j > n || i > j) throw std::invalid_argument("scq: invalid range");
  const Text& t = sidx_.text();
  return parse_window(
      sidx_.table(), grid_,
      [&](index_t p) { return static_cast<char>(t.at(p)); }, i, j, i);
}

Lz77Index::Lz77Index(Text t)
    : sidx_(std::move(t)), rev_(reversed(sidx_.text())), parse_(lz_parse(sidx_.text())) {
  const index_t n = sidx_.size();
  starts_ = phrase_starts(parse_);
  const index_t c = static_cast<index_t>(parse_.phrases.size());

  std::vector<index_t> order(static_cast<std::size_t>(c));
  std::vector<RevKey> keys(static_cast<std::size_t>(c));
  for (index_t i = 1; i <= c; ++i) {
    const index_t end = starts_[static_cast<std::size_t>(i)] - 1;
    order[static_cast<std::size_t>(i - 1)] = i;
    keys[static_cast<std::size_t>(i - 1)] = {
        n - end + 1, starts_[static_cast<std::size_t>(i)] -
                         starts_[static_cast<std::size_t>(i - 1)]};
  }
  std::sort(order.begin(), order.end(), [&](index_t a, index_t b) {
    const RevKey& ka = keys[static_cast<std::size_t>(a - 1)];
    const RevKey& kb = keys[static_cast<std::size_t>(b - 1)];
    const index_t shared = rev_.lcp_len(ka.pos, kb.pos);
    if (shared >= std::min(ka.len, kb.len)) {
      if (ka.len != kb.len) return ka.len < kb.len;
      return a < b;
    }
    return rev_.text().at(ka.pos + shared) < rev_.text().at(kb.pos + shared);
  });

  sorted_keys_.resize(static_cast<std::size_t>(c));
  std::vector<index_t> yrank(static_cast<std::size_t>(c) + 1, 0);
  for (index_t s = 0; s < c; ++s) {
    sorted_keys_[static_cast<std::size_t>(s)] =
        keys[static_cast<std::size_t>(order[static_cast<std::size_t>(s)] - 1)];
    yrank[static_cast<std::size_t>(order[static_cast<std::size_t>(s)])] = s + 1;
  }

  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(c));
  for (index_t i = 1; i <= c; ++i) {
    const index_t after = starts_[static_cast<std::size_t>(i)];
    const index_t x = after == n + 1 ? 0 : sidx_.isa()[after];
    pts.push_back({x, yrank[static_cast<std::size_t>(i)], i});
  }
  grid_ = RankGrid2(std::move(pts),
                    {.require_distinct_x = true, .require_distinct_y = true});
}

int Lz77Index::prefix_compare(const RevKey& key, std::string_view w) const {
  const index_t upto = std::min(key.len, static_cast<index_t>(w.size()));
  for (index_t i = 0; i < upto; ++i) {
    const unsigned char a = rev_.text().at(key.pos + i);
    const unsigned char b = static_cast<unsigned char>(w[static_cast<std::size_t>(i)]);
    if (a != b) return a < b ? -1 : 1;
  }
  return upto < static_cast<index_t>(w.size()) ? -1 : 0;
}

std::vector<index_t> Lz77Index::primary_occurrences(std::string_view q) const {
  validate_pattern(q);
  if (q.empty()) throw std::invalid_argument("pattern must be non-empty");
  const index_t n = sidx_.size();
  const index_t m = static_cast<index_t>(q.size());
  std::vector<index_t> out;
  for (index_t j = 1; j <= m; ++j) {
    index_t xlo = 0, xhi = n;
    if (j < m) {
      const SaRange r = sidx_.sa_range(q.substr(static_cast<std::size_t>(j)));
      if (r.empty()) continue;
      xlo = r.lo;
      xhi = r.hi;
    }
    std::string w(q.substr(0, static_cast<std::size_t>(j)));
    std::reverse(w.begin(), w.end());
    const auto first = std::partition_point(
        sorted_keys_.begin(), sorted_keys_.end(),
        [&](const RevKey& k) { return prefix_compare(k, w) < 0; });
    const auto last = std::partition_point(
        first, sorted_keys_.end(),
        [&](const RevKey& k) { return prefix_compare(k, w) <= 0; });
    if (first == last) continue;
    const index_t ylo = static_cast<index_t>(first - sorted_keys_.begin()) + 1;
    const index_t yhi = static_cast<index_t>(last - sorted_keys_.begin());
    for (const Point2& pt : grid_.report(xlo, xhi, ylo, yhi))
      out.push_back(starts_[static_cast<std::size_t>(pt.label)] - j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace orsti
