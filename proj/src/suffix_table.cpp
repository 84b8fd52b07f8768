#include "orsti/suffix_table.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace orsti {

namespace {

// Doubling construction with counting sort, O(n log n). Input is 0-based here;
// values must be non-negative and the last element strictly smallest-or-equal
// sentinel is the caller's business. Returns 0-based sa.
std::vector<index_t> build_sa(const std::vector<index_t>& s) {
  const index_t n = static_cast<index_t>(s.size());
  index_t alpha = 0;
  for (index_t v : s) alpha = std::max(alpha, v);
  ++alpha;

  std::vector<index_t> sa(n), rank(n), tmp(n), cnt(std::max(alpha, n) + 1, 0);

  for (index_t i = 0; i < n; ++i) ++cnt[s[i] + 1];
  for (index_t i = 1; i <= std::max(alpha, n); ++i) cnt[i] += cnt[i - 1];
  for (index_t i = 0; i < n; ++i) sa[cnt[s[i]]++] = i;
  rank[sa[0]] = 0;
  for (index_t i = 1; i < n; ++i)
    rank[sa[i]] = rank[sa[i - 1]] + (s[sa[i]] != s[sa[i - 1]] ? 1 : 0);

  for (index_t len = 1; len < n; len <<= 1) {
    if (rank[sa[n - 1]] == n - 1) break;
    // Order by the second key comes free from the previous round.
    index_t idx = 0;
    for (index_t i = n - len; i < n; ++i) tmp[idx++] = i;
    for (index_t i = 0; i < n; ++i)
      if (sa[i] >= len) tmp[idx++] = sa[i] - len;
    // Stable counting sort by the first key.
    std::fill(cnt.begin(), cnt.begin() + rank[sa[n - 1]] + 2, 0);
    for (index_t i = 0; i < n; ++i) ++cnt[rank[i] + 1];
    for (index_t i = 1; i <= rank[sa[n - 1]] + 1; ++i) cnt[i] += cnt[i - 1];
    for (index_t i = 0; i < n; ++i) sa[cnt[rank[tmp[i]]]++] = tmp[i];
    // Re-rank.
    tmp[sa[0]] = 0;
    for (index_t i = 1; i < n; ++i) {
      const index_t a = sa[i - 1], b = sa[i];
      const bool same = rank[a] == rank[b] && a + len < n && b + len < n &&
                        rank[a + len] == rank[b + len];
      // A shorter suffix (second key missing) sorts first; equality needs both
      // second keys present and equal.
      const bool same_short = rank[a] == rank[b] && a + len >= n && b + len >= n;
      tmp[b] = tmp[a] + ((same || same_short) ? 0 : 1);
    }
    std::swap(rank, tmp);
  }
  return sa;
}

// Kasai's algorithm, 0-based arrays; lcp[r] = common prefix of sa[r], sa[r+1].
std::vector<index_t> build_lcp(const std::vector<index_t>& s, const std::vector<index_t>& sa) {
  const index_t n = static_cast<index_t>(s.size());
  std::vector<index_t> rank(n), lcp(n > 0 ? n - 1 : 0, 0);
  for (index_t r = 0; r < n; ++r) rank[sa[r]] = r;
  index_t h = 0;
  for (index_t i = 0; i < n; ++i) {
    if (rank[i] + 1 == n) {
      h = 0;
      continue;
    }
    const index_t j = sa[rank[i] + 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    lcp[rank[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

}  // namespace

SuffixTable SuffixTable::build(std::vector<index_t> seq_with_sentinel, index_t first_real) {
  SuffixTable t;
  const index_t full = static_cast<index_t>(seq_with_sentinel.size());
  if (full < 1) throw std::invalid_argument("SuffixTable: empty sequence");

  std::vector<index_t> sa0 = build_sa(seq_with_sentinel);
  std::vector<index_t> lcp0 = build_lcp(seq_with_sentinel, sa0);

  // Suffixes starting with sub-real symbols occupy a prefix of the sorted
  // order; dropping them keeps adjacency (and adjacent lcp values) intact.
  index_t dropped = 0;
  while (dropped < full && seq_with_sentinel[sa0[dropped]] < first_real) ++dropped;

  const index_t kept = full - dropped;
  t.seq.assign(1, 0);
  t.seq.insert(t.seq.end(), seq_with_sentinel.begin(), seq_with_sentinel.end());
  t.sa.assign(1, 0);
  t.isa.assign(static_cast<std::size_t>(full) + 1, 0);
  for (index_t r = 0; r < kept; ++r) {
    const index_t pos = sa0[dropped + r] + 1;
    t.sa.push_back(pos);
    t.isa[pos] = r + 1;
  }
  std::vector<index_t> lcp1;
  lcp1.reserve(kept > 0 ? kept - 1 : 0);
  for (index_t h = 0; h + 1 < kept; ++h) lcp1.push_back(lcp0[dropped + h]);
  t.lcp.assign(1, 0);
  t.lcp.insert(t.lcp.end(), lcp1.begin(), lcp1.end());
  t.lcp_rmq = Rmq(std::move(lcp1));
  return t;
}

index_t SuffixTable::lcp_between_ranks(index_t a, index_t b) const {
  if (a == b) return seq_size() - sa[a] + 1;
  if (a > b) std::swap(a, b);
  return lcp_rmq.min_value(a, b - 1);
}

int SuffixTable::compare_rank(index_t rank, std::span<const index_t> pattern,
                              SearchState& state) const {
  const index_t m = static_cast<index_t>(pattern.size());
  index_t skip = 0;
  if (state.best_rank != 0) {
    const index_t h = lcp_between_ranks(state.best_rank, rank);
    const index_t bl = state.best_match;
    if (h < bl) {
      // This suffix diverges from the best match inside the matched prefix,
      // so the pattern symbol at h decides the order outright.
      const index_t c = seq[sa[rank] + h];
      return c < pattern[static_cast<std::size_t>(h)] ? -1 : 1;
    }
    if (h > bl) {
      if (bl == m) return 0;
      // Shares the best suffix's mismatching symbol; same verdict as before.
      const index_t c = seq[sa[state.best_rank] + bl];
      return c < pattern[static_cast<std::size_t>(bl)] ? -1 : 1;
    }
    skip = bl;
  }
  const index_t pos = sa[rank];
  index_t k = skip;
  while (k < m && seq[pos + k] == pattern[static_cast<std::size_t>(k)]) ++k;
  if (k > state.best_match) {
    state.best_rank = rank;
    state.best_match = k;
  }
  if (k == m) return 0;
  // The sequence always reaches a sub-pattern symbol (sentinel or separator)
  // before running out, so this access is in bounds.
  return seq[pos + k] < pattern[static_cast<std::size_t>(k)] ? -1 : 1;
}

SaRange SuffixTable::find_range(std::span<const index_t> pattern) const {
  const index_t n = suffix_count();
  if (pattern.empty()) return n >= 1 ? SaRange{1, n} : SaRange::none();

  // Lower bound: first rank whose suffix is >= pattern (prefix counts as >=).
  SearchState st_lo;
  index_t lo = 1, hi = n + 1;
  while (lo < hi) {
    const index_t mid = lo + (hi - lo) / 2;
    if (compare_rank(mid, pattern, st_lo) >= 0)
      hi = mid;
    else
      lo = mid + 1;
  }
  const index_t first = lo;

  // Upper bound: first rank whose suffix is > pattern and lacks the prefix.
  SearchState st_hi;
  lo = first;
  hi = n + 1;
  while (lo < hi) {
    const index_t mid = lo + (hi - lo) / 2;
    if (compare_rank(mid, pattern, st_hi) > 0)
      hi = mid;
    else
      lo = mid + 1;
  }
  if (first >= lo) return SaRange::none();
  return SaRange{first, lo - 1};
}

std::pair<index_t, index_t> SuffixTable::rank_band(index_t rank, index_t min_len) const {
  const index_t n = suffix_count();
  index_t a = rank, b = rank;
  if (min_len <= 0) return {1, n};
  // Largest b with min lcp[rank..b-1] >= min_len, by binary search.
  index_t lo = rank, hi = n;
  while (lo < hi) {
    const index_t mid = lo + (hi - lo + 1) / 2;
    if (lcp_rmq.min_value(rank, mid - 1) >= min_len)
      lo = mid;
    else
      hi = mid - 1;
  }
  b = lo;
  lo = 1;
  hi = rank;
  while (lo < hi) {
    const index_t mid = lo + (hi - lo) / 2;
    if (lcp_rmq.min_value(mid, rank - 1) >= min_len)
      hi = mid;
    else
      lo = mid + 1;
  }
  a = lo;
  return {a, b};
}

}  // namespace orsti
