#pragma once

// Brute-force reference implementations used to pin expected values in tests.
// These deliberately avoid the library's own data structures: plain sorting,
// scanning and pairwise comparison only.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace oracle {

using std::int32_t;
using std::int64_t;

// --- suffix arrays ---------------------------------------------------------

// 1-based suffix array by sorting all suffixes.
inline std::vector<int32_t> suffix_array(std::string_view s) {
  std::vector<int32_t> sa(s.size());
  std::iota(sa.begin(), sa.end(), 1);
  std::sort(sa.begin(), sa.end(), [&](int32_t a, int32_t b) {
    return s.substr(static_cast<std::size_t>(a - 1)) < s.substr(static_cast<std::size_t>(b - 1));
  });
  return sa;
}

inline int32_t lcp_of(std::string_view a, std::string_view b) {
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
  return static_cast<int32_t>(k);
}

// Common prefix length of the suffixes at 1-based positions i and j.
inline int32_t suffix_lcp(std::string_view s, int32_t i, int32_t j) {
  return lcp_of(s.substr(static_cast<std::size_t>(i - 1)), s.substr(static_cast<std::size_t>(j - 1)));
}

// Occurrence start positions of pattern in text, ascending, 1-based.
inline std::vector<int32_t> occurrences(std::string_view text, std::string_view pat) {
  std::vector<int32_t> out;
  if (pat.empty()) {
    for (std::size_t i = 1; i <= text.size(); ++i) out.push_back(static_cast<int32_t>(i));
    return out;
  }
  for (std::size_t i = 0; i + pat.size() <= text.size(); ++i)
    if (text.compare(i, pat.size(), pat) == 0) out.push_back(static_cast<int32_t>(i + 1));
  return out;
}

// --- range minima ----------------------------------------------------------

// Leftmost argmin over values[i..j], all 1-based.
inline int32_t rmq_argmin(const std::vector<int32_t>& values, int32_t i, int32_t j) {
  int32_t best = i;
  for (int32_t p = i + 1; p <= j; ++p)
    if (values[static_cast<std::size_t>(p - 1)] < values[static_cast<std::size_t>(best - 1)])
      best = p;
  return best;
}

inline std::vector<int32_t> rmq_bounded_report(const std::vector<int32_t>& values, int32_t i,
                                               int32_t j, int32_t bound) {
  std::vector<int32_t> out;
  for (int32_t p = i; p <= j; ++p)
    if (values[static_cast<std::size_t>(p - 1)] < bound) out.push_back(p);
  return out;
}

// --- grids -----------------------------------------------------------------

struct Pt2 {
  int32_t x, y, label;
};
struct Pt3 {
  int32_t x, y, z, label;
};
struct WPt {
  int32_t x, y;
  int64_t weight;
  int32_t label;
};

inline std::vector<Pt2> grid_report(const std::vector<Pt2>& pts, int32_t x1, int32_t x2, int32_t y1,
                                    int32_t y2) {
  std::vector<Pt2> out;
  for (const Pt2& p : pts)
    if (p.x >= x1 && p.x <= x2 && p.y >= y1 && p.y <= y2) out.push_back(p);
  std::sort(out.begin(), out.end(), [](const Pt2& a, const Pt2& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.label < b.label;
  });
  return out;
}

inline int64_t grid_count(const std::vector<Pt2>& pts, int32_t x1, int32_t x2, int32_t y1,
                          int32_t y2) {
  int64_t c = 0;
  for (const Pt2& p : pts)
    if (p.x >= x1 && p.x <= x2 && p.y >= y1 && p.y <= y2) ++c;
  return c;
}

// dir=true: greatest y <= bound; dir=false: least y >= bound. Ties fall to the
// smallest x.
inline std::optional<Pt2> grid_successor_y(const std::vector<Pt2>& pts, int32_t x1, int32_t x2,
                                           int32_t bound, bool below) {
  std::optional<Pt2> best;
  for (const Pt2& p : pts) {
    if (p.x < x1 || p.x > x2) continue;
    if (below ? p.y > bound : p.y < bound) continue;
    if (!best) {
      best = p;
      continue;
    }
    const bool closer = below ? p.y > best->y : p.y < best->y;
    const bool tie = p.y == best->y && (p.x < best->x || (p.x == best->x && p.label < best->label));
    if (closer || tie) best = p;
  }
  return best;
}

// dir=true: y <= bound sorted by decreasing y; dir=false: y >= bound sorted by
// increasing y. Equal y resolves to smaller x first.
inline std::vector<Pt2> grid_sorted_3sided(const std::vector<Pt2>& pts, int32_t x1, int32_t x2,
                                           int32_t bound, bool below,
                                           std::optional<int64_t> limit = std::nullopt) {
  std::vector<Pt2> out;
  for (const Pt2& p : pts) {
    if (p.x < x1 || p.x > x2) continue;
    if (below ? p.y > bound : p.y < bound) continue;
    out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [&](const Pt2& a, const Pt2& b) {
    if (a.y != b.y) return below ? a.y > b.y : a.y < b.y;
    if (a.x != b.x) return a.x < b.x;
    return a.label < b.label;
  });
  if (limit && static_cast<int64_t>(out.size()) > *limit) out.resize(static_cast<std::size_t>(*limit));
  return out;
}

inline std::vector<Pt3> grid_report3(const std::vector<Pt3>& pts, int32_t x1, int32_t x2,
                                     int32_t y1, int32_t y2, int32_t z1, int32_t z2) {
  std::vector<Pt3> out;
  for (const Pt3& p : pts)
    if (p.x >= x1 && p.x <= x2 && p.y >= y1 && p.y <= y2 && p.z >= z1 && p.z <= z2)
      out.push_back(p);
  std::sort(out.begin(), out.end(), [](const Pt3& a, const Pt3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    if (a.z != b.z) return a.z < b.z;
    return a.label < b.label;
  });
  return out;
}

// k heaviest with x in [x1,x2], y <= ymax; weight descending, ties smaller x.
inline std::vector<WPt> grid_topk(const std::vector<WPt>& pts, int32_t x1, int32_t x2, int32_t ymax,
                                  int64_t k) {
  std::vector<WPt> out;
  for (const WPt& p : pts)
    if (p.x >= x1 && p.x <= x2 && p.y <= ymax) out.push_back(p);
  std::sort(out.begin(), out.end(), [](const WPt& a, const WPt& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.x < b.x;
  });
  if (static_cast<int64_t>(out.size()) > k) out.resize(static_cast<std::size_t>(k));
  return out;
}

// --- Hamming ---------------------------------------------------------------

inline int32_t hamming_at(std::string_view text, std::string_view pat, std::size_t pos0) {
  int32_t d = 0;
  for (std::size_t k = 0; k < pat.size(); ++k)
    if (text[pos0 + k] != pat[k]) ++d;
  return d;
}

// Positions (1-based) where pat matches text with exactly `dist` mismatches.
inline std::vector<int32_t> hamming_positions(std::string_view text, std::string_view pat,
                                              int32_t dist) {
  std::vector<int32_t> out;
  if (pat.empty() || pat.size() > text.size()) return out;
  for (std::size_t i = 0; i + pat.size() <= text.size(); ++i)
    if (hamming_at(text, pat, i) == dist) out.push_back(static_cast<int32_t>(i + 1));
  return out;
}

inline std::vector<int32_t> hamming_at_most(std::string_view text, std::string_view pat,
                                            int32_t dist) {
  std::vector<int32_t> out;
  if (pat.empty() || pat.size() > text.size()) return out;
  for (std::size_t i = 0; i + pat.size() <= text.size(); ++i)
    if (hamming_at(text, pat, i) <= dist) out.push_back(static_cast<int32_t>(i + 1));
  return out;
}

// Positions where q1 and q2 occur separated by a gap of exactly d symbols.
inline std::vector<int32_t> gap_positions(std::string_view text, std::string_view q1,
                                          std::string_view q2, int32_t d) {
  std::vector<int32_t> out;
  if (q1.empty() || q2.empty()) return out;
  const std::size_t span = q1.size() + static_cast<std::size_t>(d) + q2.size();
  if (span > text.size()) return out;
  for (std::size_t i = 0; i + span <= text.size(); ++i)
    if (text.compare(i, q1.size(), q1) == 0 &&
        text.compare(i + q1.size() + static_cast<std::size_t>(d), q2.size(), q2) == 0)
      out.push_back(static_cast<int32_t>(i + 1));
  return out;
}

// --- LZ --------------------------------------------------------------------

struct LzPhrase {
  int32_t f = 0;
  int32_t l = 0;
  bool has_c = false;
  char c = '\0';

  friend bool operator==(const LzPhrase&, const LzPhrase&) = default;
};

// Greedy left-to-right parse. At each position the longest copy wins; among
// equally long copies the nearest source (largest t) wins. The final phrase
// omits its literal when the copy reaches the end of the string.
inline std::vector<LzPhrase> lz_parse(std::string_view s) {
  std::vector<LzPhrase> out;
  std::size_t k = 0;
  while (k < s.size()) {
    std::size_t best_len = 0, best_t = 0;
    for (std::size_t t = 0; t < k; ++t) {
      std::size_t len = 0;
      while (k + len < s.size() && s[t + len] == s[k + len]) ++len;
      if (len >= best_len && len > 0) {
        best_len = len;
        best_t = t;
      }
    }
    LzPhrase ph;
    if (best_len == 0) {
      ph.f = 0;
      ph.l = 0;
      ph.has_c = true;
      ph.c = s[k];
      k += 1;
    } else {
      ph.f = static_cast<int32_t>(k - best_t);
      ph.l = static_cast<int32_t>(best_len);
      if (k + best_len < s.size()) {
        ph.has_c = true;
        ph.c = s[k + best_len];
        k += best_len + 1;
      } else {
        k += best_len;
      }
    }
    out.push_back(ph);
  }
  return out;
}

inline std::string lz_decompress(const std::vector<LzPhrase>& parse) {
  std::string s;
  for (const LzPhrase& ph : parse) {
    const std::size_t start = s.size() - static_cast<std::size_t>(ph.f);
    for (int32_t i = 0; i < ph.l; ++i) s.push_back(s[start + static_cast<std::size_t>(i)]);
    if (ph.has_c) s.push_back(ph.c);
  }
  return s;
}

// 1-based phrase start positions u(1..c+1); the last entry is n+1.
inline std::vector<int32_t> lz_starts(const std::vector<LzPhrase>& parse) {
  std::vector<int32_t> u{1};
  for (const LzPhrase& ph : parse) u.push_back(u.back() + ph.l + (ph.has_c ? 1 : 0));
  return u;
}

// Primary occurrences: those whose window [p, p+|q|-1] covers a phrase end.
inline std::vector<int32_t> primary_occurrences(std::string_view text, std::string_view q,
                                                const std::vector<LzPhrase>& parse) {
  const std::vector<int32_t> u = lz_starts(parse);
  std::vector<bool> is_end(text.size() + 2, false);
  for (std::size_t i = 1; i < u.size(); ++i) is_end[static_cast<std::size_t>(u[i] - 1)] = true;
  std::vector<int32_t> out;
  for (int32_t p : occurrences(text, q)) {
    bool primary = false;
    for (int32_t pos = p; pos < p + static_cast<int32_t>(q.size()); ++pos)
      if (is_end[static_cast<std::size_t>(pos)]) primary = true;
    if (primary) out.push_back(p);
  }
  return out;
}

// --- documents -------------------------------------------------------------

inline bool doc_contains(std::string_view doc, std::string_view q) {
  return q.empty() || doc.find(q) != std::string_view::npos;
}

inline std::vector<int32_t> list_documents(const std::vector<std::string>& docs,
                                           std::string_view q) {
  std::vector<int32_t> out;
  for (std::size_t d = 0; d < docs.size(); ++d)
    if (doc_contains(docs[d], q)) out.push_back(static_cast<int32_t>(d + 1));
  return out;
}

inline int64_t term_frequency(std::string_view doc, std::string_view q) {
  return static_cast<int64_t>(occurrences(doc, q).size());
}

// Top-k by weight, ties toward the smaller document id.
inline std::vector<std::pair<int32_t, int64_t>> topk_docs(const std::vector<std::string>& docs,
                                                          std::string_view q, int64_t k,
                                                          const std::vector<int64_t>* docrank) {
  std::vector<std::pair<int32_t, int64_t>> scored;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    if (!doc_contains(docs[d], q)) continue;
    const int64_t w = docrank ? (*docrank)[d] : term_frequency(docs[d], q);
    scored.emplace_back(static_cast<int32_t>(d + 1), w);
  }
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (static_cast<int64_t>(scored.size()) > k) scored.resize(static_cast<std::size_t>(k));
  return scored;
}

// --- randomness ------------------------------------------------------------

inline std::string random_text(std::mt19937& rng, int32_t n, int32_t alphabet,
                               char base = 'a') {
  std::uniform_int_distribution<int32_t> dist(0, alphabet - 1);
  std::string s;
  s.reserve(static_cast<std::size_t>(n));
  for (int32_t i = 0; i < n; ++i) s.push_back(static_cast<char>(base + dist(rng)));
  return s;
}

}  // namespace oracle
