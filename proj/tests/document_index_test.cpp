#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "orsti/document_index.hpp"

using orsti::DocumentIndex;
using orsti::index_t;
using orsti::SaRange;
using orsti::Text;

namespace {

std::vector<Text> wrap(const std::vector<std::string>& docs) {
  std::vector<Text> out;
  for (const std::string& d : docs) out.emplace_back(d);
  return out;
}

}  // namespace

TEST_CASE("retained suffixes cover exactly the in-document positions") {
  DocumentIndex idx(wrap({"aba", "ab"}));
  CHECK(idx.doc_count() == 2);
  CHECK(idx.suffix_count() == 5);
  index_t from_first = 0;
  for (index_t r = 1; r <= idx.suffix_count(); ++r)
    if (idx.da()[r] == 1) ++from_first;
  CHECK(from_first == 3);

  SUBCASE("single document") {
    DocumentIndex one(wrap({"banana"}));
    CHECK(one.suffix_count() == 6);
    for (index_t r = 1; r <= 6; ++r) {
      CHECK(one.da()[r] == 1);
      CHECK(one.psi()[r] == (r == 1 ? -1 : r - 1));
    }
  }
}

TEST_CASE("empty collections are rejected") {
  CHECK_THROWS_AS(DocumentIndex({}), std::invalid_argument);
}

TEST_CASE("document and predecessor arrays obey their definitions") {
  std::mt19937 rng(11);
  for (int round = 0; round < 80; ++round) {
    const index_t k = 1 + static_cast<index_t>(rng() % 10);
    std::vector<std::string> docs;
    for (index_t d = 0; d < k; ++d)
      docs.push_back(oracle::random_text(rng, 1 + static_cast<int>(rng() % 50),
                                         1 + static_cast<int>(rng() % 4)));
    DocumentIndex idx(wrap(docs));

    index_t total = 0;
    for (const auto& d : docs) total += static_cast<index_t>(d.size());
    REQUIRE(idx.suffix_count() == total);

    std::vector<index_t> last(k + 1, -1);
    for (index_t r = 1; r <= total; ++r) {
      const index_t doc = idx.da()[r];
      REQUIRE(doc >= 1);
      REQUIRE(doc <= k);
      CHECK(idx.psi()[r] == last[doc]);
      last[doc] = r;

      // The suffix at rank r starts inside the document it is charged to.
      const auto [d2, off] = idx.locate(idx.table().sa[r]);
      CHECK(d2 == doc);
      CHECK(off >= 1);
      CHECK(off <= static_cast<index_t>(docs[doc - 1].size()));
    }
  }
}

TEST_CASE("find_range counts every in-document occurrence") {
  std::mt19937 rng(23);
  for (int round = 0; round < 60; ++round) {
    const index_t k = 1 + static_cast<index_t>(rng() % 6);
    std::vector<std::string> docs;
    for (index_t d = 0; d < k; ++d)
      docs.push_back(oracle::random_text(rng, 1 + static_cast<int>(rng() % 30), 3));
    DocumentIndex idx(wrap(docs));

    for (int q = 0; q < 30; ++q) {
      std::string pat;
      if (q % 4 == 0) {
        pat = oracle::random_text(rng, 1 + static_cast<int>(rng() % 5), 3);
      } else {
        const std::string& host = docs[rng() % docs.size()];
        const std::size_t i = rng() % host.size();
        pat = host.substr(i, 1 + rng() % std::min<std::size_t>(6, host.size() - i));
      }
      std::int64_t want = 0;
      for (const auto& d : docs) want += oracle::term_frequency(d, pat);
      CHECK(idx.find_range(pat).length() == want);
    }
    CHECK(idx.find_range("").length() == idx.suffix_count());
  }
}

TEST_CASE("distinct-document counting via predecessor values below the range") {
  std::mt19937 rng(37);
  int checked = 0;
  for (int round = 0; round < 40; ++round) {
    const index_t k = 1 + static_cast<index_t>(rng() % 8);
    std::vector<std::string> docs;
    for (index_t d = 0; d < k; ++d)
      docs.push_back(oracle::random_text(rng, 1 + static_cast<int>(rng() % 40), 2));
    DocumentIndex idx(wrap(docs));
    const index_t m = idx.suffix_count();

    for (int q = 0; q < 250; ++q) {
      index_t lo = 1 + static_cast<index_t>(rng() % m);
      index_t hi = 1 + static_cast<index_t>(rng() % m);
      if (lo > hi) std::swap(lo, hi);
      std::set<index_t> distinct;
      index_t below = 0;
      for (index_t r = lo; r <= hi; ++r) {
        distinct.insert(idx.da()[r]);
        if (idx.psi()[r] < lo) ++below;
      }
      CHECK(below == static_cast<index_t>(distinct.size()));
      ++checked;
    }
  }
  CHECK(checked == 10000);
}
