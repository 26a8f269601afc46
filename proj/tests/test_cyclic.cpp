#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "btlat/cyclic.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace btlat;

namespace {

// Independent oracle: materialize every rotation and take the lexicographic minimum.
std::vector<int> naiveLeastRotation(const std::vector<int>& v) {
  std::vector<int> best = v;
  std::vector<int> cur = v;
  for (std::size_t i = 1; i < v.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    best = std::min(best, cur);
  }
  return best;
}

// All length-s vectors of nonnegative integers summing to t.
void compositionsInto(std::size_t s, long long t, std::vector<long long>& cur,
                      std::vector<std::vector<long long>>& out) {
  if (cur.size() + 1 == s) {
    cur.push_back(t);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (long long v = 0; v <= t; ++v) {
    cur.push_back(v);
    compositionsInto(s, t - v, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<long long>> compositions(std::size_t s, long long t) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  if (s > 0) compositionsInto(s, t, cur, out);
  return out;
}

}  // namespace

TEST_CASE("least rotation matches brute-force oracle exhaustively") {
  // Every vector over {0,1,2} of length 1..7.
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<int> v(n, 0);
    while (true) {
      CHECK(leastRotation(v) == naiveLeastRotation(v));
      std::size_t i = 0;
      while (i < n && v[i] == 2) v[i++] = 0;
      if (i == n) break;
      ++v[i];
    }
  }
}

TEST_CASE("least rotation matches oracle on random long vectors") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> val(0, 5);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<std::size_t> len(1, 40);
    std::vector<int> v(len(rng));
    for (auto& x : v) x = val(rng);
    CHECK(leastRotation(v) == naiveLeastRotation(v));
  }
}

TEST_CASE("cyclic vector class canonical forms") {
  CyclicVectorClass a({2, 0, 1, 3, 0, 1});
  CyclicVectorClass b({1, 2, 0, 1, 3, 0});
  CHECK(a == b);
  CHECK(a.entries() == std::vector<long long>{0, 1, 2, 0, 1, 3});

  CHECK(CyclicVectorClass({5, 1, 1}).entries() == std::vector<long long>{1, 1, 5});
  CHECK(CyclicVectorClass({0, 0, 0}).entries() == std::vector<long long>{0, 0, 0});

  CHECK(CyclicVectorClass({1, 0, 2}) != CyclicVectorClass({1, 2, 0}));
  CHECK(CyclicVectorClass({7}).total() == 7);
  CHECK(CyclicVectorClass({2, 0, 1, 3, 0, 1}).total() == 7);

  CHECK_THROWS_AS(CyclicVectorClass({}), InvalidInput);
  CHECK_THROWS_AS(CyclicVectorClass({1, -1}), InvalidInput);
}

TEST_CASE("row classes require a nonzero entry") {
  CHECK_THROWS_AS(MopRowClass({0, 0, 0}), NoNonzeroEntry);
  MopRowClass w({0, 2, 0});
  CHECK(w.length() == 3);
  CHECK(w.total() == 2);
}

TEST_CASE("pairs encoding of the running example") {
  MopRowClass w({3, 2, 1, 0, 0, 4, 2});
  PairsForm p = toPairs(w);
  CHECK(p == PairsForm({{3, 1}, {2, 1}, {1, 3}, {4, 1}, {2, 1}}));
  // Canonical rotation starts at the least pair.
  std::vector<PairEntry> expect{{1, 3}, {4, 1}, {2, 1}, {3, 1}, {2, 1}};
  CHECK(p.entries() == expect);
  CHECK(p.valueTotal() == 12);
  CHECK(p.gapTotal() == 7);
  CHECK(fromPairs(p) == w);
}

TEST_CASE("pairs encoding edge shapes") {
  CHECK(toPairs(MopRowClass({9})).entries() == std::vector<PairEntry>{{9, 1}});
  CHECK(toPairs(MopRowClass({0, 0, 2, 0})).entries() == std::vector<PairEntry>{{2, 4}});
  MopRowClass two({1, 0, 1, 0});
  CHECK(toPairs(two).entries() == std::vector<PairEntry>{{1, 2}, {1, 2}});
}

TEST_CASE("pairs round trip on everything small") {
  for (std::size_t s = 1; s <= 6; ++s)
    for (long long t = 1; t <= 6; ++t)
      for (const auto& v : compositions(s, t)) {
        if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; })) continue;
        MopRowClass w(v);
        CHECK(fromPairs(toPairs(w)) == w);
      }
}

TEST_CASE("complement on frozen examples") {
  CHECK(complement(MopRowClass({3, 2, 1, 0, 0, 4, 2})) ==
        MopRowClass({1, 0, 1, 3, 0, 0, 0, 1, 0, 1, 0, 0}));
  CHECK(complement(MopRowClass({3})) == MopRowClass({1, 0, 0}));
  CHECK(complement(MopRowClass({1, 2, 0})) == MopRowClass({1, 0, 2}));
  CHECK(complement(MopRowClass({1, 0, 0})) == MopRowClass({3}));
}

TEST_CASE("complement is an involution and a bijection") {
  for (std::size_t s = 1; s <= 6; ++s)
    for (long long t = 1; t <= 6; ++t) {
      std::set<MopRowClass> domain, image;
      for (const auto& v : compositions(s, t)) {
        if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; })) continue;
        MopRowClass w(v);
        domain.insert(w);
        MopRowClass c = complement(w);
        CHECK(c.length() == static_cast<std::size_t>(t));
        CHECK(c.total() == static_cast<long long>(s));
        CHECK(complement(c) == w);
        image.insert(c);
      }
      CHECK(domain.size() == image.size());
    }
}

TEST_CASE("matrix classes compare by cyclic reading") {
  CyclicMatrixClass a({{1, 0}, {1, 3}, {0, 0}, {0, 1}, {0, 1}, {0, 0}});
  CyclicMatrixClass b({{0, 0}, {0, 1}, {0, 1}, {0, 0}, {1, 0}, {1, 3}});
  CHECK(a == b);
  // A shift by one entry (half a row) is still the same class.
  CyclicMatrixClass c({{0, 1}, {3, 0}, {0, 0}, {1, 0}, {1, 0}, {0, 1}});
  CHECK(a == c);
  CHECK(rowClass(a) == MopRowClass({1, 0, 1, 3, 0, 0, 0, 1, 0, 1, 0, 0}));
  CHECK(a.rows() == 6);
  CHECK(a.cols() == 2);

  CHECK_THROWS_AS(CyclicMatrixClass({}), InvalidInput);
  CHECK_THROWS_AS(CyclicMatrixClass({{1, 0}, {1}}), InvalidInput);
}

TEST_CASE("positive-column membership and representatives") {
  CyclicMatrixClass a({{1, 0}, {1, 3}, {0, 0}, {0, 1}, {0, 1}, {0, 0}});
  CHECK(a.isMintMember());
  auto rep = a.mintRepresentative();
  REQUIRE(rep.size() == 6);
  for (std::size_t j = 0; j < 2; ++j) {
    long long colsum = 0;
    for (std::size_t i = 0; i < 6; ++i) colsum += rep[i][j];
    CHECK(colsum > 0);
  }
  CHECK(CyclicMatrixClass(rep) == a);

  CyclicMatrixClass zeroCol({{1, 0}, {2, 0}});
  CHECK_FALSE(zeroCol.isMintMember());
  CHECK_THROWS_AS(zeroCol.mintRepresentative(), NoValidMatrix);
}

TEST_CASE("unflatten recovers matrix classes") {
  MopRowClass w({1, 0, 1, 3, 0, 0, 0, 1, 0, 1, 0, 0});
  auto classes = unflatten(w, 6, 2);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0] == CyclicMatrixClass({{1, 0}, {1, 3}, {0, 0}, {0, 1}, {0, 1}, {0, 0}}));

  auto single = unflatten(MopRowClass({4}), 1, 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == CyclicMatrixClass(std::vector<std::vector<long long>>{{4}}));

  auto pairRow = unflatten(MopRowClass({1, 1}), 1, 2);
  REQUIRE(pairRow.size() == 1);
  CHECK(pairRow[0] == CyclicMatrixClass(std::vector<std::vector<long long>>{{1, 1}}));

  // Both rotations of (0,2) read as a 2x1 matrix leave a zero column somewhere.
  CHECK_THROWS_AS(unflatten(MopRowClass({0, 2}), 1, 2), NoValidMatrix);
  CHECK_THROWS_AS(unflatten(MopRowClass({0, 2, 0}), 2, 2), InvalidInput);
}

TEST_CASE("unflatten agrees with direct enumeration") {
  // For every flattening length f*r <= 8 with positive-column classes, flattening
  // then unflattening lands back on the same class.
  std::mt19937 rng(777);
  std::uniform_int_distribution<long long> val(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<std::size_t> fd(1, 4), rd(1, 2);
    std::size_t f = fd(rng), r = rd(rng);
    std::vector<std::vector<long long>> mat(f, std::vector<long long>(r));
    for (auto& row : mat)
      for (auto& x : row) x = val(rng);
    // Force every column positive.
    for (std::size_t j = 0; j < r; ++j) {
      long long colsum = 0;
      for (std::size_t i = 0; i < f; ++i) colsum += mat[i][j];
      if (colsum == 0) mat[0][j] = 1;
    }
    CyclicMatrixClass cls(mat);
    auto back = unflatten(rowClass(cls), f, r);
    REQUIRE(back.size() == 1);
    CHECK(back[0] == cls);
  }
}
