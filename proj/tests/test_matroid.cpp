#include "subsel/matroid.hpp"

#include "subsel/rng.hpp"

#include "doctest.h"

#include <algorithm>
#include <vector>

using subsel::IndexSet;
using subsel::MatroidSpec;

namespace {

// The explicit family from the non-uniform counterexample.
MatroidSpec counterexample_family() {
  return MatroidSpec::explicit_family(4, {{0}, {1}, {2}, {3}, {0, 1}, {2, 3}});
}

}  // namespace

TEST_CASE("is_independent") {
  const MatroidSpec u = MatroidSpec::uniform(5, 2);
  CHECK(u.is_independent({0, 1}));
  CHECK_FALSE(u.is_independent({0, 1, 2}));
  CHECK(u.is_independent({}));
  CHECK_THROWS_AS(u.is_independent({0, 7}), std::out_of_range);

  const MatroidSpec e = counterexample_family();
  CHECK_FALSE(e.is_independent({0, 2}));
  CHECK(e.is_independent({2, 3}));
  CHECK(e.is_independent({}));
}

TEST_CASE("can_extend") {
  const MatroidSpec u = MatroidSpec::uniform(5, 2);
  CHECK(u.can_extend({0}, 1));
  CHECK_FALSE(u.can_extend({0, 1}, 2));

  const MatroidSpec e = counterexample_family();
  CHECK_FALSE(e.can_extend({0}, 2));
  CHECK(e.can_extend({0}, 1));

  const MatroidSpec p = MatroidSpec::partition(4, {{0, 1}, {2, 3}}, {1, 1});
  CHECK_FALSE(p.can_extend({0}, 1));
  CHECK(p.can_extend({0}, 2));
}

TEST_CASE("validate_axioms") {
  SUBCASE("uniform is trivially a matroid") {
    const auto r = MatroidSpec::uniform(5, 3).validate_axioms();
    CHECK(r.hereditary_ok);
    CHECK(r.augmentation_ok);
    CHECK_FALSE(r.counterexample.has_value());
  }
  SUBCASE("the counterexample family fails augmentation") {
    const auto r = counterexample_family().validate_axioms();
    CHECK(r.hereditary_ok);
    CHECK_FALSE(r.augmentation_ok);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->first == IndexSet{0});
    CHECK(r.counterexample->second == IndexSet{2, 3});
    // replaying the witness against the family reproduces the violation
    const MatroidSpec e = counterexample_family();
    for (int j : r.counterexample->second) {
      IndexSet extended = r.counterexample->first;
      if (std::binary_search(extended.begin(), extended.end(), j)) continue;
      extended.insert(std::upper_bound(extended.begin(), extended.end(), j),
                      j);
      CHECK_FALSE(e.is_independent(extended));
    }
  }
  SUBCASE("size-capped family is a matroid") {
    const MatroidSpec e = MatroidSpec::explicit_family(
        3, {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}});
    const auto r = e.validate_axioms();
    CHECK(r.hereditary_ok);
    CHECK(r.augmentation_ok);
  }
  SUBCASE("missing subset breaks heredity") {
    const auto r =
        MatroidSpec::explicit_family(3, {{0, 1}}).validate_axioms();
    CHECK_FALSE(r.hereditary_ok);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->second == IndexSet{0, 1});
  }
}

TEST_CASE("enumerate_independent_sets") {
  SUBCASE("uniform(2) over three elements, size-lex order") {
    const auto sets = MatroidSpec::uniform(3, 2).independent_sets();
    const std::vector<IndexSet> expected = {{},     {0},    {1},   {2},
                                            {0, 1}, {0, 2}, {1, 2}};
    CHECK(sets == expected);
  }
  SUBCASE("explicit family streams all seven sets") {
    const auto sets = counterexample_family().independent_sets();
    CHECK(sets.size() == 7);
    CHECK(sets.front() == IndexSet{});
    CHECK(sets.back() == IndexSet{2, 3});
  }
  SUBCASE("partition caps (1,1) yields nine sets") {
    const MatroidSpec p = MatroidSpec::partition(4, {{0, 1}, {2, 3}}, {1, 1});
    const auto sets = p.independent_sets();
    // direct oracle: filter all 16 subsets by per-block counts
    std::vector<IndexSet> expected;
    for (int mask = 0; mask < 16; ++mask) {
      IndexSet s;
      for (int i = 0; i < 4; ++i) {
        if (mask & (1 << i)) s.push_back(i);
      }
      const int lo = static_cast<int>(std::count_if(
          s.begin(), s.end(), [](int x) { return x < 2; }));
      const int hi = static_cast<int>(s.size()) - lo;
      if (lo <= 1 && hi <= 1) expected.push_back(s);
    }
    std::sort(expected.begin(), expected.end(), subsel::size_lex_less);
    CHECK(sets.size() == 9);
    CHECK(sets == expected);
  }
  SUBCASE("max_card truncates") {
    const auto sets = MatroidSpec::uniform(4, 3).independent_sets(1);
    CHECK(sets.size() == 5);
  }
}

TEST_CASE("rank_cap") {
  CHECK(MatroidSpec::uniform(5, 3).rank_cap() == 3);
  CHECK(MatroidSpec::uniform(2, 3).rank_cap() == 2);
  CHECK(MatroidSpec::partition(5, {{0, 1}, {2, 3, 4}}, {1, 2}).rank_cap() ==
        3);
  CHECK(counterexample_family().rank_cap() == 2);
}

TEST_CASE("hereditary closure of the enumeration") {
  subsel::Rng rng(41);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 4 + rng.uniform_int(0, 4);
    MatroidSpec m = MatroidSpec::uniform(n, 1);
    if (rng.uniform() < 0.5) {
      std::vector<std::vector<int>> blocks(2);
      for (int i = 0; i < n; ++i) {
        blocks[static_cast<std::size_t>(rng.uniform_int(0, 1))].push_back(i);
      }
      if (blocks[0].empty() || blocks[1].empty()) continue;
      m = MatroidSpec::partition(n, blocks,
                                 {rng.uniform_int(1, 2), rng.uniform_int(1, 2)});
    } else {
      m = MatroidSpec::uniform(n, rng.uniform_int(1, 3));
    }
    const auto sets = m.independent_sets();
    for (const IndexSet& s : sets) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        IndexSet sub = s;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
        CHECK(std::find(sets.begin(), sets.end(), sub) != sets.end());
      }
    }
  }
}

TEST_CASE("uniform expressed as an explicit family") {
  const int n = 5;
  const int k = 2;
  const MatroidSpec u = MatroidSpec::uniform(n, k);
  std::vector<IndexSet> family;
  for (int mask = 0; mask < (1 << n); ++mask) {
    IndexSet s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1 << i)) s.push_back(i);
    }
    if (static_cast<int>(s.size()) <= k) family.push_back(s);
  }
  const MatroidSpec e = MatroidSpec::explicit_family(n, family);
  const auto r = e.validate_axioms();
  CHECK(r.hereditary_ok);
  CHECK(r.augmentation_ok);
  CHECK(u.independent_sets() == e.independent_sets());
}

TEST_CASE("can_extend is membership of the extension") {
  subsel::Rng rng(42);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 4 + rng.uniform_int(0, 4);
    MatroidSpec m = MatroidSpec::uniform(n, rng.uniform_int(1, 3));
    const double pick = rng.uniform();
    if (pick < 0.3) {
      std::vector<std::vector<int>> blocks(2);
      for (int i = 0; i < n; ++i) {
        blocks[static_cast<std::size_t>(i % 2)].push_back(i);
      }
      m = MatroidSpec::partition(
          n, blocks, {rng.uniform_int(1, 2), rng.uniform_int(1, 2)});
    } else if (pick < 0.5) {
      m = MatroidSpec::explicit_family(
          n, MatroidSpec::uniform(n, 2).independent_sets());
    }
    const auto sets = m.independent_sets();
    const IndexSet& s =
        sets[static_cast<std::size_t>(rng.uniform_int(
            0, static_cast<int>(sets.size()) - 1))];
    const int x = rng.uniform_int(0, n - 1);
    if (std::binary_search(s.begin(), s.end(), x)) continue;
    IndexSet ext = s;
    ext.insert(std::upper_bound(ext.begin(), ext.end(), x), x);
    CHECK(m.can_extend(s, x) == m.is_independent(ext));
  }
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(MatroidSpec::uniform(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(MatroidSpec::partition(4, {{0, 1}, {1, 2, 3}}, {1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(MatroidSpec::partition(4, {{0, 1}}, {1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(MatroidSpec::explicit_family(2, {{0, 5}}),
                  std::invalid_argument);
}

TEST_CASE("enumeration and validation guards") {
  CHECK_THROWS_AS(MatroidSpec::uniform(26, 2).independent_sets(),
                  std::runtime_error);
  std::vector<IndexSet> family;
  for (int i = 0; i < 21; ++i) family.push_back({i});
  CHECK_THROWS_AS(MatroidSpec::explicit_family(21, family).validate_axioms(),
                  std::runtime_error);
}
