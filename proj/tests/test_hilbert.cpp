#include "subsel/hilbert.hpp"

#include "subsel/rng.hpp"
#include "test_util.hpp"

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

using subsel::OrthoBasis;
using subsel::Vec;

namespace {

Vec make_vec(std::initializer_list<double> coords) {
  Vec v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (double c : coords) v[i++] = c;
  return v;
}

const double kH = std::sqrt(0.5);
const Vec kS1 = make_vec({kH, kH, 0, 0});
const Vec kS2 = make_vec({0, kH, kH, 0});
const Vec kS3 = make_vec({0, 0, kH, kH});
const Vec kEta = make_vec({1, 2, 2, 1});

}  // namespace

TEST_CASE("inner products") {
  CHECK(subsel::inner(make_vec({1, 0}), make_vec({0, 1})) == 0.0);
  CHECK(subsel::inner(make_vec({kH, kH}), make_vec({kH, kH})) ==
        doctest::Approx(1.0));
  CHECK(subsel::inner(kEta, kS2) == doctest::Approx(2.0 * std::sqrt(2.0)));
  CHECK_THROWS_AS(subsel::inner(make_vec({1, 0}), make_vec({1, 0, 0})),
                  std::invalid_argument);
}

TEST_CASE("normalize") {
  const Vec v = subsel::normalize(make_vec({3, 4}));
  CHECK(v[0] == doctest::Approx(0.6));
  CHECK(v[1] == doctest::Approx(0.8));
  const Vec e0 = make_vec({1, 0, 0, 0});
  CHECK((subsel::normalize(e0) - e0).norm() == 0.0);
  const Vec d = subsel::normalize(make_vec({1, 1}));
  CHECK(d[0] == doctest::Approx(kH));
  CHECK(d[1] == doctest::Approx(kH));
  CHECK_THROWS_AS(subsel::normalize(make_vec({1e-12, 0})),
                  std::invalid_argument);
}

TEST_CASE("extend_basis") {
  SUBCASE("independent vector appends") {
    OrthoBasis b(2);
    b.extend(make_vec({1, 0}));
    const double rn = b.extend(make_vec({0, 1}));
    CHECK(rn == doctest::Approx(1.0));
    CHECK(b.size() == 2);
    CHECK((b.matrix().col(1) - make_vec({0, 1})).norm() < 1e-12);
  }
  SUBCASE("dependent vector is flagged") {
    OrthoBasis b(2);
    b.extend(make_vec({1, 0}));
    const double rn = b.extend(make_vec({1, 0}));
    CHECK(rn < 1e-12);
    CHECK(b.size() == 1);
  }
  SUBCASE("residual of s1 against s2") {
    OrthoBasis b(4);
    b.extend(kS2);
    const double rn = b.extend(kS1);
    CHECK(rn == doctest::Approx(std::sqrt(3.0) / 2.0));
    const double c = std::sqrt(4.0 / 3.0);
    const Vec expected = make_vec({c * kH, c * kH / 2.0, -c * kH / 2.0, 0});
    CHECK((b.matrix().col(1) - expected).norm() < 1e-12);
  }
}

TEST_CASE("project_norm_sq on the worked instance") {
  CHECK(subsel::project_norm_sq(kEta, {kS1, kS3}) == doctest::Approx(9.0));
  CHECK(subsel::project_norm_sq(kEta, {kS1, kS2}) ==
        doctest::Approx(8.0 + 2.0 / 3.0));
  CHECK(subsel::project_norm_sq(kEta, {}) == 0.0);
}

TEST_CASE("decompose") {
  SUBCASE("orthogonal to the span") {
    const auto d = subsel::decompose(make_vec({0, 1}), {make_vec({1, 0})});
    CHECK(d.angle == doctest::Approx(std::numbers::pi / 2.0));
    REQUIRE(d.orthogonal.has_value());
    CHECK((*d.orthogonal - make_vec({0, 1})).norm() < 1e-12);
    CHECK_FALSE(d.parallel.has_value());
  }
  SUBCASE("inside the span") {
    const auto d = subsel::decompose(make_vec({1, 0}), {make_vec({1, 0})});
    CHECK(d.angle == 0.0);
    CHECK_FALSE(d.orthogonal.has_value());
    REQUIRE(d.parallel.has_value());
  }
  SUBCASE("s1 against s2 sits at pi/3") {
    // <s1, s2> = 1/2 and the elements are unit, so the angle is acos(1/2);
    // cross-checked against the least-squares projection below.
    const auto d = subsel::decompose(kS1, {kS2});
    CHECK(d.angle == doctest::Approx(std::numbers::pi / 3.0));
    const double pn = test_util::ls_projection_norm(kS1, {kS2});
    CHECK(d.angle == doctest::Approx(std::acos(pn)));
  }
  SUBCASE("non-unit input is rejected") {
    CHECK_THROWS_AS(subsel::decompose(make_vec({1, 1}), {make_vec({1, 0})}),
                    std::invalid_argument);
  }
  SUBCASE("empty element set") {
    const auto d = subsel::decompose(make_vec({0, 1}), {});
    CHECK(d.angle == doctest::Approx(std::numbers::pi / 2.0));
    CHECK_FALSE(d.parallel.has_value());
    REQUIRE(d.orthogonal.has_value());
  }
}

TEST_CASE("marginal_gain") {
  CHECK(subsel::marginal_gain(kEta, {}, kS2) == doctest::Approx(8.0));
  CHECK(subsel::marginal_gain(kEta, {kS2}, kS1) ==
        doctest::Approx(2.0 / 3.0));
  CHECK(subsel::marginal_gain(kEta, {kS1}, kS1) == 0.0);
}

TEST_CASE("reconstruction identity of decompose") {
  subsel::Rng rng(31);
  for (int rep = 0; rep < 100; ++rep) {
    const int dim = 3 + rng.uniform_int(0, 5);
    std::vector<Vec> elems;
    const int m = rng.uniform_int(0, dim - 1);
    for (int i = 0; i < m; ++i) elems.push_back(rng.unit_vec(dim));
    const Vec t = rng.unit_vec(dim);
    const auto d = subsel::decompose(t, elems);
    Vec rebuilt = Vec::Zero(dim);
    if (d.orthogonal) rebuilt += std::sin(d.angle) * *d.orthogonal;
    if (d.parallel) rebuilt += std::cos(d.angle) * *d.parallel;
    CHECK((t - rebuilt).norm() <= 1e-9);
    if (d.orthogonal && d.parallel) {
      CHECK(std::abs(d.orthogonal->dot(*d.parallel)) <= 1e-9);
    }
  }
}

TEST_CASE("monotonicity of the projection objective") {
  subsel::Rng rng(32);
  for (int rep = 0; rep < 200; ++rep) {
    const int dim = 4 + rng.uniform_int(0, 4);
    const int total = rng.uniform_int(1, dim + 2);
    std::vector<Vec> larger;
    for (int i = 0; i < total; ++i) larger.push_back(rng.unit_vec(dim));
    std::vector<Vec> smaller(larger.begin(),
                             larger.begin() + rng.uniform_int(0, total));
    const Vec eta = rng.gaussian_vec(dim);
    CHECK(subsel::project_norm_sq(eta, smaller) <=
          subsel::project_norm_sq(eta, larger) + 1e-9);
  }
}

TEST_CASE("marginal gain matches the Pythagoras identity") {
  subsel::Rng rng(33);
  for (int rep = 0; rep < 200; ++rep) {
    const int dim = 4 + rng.uniform_int(0, 4);
    std::vector<Vec> elems;
    const int m = rng.uniform_int(0, dim - 2);
    for (int i = 0; i < m; ++i) elems.push_back(rng.unit_vec(dim));
    const Vec s = rng.unit_vec(dim);
    const Vec eta = rng.gaussian_vec(dim);

    const double gain = subsel::marginal_gain(eta, elems, s);
    std::vector<Vec> with_s = elems;
    with_s.push_back(s);
    CHECK(std::abs(gain - (subsel::project_norm_sq(eta, with_s) -
                           subsel::project_norm_sq(eta, elems))) <= 1e-9);

    // f must not depend on the basis-construction order
    std::vector<Vec> reversed(with_s.rbegin(), with_s.rend());
    CHECK(std::abs(subsel::project_norm_sq(eta, with_s) -
                   subsel::project_norm_sq(eta, reversed)) <= 1e-9);
  }
}

TEST_CASE("orthonormality drift over 50 extensions") {
  subsel::Rng rng(34);
  for (int rep = 0; rep < 20; ++rep) {
    OrthoBasis b(50);
    for (int i = 0; i < 50; ++i) b.extend(rng.unit_vec(50));
    const Eigen::MatrixXd gram = b.matrix().transpose() * b.matrix();
    double off = 0.0;
    double diag = 0.0;
    for (int i = 0; i < gram.rows(); ++i) {
      for (int j = 0; j < gram.cols(); ++j) {
        if (i == j) {
          diag = std::max(diag, std::abs(gram(i, j) - 1.0));
        } else {
          off = std::max(off, std::abs(gram(i, j)));
        }
      }
    }
    CHECK(off <= 1e-10);
    CHECK(diag <= 1e-10);
  }
}

TEST_CASE("agreement with the least-squares oracle") {
  subsel::Rng rng(35);
  for (int rep = 0; rep < 200; ++rep) {
    const int dim = 3 + rng.uniform_int(0, 6);
    std::vector<Vec> elems;
    const int m = rng.uniform_int(0, dim + 1);  // may be rank deficient
    for (int i = 0; i < m; ++i) {
      if (!elems.empty() && rng.uniform() < 0.2) {
        elems.push_back(elems.front());  // duplicate on purpose
      } else {
        elems.push_back(rng.unit_vec(dim));
      }
    }
    const Vec eta = rng.gaussian_vec(dim);
    CHECK(std::abs(subsel::project_norm_sq(eta, elems) -
                   test_util::ls_objective(eta, elems)) <= 1e-9);
  }
}
