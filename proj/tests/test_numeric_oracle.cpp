#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "symrig/numeric_oracle.hpp"
#include "symrig/sparsity.hpp"

using namespace symrig;

namespace {

constexpr double kPi = 3.14159265358979323846;

Arc exact_arc(int from, int to, unsigned order, long long exponent,
              long long tx = 0, long long ty = 0) {
  return Arc{from, to,
             Isometry::exact(order, exponent, Rational(tx), Rational(ty))};
}

// Three vertices over the quarter-turn field: two rotation loops with
// distinct centers at the first vertex, a path onward, and a back arc.
GainGraph lift_demo() {
  return GainGraph(3,
                   {exact_arc(0, 0, 4, 1, 1, 1), exact_arc(0, 0, 4, 1, 1, -1),
                    exact_arc(0, 1, 4, 0), exact_arc(1, 2, 4, 1),
                    exact_arc(2, 1, 4, 3, 1, -1)},
                   4, true);
}

GainGraph quarter_turn_pair() {
  return GainGraph(
      2, {exact_arc(0, 1, 4, 0), exact_arc(0, 0, 4, 1), exact_arc(1, 1, 4, 1)},
      4, true);
}

GainGraph half_turn_pair() {
  return GainGraph(2,
                   {exact_arc(0, 1, 2, 0), exact_arc(0, 1, 2, 1),
                    exact_arc(0, 0, 2, 1), exact_arc(1, 1, 2, 1)},
                   2, true);
}

GainGraph wallpaper(bool rigid) {
  const long long loop_exp = rigid ? 1 : 0;
  return GainGraph(3,
                   {exact_arc(0, 0, 4, loop_exp, 1, 0),
                    exact_arc(1, 1, 4, loop_exp, 0, 1), exact_arc(2, 2, 4, 1),
                    exact_arc(0, 1, 4, 0), exact_arc(0, 2, 4, 0),
                    exact_arc(1, 2, 4, 0)},
                   4, true);
}

Eigen::MatrixXcd triangle_incidence() {
  Eigen::MatrixXcd m(3, 3);
  m.setZero();
  m(0, 0) = 1;
  m(0, 1) = -1;
  m(1, 1) = 1;
  m(1, 2) = -1;
  m(2, 0) = 1;
  m(2, 2) = -1;
  return m;
}

}  // namespace

TEST_SUITE("numeric_oracle") {

TEST_CASE("exact rank by field elimination") {
  CycloMatrix id2(2, 2);
  id2.at(0, 0) = CycloRat(Rational(1));
  id2.at(1, 1) = CycloRat(Rational(1));
  CHECK(exact_rank(id2) == 2);
  CHECK(exact_rank(CycloMatrix(3, 2)) == 0);

  // Proportional rows over the quarter-turn field collapse to rank one.
  CycloMatrix prop(2, 4);
  prop.at(0, 3) = -CycloRat(Rational(1));
  prop.at(1, 3) = -CycloRat::zeta(4);
  CHECK(exact_rank(prop) == 1);
  prop.at(1, 0) = CycloRat(Rational(1));
  CHECK(exact_rank(prop) == 2);
}

TEST_CASE("row selection") {
  CycloMatrix m(3, 1);
  m.at(0, 0) = CycloRat(Rational(1));
  m.at(2, 0) = CycloRat(Rational(2));
  const CycloMatrix sub = row_submatrix(m, 0b101u);
  CHECK(sub.rows == 2);
  CHECK(sub.cols == 1);
  CHECK(sub.at(0, 0) == CycloRat(Rational(1)));
  CHECK(sub.at(1, 0) == CycloRat(Rational(2)));
  CHECK_THROWS_AS(row_submatrix(m, 0b1000u), std::invalid_argument);
}

TEST_CASE("symbol matrix entries") {
  const GainGraph g = lift_demo();
  const CycloMatrix m = build_m_exact(g);
  REQUIRE(m.rows == 5);
  REQUIRE(m.cols == 3);
  // Loop rows carry 1 - t(rotation part).
  const CycloRat i = CycloRat::zeta(4);
  CHECK(m.at(0, 0) == CycloRat(Rational(1)) - i);
  CHECK(m.at(1, 0) == CycloRat(Rational(1)) - i);
  // Ordinary arc: 1 at the source, -t at the target.
  CHECK(m.at(3, 1) == CycloRat(Rational(1)));
  CHECK(m.at(3, 2) == -i);
  // Back arc with exponent three: the target entry is -zeta^3 = +i.
  CHECK(m.at(4, 2) == CycloRat(Rational(1)));
  CHECK(m.at(4, 1) == i);

  const CycloMatrix ml = build_ml_exact(g);
  REQUIRE(ml.rows == 5);
  REQUIRE(ml.cols == 4);
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 3; ++c) CHECK(ml.at(r, c) == m.at(r, c));
  }
  // Final column: minus the translation part.
  CHECK(ml.at(0, 3) == -(CycloRat(Rational(1)) + i));
  CHECK(ml.at(1, 3) == -(CycloRat(Rational(1)) - i));
  CHECK(ml.at(2, 3) == CycloRat());
  CHECK(ml.at(4, 3) == -(CycloRat(Rational(1)) - i));

  CHECK(exact_rank(m) == 3);
  CHECK(exact_rank(ml) == 4);
  CHECK_THROWS_AS(
      build_m_exact(GainGraph(
          1, {Arc{0, 0, Isometry::numeric(kPi / 2, {0, 0})}}, 1, false)),
      std::invalid_argument);
}

TEST_CASE("symbol ranks decompose as frame rank plus circuit content") {
  const std::vector<GainGraph> graphs{lift_demo(), quarter_turn_pair(),
                                      half_turn_pair(), wallpaper(false),
                                      wallpaper(true)};
  for (const GainGraph& g : graphs) {
    const CycloMatrix m = build_m_exact(g);
    const CycloMatrix ml = build_ml_exact(g);
    const ArcSet all = g.all_arcs();
    for (ArcSet s = 0; s <= all; ++s) {
      const int frame = frame_rank(g, s, true);
      CHECK(exact_rank(row_submatrix(m, s)) == frame);
      const int bump = is_lift_balanced(g, s) ? 0 : 1;
      CHECK(exact_rank(row_submatrix(ml, s)) == frame + bump);
    }
  }
}

TEST_CASE("exact and floating symbol matrices coincide") {
  for (const GainGraph& g : {lift_demo(), wallpaper(true)}) {
    CHECK((to_dense(build_m_exact(g)) - build_m(g)).norm() < 1e-12);
    CHECK((to_dense(build_ml_exact(g)) - build_ml(g)).norm() < 1e-12);
  }
}

TEST_CASE("singular-value rank with a relative cut") {
  Eigen::MatrixXd m(2, 2);
  m << 1, 0, 0, 1e-12;
  const RankEstimate r = numeric_rank(m);
  CHECK(r.rank == 1);
  CHECK(r.smallest_kept == doctest::Approx(1.0));
  CHECK(r.largest_cut == doctest::Approx(1e-12));
  CHECK(r.tol == kDefaultRankTol);

  Eigen::MatrixXd full(2, 2);
  full << 1, 2, 3, 4;
  CHECK(numeric_rank(full).rank == 2);
  const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(3, 2);
  CHECK(numeric_rank(zero).rank == 0);

  Eigen::MatrixXcd c(2, 2);
  c.setZero();
  c(0, 0) = {2.0, 0.0};
  c(1, 1) = {0.0, 3e-9};
  CHECK(numeric_rank(c).rank == 1);
  CHECK(numeric_rank(c, 1e-12).rank == 2);
}

TEST_CASE("portable sampler is deterministic and bounded") {
  UniformSampler a(42);
  UniformSampler b(42);
  UniformSampler c(43);
  bool all_same = true;
  bool any_diff = false;
  for (int i = 0; i < 100; ++i) {
    const double x = a.next();
    CHECK(x >= -1.0);
    CHECK(x < 1.0);
    all_same = all_same && (x == b.next());
    any_diff = any_diff || (x != c.next());
  }
  CHECK(all_same);
  CHECK(any_diff);
}

TEST_CASE("orbit lengths match their analytic Jacobian") {
  // The length map is quadratic, so central differences are exact up to
  // roundoff.
  const std::vector<GainGraph> graphs{
      quarter_turn_pair(), lift_demo(), wallpaper(false),
      GainGraph(2,
                {Arc{0, 1, Isometry::numeric(0.3, {0.25, -0.5})},
                 Arc{1, 1, Isometry::numeric(1.1, {0.0, 0.75})}},
                1, false)};
  UniformSampler sampler(9);
  for (const GainGraph& g : graphs) {
    Eigen::VectorXd p(2 * g.vertex_count());
    for (int i = 0; i < p.size(); ++i) p[i] = sampler.next();
    const Eigen::MatrixXd jac = orbit_jacobian(g, p);
    REQUIRE(jac.rows() == g.arc_count());
    REQUIRE(jac.cols() == p.size());
    const double h = 1e-6;
    for (int k = 0; k < p.size(); ++k) {
      Eigen::VectorXd hi = p;
      Eigen::VectorXd lo = p;
      hi[k] += h;
      lo[k] -= h;
      const Eigen::VectorXd fd =
          (orbit_lengths(g, hi) - orbit_lengths(g, lo)) / (2 * h);
      CHECK((fd - jac.col(k)).lpNorm<Eigen::Infinity>() < 1e-7);
    }
  }
  CHECK_THROWS_AS(orbit_lengths(graphs[0], Eigen::VectorXd::Zero(3)),
                  std::invalid_argument);
}

TEST_CASE("generic ranks of the reference graphs") {
  CHECK(generic_rank(quarter_turn_pair()).rank == 3);
  CHECK(generic_rank(half_turn_pair()).rank == 3);
  CHECK(generic_rank(lift_demo()).rank == 5);
  CHECK(generic_rank(wallpaper(false)).rank == 4);
  CHECK(generic_rank(wallpaper(true)).rank == 6);

  // Identity-gain triangle and complete graph over the trivial group.
  const GainGraph triangle(
      3, {exact_arc(0, 1, 1, 0), exact_arc(1, 2, 1, 0), exact_arc(0, 2, 1, 0)},
      1, true);
  CHECK(generic_rank(triangle).rank == 3);

  // Translation loops contribute constant lengths: zero rows.
  const GainGraph trans(
      1, {exact_arc(0, 0, 1, 0, 1, 0), exact_arc(0, 0, 1, 0, 0, 1)}, 1, true);
  CHECK(generic_rank(trans).rank == 0);

  // Rotation loops about a common center give proportional rows.
  const GainGraph same_center(
      1, {exact_arc(0, 0, 4, 1), exact_arc(0, 0, 4, 2)}, 4, true);
  CHECK(generic_rank(same_center).rank == 1);
  const GainGraph two_centers(
      1, {exact_arc(0, 0, 4, 1, 1, 1), exact_arc(0, 0, 4, 1, 1, -1)}, 4, true);
  CHECK(generic_rank(two_centers).rank == 2);

  CHECK(generic_rank(triangle, ArcSet{0}).rank == 0);
  CHECK_THROWS_AS(generic_rank(triangle, ArcSet{0b1111u}),
                  std::invalid_argument);
}

TEST_CASE("generic rank agrees with the count rank on every subset") {
  const std::vector<GainGraph> graphs{quarter_turn_pair(), half_turn_pair(),
                                      wallpaper(false), wallpaper(true)};
  for (const GainGraph& g : graphs) {
    const ArcSet all = g.all_arcs();
    for (ArcSet s = 1; s <= all; ++s) {
      CHECK(generic_rank(g, s).rank == gain_rank(g, s));
    }
  }
  for (int t = 0; t < 25; ++t) {
    const unsigned pick = static_cast<unsigned>(1 + (t % 3));
    const unsigned order = pick == 3 ? 4 : pick;
    const GainGraph g = testsupport::random_mixed_graph(
        8000 + static_cast<unsigned long long>(t), order, 3, 5);
    CHECK(generic_rank(g).rank == gain_rank(g, g.all_arcs()));
  }
}

TEST_CASE("coordinatewise-product rank reproduces the orbit rank") {
  for (const GainGraph& g :
       {quarter_turn_pair(), half_turn_pair(), lift_demo(), wallpaper(true)}) {
    const auto [u, v] = ml_affine_space(g);
    CHECK(u.map.rows() == g.arc_count());
    CHECK(u.map.cols() == g.vertex_count());
    // The holomorphic side is exactly the symbol matrix with its final
    // column split off as the offset.
    const Eigen::MatrixXcd ml = build_ml(g);
    CHECK((u.map - ml.leftCols(g.vertex_count())).norm() < 1e-12);
    CHECK((u.offset - ml.col(g.vertex_count())).norm() < 1e-12);
    const RankEstimate had = hadamard_rank(u, v, full_mask(g.arc_count()));
    CHECK(had.rank == generic_rank(g).rank);
  }
}

TEST_CASE("product-rank probes report both counts") {
  const Eigen::MatrixXcd inc = triangle_incidence();
  const ProbeRecord rec = conjecture_probe({inc, inc}, full_mask(3));
  CHECK(rec.d == 2);
  CHECK(rec.coords == full_mask(3));
  CHECK(rec.numeric == 3);
  CHECK(rec.combinatorial == 3);
  CHECK(rec.agree);
  CHECK_THROWS_AS(conjecture_probe({inc}, full_mask(3)),
                  std::invalid_argument);
}

TEST_CASE("covering fragments of a quarter-turn graph") {
  const Framework fw = expand_covering(quarter_turn_pair(), 1.0, 5);
  REQUIRE(fw.labels.size() == 8);
  CHECK(fw.edges.size() == 12);
  CHECK(fw.coords.size() == 8);
  CHECK(fw.element_index.size() == 8);
  CHECK(fw.labels[0] == "g0:0");
  // The group is rotations about the origin, so every copy of a base vertex
  // sits at the same distance from it.
  for (std::size_t i = 0; i < fw.coords.size(); ++i) {
    const std::size_t base = static_cast<std::size_t>(fw.base_vertex[i]);
    const double ni = std::hypot(fw.coords[i][0], fw.coords[i][1]);
    const double nb = std::hypot(fw.coords[base][0], fw.coords[base][1]);
    CHECK(ni == doctest::Approx(nb).epsilon(1e-9));
  }
  // Determinism in the seed.
  const Framework fw2 = expand_covering(quarter_turn_pair(), 1.0, 5);
  CHECK(fw.coords == fw2.coords);
  CHECK(fw.edges == fw2.edges);
}

TEST_CASE("covering fragments clip translations at the bound") {
  // A single unit translation loop unrolls to a path of copies.
  const GainGraph line(1, {exact_arc(0, 0, 1, 0, 1, 0)}, 1, true);
  const Framework fw = expand_covering(line, 2.5);
  CHECK(fw.labels.size() == 5);  // translations by -2..2
  CHECK(fw.edges.size() == 4);
  CHECK_THROWS_AS(expand_covering(line, 1e6), LimitExceeded);
  // Trivial groups keep the plain vertex names.
  const GainGraph triangle(
      3, {exact_arc(0, 1, 1, 0), exact_arc(1, 2, 1, 0), exact_arc(0, 2, 1, 0)},
      1, true);
  const Framework base = expand_covering(triangle, 1.0);
  CHECK(base.labels == std::vector<std::string>{"0", "1", "2"});
  CHECK(base.edges.size() == 3);
  CHECK_THROWS_AS(
      expand_covering(GainGraph(1, {Arc{0, 0, Isometry::numeric(1, {0, 0})}},
                                1, false),
                      1.0),
      std::invalid_argument);
}

}  // TEST_SUITE
