#include <doctest.h>

#include "vinberg/cone.hpp"
#include "vinberg/diagram.hpp"
#include "vinberg/finite_volume.hpp"
#include "vinberg/search.hpp"

using namespace vinberg;

namespace {

Rational pair(const std::vector<Rational>& x, const Root& r, const QuadraticForm& f) {
  Rational s = -Rational(f.p()) * x[0] * Rational(r.vector()[0]);
  for (std::size_t i = 1; i < x.size(); ++i) s += x[i] * Rational(r.vector()[i]);
  return s;
}

}  // namespace

TEST_SUITE("finite_volume") {
  TEST_CASE("prefixes of a found chamber have infinite volume, the chamber finite") {
    for (auto [p, n] : std::vector<std::pair<long, int>>{{5, 2}, {5, 4}, {5, 6}, {7, 3}, {13, 2}, {11, 3}}) {
      CAPTURE(p);
      CAPTURE(n);
      const QuadraticForm f(p, n);
      const auto roots = run_search(f).state.roots();
      for (std::size_t k = static_cast<std::size_t>(n); k <= roots.size(); ++k) {
        const std::vector<Root> prefix(roots.begin(), roots.begin() + static_cast<long>(k));
        const auto d = build_diagram(prefix, f);
        const auto v = finite_volume(d);  // throws if the deciders disagree
        CHECK(v.finite == (k == roots.size()));
        CHECK(v.cross_check.finite == v.finite);
      }
    }
  }

  TEST_CASE("cone witnesses satisfy the defining system exactly") {
    int witnesses = 0;
    for (auto [p, n] : std::vector<std::pair<long, int>>{{5, 4}, {5, 5}, {7, 3}, {13, 2}, {17, 2}}) {
      const QuadraticForm f(p, n);
      const auto roots = run_search(f).state.roots();
      for (std::size_t k = static_cast<std::size_t>(n); k < roots.size(); ++k) {
        const std::vector<Root> prefix(roots.begin(), roots.begin() + static_cast<long>(k));
        const auto d = build_diagram(prefix, f);
        const auto c = census(d);
        for (const auto& s : c.indefinite) {
          const auto cone = cone_fixed_set(prefix, s, f);
          if (cone.zero) continue;
          REQUIRE(cone.witness);
          const auto& x = *cone.witness;
          CHECK(std::any_of(x.begin(), x.end(), [](const Rational& a) { return a != 0; }));
          for (auto i : s) CHECK(pair(x, prefix[i], f) == 0);
          for (const auto& r : prefix) CHECK(pair(x, r, f) <= 0);
          ++witnesses;
        }
      }
    }
    CHECK(witnesses > 0);
  }

  TEST_CASE("the sufficient condition implies a zero cone") {
    int fired = 0;
    for (auto [p, n] : std::vector<std::pair<long, int>>{{5, 3}, {5, 5}, {5, 7}, {7, 3}, {11, 3}, {13, 2}}) {
      const QuadraticForm f(p, n);
      const auto roots = run_search(f).state.roots();
      const auto d = build_diagram(roots, f);
      const auto c = census(d);
      for (const auto& s : c.indefinite) {
        if (!sufficient_condition_witness(d, c, s)) continue;
        ++fired;
        CHECK(cone_fixed_set(roots, s, f).zero);
      }
    }
    CHECK(fired > 0);
  }

  TEST_CASE("condition (a) failure names a short affine piece") {
    const QuadraticForm f(7, 4);
    SearchOptions o;
    o.stop_rule = StopRule::ExhaustBudget;
    o.budget.max_roots = 6;
    const auto roots = run_search(f, o).state.roots();
    const auto d = build_diagram(roots, f);
    const auto a = check_condition_a(d);
    CHECK_FALSE(a.pass);
    REQUIRE(a.null_vector);
    CHECK(norm(*a.null_vector, f) == 0);
  }

  TEST_CASE("double description on a small cone") {
    // x <= 0, y <= 0 in the plane: rays (-1, 0) and (0, -1).
    const auto g = double_description(IntMatrix{{1, 0}, {0, 1}});
    CHECK(g.lineality.empty());
    CHECK(g.rays.size() == 2);
    const auto h = double_description(IntMatrix{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    CHECK(h.trivial());
    const auto l = double_description(IntMatrix{{1, 0}});
    CHECK(l.lineality.size() == 1);
  }
}
