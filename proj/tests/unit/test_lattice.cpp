#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "vinberg/error.hpp"
#include "vinberg/lattice.hpp"
#include "vinberg/search.hpp"

using namespace vinberg;

namespace {

LatticeVector random_vector(std::mt19937_64& rng, std::size_t dim, long r) {
  std::uniform_int_distribution<long> d(-r, r);
  LatticeVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = d(rng);
  return v;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("form construction rejects bad parameters") {
    CHECK_THROWS_AS(QuadraticForm(4, 3), Error);
    CHECK_THROWS_AS(QuadraticForm(3, 3), Error);
    CHECK_THROWS_AS(QuadraticForm(5, 1), Error);
    CHECK_NOTHROW(QuadraticForm(23, 2));
  }

  TEST_CASE("inner product is symmetric and bilinear") {
    std::mt19937_64 rng(7);
    for (long p : {5, 13, 23}) {
      const QuadraticForm f(p, 4);
      for (int t = 0; t < 200; ++t) {
        const auto u = random_vector(rng, 5, 50), v = random_vector(rng, 5, 50), w = random_vector(rng, 5, 50);
        const Integer a = std::uniform_int_distribution<long>(-9, 9)(rng);
        CHECK(inner_product(u, v, f) == inner_product(v, u, f));
        CHECK(inner_product(a * u + w, v, f) == a * inner_product(u, v, f) + inner_product(w, v, f));
        CHECK(inner_product(u, v, f) == oracle::form(u, v, p));
      }
    }
  }

  TEST_CASE("worked norms") {
    const QuadraticForm f(5, 2);
    CHECK(norm(LatticeVector{2, 5, 0}, f) == 5);
    CHECK(inner_product(LatticeVector{2, 5, 0}, LatticeVector{2, 5, 0}, f) == 5);
    CHECK(norm(LatticeVector{1, 0, 0}, f) == -5);
  }

  TEST_CASE("admissible norms divide 2p and contain every norm found by brute force") {
    for (long p : {5, 7, 11, 13, 23}) {
      const QuadraticForm f(p, 3);
      const auto adm = admissible_root_norms(f);
      for (const auto& m : adm) CHECK(divides(m, Integer(2 * p)));
      std::set<Integer> seen;
      for (long k0 = 0; k0 <= 6; ++k0) {
        std::vector<std::vector<long>> spatial;
        std::vector<long> cur;
        oracle::all_vectors(4, 2 * p + p * k0 * k0, cur, spatial);
        for (const auto& s : spatial) {
          LatticeVector v{k0, s[0], s[1], s[2]};
          if (oracle::is_root(v, p)) {
            CHECK(is_root(v, f));
            seen.insert(norm(v, f));
          }
        }
      }
      for (const auto& m : seen) CHECK(std::find(adm.begin(), adm.end(), m) != adm.end());
    }
    CHECK(admissible_root_norms(QuadraticForm(23, 3)) == std::vector<Integer>{1, 2, 23, 46});
  }

  TEST_CASE("is_root agrees with the reflection definition") {
    std::mt19937_64 rng(11);
    for (long p : {5, 7, 19}) {
      const QuadraticForm f(p, 3);
      for (int t = 0; t < 3000; ++t) {
        const auto v = random_vector(rng, 4, 12);
        CHECK(is_root(v, f) == oracle::is_root(v, p));
      }
    }
    CHECK(is_root(LatticeVector{3, 5, 5}, QuadraticForm(5, 2)));
    CHECK_FALSE(is_root(LatticeVector{2, 4, 2}, QuadraticForm(5, 2)));
    CHECK(root_defect(LatticeVector{0, 0, 0}, QuadraticForm(5, 2)) != RootDefect::None);
  }

  TEST_CASE("reflections in 1000 random roots preserve the lattice and the form") {
    const QuadraticForm f(5, 4);
    SearchOptions o;
    o.stop_rule = StopRule::ExhaustBudget;
    o.budget.max_height = 10;
    const auto walls = run_search(f, o).state.roots();
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> pick(0, walls.size() - 1);
    int checked = 0;
    while (checked < 1000) {
      // A random image of a wall under the reflection group is again a root.
      LatticeVector x = walls[pick(rng)].vector();
      const int len = std::uniform_int_distribution<int>(1, 6)(rng);
      for (int i = 0; i < len; ++i) x = reflect(x, walls[pick(rng)], f);
      REQUIRE(oracle::is_root(x, 5));
      const Root r(x, f);
      for (std::size_t i = 0; i < 5; ++i) {
        const auto b = LatticeVector::basis(5, i);
        const auto img = reflect(b, r, f);
        for (std::size_t j = 0; j < 5; ++j)
          CHECK(inner_product(img, reflect(LatticeVector::basis(5, j), r, f), f) ==
                inner_product(b, LatticeVector::basis(5, j), f));
      }
      CHECK(reflect(x, r, f) == -x);
      ++checked;
    }
  }

  TEST_CASE("initial roots") {
    const auto r = initial_roots(QuadraticForm(5, 3));
    REQUIRE(r.size() == 3);
    CHECK(r[0].vector() == LatticeVector{0, -1, 1, 0});
    CHECK(r[2].vector() == LatticeVector{0, 0, 0, -1});
    CHECK_THROWS_AS(Root(LatticeVector{1, 1, 0, 0}, QuadraticForm(5, 3)), Error);
  }

  TEST_CASE("vector notation round trip") {
    const auto v = LatticeVector::parse("2v0+5v1-v3", 4);
    CHECK(v == LatticeVector{2, 5, 0, -1});
    CHECK(LatticeVector::parse(v.to_string(), 4) == v);
  }
}
