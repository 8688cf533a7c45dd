#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "vinberg/diagram.hpp"
#include "vinberg/error.hpp"
#include "vinberg/linalg.hpp"
#include "vinberg/polygon.hpp"
#include "vinberg/search.hpp"

using namespace vinberg;

#ifndef VINBERG_TEST_DATA
#define VINBERG_TEST_DATA "tests/data"
#endif

namespace {

std::vector<Root> chamber(long p, int n) { return run_search(QuadraticForm(p, n)).state.roots(); }

std::vector<std::size_t> all(std::size_t k) {
  std::vector<std::size_t> v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_SUITE("diagram") {
  TEST_CASE("edge rule") {
    CHECK(classify_edge(0, 2, 2).kind == EdgeKind::None);
    CHECK(classify_edge(-1, 2, 2).kind == EdgeKind::Simple);
    CHECK(classify_edge(-1, 2, 2).angle_denominator() == 3);
    CHECK(classify_edge(-1, 2, 1).kind == EdgeKind::Double);
    CHECK(classify_edge(-3, 2, 6).kind == EdgeKind::Sextuple);
    CHECK(classify_edge(-2, 2, 2).kind == EdgeKind::Parallel);
    CHECK(classify_edge(-5, 2, 5).kind == EdgeKind::Divergent);
    CHECK(classify_edge(-5, 2, 5).cos2 == Rational(5, 2));
    CHECK_THROWS_AS(classify_edge(1, 2, 2), Error);
    CHECK_THROWS_AS(classify_edge(-1, 5, 5), Error);
  }

  TEST_CASE("edge rule on every pair of found walls") {
    for (long p : {5, 7, 13, 23}) {
      const auto roots = chamber(p, 3);
      const auto d = build_diagram(roots, QuadraticForm(p, 3));
      for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
          const auto& e = d.edge(i, j);
          Rational c2(d.gram()(i, j) * d.gram()(i, j), d.gram()(i, i) * d.gram()(j, j));
          c2.canonicalize();
          CHECK(e.cos2 == c2);
          if (c2 > 1) CHECK(e.kind == EdgeKind::Divergent);
          if (c2 == 1) CHECK(e.kind == EdgeKind::Parallel);
          if (c2 == 0) CHECK(e.kind == EdgeKind::None);
        }
    }
  }

  TEST_CASE("subdiagram classification matches definiteness") {
    for (int n : {3, 5, 7}) {
      const auto roots = chamber(5, n);
      const auto d = build_diagram(roots, QuadraticForm(5, n));
      const auto c = census(d);
      for (const auto& s : c.elliptic) CHECK(is_positive_definite(d.gram().principal(s)));
      for (const auto& s : c.parabolic) {
        const auto g = d.gram().principal(s);
        CHECK(determinant(g) == 0);
        CHECK(is_positive_semidefinite(g));
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          std::vector<std::size_t> sub;
          for (std::size_t i = 0; i < s.size(); ++i)
            if (i != drop) sub.push_back(s[i]);
          CHECK(is_positive_definite(d.gram().principal(sub)));
        }
      }
      for (const auto& s : c.indefinite) CHECK(determinant(d.gram().principal(s)) < 0);
    }
  }

  TEST_CASE("affine marks give a null vector") {
    for (int n : {4, 6, 8}) {
      const QuadraticForm f(5, n);
      const auto roots = chamber(5, n);
      const auto d = build_diagram(roots, f);
      for (const auto& s : census(d).parabolic) {
        const auto marks = affine_marks(d, s);
        LatticeVector e(f.dimension());
        for (std::size_t i = 0; i < s.size(); ++i) {
          CHECK(marks[i] > 0);
          e += marks[i] * roots[s[i]].vector();
        }
        CHECK(norm(e, f) == 0);
      }
    }
  }

  TEST_CASE("type names") {
    CHECK(SubdiagramType::parse("A~1 B~3").name() == "A~1 B~3");
    CHECK(SubdiagramType::parse("A~1^2").rank() == 2);
    CHECK(SubdiagramType::parse("D~7").rank() == 7);
    CHECK(SubdiagramType::parse("A~4 C~2") == SubdiagramType::parse("C~2 A~4"));
  }

  TEST_CASE("classification of the whole p=5 chamber is not elliptic or affine") {
    const auto roots = chamber(5, 4);
    const auto d = build_diagram(roots, QuadraticForm(5, 4));
    CHECK(classify_subdiagram(d, all(d.size())).kind == SubdiagramKind::Other);
  }

  TEST_CASE("golden TikZ for p=5, n=2") {
    std::ifstream f(std::string(VINBERG_TEST_DATA) + "/p5_n2.tikz");
    REQUIRE(f);
    std::stringstream want;
    want << f.rdbuf();
    CHECK(render(build_diagram(chamber(5, 2), QuadraticForm(5, 2)), RenderFormat::Tikz) == want.str());
  }

  TEST_CASE("diagram JSON carries the schema version") {
    const auto j = diagram_json(build_diagram(chamber(7, 3), QuadraticForm(7, 3)));
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["nodes"].size() == 5);
    CHECK_THROWS_AS(parse_render_format("svg"), Error);
  }
}

TEST_SUITE("polygon") {
  TEST_CASE("symbols for n=2 chambers") {
    auto seq = [](long p) { return norm_angle_sequence(chamber(p, 2), QuadraticForm(p, 2)); };
    const auto s13 = seq(13);
    CHECK(s13.symbol() == "(2_4 1_2 13_inf 13_2)^2");
    CHECK(s13.rotation == 2);
    CHECK(s13.rotation_preserves_form);
    CHECK(s13.tex() == "\\left(2_41_213_{\\infty}13_2\\right)^2");
    const auto s17 = seq(17);
    CHECK(s17.symbol() == "2_4 1_2 17_inf 17_2 2_2 34_2 1_2");
    CHECK(s17.rotation == 1);
    const auto s19 = seq(19);
    CHECK(s19.symbol() == "(2_4 1_2 38_2)^2");
    CHECK(s19.rotation_preserves_form);
  }

  TEST_CASE("rotation matrix is an integral isometry permuting the walls") {
    const QuadraticForm f(13, 2);
    const auto roots = chamber(13, 2);
    const auto s = norm_angle_sequence(roots, f);
    REQUIRE(s.rotation_matrix);
    const IntMatrix& m = *s.rotation_matrix;
    CHECK(m.transpose() * f.matrix() * m == f.matrix());
  }

  TEST_CASE("invariant under cyclic relabelling of the input") {
    std::mt19937_64 rng(5);
    for (long p : {5, 7, 11, 13, 17, 19, 23}) {
      const QuadraticForm f(p, 2);
      auto roots = chamber(p, 2);
      const auto base = norm_angle_sequence(roots, f);
      for (int t = 0; t < 5; ++t) {
        std::rotate(roots.begin(), roots.begin() + 1, roots.end());
        std::shuffle(roots.begin(), roots.end(), rng);
        CHECK(equivalent(norm_angle_sequence(roots, f), base));
      }
    }
  }

  TEST_CASE("parse, reversal and equivalence") {
    const auto a = NormAngleSequence::parse("(2_4 1_2 38_2)^2");
    CHECK(a.entries.size() == 6);
    CHECK(a.rotation == 2);
    CHECK(a.symbol() == "(2_4 1_2 38_2)^2");
    const auto b = NormAngleSequence::parse("2_4 1_2 5_inf 5_2");
    CHECK(equivalent(b, NormAngleSequence::parse("5_2 2_4 1_2 5_inf")));
    // Walking the other way round keeps each angle between the same walls.
    CHECK(equivalent(b, NormAngleSequence::parse("1_4 2_2 5_inf 5_2")));
    CHECK_FALSE(equivalent(b, NormAngleSequence::parse("5_2 5_inf 1_2 2_4")));
    CHECK_FALSE(equivalent(b, NormAngleSequence::parse("2_4 1_2 5_2 5_inf")));
    CHECK_THROWS_AS(NormAngleSequence::parse("2_4 (1_2"), Error);
    CHECK_THROWS_AS(NormAngleSequence::parse("2_1"), Error);
    CHECK_THROWS_AS(NormAngleSequence::parse(""), Error);
  }

  TEST_CASE("open chains are rejected") {
    const QuadraticForm f(5, 2);
    auto roots = chamber(5, 2);
    roots.pop_back();
    CHECK_THROWS_AS(norm_angle_sequence(roots, f), Error);
  }
}
