#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "vinberg/certificates.hpp"
#include "vinberg/classify.hpp"
#include "vinberg/error.hpp"
#include "vinberg/polynomial.hpp"

using namespace vinberg;

namespace {

// The affine roots orthogonal to e after the search has run far enough.
std::vector<Root> affine_roots_at(const QuadraticForm& f, const LatticeVector& e) {
  SearchOptions o;
  o.stop_rule = StopRule::ExhaustBudget;
  std::vector<Root> out;
  o.interrupt = [&](const SearchState& s) {
    const auto roots = s.roots();
    for (const auto& ip : census(build_diagram(roots, f)).ideal_points)
      if (ip.e == e && !ip.affine_part.empty()) {
        out.clear();
        for (auto i : ip.affine_part) out.push_back(roots[i]);
        return true;
      }
    return false;
  };
  run_search(f, o);
  return out;
}

std::vector<Integer> random_class(std::mt19937_64& rng, std::size_t k) {
  std::uniform_int_distribution<long> d(-3, 3);
  std::vector<Integer> c(k);
  do {
    for (auto& x : c) x = d(rng);
  } while (std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; }));
  return c;
}

}  // namespace

TEST_SUITE("certificates") {
  TEST_CASE("affine null vectors") {
    const QuadraticForm f13(13, 3);
    const std::vector<Root> a1{Root(LatticeVector{0, 0, 0, -1}, f13), Root(LatticeVector{1, 3, 2, 1}, f13)};
    CHECK(affine_null_vector(a1, f13) == LatticeVector{1, 3, 2, 0});

    const QuadraticForm f7(7, 4);
    const LatticeVector e7{1, 2, 1, 1, 1};
    const auto aff = affine_roots_at(f7, e7);
    REQUIRE(aff.size() == 3);
    const auto e = affine_null_vector(aff, f7);
    CHECK(e == e7);
    CHECK(norm(e, f7) == 0);
    CHECK(is_primitive(e));
    for (const auto& r : aff) CHECK(inner_product(r.vector(), e, f7) == 0);

    CHECK_THROWS_AS(affine_null_vector({Root(LatticeVector{0, 0, 0, -1}, f13)}, f13), Error);
  }

  TEST_CASE("quotient lattice") {
    for (auto [p, n, e] : std::vector<std::tuple<long, int, LatticeVector>>{
             {13, 3, {1, 3, 2, 0}}, {7, 4, {1, 2, 1, 1, 1}}, {5, 9, {2, 3, 2, 1, 1, 1, 1, 1, 1, 1}}}) {
      const QuadraticForm f(p, n);
      const QuotientLattice q(e, f);
      CHECK(q.rank() == static_cast<std::size_t>(n) - 1);
      CHECK(is_positive_definite(q.gram()));
      CHECK(determinant(q.gram()) > 0);
      CHECK(q.complement_basis().front() == e);
      for (const auto& b : q.complement_basis()) CHECK(inner_product(b, e, f) == 0);
      std::mt19937_64 rng(1);
      for (int t = 0; t < 50; ++t) {
        const auto c = random_class(rng, q.rank());
        const auto x = q.lift(c);
        CHECK(q.project(x) == c);
        CHECK(q.project(x + Integer(t) * e) == c);
        CHECK(q.norm(c) == norm(x, f));
      }
    }
    const QuotientLattice q13({1, 3, 2, 0}, QuadraticForm(13, 3));
    CHECK(q13.norm(*q13.project({3, 13, 0, 0})) == 52);
    CHECK(q13.norm(*q13.project({0, 2, -3, 0})) == 13);
    CHECK_THROWS_AS(QuotientLattice({1, 1, 0, 0}, QuadraticForm(13, 3)), Error);
    CHECK_THROWS_AS(QuotientLattice({2, 6, 4, 0}, QuadraticForm(13, 3)), Error);
  }

  TEST_CASE("root class scan agrees with a wide residue scan") {
    std::mt19937_64 rng(42);
    for (auto [p, n, e] : std::vector<std::tuple<long, int, LatticeVector>>{
             {13, 3, {1, 3, 2, 0}}, {7, 4, {1, 2, 1, 1, 1}}, {11, 4, {1, 3, 1, 1, 0}}, {5, 9, {2, 3, 2, 1, 1, 1, 1, 1, 1, 1}}}) {
      const QuadraticForm f(p, n);
      const QuotientLattice q(e, f);
      for (int t = 0; t < 60; ++t) {
        const auto c = random_class(rng, q.rank());
        const auto m = q.norm(c);
        if (m > 4 * p) continue;
        bool wide = false;
        const long mm = to_long(m);
        const auto r = q.lift(c);
        for (long s = -10 * mm; s <= 10 * mm && !wide; ++s) wide = oracle::is_root(r + Integer(s) * e, p);
        CHECK(is_root_class(c, q) == wide);
      }
    }
  }

  TEST_CASE("named classes of the p=5, n=9 quotient are not root classes") {
    const QuadraticForm f(5, 9);
    const QuotientLattice q({2, 3, 2, 1, 1, 1, 1, 1, 1, 1}, f);
    const auto f2 = q.project(LatticeVector{0, 0, 1, -2, 0, 0, 0, 0, 0, 0});
    REQUIRE(f2);
    CHECK(q.norm(*f2) == 5);
    CHECK_FALSE(is_root_class(*f2, q));
    const auto r = scan_root_class(*f2, q);
    CHECK(r.defect == RootDefect::Divisibility);
    const auto root = q.project(LatticeVector{0, 0, 0, 0, 0, 0, 0, 0, 1, -1});
    REQUIRE(root);
    CHECK(is_root_class(*root, q));
  }

  TEST_CASE("short vectors are complete") {
    std::mt19937_64 rng(9);
    for (auto [p, n, e] : std::vector<std::tuple<long, int, LatticeVector>>{
             {13, 3, {1, 3, 2, 0}}, {7, 4, {1, 2, 1, 1, 1}}, {11, 4, {1, 3, 1, 1, 0}}, {17, 3, {1, 3, 2, 2}}}) {
      const QuotientLattice q(e, QuadraticForm(p, n));
      const auto got = short_vectors(q.gram(), 2 * p);
      std::set<std::vector<Integer>> canon;
      for (auto v : got) {
        auto neg = v;
        for (auto& x : neg) x = -x;
        canon.insert(std::max(v, neg));
      }
      CHECK(canon.size() == got.size());
      CHECK(canon == oracle::brute_short_vectors(q.gram(), 2 * p));
    }
    const IntMatrix g{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};  // A3
    CHECK(short_vectors(g, 2).size() == 6);
  }

  TEST_CASE("root generation") {
    const QuotientLattice q7({1, 2, 1, 1, 1}, QuadraticForm(7, 4));
    const auto g = generated_by_roots(q7);
    CHECK_FALSE(g.generated);
    CHECK(g.span.rank == 2);
    CHECK_FALSE(g.witnesses.empty());
    for (const auto& w : g.witnesses) CHECK_FALSE(is_root_class(w, q7));
    // Root classes plus witnesses generate everything.
    auto gens = g.span.classes;
    gens.insert(gens.end(), g.witnesses.begin(), g.witnesses.end());
    CHECK(sublattice_index(gens, q7.rank()) == 1);

    const QuotientLattice q13({1, 3, 2, 0}, QuadraticForm(13, 3));
    const auto g13 = generated_by_roots(q13);
    CHECK(g13.span.rank == 2);

    CHECK(sublattice_index({{2, 0}, {0, 3}}, 2) == 6);
    CHECK(sublattice_index({{1, 1}}, 2) == 0);
    CHECK(order_modulo(std::vector<Integer>{1, 0}, {{2, 0}, {0, 3}}, 2) == 2);
  }

  TEST_CASE("ideal-vertex obstructions") {
    const QuadraticForm f(7, 4);
    const LatticeVector e{1, 2, 1, 1, 1};
    const auto c = ideal_vertex_failure(e, affine_roots_at(f, e), f);
    CHECK(c.valid());
    CHECK(c.affine_type == SubdiagramType::parse("A~2"));
    CHECK(c.complement_norm() == 21);
    CHECK(c.glue_order() == 3);
    for (const auto& w : c.witnesses) CHECK_FALSE(w.scan.root);
    CHECK(verify_certificate(certificate_json(c)));

    // Rank n-1 root classes: no obstruction at this null vector.
    const QuadraticForm f13(13, 3);
    const LatticeVector e13{1, 3, 2, 0};
    CHECK_FALSE(ideal_vertex_failure(e13, affine_roots_at(f13, e13), f13).valid());
  }

  TEST_CASE("tampered certificates are rejected") {
    const QuadraticForm f(7, 4);
    const LatticeVector e{1, 2, 1, 1, 1};
    const auto c = ideal_vertex_failure(e, affine_roots_at(f, e), f);
    const Json good = certificate_json(c);
    REQUIRE(verify_certificate(good));

    // Glue witness replaced by an actual root lying in e^perp.
    Json bad = good;
    const LatticeVector root{0, 0, 0, -1, 1};
    REQUIRE(inner_product(root, e, f) == 0);
    for (auto& w : bad["payload"]["witnesses"])
      if (w["role"] == "glue") {
        w["vector"] = vector_json(root);
        w["norm"] = 2;
      }
    CHECK_FALSE(verify_certificate(bad));

    Json wrong_e = good;
    wrong_e["payload"]["null_vector"] = vector_json(LatticeVector{1, 3, 1, 1, 0});
    CHECK_FALSE(verify_certificate(wrong_e));

    Json wrong_norm = good;
    wrong_norm["payload"]["decomposition"]["complement_norm"] = 22;
    CHECK_FALSE(verify_certificate(wrong_norm));

    Json missing = good;
    missing["payload"].erase("witnesses");
    CHECK_THROWS_AS(check_certificate(missing), Error);

    Json sym = classify(23, 3).certificate;
    REQUIRE(verify_certificate(sym));
    sym["payload"]["matrix"][0][0] = 784;
    CHECK_FALSE(verify_certificate(sym));

    Json refl = classify(5, 4).certificate;
    REQUIRE(verify_certificate(refl));
    refl["payload"]["roots"].erase(refl["payload"]["roots"].size() - 1);
    CHECK_FALSE(verify_certificate(refl));
  }

  TEST_CASE("isometries from bases") {
    const QuadraticForm f(23, 3);
    std::vector<LatticeVector> basis;
    for (std::size_t i = 0; i < 4; ++i) basis.push_back(LatticeVector::basis(4, i));
    const auto id = isometry_from_bases(basis, basis, f);
    CHECK(id.form_preserved);
    CHECK(id.order.finite);
    CHECK(id.order.order == 1);
    std::vector<LatticeVector> neg;
    for (const auto& b : basis) neg.push_back(-b);
    const auto minus = isometry_from_bases(basis, neg, f);
    CHECK(minus.order.finite);
    CHECK(minus.order.order == 2);
    std::vector<LatticeVector> bad = basis;
    bad[1] = 2 * bad[1];
    CHECK_THROWS_AS(isometry_from_bases(basis, bad, f), Error);
  }

  TEST_CASE("corners") {
    const QuadraticForm f(23, 3);
    const std::vector<Root> w1{Root(LatticeVector{0, -1, 1, 0}, f), Root(LatticeVector{2, 7, 6, 3}, f),
                               Root(LatticeVector{4, 12, 12, 9}, f)};
    const auto u = null_corner_vector(w1, f);
    CHECK(u == LatticeVector{45, 138, 138, 92});
    CHECK(norm(u, f) == -23);
    const std::vector<Root> w2{Root(LatticeVector{0, 0, 0, -1}, f), Root(LatticeVector{6, 27, 10, 1}, f),
                               Root(LatticeVector{12, 55, 17, 0}, f)};
    CHECK(null_corner_vector(w2, f) == LatticeVector{91, 414, 138, 0});
    // Walls through v0 meet at v0.
    const auto v0 = null_corner_vector(initial_roots(f), f);
    CHECK(v0 == LatticeVector{1, 0, 0, 0});
    const std::vector<Root> dependent{Root(LatticeVector{0, -1, 1, 0}, f), Root(LatticeVector{0, 1, -1, 0}, f),
                                      Root(LatticeVector{0, 0, 0, -1}, f)};
    CHECK_THROWS_AS(null_corner_vector(dependent, f), Error);
  }

  TEST_CASE("order classification agrees with powering") {
    std::vector<IntMatrix> mats = {
        IntMatrix{{0, -1}, {1, 0}},                    // order 4
        IntMatrix{{0, -1}, {1, -1}},                   // order 3
        IntMatrix{{1, 1}, {0, 1}},                     // unipotent
        IntMatrix{{2, 1}, {1, 1}},                     // hyperbolic
        IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},    // order 3
        IntMatrix{{-1, 0, 0}, {0, 0, -1}, {0, 1, 0}},  // order 4
    };
    mats.push_back(classify(23, 3).certificate.is_null() ? IntMatrix::identity(4)
                                                         : matrix_from_json(classify(23, 3).certificate["payload"]["matrix"]));
    for (const auto& m : mats) {
      const auto a = analyze_order(m);
      const auto id = IntMatrix::identity(m.rows());
      if (a.finite) {
        CHECK(oracle::power(m, a.order) == id);
        for (long k = 1; k < a.order; ++k) CHECK(oracle::power(m, k) != id);
      } else {
        IntMatrix x = m;
        bool hit = false;
        for (int k = 1; k <= 1000 && !hit; ++k) {
          hit = x == id;
          x = x * m;
        }
        CHECK_FALSE(hit);
      }
    }
    CHECK(analyze_order(mats[0]).order == 4);
    CHECK_FALSE(analyze_order(mats[2]).finite);
    CHECK_FALSE(analyze_order(mats[2]).diagonalizable);
    CHECK_FALSE(analyze_order(mats[3]).finite);
  }

  TEST_CASE("cyclotomic polynomials") {
    CHECK(to_string(cyclotomic(1)) == "x-1");
    CHECK(to_string(cyclotomic(6)) == "x^2-x+1");
    CHECK(degree(cyclotomic(12)) == 4);
    CHECK(to_string(characteristic_polynomial(IntMatrix{{2, 1}, {1, 1}})) == "x^2-3x+1");
  }

  TEST_CASE("inheritance") {
    const Json base = classify(7, 4).certificate;
    const Json up = inherit_nonreflectivity(base, 6);
    CHECK(up["kind"] == "inherited");
    CHECK(up["form"]["n"] == 6);
    CHECK(verify_certificate(up));
    CHECK_THROWS_AS(inherit_nonreflectivity(base, 4), Error);
    CHECK_THROWS_AS(inherit_nonreflectivity(classify(7, 3).certificate, 5), Error);
    Json other_p = up;
    other_p["form"]["p"] = 11;
    CHECK_FALSE(verify_certificate(other_p));
  }
}
