#include <doctest.h>

#include <set>

#include "../oracles.hpp"
#include "vinberg/classify.hpp"
#include "vinberg/error.hpp"
#include "vinberg/search.hpp"

using namespace vinberg;

namespace {

std::set<LatticeVector> as_set(const std::vector<Root>& roots) {
  std::set<LatticeVector> s;
  for (const auto& r : roots) s.insert(r.vector());
  return s;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("batch keys come in strictly increasing height") {
    for (long p : {5, 7, 11, 13, 17, 19, 23}) {
      const auto keys = first_batches(QuadraticForm(p, 3), 60);
      for (std::size_t i = 1; i < keys.size(); ++i) CHECK(batch_before(keys[i - 1], keys[i]));
    }
    const auto k23 = first_batches(QuadraticForm(23, 3), 400);
    const auto a = std::find(k23.begin(), k23.end(), BatchKey{15, 2});
    REQUIRE(a != k23.end());
    const auto b = std::find(k23.begin(), k23.end(), BatchKey{20, 2});
    REQUIRE(b != k23.end());
    CHECK(a < b);
    const auto found = run_search(QuadraticForm(23, 3)).state.accepted;
    CHECK(std::any_of(found.begin(), found.end(), [](const AcceptedRoot& r) {
      return r.batch && *r.batch == BatchKey{20, 2} && r.root.vector() == LatticeVector{20, 92, 27, 3};
    }));
    CHECK(BatchKey{20, 2}.height() == 200);
    CHECK(BatchKey{2, 5}.height_label() == "4/5");
  }

  TEST_CASE("batch enumeration matches brute force") {
    for (long p : {5, 7, 23}) {
      const QuadraticForm f(p, 3);
      for (const auto& key : first_batches(f, 12)) {
        std::set<LatticeVector> expect;
        std::vector<std::vector<long>> spatial;
        std::vector<long> cur;
        const long r2 = to_long(key.norm + p * key.k0 * key.k0);
        oracle::all_vectors(4, r2, cur, spatial);
        for (const auto& s : spatial) {
          if (!(s[0] >= s[1] && s[1] >= s[2] && s[2] >= 0)) continue;
          LatticeVector v{to_long(key.k0), s[0], s[1], s[2]};
          if (oracle::form(v, v, p) == key.norm && oracle::is_root(v, p)) expect.insert(v);
        }
        const auto got = enumerate_batch(f, key);
        CHECK(std::set<LatticeVector>(got.begin(), got.end()) == expect);
        CHECK(std::is_sorted(got.rbegin(), got.rend()));
      }
    }
    const auto b = enumerate_batch(QuadraticForm(23, 3), BatchKey{20, 2});
    CHECK(std::find(b.begin(), b.end(), LatticeVector{20, 92, 27, 3}) != b.end());
  }

  TEST_CASE("search agrees with a brute-force chamber at height <= 2") {
    for (long p : {5, 7, 11})
      for (int n : {2, 3}) {
        CAPTURE(p);
        CAPTURE(n);
        SearchOptions o;
        o.stop_rule = StopRule::ExhaustBudget;
        o.budget.max_height = 2;
        const auto got = run_search(QuadraticForm(p, n), o).state.roots();
        const auto want = oracle::brute_force_chamber(p, n, 2);
        CHECK(as_set(got) == std::set<LatticeVector>(want.begin(), want.end()));
      }
  }

  TEST_CASE("accepted roots are pairwise non-obtuse") {
    for (long p : {5, 13}) {
      const auto s = run_search(QuadraticForm(p, 3)).state;
      CHECK(is_acute(s.roots(), s.form));
      CHECK(s.conflicts.empty());
    }
  }

  TEST_CASE("p=5, n=2 terminates with four roots") {
    const auto r = run_search(QuadraticForm(5, 2));
    CHECK(r.status == SearchStatus::Terminated);
    CHECK(as_set(r.state.roots()) ==
          std::set<LatticeVector>{{0, -1, 1}, {0, 0, -1}, {2, 5, 0}, {3, 5, 5}});
  }

  TEST_CASE("resuming an interrupted search reproduces the full run") {
    for (long p : {5, 7, 13})
      for (int n : {3, 4}) {
        const QuadraticForm f(p, n);
        const auto full = run_search(f);
        for (std::size_t cut : {4u, 6u}) {
          SearchOptions o;
          o.budget.max_roots = cut;
          auto part = run_search(f, o);
          if (part.status != SearchStatus::BudgetExhausted) continue;
          // Through the JSON state file as the CLI does.
          auto restored = state_from_json(Json::parse(state_json(part.state).dump()));
          const auto rest = resume_search(std::move(restored));
          CHECK(rest.status == full.status);
          CHECK(vectors_of(rest.state.roots()) == vectors_of(full.state.roots()));
          CHECK(rest.state.candidates == full.state.candidates);
        }
      }
  }

  TEST_CASE("batch-wise checking finds the same chamber") {
    SearchOptions o;
    o.check = CheckFrequency::EveryBatch;
    for (int n : {2, 4, 6}) {
      const QuadraticForm f(5, n);
      CHECK(as_set(run_search(f, o).state.roots()) == as_set(run_search(f).state.roots()));
    }
  }

  TEST_CASE("budget errors") {
    SearchOptions o;
    o.budget.max_height = 0;
    CHECK_THROWS_AS(run_search(QuadraticForm(5, 3), o), Error);
    o.budget.max_height = 1;
    o.budget.max_roots = 0;
    CHECK_THROWS_AS(run_search(QuadraticForm(5, 3), o), Error);
  }

  TEST_CASE("malformed state files are rejected with the field name") {
    auto j = state_json(run_search(QuadraticForm(5, 3)).state);
    j.erase("cursor");
    try {
      state_from_json(j);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MalformedCertificate);
      CHECK(std::string(e.what()).find("cursor") != std::string::npos);
    }
  }
}
