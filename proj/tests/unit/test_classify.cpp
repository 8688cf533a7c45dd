#include <doctest.h>

#include "vinberg/certificates.hpp"
#include "vinberg/classify.hpp"
#include "vinberg/error.hpp"

using namespace vinberg;

namespace {

const Json* row_with(const Json& rows, const std::string& vector) {
  for (const auto& r : rows)
    if (r["vector"] == vector) return &r;
  return nullptr;
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("reports are deterministic") {
    CHECK(classify(5, 4).to_json().dump() == classify(5, 4).to_json().dump());
    CHECK(classify(13, 3).to_json().dump() == classify(13, 3).to_json().dump());
  }

  TEST_CASE("small verdicts carry verified certificates") {
    for (auto [p, n, v] : std::vector<std::tuple<long, int, Verdict>>{{5, 2, Verdict::Reflective},
                                                                      {5, 5, Verdict::Reflective},
                                                                      {7, 3, Verdict::Reflective},
                                                                      {7, 4, Verdict::NonReflective},
                                                                      {13, 3, Verdict::NonReflective},
                                                                      {23, 2, Verdict::Reflective}}) {
      CAPTURE(p);
      CAPTURE(n);
      const auto r = classify(p, n);
      CHECK(r.verdict == v);
      CHECK(r.certificate_verified);
      CHECK(verify_certificate(r.certificate));
      const Json j = r.to_json();
      CHECK(j["schema_version"] == kSchemaVersion);
      CHECK(j["verdict"] == to_string(v));
      CHECK_FALSE(j.contains("timings"));
      if (v == Verdict::Reflective) CHECK(j["finite_volume"]["finite"] == true);
    }
  }

  TEST_CASE("families stop at the first non-reflective rank") {
    const auto fam = classify_family(7, 6, {}, 2);
    REQUIRE(fam.size() == 5);
    CHECK(fam[0].verdict == Verdict::Reflective);
    CHECK(fam[1].verdict == Verdict::Reflective);
    CHECK(fam[2].verdict == Verdict::NonReflective);
    CHECK(fam[2].searched);
    for (std::size_t i = 3; i < fam.size(); ++i) {
      CHECK(fam[i].verdict == Verdict::NonReflective);
      CHECK_FALSE(fam[i].searched);
      CHECK(fam[i].certificate["kind"] == "inherited");
      CHECK(verify_certificate(fam[i].certificate));
    }
    const auto serial = classify_family(7, 6, {}, 1);
    for (std::size_t i = 0; i < fam.size(); ++i) CHECK(serial[i].to_json().dump() == fam[i].to_json().dump());
  }

  TEST_CASE("table rows") {
    const Json t5 = Json::parse(emit_table(classify(5, 2), TableFormat::Json));
    CHECK(t5["schema_version"] == kSchemaVersion);
    const auto* a = row_with(t5["rows"], "2v0+5v1");
    REQUIRE(a);
    CHECK((*a)["height"] == "4/5");
    CHECK((*a)["norm"] == 5);
    CHECK((*a)["n_min"] == 2);
    const Json t53 = Json::parse(emit_table(classify(5, 3), TableFormat::Json));
    const auto* b = row_with(t53["rows"], "3v0+5v1+5v2");
    REQUIRE(b);
    CHECK((*b)["height"] == "9/5");

    const Json t13 = Json::parse(emit_table(classify(13, 2), TableFormat::Json));
    const auto* c = row_with(t13["rows"], "47v0+169v1+13v2");
    REQUIRE(c);
    CHECK((*c)["height"] == "2209/13");
    CHECK((*c)["norm"] == 13);

    const Json t17 = Json::parse(emit_table(classify(17, 2), TableFormat::Json));
    const auto* d = row_with(t17["rows"], "24v0+85v1+51v2");
    REQUIRE(d);
    CHECK((*d)["height"] == "576/34");
    CHECK((*d)["norm"] == 34);

    const std::string text = emit_table(classify(5, 2), TableFormat::Text);
    CHECK(text.find("2v0+5v1") != std::string::npos);
    CHECK_THROWS_AS(parse_table_format("xml"), Error);
  }

  TEST_CASE("undecided runs resume to the same verdict") {
    ClassifyOptions small;
    small.budget.max_roots = 5;
    const auto partial = classify(5, 6, small);
    CHECK(partial.verdict == Verdict::Undecided);
    CHECK(partial.certificate.is_null());
    const Json j = partial.to_json();
    REQUIRE(j.contains("state"));
    const auto state = state_from_json(j["state"]);
    CHECK(state_json(state).dump() == j["state"].dump());
    const auto resumed = classify_resume(state);
    const auto direct = classify(5, 6);
    CHECK(resumed.verdict == Verdict::Reflective);
    CHECK(vectors_of(resumed.state.roots()) == vectors_of(direct.state.roots()));
  }

  TEST_CASE("batch-wise checking reaches the same chamber") {
    ClassifyOptions batch;
    batch.check = CheckFrequency::EveryBatch;
    const auto a = classify(11, 3, batch);
    const auto b = classify(11, 3);
    CHECK(a.verdict == Verdict::Reflective);
    CHECK(vectors_of(a.state.roots()) == vectors_of(b.state.roots()));
  }

  TEST_CASE("invalid input") {
    CHECK_THROWS_AS(classify(4, 3), Error);
    CHECK_THROWS_AS(classify(3, 3), Error);
    CHECK_THROWS_AS(classify(5, 1), Error);
    CHECK_THROWS_AS(state_from_json(Json::parse(R"({"schema_version": 1})")), Error);
    try {
      state_from_json(Json::parse(R"({"schema_version": 1, "kind": "search_state"})"));
      FAIL("no exception");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MalformedCertificate);
      CHECK(std::string(e.what()).find("form") != std::string::npos);
    }
  }
}
