#include "vinberg/classify.hpp"

#include <chrono>
#include <future>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <array>

#include "vinberg/certificates.hpp"
#include "vinberg/diagram.hpp"
#include "vinberg/error.hpp"
#include "vinberg/reference.hpp"

namespace vinberg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Reflective: return "reflective";
    case Verdict::NonReflective: return "non_reflective";
    case Verdict::Undecided: return "undecided";
  }
  return "unknown";
}

namespace {

Json batch_json(const BatchKey& k) {
  return Json{{"k0", integer_json(k.k0)}, {"norm", integer_json(k.norm)}, {"height", k.height_label()}};
}

BatchKey batch_from_json(const Json& j) {
  return BatchKey{integer_from_json(require(j, "k0")), integer_from_json(require(j, "norm"))};
}

Json budget_json(const Budget& b, CheckFrequency check) {
  return Json{{"max_height", rational_json(b.max_height)}, {"max_roots", b.max_roots}, {"check_every", to_string(check)}};
}

Json finite_volume_json(const FiniteVolumeVerdict& v) {
  Json j;
  j["finite"] = v.finite;
  j["reason"] = v.reason;
  j["nondegenerate"] = v.nondegenerate;
  j["condition_a"] = v.condition_a.pass;
  if (v.condition_b) {
    std::size_t cone = 0;
    for (const auto& e : v.condition_b->entries) cone += e.route == ConditionBRoute::Cone;
    j["condition_b"] = Json{{"pass", v.condition_b->pass},
                            {"indefinite_subsets", v.condition_b->entries.size()},
                            {"cone_computations", cone}};
  }
  j["edge_count"] = Json{{"edges", v.cross_check.edges}, {"finite", v.cross_check.finite}};
  return j;
}

// Tries every ideal point not seen before; the obstruction only depends on e.
class IdealVertexScan {
 public:
  std::optional<Json> operator()(const SearchState& s) {
    const auto roots = s.roots();
    const auto d = build_diagram(roots, s.form);
    for (const auto& ip : census(d).ideal_points) {
      if (ip.affine_part.empty() || !seen_.insert(ip.e.to_string()).second) continue;
      std::vector<Root> aff;
      for (auto i : ip.affine_part) aff.push_back(roots[i]);
      auto ivf = ideal_vertex_failure(ip.e, aff, s.form);
      if (ivf.valid()) return certificate_json(ivf);
    }
    return std::nullopt;
  }

 private:
  std::set<std::string> seen_;
};

void attach_certificate(ClassificationReport& r, Json cert) {
  auto refs = reference_annotations(r.state, cert);
  if (!refs.empty()) cert["annotations"]["reference_values"] = std::move(refs);
  const auto v = check_certificate(cert);
  if (!v.ok) {
    std::string why;
    for (const auto& f : v.failures) why += "; " + f;
    throw Error(ErrorCode::InternalConsistency, "generated certificate does not verify" + why);
  }
  r.certificate = std::move(cert);
  r.certificate_verified = true;
}

ClassificationReport run(SearchState start, bool fresh, const ClassifyOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  ClassificationReport r(start.form);
  r.budget = options.budget;
  r.check = options.check;
  r.timings = options.timings;

  SearchOptions so;
  so.budget = options.budget;
  so.check = options.check;
  IdealVertexScan scan;
  std::optional<Json> eager;
  if (options.eager_certificates)
    so.interrupt = [&](const SearchState& s) {
      eager = scan(s);
      return eager.has_value();
    };
  auto result = fresh ? run_search(start.form, so) : resume_search(std::move(start), so);
  r.status = result.status;
  r.state = std::move(result.state);

  if (result.status == SearchStatus::Terminated) {
    const auto roots = r.state.roots();
    const auto d = build_diagram(roots, r.form);
    const auto c = census(d);
    r.finite_volume = finite_volume(d, c);
    for (const auto& t : maximal_affine_types(c)) r.maximal_affine_types.push_back(t.name());
    r.verdict = Verdict::Reflective;
    attach_certificate(r, reflective_certificate(roots, r.form));
  } else {
    if (!eager) eager = scan(r.state);
    if (!eager)
      if (auto ci = find_corner_isometry(r.state)) eager = certificate_json(*ci);
    if (eager) {
      r.verdict = Verdict::NonReflective;
      attach_certificate(r, std::move(*eager));
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string vector_text(const LatticeVector& v) { return v.to_string(); }

std::size_t support(const LatticeVector& v) {
  std::size_t last = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) last = i;
  return std::max<std::size_t>(last, 2);
}

}  // namespace

Json ClassificationReport::to_json() const {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["form"] = form_json(form);
  j["verdict"] = to_string(verdict);
  j["searched"] = searched;
  if (status) j["status"] = to_string(*status);
  j["budget"] = budget_json(budget, check);
  if (searched) {
    Json roots = Json::array();
    for (std::size_t i = 0; i < state.accepted.size(); ++i) {
      const auto& a = state.accepted[i];
      roots.push_back(Json{{"label", i + 1},
                           {"vector", vector_text(a.root.vector())},
                           {"norm", integer_json(a.root.norm())},
                           {"height", a.batch ? Json(a.batch->height_label()) : Json(nullptr)}});
    }
    j["roots"] = roots;
    j["diagram"] = diagram_json(build_diagram(state.roots(), form));
  }
  j["finite_volume"] = finite_volume ? finite_volume_json(*finite_volume) : Json(nullptr);
  j["maximal_affine_types"] = maximal_affine_types;
  j["certificate"] = certificate;
  j["certificate_verified"] = certificate_verified;
  if (verdict == Verdict::Undecided) j["state"] = state_json(state);
  if (timings) j["timings"] = Json{{"seconds", seconds}};
  return j;
}

ClassificationReport classify(const QuadraticForm& form, const ClassifyOptions& options) {
  return run(SearchState(form), true, options);
}

ClassificationReport classify(long p, int n, const ClassifyOptions& options) {
  return classify(QuadraticForm(p, n), options);
}

ClassificationReport classify_resume(SearchState state, const ClassifyOptions& options) {
  return run(std::move(state), false, options);
}

std::vector<ClassificationReport> classify_family(long p, int n_max, const ClassifyOptions& options, unsigned jobs) {
  if (n_max < 2) throw Error(ErrorCode::InvalidForm, "n_max must be at least 2");
  QuadraticForm(p, 2);
  jobs = std::max(1u, jobs);
  std::vector<ClassificationReport> out;
  int n = 2;
  while (n <= n_max) {
    const int hi = std::min(n_max, n + static_cast<int>(jobs) - 1);
    std::vector<std::future<ClassificationReport>> wave;
    for (int k = n; k <= hi; ++k)
      wave.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                [p, k, &options] { return classify(p, k, options); }));
    bool stop = false;
    for (auto& f : wave) {
      auto r = f.get();
      if (stop) continue;
      stop = r.verdict == Verdict::NonReflective;
      out.push_back(std::move(r));
    }
    n = hi + 1;
    if (stop) {
      n = out.back().form.n() + 1;
      const Json base = out.back().certificate;
      for (int k = n; k <= n_max; ++k) {
        ClassificationReport r(QuadraticForm(p, k));
        r.searched = false;
        r.budget = options.budget;
        r.check = options.check;
        r.verdict = Verdict::NonReflective;
        r.state = SearchState(r.form);
        r.certificate = inherit_nonreflectivity(base, k);
        r.certificate_verified = check_certificate(r.certificate).ok;
        out.push_back(std::move(r));
      }
      break;
    }
  }
  return out;
}

TableFormat parse_table_format(const std::string& name) {
  if (name == "json") return TableFormat::Json;
  if (name == "text") return TableFormat::Text;
  throw Error(ErrorCode::UnknownFormat, "unknown table format '" + name + "'");
}

std::string emit_table(const ClassificationReport& report, TableFormat format) {
  const auto& acc = report.state.accepted;
  const int n = report.form.n();
  if (format == TableFormat::Json) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < acc.size(); ++i) {
      const auto& a = acc[i];
      rows.push_back(Json{{"height", a.batch ? Json(a.batch->height_label()) : Json(nullptr)},
                          {"vector", vector_text(a.root.vector())},
                          {"norm", integer_json(a.root.norm())},
                          {"label", i + 1},
                          {"n_min", support(a.root.vector())}});
    }
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["form"] = form_json(report.form);
    j["verdict"] = to_string(report.verdict);
    j["rows"] = rows;
    return j.dump(2) + "\n";
  }
  std::vector<std::array<std::string, 5>> rows = {{"height", "vector", "norm", "label", "n"}};
  for (std::size_t i = 0; i < acc.size(); ++i) {
    const auto& a = acc[i];
    const std::size_t lo = support(a.root.vector());
    rows.push_back({a.batch ? a.batch->height_label() : "-", vector_text(a.root.vector()), a.root.norm().get_str(),
                    std::to_string(i + 1),
                    static_cast<int>(lo) == n ? std::to_string(n) : ">= " + std::to_string(lo)});
  }
  std::array<std::size_t, 5> width{};
  for (const auto& r : rows)
    for (std::size_t c = 0; c < 5; ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream out;
  out << "p = " << report.form.p().get_str() << ", n = " << n << ": " << to_string(report.verdict) << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < 5; ++c) {
      out << std::left << std::setw(static_cast<int>(width[c])) << rows[i][c];
      out << (c + 1 < 5 ? "  " : "\n");
    }
    if (i == 0) out << std::string(width[0] + width[1] + width[2] + width[3] + width[4] + 8, '-') << "\n";
  }
  return out.str();
}

Json state_json(const SearchState& state) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "search_state";
  j["form"] = form_json(state.form);
  Json acc = Json::array();
  for (const auto& a : state.accepted)
    acc.push_back(Json{{"vector", vector_json(a.root.vector())}, {"batch", a.batch ? batch_json(*a.batch) : Json(nullptr)}});
  j["accepted"] = acc;
  j["cursor"] = batch_json(state.cursor);
  j["batch_offset"] = state.batch_offset;
  j["batches"] = state.batches;
  j["candidates"] = state.candidates;
  Json conflicts = Json::array();
  for (const auto& c : state.conflicts)
    conflicts.push_back(Json{{"earlier", vector_json(c.earlier)},
                             {"later", vector_json(c.later)},
                             {"inner_product", integer_json(c.inner_product)}});
  j["conflicts"] = conflicts;
  return j;
}

SearchState state_from_json(const Json& j) {
  try {
    if (require(j, "schema_version").get<int>() != kSchemaVersion)
      throw Error(ErrorCode::MalformedCertificate, "schema_version: unsupported version");
    if (require(j, "kind").get<std::string>() != "search_state")
      throw Error(ErrorCode::MalformedCertificate, "kind: expected search_state");
    SearchState s(form_from_json(require(j, "form")));
    for (const auto& a : require(j, "accepted")) {
      Root r(vector_from_json(require(a, "vector")), s.form);
      const auto& b = require(a, "batch");
      s.accepted.push_back(AcceptedRoot{std::move(r), b.is_null() ? std::nullopt : std::optional(batch_from_json(b))});
    }
    s.cursor = batch_from_json(require(j, "cursor"));
    s.batch_offset = require(j, "batch_offset").get<std::size_t>();
    s.batches = require(j, "batches").get<std::size_t>();
    s.candidates = require(j, "candidates").get<std::size_t>();
    for (const auto& c : require(j, "conflicts"))
      s.conflicts.push_back({vector_from_json(require(c, "earlier")), vector_from_json(require(c, "later")),
                             integer_from_json(require(c, "inner_product"))});
    return s;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedCertificate, std::string("search state: ") + e.what());
  }
}

}  // namespace vinberg
