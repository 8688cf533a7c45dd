#include <algorithm>
#include <set>

#include "vinberg/certificates.hpp"
#include "vinberg/error.hpp"
#include "vinberg/finite_volume.hpp"

namespace vinberg {

namespace {

Json vectors_json(const std::vector<LatticeVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vector_json(v));
  return a;
}

Json roots_json(const std::vector<Root>& rs) { return vectors_json(vectors_of(rs)); }

std::vector<LatticeVector> vectors_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::MalformedCertificate, "expected a list of vectors");
  std::vector<LatticeVector> out;
  for (const auto& v : j) out.push_back(vector_from_json(v));
  return out;
}

std::vector<Integer> integers_from_json(const Json& j) { return vector_from_json(j).coeffs(); }

Json envelope(const QuadraticForm& form, const char* kind, Json payload) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["form"] = form_json(form);
  j["kind"] = kind;
  j["payload"] = std::move(payload);
  j["annotations"] = Json::object();
  return j;
}

void check_dimension(const LatticeVector& v, const QuadraticForm& form, const char* what) {
  if (v.size() != form.dimension())
    throw Error(ErrorCode::MalformedCertificate, std::string(what) + ": vector has the wrong length");
}

std::vector<Root> roots_from_json(const Json& j, const QuadraticForm& form, Verification& v, const char* what) {
  std::vector<Root> out;
  for (auto& x : vectors_from_json(j)) {
    check_dimension(x, form, what);
    if (!is_root(x, form)) {
      v.failures.push_back(std::string(what) + ": " + x.to_string() + " is not a root (" +
                           to_string(root_defect(x, form)) + ")");
      continue;
    }
    out.emplace_back(std::move(x), form);
  }
  return out;
}

void verify_reflective(const QuadraticForm& form, const Json& payload, Verification& v) {
  const auto roots = roots_from_json(require(payload, "roots"), form, v, "roots");
  if (!v.failures.empty()) return;
  if (!is_acute(roots, form)) {
    v.failures.push_back("roots: some pair has positive inner product");
    return;
  }
  const auto verdict = finite_volume(build_diagram(roots, form));
  if (!verdict.finite) v.failures.push_back("roots: chamber has infinite volume (" + verdict.reason + ")");
}

void verify_ideal(const QuadraticForm& form, const Json& payload, Verification& v) {
  const LatticeVector e = vector_from_json(require(payload, "null_vector"));
  check_dimension(e, form, "null_vector");
  std::vector<Root> affine;
  for (const auto& comp : require(payload, "components")) {
    auto rs = roots_from_json(require(comp, "roots"), form, v, "components");
    if (!v.failures.empty()) return;
    if (affine_null_vector(rs, form) != e) {
      v.failures.push_back("components: affine null vector differs from " + e.to_string());
      return;
    }
    affine.insert(affine.end(), rs.begin(), rs.end());
  }
  const auto fresh = ideal_vertex_failure(e, affine, form);
  if (!fresh.valid())
    v.failures.push_back("root classes span rank " + std::to_string(fresh.root_rank) +
                         " = n-1, so e may be an ideal vertex");
  const auto& rc = require(payload, "root_classes");
  if (require(rc, "rank").get<std::size_t>() != fresh.root_rank) v.failures.push_back("root_classes.rank mismatch");
  const auto& dec = require(payload, "decomposition");
  if (integer_from_json(require(dec, "complement_norm")) != fresh.complement_norm())
    v.failures.push_back("decomposition.complement_norm mismatch");
  if (integers_from_json(require(dec, "glue_orders")) != fresh.glue_orders)
    v.failures.push_back("decomposition.glue_orders mismatch");

  const QuotientLattice q(e, form);
  for (const auto& b : vectors_from_json(require(payload, "complement_basis"))) {
    check_dimension(b, form, "complement_basis");
    if (inner_product(b, e, form) != 0) v.failures.push_back("complement_basis: " + b.to_string() + " not orthogonal to e");
  }
  std::vector<std::vector<Integer>> generators;
  for (const auto& r : fresh.root_representatives) generators.push_back(*q.project(r));
  for (const auto& w : require(payload, "witnesses")) {
    const LatticeVector x = vector_from_json(require(w, "vector"));
    check_dimension(x, form, "witnesses");
    const auto cls = q.project(x);
    if (!cls) {
      v.failures.push_back("witness " + x.to_string() + " is not orthogonal to e");
      continue;
    }
    if (q.norm(*cls) != integer_from_json(require(w, "norm"))) v.failures.push_back("witness " + x.to_string() + ": norm mismatch");
    const auto scan = scan_root_class(*cls, q);
    if (scan.root)
      v.failures.push_back("witness " + x.to_string() + ": class contains the root " + scan.representative->to_string());
    generators.push_back(*cls);
  }
  if (sublattice_index(generators, q.rank()) != 1)
    v.failures.push_back("witnesses: root classes and witnesses do not generate M/Ze");
}

void verify_corner(const QuadraticForm& form, const Json& j, const SearchState& state, Verification& v,
                   const char* what) {
  const LatticeVector u = vector_from_json(require(j, "vertex"));
  check_dimension(u, form, what);
  const auto walls = roots_from_json(require(j, "walls"), form, v, what);
  if (!v.failures.empty()) return;
  const auto roots = state.roots();
  std::set<LatticeVector> wall_set;
  for (const auto& w : walls) {
    wall_set.insert(w.vector());
    if (std::find(roots.begin(), roots.end(), w) == roots.end())
      v.failures.push_back(std::string(what) + ": " + w.vector().to_string() + " is not a wall of the chamber");
  }
  if (null_corner_vector(walls, form) != u) {
    v.failures.push_back(std::string(what) + ": vertex is not orthogonal to its walls");
    return;
  }
  for (const auto& r : roots) {
    const Integer ip = inner_product(u, r.vector(), form);
    if (ip > 0) v.failures.push_back(std::string(what) + ": vertex is cut off by " + r.vector().to_string());
    if (ip == 0 && !wall_set.count(r.vector()))
      v.failures.push_back(std::string(what) + ": vertex lies on the extra wall " + r.vector().to_string());
  }
  if (vertex_sinh2(u, form) >= Rational(form.p()) * state.cursor.height())
    v.failures.push_back(std::string(what) + ": vertex is beyond the searched height");
}

void verify_infinite(const QuadraticForm& form, const Json& payload, Verification& v) {
  const auto from = vectors_from_json(require(payload, "basis_from"));
  const auto to = vectors_from_json(require(payload, "basis_to"));
  const IntMatrix claimed = matrix_from_json(require(payload, "matrix"));
  const auto sym = isometry_from_bases(from, to, form);
  if (sym.matrix != claimed) v.failures.push_back("matrix does not map basis_from to basis_to");
  if (!sym.form_preserved) v.failures.push_back("matrix does not preserve the form");
  if (sym.order.finite) v.failures.push_back("matrix has finite order " + std::to_string(sym.order.order));

  const Rational frontier = rational_from_json(require(payload, "frontier"));
  SearchOptions o;
  o.stop_rule = StopRule::ExhaustBudget;
  o.budget.max_height = frontier;
  o.budget.max_roots = 1u << 20;
  const auto run = run_search(form, o);
  const Json& cf = require(payload, "from");
  const Json& ct = require(payload, "to");
  verify_corner(form, cf, run.state, v, "from");
  verify_corner(form, ct, run.state, v, "to");
  auto expect_basis = [&](const Json& c, const std::vector<LatticeVector>& basis, const char* what) {
    auto walls = vectors_from_json(require(c, "walls"));
    walls.push_back(vector_from_json(require(c, "vertex")));
    if (walls != basis) v.failures.push_back(std::string(what) + " is not walls followed by vertex");
  };
  expect_basis(cf, from, "basis_from");
  expect_basis(ct, to, "basis_to");
}

bool nonreflective_kind(const std::string& k) {
  return k == "ideal_vertex_failure" || k == "infinite_symmetry" || k == "inherited";
}

Verification check(const Json& cert);

void verify_inherited(const QuadraticForm& form, const Json& payload, Verification& v) {
  const Json& base = require(payload, "base");
  const QuadraticForm bf = form_from_json(require(base, "form"));
  if (bf.p() != form.p()) v.failures.push_back("base certificate is for another prime");
  if (bf.n() >= form.n()) v.failures.push_back("base certificate must have smaller n");
  if (!nonreflective_kind(require(base, "kind").get<std::string>()))
    v.failures.push_back("base certificate does not prove non-reflectivity");
  const auto inner = check(base);
  for (const auto& f : inner.failures) v.failures.push_back("base: " + f);
}

Verification check(const Json& cert) {
  Verification v;
  const Json& ver = require(cert, "schema_version");
  if (!ver.is_number_integer() || ver.get<int>() != kSchemaVersion)
    throw Error(ErrorCode::MalformedCertificate, "unsupported schema_version " + ver.dump());
  const QuadraticForm form = form_from_json(require(cert, "form"));
  const Json& kind = require(cert, "kind");
  if (!kind.is_string()) throw Error(ErrorCode::MalformedCertificate, "field 'kind' must be a string");
  const Json& payload = require(cert, "payload");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "reflective") verify_reflective(form, payload, v);
    else if (k == "ideal_vertex_failure") verify_ideal(form, payload, v);
    else if (k == "infinite_symmetry") verify_infinite(form, payload, v);
    else if (k == "inherited") verify_inherited(form, payload, v);
    else throw Error(ErrorCode::MalformedCertificate, "unknown certificate kind '" + k + "'");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedCertificate) throw;
    v.failures.push_back(std::string(to_string(e.code())) + ": " + e.what());
  }
  v.ok = v.failures.empty();
  return v;
}

}  // namespace

Json reflective_certificate(const std::vector<Root>& roots, const QuadraticForm& form) {
  const auto d = build_diagram(roots, form);
  const auto c = census(d);
  const auto verdict = finite_volume(d, c);
  if (!verdict.finite) throw Error(ErrorCode::InternalConsistency, "roots do not bound a finite-volume chamber");
  Json types = Json::array();
  for (const auto& t : maximal_affine_types(c)) types.push_back(t.name());
  Json payload;
  payload["roots"] = roots_json(roots);
  payload["maximal_affine_types"] = types;
  payload["edges"] = verdict.cross_check.edges;
  return envelope(form, "reflective", std::move(payload));
}

Json certificate_json(const IdealVertexFailure& c) {
  Json payload;
  payload["null_vector"] = vector_json(c.e);
  payload["affine_type"] = c.affine_type.name();
  Json comps = Json::array();
  for (std::size_t i = 0; i < c.components.size(); ++i)
    comps.push_back(Json{{"roots", roots_json(c.components[i])}, {"marks", vector_json(c.marks[i])}});
  payload["components"] = comps;
  payload["complement_basis"] = vectors_json(c.complement_basis);
  payload["quotient_basis"] = vectors_json(c.quotient_basis);
  payload["quotient_gram"] = matrix_json(c.quotient_gram);
  payload["root_classes"] = Json{{"rank", c.root_rank},
                                 {"index", integer_json(c.root_index)},
                                 {"representatives", vectors_json(c.root_representatives)}};
  Json dec;
  dec["d_rank"] = c.d_rank;
  dec["complement"] = vectors_json(c.complement);
  dec["complement_gram"] = c.complement.empty() ? Json::array() : matrix_json(c.complement_gram);
  dec["complement_norm"] = integer_json(c.complement_norm());
  dec["glue_orders"] = vector_json(c.glue_orders);
  dec["glue_order"] = integer_json(c.glue_order());
  payload["decomposition"] = dec;
  Json ws = Json::array();
  for (const auto& w : c.witnesses)
    ws.push_back(Json{{"role", w.role},
                      {"vector", vector_json(w.vector)},
                      {"norm", integer_json(w.norm)},
                      {"order", integer_json(w.order)},
                      {"root_class", w.scan.root},
                      {"defect", to_string(w.scan.defect)}});
  payload["witnesses"] = ws;
  payload["valid"] = c.valid();
  return envelope(c.form, "ideal_vertex_failure", std::move(payload));
}

Json certificate_json(const CornerIsometry& c) {
  const QuadraticForm& form = c.symmetry.form;
  Json payload;
  payload["frontier"] = rational_json(c.frontier);
  auto corner = [&](const Corner&, const std::vector<LatticeVector>& basis) {
    Json walls = Json::array();
    for (std::size_t i = 0; i + 1 < basis.size(); ++i) walls.push_back(vector_json(basis[i]));
    return Json{{"vertex", vector_json(basis.back())}, {"norm", integer_json(norm(basis.back(), form))}, {"walls", walls}};
  };
  payload["from"] = corner(c.from, c.symmetry.basis_from);
  payload["to"] = corner(c.to, c.symmetry.basis_to);
  payload["basis_from"] = vectors_json(c.symmetry.basis_from);
  payload["basis_to"] = vectors_json(c.symmetry.basis_to);
  payload["matrix"] = matrix_json(c.symmetry.matrix);
  payload["form_preserved"] = c.symmetry.form_preserved;
  const auto& ord = c.symmetry.order;
  payload["characteristic_polynomial"] = to_string(ord.charpoly);
  payload["cyclotomic_factors"] = ord.cyclotomic_factors;
  payload["residual_factor"] = to_string(ord.residual);
  payload["diagonalizable"] = ord.diagonalizable;
  payload["infinite_order"] = !ord.finite;
  return envelope(form, "infinite_symmetry", std::move(payload));
}

Json inherit_nonreflectivity(const Json& base, int n) {
  const QuadraticForm bf = form_from_json(require(base, "form"));
  if (!nonreflective_kind(require(base, "kind").get<std::string>()))
    throw Error(ErrorCode::MalformedCertificate, "only non-reflectivity certificates can be inherited");
  if (n <= bf.n()) throw Error(ErrorCode::InvalidForm, "inheritance goes to larger n only");
  Json payload;
  payload["from_n"] = bf.n();
  payload["base"] = base;
  return envelope(QuadraticForm(bf.p(), n), "inherited", std::move(payload));
}

Verification check_certificate(const Json& cert) {
  try {
    return check(cert);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedCertificate, e.what());
  }
}

bool verify_certificate(const Json& cert) { return check_certificate(cert).ok; }

}  // namespace vinberg
