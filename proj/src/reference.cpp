#include "vinberg/reference.hpp"

#include <algorithm>
#include <numeric>

#include "vinberg/error.hpp"

namespace vinberg {

namespace {

LatticeVector vec(const char* text, int n) { return LatticeVector::parse(text, static_cast<std::size_t>(n) + 1); }

IdealVertexBlock block(long p, int n, const char* type, const char* e, const char* c, long cn, const char* g,
                       long order) {
  IdealVertexBlock b{p, n, type, vec(e, n), std::nullopt, cn, std::nullopt, order};
  if (c) b.complement = vec(c, n);
  if (g) b.glue = vec(g, n);
  return b;
}

std::vector<std::size_t> orthogonal_walls(const std::vector<Root>& roots, const LatticeVector& u, const QuadraticForm& f) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (inner_product(roots[i].vector(), u, f) == 0) out.push_back(i);
  return out;
}

}  // namespace

const std::vector<IdealVertexBlock>& ideal_vertex_blocks() {
  static const std::vector<IdealVertexBlock> blocks = {
      block(5, 9, "D~7", "2v0+3v1+2v2+v3+v4+v5+v6+v7+v8+v9", "v0-5v2", 20, "v2-2v3", 4),
      block(7, 4, "A~2", "v0+2v1+v2+v3+v4", "2v0+7v1", 21, "v1-2v2", 3),
      block(11, 4, "A~1^2", "v0+3v1+v2+v3", "5v0+11v1+11v2+11v3", 88, "v1-3v2", 4),
      block(13, 3, "A~1", "v0+3v1+2v2", "3v0+13v1", 52, "2v1-3v2", 2),
      block(17, 3, "A~1", "v0+3v1+2v2+2v3", "3v0+17v1", 136, "2v1-3v2", 4),
      block(19, 3, "A~1", "v0+3v1+3v2+v3", "3v0+19v1", 190, nullptr, 1),
  };
  return blocks;
}

std::optional<IdealVertexBlock> ideal_vertex_block(long p, int n) {
  for (const auto& b : ideal_vertex_blocks())
    if (b.p == p && b.n == n) return b;
  return std::nullopt;
}

bool BlockEvaluation::type_matches() const { return found && affine_type == SubdiagramType::parse(block.affine_type); }

bool BlockEvaluation::null_vector_matches() const { return found && computed.e == block.null_vector; }

bool BlockEvaluation::invariants_match() const {
  return found && computed.complement_norm() == block.complement_norm && computed.glue_order() == block.glue_order;
}

bool BlockEvaluation::pass() const {
  return type_matches() && null_vector_matches() && invariants_match() && computed.valid();
}

BlockEvaluation evaluate_block(const IdealVertexBlock& block) {
  BlockEvaluation out(block);
  const QuadraticForm form(block.p, block.n);
  const auto type = SubdiagramType::parse(block.affine_type);
  std::optional<std::vector<Root>> affine;
  SearchOptions opts;
  opts.stop_rule = StopRule::ExhaustBudget;
  auto probe = [&](const SearchState& s) {
    const auto roots = s.roots();
    const auto d = build_diagram(roots, form);
    for (const auto& ip : census(d).ideal_points) {
      if (ip.e != block.null_vector || ip.affine_type != type) continue;
      std::vector<Root> rs;
      for (auto i : ip.affine_part) rs.push_back(roots[i]);
      affine = std::move(rs);
      out.prefix = roots.size();
      return true;
    }
    return false;
  };
  opts.interrupt = probe;
  auto run = run_search(form, opts);
  if (!affine && !probe(run.state)) return out;

  out.found = true;
  out.affine_type = type;
  out.computed = ideal_vertex_failure(block.null_vector, *affine, form);

  const QuotientLattice q(block.null_vector, form);
  std::vector<std::vector<Integer>> d;
  for (const auto& r : *affine) d.push_back(*q.project(r.vector()));
  auto gens = d;
  if (block.complement) {
    if (auto c = q.project(*block.complement)) {
      out.complement_in_m = true;
      out.complement_class_norm = q.norm(*c);
      out.complement_orthogonal = std::all_of(affine->begin(), affine->end(), [&](const Root& r) {
        return inner_product(r.vector(), *block.complement, form) == 0;
      });
      gens.push_back(*c);
      out.stated_index = sublattice_index(gens, q.rank());
    }
  }
  // Order over D plus the stated complement when that lies in M.
  if (block.glue) {
    if (auto g = q.project(*block.glue)) {
      out.glue_in_m = true;
      out.glue_class_order = order_modulo(*g, gens, q.rank());
    }
  }
  return out;
}

const CornerReference& corner_reference() {
  static const CornerReference ref{
      23,
      3,
      vec("45v0+138v1+138v2+92v3", 3),
      vec("91v0+414v1+138v2", 3),
      -23,
      IntMatrix::from_rows({{-495, -152, -12, 2484}, {-440, -135, -12, 2208}, {-348, -108, -9, 1748}, {-156, -48, -4, 7}},
                           4),
  };
  return ref;
}

bool CornerEvaluation::pass() const {
  const auto& ref = corner_reference();
  return from_is_corner && to_is_corner && from_norm == ref.norm && to_norm == ref.norm && symmetry.form_preserved &&
         !symmetry.order.finite && certified;
}

CornerEvaluation evaluate_corner_reference(const SearchState& state) {
  const auto& ref = corner_reference();
  const QuadraticForm& form = state.form;
  if (form.p() != ref.p || form.n() != ref.n)
    throw Error(ErrorCode::DimensionMismatch, "the corner reference is for p = 23, n = 3");
  CornerEvaluation out(form);
  const auto roots = state.roots();
  out.from_walls = orthogonal_walls(roots, ref.from, form);
  out.to_walls = orthogonal_walls(roots, ref.to, form);
  auto corner = [&](const std::vector<std::size_t>& walls, LatticeVector& u, Integer& nu) {
    if (walls.size() != 3) return false;
    std::vector<Root> ws;
    for (auto i : walls) ws.push_back(roots[i]);
    try {
      u = null_corner_vector(ws, form);
    } catch (const Error&) {
      return false;
    }
    nu = norm(u, form);
    return true;
  };
  out.from_is_corner = corner(out.from_walls, out.from, out.from_norm) && out.from == ref.from;
  out.to_is_corner = corner(out.to_walls, out.to, out.to_norm) && out.to == ref.to;
  if (!out.from_is_corner || !out.to_is_corner) return out;

  // Try every wall correspondence with matching Gram matrices.
  std::vector<std::size_t> perm = out.to_walls;
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<LatticeVector> a, b;
    for (std::size_t i = 0; i < 3; ++i) {
      a.push_back(roots[out.from_walls[i]].vector());
      b.push_back(roots[perm[i]].vector());
    }
    a.push_back(out.from);
    b.push_back(out.to);
    InfiniteSymmetry s(form);
    try {
      s = isometry_from_bases(a, b, form);
    } catch (const Error&) {
      continue;
    }
    if (!s.form_preserved) continue;
    out.symmetry = std::move(s);
    break;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (out.symmetry.basis_from.empty()) return out;

  const auto corners = chamber_corners(state);
  auto certified = [&](const LatticeVector& u) {
    return std::any_of(corners.begin(), corners.end(), [&](const Corner& c) { return c.vertex == u; });
  };
  out.certified = certified(out.from) && certified(out.to);
  const IntMatrix& m = out.symmetry.matrix;
  out.matches_reference = m == ref.matrix;
  const auto inv = to_integer(*inverse(to_rational(m)));
  const std::size_t dim = form.dimension();
  auto rotated = [&](const IntMatrix& a) {
    IntMatrix r(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) r(i, j) = a((i + 1) % dim, (j + 1) % dim);
    return r;
  };
  const std::vector<std::pair<std::string, IntMatrix>> readings = {
      {"matrix", m}, {"inverse", inv}, {"matrix, coordinates v1..vn v0", rotated(m)},
      {"inverse, coordinates v1..vn v0", rotated(inv)}};
  for (const auto& [name, a] : readings) {
    std::vector<std::pair<std::size_t, std::size_t>> diff;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (a(i, j) != ref.matrix(i, j)) diff.emplace_back(i, j);
    if (out.reference_reading.empty() || diff.size() < out.differing_entries.size()) {
      out.reference_reading = name;
      out.differing_entries = std::move(diff);
    }
  }
  return out;
}

Json reference_annotations(const SearchState& state, const Json& certificate) {
  const QuadraticForm& form = state.form;
  Json out = Json::object();
  const std::string kind = certificate.value("kind", "");
  if (kind == "ideal_vertex_failure") {
    const auto b = ideal_vertex_block(form.p().get_si(), form.n());
    if (!b) return out;
    out["affine_type"] = b->affine_type;
    out["null_vector"] = vector_json(b->null_vector);
    if (b->complement) out["complement"] = vector_json(*b->complement);
    out["complement_norm"] = integer_json(b->complement_norm);
    out["glue"] = b->glue ? vector_json(*b->glue) : Json(nullptr);
    out["glue_order"] = integer_json(b->glue_order);
    const auto& p = certificate.at("payload");
    const auto& dec = p.at("decomposition");
    out["invariants_match"] = vector_from_json(p.at("null_vector")) == b->null_vector &&
                              integer_from_json(dec.at("complement_norm")) == b->complement_norm &&
                              integer_from_json(dec.at("glue_order")) == b->glue_order;
  } else if (kind == "infinite_symmetry") {
    const auto& ref = corner_reference();
    if (form.p() != ref.p || form.n() != ref.n) return out;
    out["corner_from"] = vector_json(ref.from);
    out["corner_to"] = vector_json(ref.to);
    out["corner_norm"] = integer_json(ref.norm);
    out["matrix"] = matrix_json(ref.matrix);
    const auto ev = evaluate_corner_reference(state);
    Json rec = Json::object();
    rec["corners_certified"] = ev.certified;
    if (!ev.symmetry.basis_from.empty()) {
      rec["matrix"] = matrix_json(ev.symmetry.matrix);
      rec["form_preserved"] = ev.symmetry.form_preserved;
      rec["infinite_order"] = !ev.symmetry.order.finite;
      rec["reference_reading"] = ev.reference_reading;
      Json diff = Json::array();
      for (const auto& [i, j] : ev.differing_entries)
        diff.push_back(Json{{"row", i}, {"column", j}, {"reference", integer_json(ref.matrix(i, j))}});
      rec["differing_entries"] = diff;
    }
    out["recomputed"] = rec;
    out["matrix_discrepancy"] = !ev.matches_reference;
  }
  return out;
}

}  // namespace vinberg
