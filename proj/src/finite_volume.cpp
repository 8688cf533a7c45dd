#include "vinberg/finite_volume.hpp"

#include <algorithm>
#include <map>

#include "vinberg/cone.hpp"
#include "vinberg/error.hpp"

namespace vinberg {

std::vector<CriticalSubmatrix> critical_submatrices(const Census& c) {
  std::vector<CriticalSubmatrix> out;
  for (const auto& s : c.parabolic) out.push_back({s, CriticalKind::Parabolic});
  for (const auto& s : c.indefinite) out.push_back({s, CriticalKind::Indefinite});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.subset < b.subset; });
  return out;
}

std::vector<CriticalSubmatrix> critical_submatrices(const CoxeterDiagram& d) { return critical_submatrices(census(d)); }

ConditionA check_condition_a(const CoxeterDiagram& d, const Census& c) {
  ConditionA out;
  const std::size_t target = static_cast<std::size_t>(d.form().n()) - 1;
  // A superset T with all components affine lies in the roots orthogonal to
  // the null vector, so the affine part of Z_e is the largest candidate.
  for (const auto& ip : c.ideal_points) {
    if (static_cast<std::size_t>(ip.affine_type.rank()) == target) continue;
    out.pass = false;
    out.null_vector = ip.e;
    for (const auto& s : c.parabolic)
      if (std::includes(ip.orthogonal.begin(), ip.orthogonal.end(), s.begin(), s.end())) {
        out.witness = s;
        break;
      }
    break;
  }
  return out;
}

ConditionA check_condition_a(const CoxeterDiagram& d) { return check_condition_a(d, census(d)); }

ConeFixedSet cone_fixed_set(const std::vector<Root>& roots, const std::vector<std::size_t>& subset,
                            const QuadraticForm& form) {
  const std::size_t dim = form.dimension();
  const IntMatrix f = form.matrix();
  auto dual = [&](const Root& r) {
    std::vector<Integer> row(dim);
    for (std::size_t i = 0; i < dim; ++i) row[i] = f(i, i) * r.vector()[i];
    return row;
  };
  std::vector<std::vector<Integer>> eq;
  for (auto i : subset) eq.push_back(dual(roots.at(i)));
  std::vector<std::vector<Integer>> w;
  if (eq.empty()) {
    for (std::size_t i = 0; i < dim; ++i) w.push_back(LatticeVector::basis(dim, i).coeffs());
  } else {
    w = integer_kernel(IntMatrix::from_rows(eq, dim));
  }
  ConeFixedSet out;
  out.subset = subset;
  if (w.empty()) return out;
  const IntMatrix wm = IntMatrix::from_columns(w, dim);
  std::vector<std::vector<Integer>> ineq;
  for (const auto& r : roots) {
    auto row = dual(r);
    std::vector<Integer> reduced(w.size());
    for (std::size_t j = 0; j < w.size(); ++j)
      for (std::size_t i = 0; i < dim; ++i) reduced[j] += row[i] * wm(i, j);
    ineq.push_back(std::move(reduced));
  }
  auto gens = double_description(IntMatrix::from_rows(ineq, w.size()));
  if (gens.trivial()) return out;
  const auto& y = gens.lineality.empty() ? gens.rays.front() : gens.lineality.front();
  std::vector<Rational> x(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < y.size(); ++j) x[i] += Rational(wm(i, j) * y[j]);
  out.zero = false;
  out.witness = std::move(x);
  return out;
}

std::optional<std::vector<std::size_t>> sufficient_condition_witness(const CoxeterDiagram& d, const Census& c,
                                                                    const std::vector<std::size_t>& subset) {
  const std::size_t need = static_cast<std::size_t>(d.form().n()) - 1;
  std::vector<bool> ok(d.size(), true);
  for (auto s : subset) ok[s] = false;
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (!ok[v]) continue;
    for (auto s : subset)
      if (d.gram()(v, s) != 0) {
        ok[v] = false;
        break;
      }
  }
  for (const auto& t : c.elliptic) {
    if (t.size() < need) continue;
    if (std::all_of(t.begin(), t.end(), [&](std::size_t v) { return ok[v]; })) return t;
  }
  return std::nullopt;
}

ConditionB check_condition_b(const CoxeterDiagram& d, const Census& c) {
  ConditionB out;
  for (const auto& s : c.indefinite) {
    ConditionBEntry entry{s, ConditionBRoute::Sufficient, {}, true};
    if (auto t = sufficient_condition_witness(d, c, s)) {
      entry.orthogonal_elliptic = *t;
    } else {
      entry.route = ConditionBRoute::Cone;
      auto cone = cone_fixed_set(d.roots(), s, d.form());
      entry.zero = cone.zero;
      if (!cone.zero && out.pass) {
        out.pass = false;
        out.witness = s;
        out.ray = cone.witness;
      }
    }
    out.entries.push_back(std::move(entry));
    if (!out.pass) break;
  }
  return out;
}

ConditionB check_condition_b(const CoxeterDiagram& d) { return check_condition_b(d, census(d)); }

EdgeCount edge_count_check(const CoxeterDiagram& d, const Census& c) {
  const std::size_t n = static_cast<std::size_t>(d.form().n());
  std::map<std::vector<std::size_t>, std::size_t> ends;
  for (const auto& s : c.elliptic)
    if (s.size() + 1 == n) ends.emplace(s, 0);
  for (const auto& s : c.elliptic) {
    if (s.size() != n) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<std::size_t> sub;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) sub.push_back(s[i]);
      ends[sub] += 1;
    }
  }
  for (const auto& ip : c.ideal_points) {
    if (!ip.complete) continue;
    for (auto& [edge, count] : ends)
      if (std::includes(ip.orthogonal.begin(), ip.orthogonal.end(), edge.begin(), edge.end())) count += 1;
  }
  EdgeCount out;
  out.edges = ends.size();
  out.finite = !ends.empty();
  for (const auto& [edge, count] : ends)
    if (count != 2) {
      out.finite = false;
      out.bad_edge = edge;
      out.bad_edge_ends = count;
      break;
    }
  return out;
}

FiniteVolumeVerdict finite_volume(const CoxeterDiagram& d, const Census& c) {
  FiniteVolumeVerdict v;
  v.nondegenerate = rank(d.gram()) == d.form().dimension();
  v.condition_a = check_condition_a(d, c);
  if (!v.nondegenerate) {
    v.finite = false;
    v.reason = "the walls do not span V";
  } else if (!v.condition_a.pass) {
    v.finite = false;
    v.reason = "condition (a) fails: affine subdiagram without a rank n-1 extension";
  } else {
    v.condition_b = check_condition_b(d, c);
    v.finite = v.condition_b->pass;
    v.reason = v.finite ? "conditions (a) and (b) hold"
                        : "condition (b) fails: indefinite critical subset with a nonzero fixed cone";
  }
  v.cross_check = edge_count_check(d, c);
  if (v.cross_check.finite != v.finite)
    throw Error(ErrorCode::InternalConsistency,
                std::string("finite-volume deciders disagree: criterion says ") + (v.finite ? "finite" : "infinite") +
                    ", edge count says " + (v.cross_check.finite ? "finite" : "infinite"));
  return v;
}

FiniteVolumeVerdict finite_volume(const CoxeterDiagram& d) { return finite_volume(d, census(d)); }

bool has_finite_volume(const std::vector<Root>& roots, const QuadraticForm& form) {
  auto d = build_diagram(roots, form);
  return finite_volume(d).finite;
}

}  // namespace vinberg
