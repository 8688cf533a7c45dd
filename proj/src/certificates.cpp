#include "vinberg/certificates.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "vinberg/error.hpp"
#include "vinberg/finite_volume.hpp"

namespace vinberg {

namespace {

std::vector<std::size_t> iota(std::size_t k) {
  std::vector<std::size_t> v(k);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

// Integer coordinates of x in the given basis, if x lies in its span.
std::optional<std::vector<Integer>> coordinates(const std::vector<LatticeVector>& basis, const LatticeVector& x) {
  const std::size_t k = basis.size(), dim = x.size();
  RatMatrix btb(k, k);
  std::vector<Rational> rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Integer s = 0;
      for (std::size_t t = 0; t < dim; ++t) s += basis[i][t] * basis[j][t];
      btb(i, j) = s;
    }
    Integer s = 0;
    for (std::size_t t = 0; t < dim; ++t) s += basis[i][t] * x[t];
    rhs[i] = s;
  }
  auto y = solve(btb, rhs);
  if (!y) throw Error(ErrorCode::SingularBasis, "dependent basis");
  std::vector<Integer> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    if ((*y)[i].get_den() != 1) return std::nullopt;
    out[i] = (*y)[i].get_num();
  }
  LatticeVector back(dim);
  for (std::size_t i = 0; i < k; ++i) back += out[i] * basis[i];
  if (back != x) return std::nullopt;
  return out;
}

Integer round_nearest(const Rational& q) { return floor(q + Rational(1, 2)); }

// Sign normalisation: first nonzero coordinate positive.
void orient(LatticeVector& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    if (x[i] < 0) x = -x;
    return;
  }
}

// Size reduction of a basis of M/Ze against its Gram matrix, then each lift
// shifted by a multiple of e to make k0 small.
void reduce_lifts(std::vector<LatticeVector>& lifts, const LatticeVector& e, const QuadraticForm& form) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < lifts.size(); ++i)
      for (std::size_t j = 0; j < lifts.size(); ++j) {
        if (i == j) continue;
        const Integer gjj = norm(lifts[j], form);
        const Integer gij = inner_product(lifts[i], lifts[j], form);
        const Integer q = round_nearest(Rational(gij, gjj));
        if (q == 0) continue;
        LatticeVector cand = lifts[i] - q * lifts[j];
        if (norm(cand, form) < norm(lifts[i], form)) {
          lifts[i] = std::move(cand);
          changed = true;
        }
      }
  }
  for (auto& x : lifts) {
    const Integer t = round_nearest(Rational(x[0], e[0]));
    if (t != 0) x -= t * e;
    orient(x);
  }
}

bool is_admissible_norm(const Integer& m, const QuadraticForm& form) {
  auto norms = admissible_root_norms(form);
  return std::find(norms.begin(), norms.end(), m) != norms.end();
}

}  // namespace

LatticeVector affine_null_vector(const std::vector<Root>& roots, const QuadraticForm& form) {
  if (roots.empty()) throw Error(ErrorCode::NotAffine, "empty root set");
  const auto d = build_diagram(roots, form);
  const auto all = iota(roots.size());
  const auto cls = classify_subdiagram(d, all);
  if (cls.kind != SubdiagramKind::Affine || cls.type.components().size() != 1)
    throw Error(ErrorCode::NotAffine, "roots do not form a connected affine diagram");
  const auto marks = affine_marks(d, all);
  LatticeVector e(form.dimension());
  for (std::size_t i = 0; i < roots.size(); ++i) e += marks[i] * roots[i].vector();
  e = e.primitive_part();
  if (e[0] < 0) e = -e;
  if (norm(e, form) != 0) throw Error(ErrorCode::InternalConsistency, "affine marks give a non-null vector");
  return e;
}

QuotientLattice::QuotientLattice(LatticeVector e, QuadraticForm form) : form_(std::move(form)), e_(std::move(e)) {
  const std::size_t dim = form_.dimension();
  if (e_.size() != dim) throw Error(ErrorCode::DimensionMismatch, "null vector has the wrong length");
  if (e_.is_zero()) throw Error(ErrorCode::ZeroVector, "null vector is zero");
  if (vinberg::norm(e_, form_) != 0) throw Error(ErrorCode::NotIsotropic, e_.to_string() + " has nonzero norm");
  if (e_.content() != 1) throw Error(ErrorCode::NotIntegral, e_.to_string() + " is not primitive");
  if (e_[0] < 0) e_ = -e_;

  const IntMatrix f = form_.matrix();
  IntMatrix row(1, dim);
  for (std::size_t i = 0; i < dim; ++i) row(0, i) = f(i, i) * e_[i];
  std::vector<LatticeVector> ker;
  for (auto& v : integer_kernel(row)) ker.emplace_back(std::move(v));
  auto c = coordinates(ker, e_);
  if (!c) throw Error(ErrorCode::InternalConsistency, "null vector outside its own complement");
  const IntMatrix u = complete_to_unimodular(*c);
  for (std::size_t j = 1; j < ker.size(); ++j) {
    LatticeVector w(dim);
    for (std::size_t i = 0; i < ker.size(); ++i) w += u(i, j) * ker[i];
    lifts_.push_back(std::move(w));
  }
  reduce_lifts(lifts_, e_, form_);
  m_basis_.push_back(e_);
  m_basis_.insert(m_basis_.end(), lifts_.begin(), lifts_.end());
  gram_ = gram_matrix(lifts_, form_);
  if (!is_positive_definite(gram_)) throw Error(ErrorCode::InternalConsistency, "quotient lattice is not positive definite");
}

LatticeVector QuotientLattice::lift(std::span<const Integer> cls) const {
  if (cls.size() != lifts_.size()) throw Error(ErrorCode::DimensionMismatch, "class has the wrong rank");
  LatticeVector x(form_.dimension());
  for (std::size_t i = 0; i < cls.size(); ++i) x += cls[i] * lifts_[i];
  return x;
}

std::optional<std::vector<Integer>> QuotientLattice::project(const LatticeVector& x) const {
  if (x.size() != form_.dimension()) throw Error(ErrorCode::DimensionMismatch, "vector has the wrong length");
  if (inner_product(x, e_, form_) != 0) return std::nullopt;
  auto y = coordinates(m_basis_, x);
  if (!y) return std::nullopt;
  return std::vector<Integer>(y->begin() + 1, y->end());
}

Integer QuotientLattice::norm(std::span<const Integer> cls) const {
  Integer s = 0;
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = 0; j < cls.size(); ++j) s += cls[i] * gram_(i, j) * cls[j];
  return s;
}

QuotientLattice complement_and_quotient(const LatticeVector& e, const QuadraticForm& form) {
  return QuotientLattice(e, form);
}

RootClassScan scan_root_class(std::span<const Integer> cls, const QuotientLattice& q) {
  RootClassScan out;
  const QuadraticForm& form = q.form();
  const LatticeVector x = q.lift(cls);
  const Integer m = q.norm(cls);
  if (m == 0) {
    out.defect = RootDefect::Zero;
    return out;
  }
  if (!is_admissible_norm(m, form)) {
    out.defect = RootDefect::InadmissibleNorm;
    return out;
  }
  // The root conditions on x + t e depend on t only modulo m: divisibility
  // obviously, and primitivity because a common factor g has g^2 | m.
  bool divisible_somewhere = false;
  LatticeVector r = x;
  for (Integer t = 0; t < m; ++t, r += q.null_vector()) {
    const RootDefect d = root_defect(r, form);
    if (d == RootDefect::None) {
      out.root = true;
      out.representative = r;
      return out;
    }
    if (d != RootDefect::NotPrimitive) continue;
    bool divisible = divides(m, 2 * form.p() * r[0]);
    for (std::size_t i = 1; i < r.size() && divisible; ++i) divisible = divides(m, 2 * r[i]);
    if (divisible) divisible_somewhere = true;
  }
  out.defect = divisible_somewhere ? RootDefect::NotPrimitive : RootDefect::Divisibility;
  return out;
}

bool is_root_class(std::span<const Integer> cls, const QuotientLattice& q) { return scan_root_class(cls, q).root; }

std::vector<std::vector<Integer>> short_vectors(const IntMatrix& gram, const Integer& bound) {
  const std::size_t k = gram.rows();
  if (k == 0) return {};
  // q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2
  RatMatrix q = to_rational(gram);
  for (std::size_t i = 0; i < k; ++i) {
    if (q(i, i) <= 0) throw Error(ErrorCode::InternalConsistency, "short_vectors needs a positive definite form");
    for (std::size_t j = i + 1; j < k; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (std::size_t l = i + 1; l < k; ++l)
      for (std::size_t j = l; j < k; ++j) q(l, j) -= q(l, i) * q(i, j);
  }
  std::vector<std::vector<Integer>> found;
  std::vector<Integer> x(k);
  const Rational total(bound);
  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level, const Rational& remaining) {
    const std::size_t i = level - 1;
    Rational c = 0;
    for (std::size_t j = i + 1; j < k; ++j) c += q(i, j) * x[j];
    const Integer s = isqrt(floor(remaining / q(i, i))) + 1;
    const Integer lo = floor(-c) - s, hi = ceil(-c) + s;
    for (Integer xi = lo; xi <= hi; ++xi) {
      const Rational t = Rational(xi) + c;
      const Rational used = q(i, i) * t * t;
      if (used > remaining) continue;
      x[i] = xi;
      if (i == 0) {
        if (std::any_of(x.begin(), x.end(), [](const Integer& v) { return v != 0; })) found.push_back(x);
      } else {
        descend(i, remaining - used);
      }
    }
    x[i] = 0;
  };
  descend(k, total);
  std::vector<std::pair<Integer, std::vector<Integer>>> keyed;
  for (auto& v : found) {
    auto nz = std::find_if(v.begin(), v.end(), [](const Integer& a) { return a != 0; });
    if (*nz < 0) continue;
    Integer n = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) n += v[i] * gram(i, j) * v[j];
    keyed.emplace_back(n, std::move(v));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  });
  std::vector<std::vector<Integer>> out;
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

RootSpan root_span(const QuotientLattice& q) {
  RootSpan out;
  const Integer bound = 2 * q.form().p();
  for (auto& v : short_vectors(q.gram(), bound)) {
    if (!is_admissible_norm(q.norm(v), q.form())) continue;
    auto scan = scan_root_class(v, q);
    if (!scan.root) continue;
    out.classes.push_back(std::move(v));
    out.representatives.push_back(*scan.representative);
  }
  out.basis = lattice_basis(out.classes, q.rank());
  out.rank = out.basis.size();
  if (out.rank == q.rank() && out.rank > 0) out.index = abs(determinant(IntMatrix::from_rows(out.basis, q.rank())));
  if (q.rank() == 0) out.index = 1;
  return out;
}

Integer sublattice_index(const std::vector<std::vector<Integer>>& generators, std::size_t dim) {
  if (dim == 0) return 1;
  const auto basis = lattice_basis(generators, dim);
  if (basis.size() < dim) return 0;
  return abs(determinant(IntMatrix::from_rows(basis, dim)));
}

Integer order_modulo(std::span<const Integer> x, const std::vector<std::vector<Integer>>& generators, std::size_t dim) {
  const Integer without = sublattice_index(generators, dim);
  if (without == 0) return 0;
  auto with = generators;
  with.emplace_back(x.begin(), x.end());
  return without / sublattice_index(with, dim);
}

Integer GlueDecomposition::glue_order() const {
  Integer g = 1;
  for (const auto& o : glue_orders) g *= o;
  return g;
}

GlueDecomposition glue_decomposition(const QuotientLattice& q, const std::vector<std::vector<Integer>>& d_generators) {
  const std::size_t k = q.rank();
  GlueDecomposition out;
  out.d_basis = lattice_basis(d_generators, k);
  if (out.d_basis.empty()) {
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Integer> row(k);
      row[i] = 1;
      out.complement.push_back(std::move(row));
    }
  } else {
    out.complement = integer_kernel(IntMatrix::from_rows(out.d_basis, k) * q.gram());
  }
  const IntMatrix c = IntMatrix::from_rows(out.complement, k);
  out.complement_gram = c * q.gram() * c.transpose();

  std::vector<std::vector<Integer>> rows = out.d_basis;
  rows.insert(rows.end(), out.complement.begin(), out.complement.end());
  const IntMatrix combined = IntMatrix::from_rows(rows, k);
  const SmithForm sf = smith_form(combined);
  const auto vinv = inverse(to_rational(sf.v));
  const auto cinv = inverse(to_rational(combined));
  if (!vinv || !cinv) throw Error(ErrorCode::InternalConsistency, "sublattice and complement are not of full rank");
  for (std::size_t i = 0; i < k; ++i) {
    const Integer s = sf.s(i, i);
    if (s == 1) continue;
    std::vector<Integer> g(k);
    for (std::size_t j = 0; j < k; ++j) g[j] = (*vinv)(i, j).get_num();
    // Shorten modulo D + D^perp.
    for (std::size_t r = 0; r < k; ++r) {
      Rational coord = 0;
      for (std::size_t j = 0; j < k; ++j) coord += Rational(g[j]) * (*cinv)(j, r);
      const Integer t = round_nearest(coord);
      if (t == 0) continue;
      for (std::size_t j = 0; j < k; ++j) g[j] -= t * combined(r, j);
    }
    out.glue_orders.push_back(s);
    out.glue.push_back(std::move(g));
  }
  return out;
}

Generation generated_by_roots(const QuotientLattice& q) {
  Generation out;
  out.span = root_span(q);
  out.generated = out.span.rank == q.rank() && out.span.index == 1;
  if (!out.generated) {
    auto dec = glue_decomposition(q, out.span.basis);
    out.witnesses = dec.complement;
    out.witnesses.insert(out.witnesses.end(), dec.glue.begin(), dec.glue.end());
  }
  return out;
}

Integer IdealVertexFailure::glue_order() const {
  Integer g = 1;
  for (const auto& o : glue_orders) g *= o;
  return g;
}

Integer IdealVertexFailure::complement_norm() const {
  return complement.size() == 1 ? complement_gram(0, 0) : Integer(0);
}

IdealVertexFailure ideal_vertex_failure(const LatticeVector& e, const std::vector<Root>& affine_roots,
                                        const QuadraticForm& form) {
  IdealVertexFailure out(form);
  QuotientLattice q(e, form);
  out.e = q.null_vector();
  if (!affine_roots.empty()) {
    const auto d = build_diagram(affine_roots, form);
    const auto all = iota(affine_roots.size());
    const auto cls = classify_subdiagram(d, all);
    if (cls.kind != SubdiagramKind::Affine) throw Error(ErrorCode::NotAffine, "roots do not form an affine diagram");
    out.affine_type = cls.type;
    for (const auto& comp : connected_components(d, all)) {
      std::vector<Root> rs;
      for (auto i : comp) rs.push_back(affine_roots[i]);
      if (affine_null_vector(rs, form) != out.e)
        throw Error(ErrorCode::NotAffine, "affine component with a different null vector");
      out.marks.push_back(affine_marks(d, comp));
      out.components.push_back(std::move(rs));
    }
  }
  out.complement_basis = q.complement_basis();
  out.quotient_basis = q.lift_basis();
  out.quotient_gram = q.gram();

  const auto span = root_span(q);
  out.root_rank = span.rank;
  out.root_index = span.index;
  out.root_representatives = span.representatives;

  std::vector<std::vector<Integer>> dgens;
  for (const auto& r : affine_roots) dgens.push_back(*q.project(r.vector()));
  const auto dec = glue_decomposition(q, dgens);
  out.d_rank = dec.d_basis.size();
  out.complement_gram = dec.complement_gram;
  out.glue_orders = dec.glue_orders;
  for (const auto& c : dec.complement) out.complement.push_back(q.lift(c));
  // Witnesses complete the span of all root classes to M/Ze, so none of them
  // can be a root class.
  const auto wdec = glue_decomposition(q, span.basis);
  for (const auto& c : wdec.complement)
    out.witnesses.push_back({"complement", q.lift(c), q.norm(c), 0, scan_root_class(c, q)});
  for (std::size_t i = 0; i < wdec.glue.size(); ++i)
    out.witnesses.push_back(
        {"glue", q.lift(wdec.glue[i]), q.norm(wdec.glue[i]), wdec.glue_orders[i], scan_root_class(wdec.glue[i], q)});
  return out;
}

LatticeVector null_corner_vector(const std::vector<Root>& walls, const QuadraticForm& form) {
  const std::size_t dim = form.dimension();
  if (walls.size() + 1 != dim) throw Error(ErrorCode::NotACorner, "a corner needs exactly n walls");
  const IntMatrix f = form.matrix();
  IntMatrix rows(walls.size(), dim);
  for (std::size_t i = 0; i < walls.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) rows(i, j) = f(j, j) * walls[i].vector()[j];
  auto ker = integer_kernel(rows);
  if (ker.size() != 1) throw Error(ErrorCode::NotACorner, "walls are linearly dependent");
  LatticeVector u(std::move(ker.front()));
  u = u.primitive_part();
  orient(u);
  if (norm(u, form) > 0) throw Error(ErrorCode::NotACorner, "orthogonal line " + u.to_string() + " has positive norm");
  return u;
}

Rational vertex_sinh2(const LatticeVector& u, const QuadraticForm& form) {
  const Integer n = norm(u, form);
  if (n >= 0) throw Error(ErrorCode::NotACorner, "vertex must have negative norm");
  return Rational(form.p() * u[0] * u[0], -n) - 1;
}

std::vector<Corner> chamber_corners(const SearchState& state) {
  const QuadraticForm& form = state.form;
  const auto roots = state.roots();
  const std::size_t n = static_cast<std::size_t>(form.n());
  const Rational reach = Rational(form.p()) * state.cursor.height();
  const auto d = build_diagram(roots, form);
  const auto c = census(d);
  std::vector<Corner> out;
  for (const auto& s : c.elliptic) {
    if (s.size() != n) continue;
    std::vector<Root> walls;
    for (auto i : s) walls.push_back(roots[i]);
    LatticeVector u = null_corner_vector(walls, form);
    bool inside = true;
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < roots.size() && inside; ++i) {
      const Integer ip = inner_product(u, roots[i].vector(), form);
      if (ip > 0) inside = false;
      if (ip == 0) on.push_back(i);
    }
    if (!inside || on != s) continue;
    if (vertex_sinh2(u, form) >= reach) continue;
    out.push_back({u, norm(u, form), s});
  }
  std::sort(out.begin(), out.end(), [](const Corner& a, const Corner& b) {
    if (a.vertex[0] != b.vertex[0]) return a.vertex[0] < b.vertex[0];
    return a.vertex < b.vertex;
  });
  return out;
}

InfiniteSymmetry isometry_from_bases(const std::vector<LatticeVector>& from, const std::vector<LatticeVector>& to,
                                     const QuadraticForm& form) {
  const std::size_t dim = form.dimension();
  if (from.size() != dim || to.size() != dim) throw Error(ErrorCode::DimensionMismatch, "bases need n+1 vectors");
  if (gram_matrix(from, form) != gram_matrix(to, form))
    throw Error(ErrorCode::GramMismatch, "the two bases have different Gram matrices");
  std::vector<std::vector<Integer>> fc, tc;
  for (const auto& v : from) fc.push_back(v.coeffs());
  for (const auto& v : to) tc.push_back(v.coeffs());
  const auto ainv = inverse(to_rational(IntMatrix::from_columns(fc, dim)));
  if (!ainv) throw Error(ErrorCode::SingularBasis, "source vectors are not a basis");
  const RatMatrix m = to_rational(IntMatrix::from_columns(tc, dim)) * *ainv;
  if (!is_integral(m)) throw Error(ErrorCode::NotIntegral, "the map is not integral");
  InfiniteSymmetry out(form);
  out.basis_from = from;
  out.basis_to = to;
  out.matrix = to_integer(m);
  const IntMatrix f = form.matrix();
  out.form_preserved = out.matrix.transpose() * f * out.matrix == f;
  out.order = analyze_order(out.matrix);
  return out;
}

std::optional<CornerIsometry> find_corner_isometry(const SearchState& state) {
  const QuadraticForm& form = state.form;
  const auto roots = state.roots();
  const auto corners = chamber_corners(state);
  const IntMatrix g = gram_matrix(roots, form);
  for (std::size_t a = 0; a < corners.size(); ++a)
    for (std::size_t b = a + 1; b < corners.size(); ++b) {
      const Corner& ca = corners[a];
      const Corner& cb = corners[b];
      if (ca.norm != cb.norm) continue;
      std::vector<std::size_t> perm = cb.walls;
      std::sort(perm.begin(), perm.end());
      do {
        bool match = true;
        for (std::size_t i = 0; i < perm.size() && match; ++i)
          for (std::size_t j = i; j < perm.size() && match; ++j)
            match = g(ca.walls[i], ca.walls[j]) == g(perm[i], perm[j]);
        if (!match) continue;
        std::vector<LatticeVector> from, to;
        for (auto i : ca.walls) from.push_back(roots[i].vector());
        for (auto i : perm) to.push_back(roots[i].vector());
        from.push_back(ca.vertex);
        to.push_back(cb.vertex);
        try {
          auto sym = isometry_from_bases(from, to, form);
          if (!sym.order.finite && sym.form_preserved)
            return CornerIsometry{ca, Corner{cb.vertex, cb.norm, perm}, std::move(sym), state.cursor.height()};
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NotIntegral) throw;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  return std::nullopt;
}

}  // namespace vinberg
