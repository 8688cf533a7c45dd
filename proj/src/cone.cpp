#include "vinberg/cone.hpp"

#include "vinberg/error.hpp"

namespace vinberg {

namespace {

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void make_primitive(std::vector<Integer>& v) {
  Integer g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
}

}  // namespace

ConeGenerators double_description(const IntMatrix& constraints) {
  const std::size_t d = constraints.cols();
  ConeGenerators out;
  if (d == 0) return out;
  out.lineality = integer_kernel(constraints);

  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < constraints.rows(); ++i) rows.push_back(constraints.row(i));
  // Restrict to the Euclidean complement of the lineality space.
  for (const auto& l : out.lineality) {
    rows.push_back(l);
    std::vector<Integer> neg(l);
    for (auto& x : neg) x = -x;
    rows.push_back(std::move(neg));
  }

  // Greedy choice of d independent rows.
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < rows.size() && basis.size() < d; ++i) {
    std::vector<std::vector<Integer>> trial;
    for (auto b : basis) trial.push_back(rows[b]);
    trial.push_back(rows[i]);
    if (rank(IntMatrix::from_rows(trial, d)) == trial.size()) basis.push_back(i);
  }
  if (basis.size() < d) throw Error(ErrorCode::InternalConsistency, "cone is not pointed after removing lineality");

  std::vector<std::vector<Integer>> brows;
  for (auto b : basis) brows.push_back(rows[b]);
  auto binv = inverse(to_rational(IntMatrix::from_rows(brows, d)));
  if (!binv) throw Error(ErrorCode::InternalConsistency, "singular initial basis");
  std::vector<std::vector<Integer>> rays;
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> col(d);
    for (std::size_t i = 0; i < d; ++i) col[i] = -(*binv)(i, j);
    rays.push_back(primitive_integer_multiple(col));
  }

  std::vector<bool> processed(rows.size(), false);
  for (auto b : basis) processed[b] = true;
  std::vector<std::size_t> done(basis.begin(), basis.end());

  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (processed[i]) continue;
    const auto& a = rows[i];
    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<std::vector<Integer>> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      s[r] = dot(a, rays[r]);
      if (s[r] > 0) pos.push_back(r);
      else {
        next.push_back(rays[r]);
        if (s[r] < 0) neg.push_back(r);
      }
    }
    for (auto rp : pos)
      for (auto rn : neg) {
        std::vector<std::vector<Integer>> tight;
        for (auto j : done)
          if (dot(rows[j], rays[rp]) == 0 && dot(rows[j], rays[rn]) == 0) tight.push_back(rows[j]);
        if (tight.size() + 2 < d) continue;
        if (d >= 2 && rank(IntMatrix::from_rows(tight, d)) + 2 != d) continue;
        std::vector<Integer> combo(d);
        for (std::size_t k = 0; k < d; ++k) combo[k] = s[rp] * rays[rn][k] - s[rn] * rays[rp][k];
        make_primitive(combo);
        next.push_back(std::move(combo));
      }
    rays = std::move(next);
    processed[i] = true;
    done.push_back(i);
  }
  out.rays = std::move(rays);
  return out;
}

}  // namespace vinberg
