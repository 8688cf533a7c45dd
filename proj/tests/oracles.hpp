#pragma once

// Brute-force reference implementations used as test oracles. They share no
// code with the library beyond the number and matrix types.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "vinberg/arith.hpp"
#include "vinberg/lattice.hpp"
#include "vinberg/linalg.hpp"

namespace oracle {

using vinberg::Integer;
using vinberg::IntMatrix;
using vinberg::LatticeVector;
using vinberg::Rational;

inline Integer form(const LatticeVector& u, const LatticeVector& v, long p) {
  Integer s = -p * u[0] * v[0];
  for (std::size_t i = 1; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

// Reflection in v maps every basis vector into the lattice.
inline bool is_root(const LatticeVector& v, long p) {
  const Integer m = form(v, v, p);
  if (m <= 0) return false;
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) g = vinberg::gcd(g, v[i]);
  if (g != 1) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const LatticeVector b = LatticeVector::basis(v.size(), i);
    const Integer twice = 2 * form(b, v, p);
    if (twice % m != 0) return false;
  }
  return true;
}

inline std::vector<LatticeVector> initial_roots(int n) {
  std::vector<LatticeVector> out;
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  for (int i = 1; i < n; ++i) {
    LatticeVector v(dim);
    v[i] = -1;
    v[i + 1] = 1;
    out.push_back(v);
  }
  LatticeVector last(dim);
  last[n] = -1;
  out.push_back(last);
  return out;
}

inline void all_vectors(std::size_t dim, long radius2, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  if (cur.size() + 1 == dim) {
    out.push_back(cur);
    return;
  }
  long used = 0;
  for (long x : cur) used += x * x;
  for (long x = -radius2; x <= radius2; ++x) {
    if (x * x + used > radius2) continue;
    cur.push_back(x);
    all_vectors(dim, radius2, cur, out);
    cur.pop_back();
  }
}

// Vinberg's selection over every root with k0 > 0 and k0^2/m <= max_height,
// found by exhaustive enumeration; roots of norm m satisfy m | 2p.
inline std::vector<LatticeVector> brute_force_chamber(long p, int n, const Rational& max_height) {
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  std::vector<std::pair<Rational, LatticeVector>> cands;
  for (long k0 = 1; Rational(k0 * k0) <= max_height * 2 * p; ++k0) {
    std::vector<std::vector<long>> spatial;
    std::vector<long> cur;
    all_vectors(dim, 2 * p + p * k0 * k0, cur, spatial);
    for (const auto& s : spatial) {
      LatticeVector v(dim);
      v[0] = k0;
      for (std::size_t i = 0; i < s.size(); ++i) v[i + 1] = s[i];
      if (!is_root(v, p)) continue;
      const Rational h(Integer(k0 * k0), form(v, v, p));
      if (h <= max_height) cands.emplace_back(h, v);
    }
  }
  std::stable_sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<LatticeVector> accepted = initial_roots(n);
  for (const auto& [h, v] : cands) {
    bool ok = true;
    for (const auto& a : accepted)
      if (form(a, v, p) > 0) {
        ok = false;
        break;
      }
    if (ok) accepted.push_back(v);
  }
  return accepted;
}

// All nonzero x with x^T G x <= bound, one of each +-x pair, from the box
// |x_i| <= sqrt(bound * (G^-1)_ii).
inline std::set<std::vector<Integer>> brute_short_vectors(const IntMatrix& g, const Integer& bound) {
  const std::size_t k = g.rows();
  const auto inv = *vinberg::inverse(vinberg::to_rational(g));
  std::vector<long> lim(k);
  for (std::size_t i = 0; i < k; ++i) lim[i] = vinberg::to_long(vinberg::isqrt(vinberg::floor(inv(i, i) * bound))) + 1;
  std::set<std::vector<Integer>> out;
  std::vector<Integer> x(k);
  std::vector<long> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = -lim[i];
  while (true) {
    for (std::size_t i = 0; i < k; ++i) x[i] = idx[i];
    Integer n = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) n += x[i] * g(i, j) * x[j];
    if (n > 0 && n <= bound) {
      auto neg = x;
      for (auto& c : neg) c = -c;
      out.insert(std::max(x, neg));
    }
    std::size_t i = 0;
    while (i < k && idx[i] == lim[i]) {
      idx[i] = -lim[i];
      ++i;
    }
    if (i == k) break;
    ++idx[i];
  }
  return out;
}

inline IntMatrix power(const IntMatrix& a, long k) {
  IntMatrix r = IntMatrix::identity(a.rows());
  for (long i = 0; i < k; ++i) r = r * a;
  return r;
}

}  // namespace oracle
