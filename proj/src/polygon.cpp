#include "vinberg/polygon.hpp"

#include <algorithm>
#include <sstream>

#include "vinberg/diagram.hpp"
#include "vinberg/error.hpp"

namespace vinberg {

namespace {

std::size_t period(const std::vector<NormAngle>& e) {
  const std::size_t k = e.size();
  for (std::size_t s = 1; s <= k; ++s) {
    if (k % s) continue;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) ok = e[i] == e[(i + s) % k];
    if (ok) return s;
  }
  return k;
}

std::string angle_text(int a, bool tex) {
  if (a == 0) return tex ? "{\\infty}" : "inf";
  return std::to_string(a);
}

std::vector<NormAngle> reversed(const std::vector<NormAngle>& e) {
  // Walking backwards, wall i is followed by wall i-1 across the angle that
  // wall i-1 recorded.
  const std::size_t k = e.size();
  std::vector<NormAngle> r(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t w = (k - i) % k;
    r[i] = {e[w].norm, e[(w + k - 1) % k].angle};
  }
  return r;
}

bool cyclic_equal(const std::vector<NormAngle>& a, const std::vector<NormAngle>& b) {
  if (a.size() != b.size()) return false;
  const std::size_t k = a.size();
  for (std::size_t s = 0; s < k; ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) ok = a[i] == b[(i + s) % k];
    if (ok) return true;
  }
  return k == 0;
}

}  // namespace

std::string NormAngleSequence::symbol() const {
  const std::size_t s = period(entries);
  std::ostringstream out;
  const bool power = s < entries.size();
  if (power) out << "(";
  for (std::size_t i = 0; i < s; ++i) {
    if (i) out << " ";
    out << entries[i].norm.get_str() << "_" << angle_text(entries[i].angle, false);
  }
  if (power) out << ")^" << entries.size() / s;
  return out.str();
}

std::string NormAngleSequence::tex() const {
  const std::size_t s = period(entries);
  std::ostringstream out;
  const bool power = s < entries.size();
  if (power) out << "\\left(";
  for (std::size_t i = 0; i < s; ++i) out << entries[i].norm.get_str() << "_" << angle_text(entries[i].angle, true);
  if (power) out << "\\right)^" << entries.size() / s;
  return out.str();
}

NormAngleSequence NormAngleSequence::parse(const std::string& text) {
  std::string body = text;
  int power = 1;
  const auto open = body.find('(');
  if (open != std::string::npos) {
    const auto close = body.find(')');
    if (close == std::string::npos || close < open) throw Error(ErrorCode::Parse, "unbalanced parentheses in " + text);
    std::string tail = body.substr(close + 1);
    body = body.substr(open + 1, close - open - 1);
    if (!tail.empty()) {
      if (tail[0] != '^') throw Error(ErrorCode::Parse, "expected ^m after ) in " + text);
      try {
        power = std::stoi(tail.substr(1));
      } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "bad exponent in " + text);
      }
      if (power < 1) throw Error(ErrorCode::Parse, "bad exponent in " + text);
    }
  }
  std::istringstream in(body);
  std::vector<NormAngle> base;
  std::string tok;
  while (in >> tok) {
    const auto us = tok.find('_');
    if (us == std::string::npos) throw Error(ErrorCode::Parse, "expected norm_angle, got " + tok);
    NormAngle na;
    try {
      na.norm = Integer(tok.substr(0, us));
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::Parse, "bad norm in " + tok);
    }
    const std::string a = tok.substr(us + 1);
    if (a == "inf") {
      na.angle = 0;
    } else {
      try {
        na.angle = std::stoi(a);
      } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "bad angle in " + tok);
      }
      if (na.angle < 2) throw Error(ErrorCode::Parse, "bad angle in " + tok);
    }
    base.push_back(na);
  }
  if (base.empty()) throw Error(ErrorCode::Parse, "empty norm/angle sequence");
  NormAngleSequence out;
  for (int i = 0; i < power; ++i) out.entries.insert(out.entries.end(), base.begin(), base.end());
  out.rotation = static_cast<int>(out.entries.size() / period(out.entries));
  return out;
}

bool equivalent(const NormAngleSequence& a, const NormAngleSequence& b) {
  return cyclic_equal(a.entries, b.entries) || cyclic_equal(a.entries, reversed(b.entries));
}

NormAngleSequence norm_angle_sequence(const std::vector<Root>& roots, const QuadraticForm& form) {
  if (form.n() != 2) throw Error(ErrorCode::DimensionMismatch, "norm/angle sequences need n = 2");
  const std::size_t k = roots.size();
  if (k < 3) throw Error(ErrorCode::PolygonNotClosed, "a polygon needs at least three walls");
  const auto d = build_diagram(roots, form);
  // In an acute-angled polygon only consecutive sides meet or are parallel.
  std::vector<std::vector<std::size_t>> nb(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && d.edge(i, j).kind != EdgeKind::Divergent) nb[i].push_back(j);
  for (std::size_t i = 0; i < k; ++i)
    if (nb[i].size() != 2)
      throw Error(ErrorCode::PolygonNotClosed, "wall " + roots[i].vector().to_string() + " has " +
                                                   std::to_string(nb[i].size()) + " neighbours");

  std::size_t start = 0, next = nb[0][0];
  const auto init = initial_roots(form);
  auto pos = [&](const Root& r) {
    return static_cast<std::size_t>(std::find(roots.begin(), roots.end(), r) - roots.begin());
  };
  const std::size_t a = pos(init[0]), b = pos(init[1]);
  if (a < k && b < k && std::count(nb[a].begin(), nb[a].end(), b)) {
    start = a;
    next = b;
  } else {
    start = static_cast<std::size_t>(std::min_element(roots.begin(), roots.end(),
                                                      [](const Root& x, const Root& y) { return x.vector() < y.vector(); }) -
                                     roots.begin());
    next = std::min(nb[start][0], nb[start][1]);
  }

  NormAngleSequence out;
  std::size_t prev = start, cur = start;
  out.order.push_back(start);
  cur = next;
  while (cur != start) {
    if (out.order.size() >= k) throw Error(ErrorCode::PolygonNotClosed, "walls do not form a single cycle");
    out.order.push_back(cur);
    const std::size_t nxt = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
    prev = cur;
    cur = nxt;
  }
  if (out.order.size() != k) throw Error(ErrorCode::PolygonNotClosed, "walls do not form a single cycle");
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t w = out.order[i], v = out.order[(i + 1) % k];
    out.entries.push_back({roots[w].norm(), d.edge(w, v).angle_denominator()});
  }

  const std::size_t s = period(out.entries);
  out.rotation = static_cast<int>(k / s);
  if (out.rotation > 1) {
    // Candidate isometry: wall order[i] -> order[i+s], fixed by three
    // independent walls, then checked on every wall.
    std::vector<std::size_t> picks;
    for (std::size_t i = 0; i < k && picks.size() < 3; ++i) {
      std::vector<std::vector<Integer>> cols;
      for (auto p : picks) cols.push_back(roots[out.order[p]].vector().coeffs());
      cols.push_back(roots[out.order[i]].vector().coeffs());
      if (rank(IntMatrix::from_columns(cols, 3)) == cols.size()) picks.push_back(i);
    }
    std::vector<std::vector<Integer>> from, to;
    for (auto p : picks) {
      from.push_back(roots[out.order[p]].vector().coeffs());
      to.push_back(roots[out.order[(p + s) % k]].vector().coeffs());
    }
    const auto inv = inverse(to_rational(IntMatrix::from_columns(from, 3)));
    const RatMatrix m = to_rational(IntMatrix::from_columns(to, 3)) * *inv;
    if (is_integral(m)) {
      const IntMatrix mi = to_integer(m);
      const IntMatrix f = form.matrix();
      bool ok = mi.transpose() * f * mi == f;
      for (std::size_t i = 0; i < k && ok; ++i) {
        const auto img = mi * std::span<const Integer>(roots[out.order[i]].vector().coeffs());
        ok = LatticeVector(img) == roots[out.order[(i + s) % k]].vector();
      }
      out.rotation_preserves_form = ok;
      if (ok) out.rotation_matrix = mi;
    }
  }
  return out;
}

}  // namespace vinberg
