#include "vinberg/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <unordered_set>

#include "vinberg/error.hpp"
#include "vinberg/json.hpp"

namespace vinberg {

std::string to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::None: return "none";
    case EdgeKind::Simple: return "simple";
    case EdgeKind::Double: return "double";
    case EdgeKind::Sextuple: return "sextuple";
    case EdgeKind::Parallel: return "parallel";
    case EdgeKind::Divergent: return "divergent";
  }
  return "unknown";
}

int EdgeLabel::angle_denominator() const {
  switch (kind) {
    case EdgeKind::None: return 2;
    case EdgeKind::Simple: return 3;
    case EdgeKind::Double: return 4;
    case EdgeKind::Sextuple: return 6;
    default: return 0;
  }
}

EdgeLabel classify_edge(const Integer& gij, const Integer& gii, const Integer& gjj) {
  if (gij > 0) throw Error(ErrorCode::NotAChamber, "positive inner product " + gij.get_str() + " between walls");
  EdgeLabel e;
  e.cos2 = Rational(gij * gij, gii * gjj);
  e.cos2.canonicalize();
  if (e.cos2 == 0) e.kind = EdgeKind::None;
  else if (e.cos2 == Rational(1, 4)) e.kind = EdgeKind::Simple;
  else if (e.cos2 == Rational(1, 2)) e.kind = EdgeKind::Double;
  else if (e.cos2 == Rational(3, 4)) e.kind = EdgeKind::Sextuple;
  else if (e.cos2 == 1) e.kind = EdgeKind::Parallel;
  else if (e.cos2 > 1) e.kind = EdgeKind::Divergent;
  else throw Error(ErrorCode::InvalidAngle, "cos^2 = " + to_string(e.cos2) + " is not a Coxeter angle");
  return e;
}

CoxeterDiagram::CoxeterDiagram(QuadraticForm form, std::vector<Root> roots, IntMatrix gram,
                               std::vector<EdgeLabel> edges)
    : form_(std::move(form)), roots_(std::move(roots)), gram_(std::move(gram)), edges_(std::move(edges)) {}

CoxeterDiagram build_diagram(const std::vector<Root>& roots, const QuadraticForm& form) {
  IntMatrix g = gram_matrix(roots, form);
  const std::size_t k = roots.size();
  std::vector<EdgeLabel> edges(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) edges[i * k + j] = edges[j * k + i] = classify_edge(g(i, j), g(i, i), g(j, j));
  return CoxeterDiagram(form, roots, std::move(g), std::move(edges));
}

namespace {

const char* family_letter(Family f) {
  switch (f) {
    case Family::A: case Family::AffineA: return "A";
    case Family::B: case Family::AffineB: return "B";
    case Family::AffineC: return "C";
    case Family::D: case Family::AffineD: return "D";
    case Family::E: case Family::AffineE: return "E";
    case Family::F: case Family::AffineF: return "F";
    case Family::G: case Family::AffineG: return "G";
  }
  return "?";
}

}  // namespace

std::string Component::name() const {
  return std::string(family_letter(family)) + (affine() ? "~" : "") + std::to_string(rank);
}

std::string Component::tex() const {
  std::string letter = family_letter(family);
  return (affine() ? "\\widetilde{" + letter + "}" : letter) + "_" + std::to_string(rank);
}

SubdiagramType::SubdiagramType(std::vector<Component> components) : components_(std::move(components)) {
  std::sort(components_.begin(), components_.end());
}

SubdiagramType SubdiagramType::parse(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<Component> out;
  auto fail = [&] { throw Error(ErrorCode::Parse, "bad subdiagram type '" + text + "'"); };
  while (in >> tok) {
    if (tok.empty() || tok[0] < 'A' || tok[0] > 'G') fail();
    char letter = tok[0];
    std::size_t i = 1;
    bool affine = false;
    if (i < tok.size() && tok[i] == '~') {
      affine = true;
      ++i;
    }
    std::size_t j = i;
    while (j < tok.size() && std::isdigit(static_cast<unsigned char>(tok[j]))) ++j;
    if (j == i) fail();
    int rank = std::stoi(tok.substr(i, j - i));
    int power = 1;
    if (j < tok.size()) {
      if (tok[j] != '^' || j + 1 == tok.size()) fail();
      power = std::stoi(tok.substr(j + 1));
    }
    Family f;
    switch (letter) {
      case 'A': f = affine ? Family::AffineA : Family::A; break;
      case 'B': f = affine ? Family::AffineB : Family::B; break;
      case 'C': if (!affine) fail(); f = Family::AffineC; break;
      case 'D': f = affine ? Family::AffineD : Family::D; break;
      case 'E': f = affine ? Family::AffineE : Family::E; break;
      case 'F': f = affine ? Family::AffineF : Family::F; break;
      case 'G': f = affine ? Family::AffineG : Family::G; break;
      default: fail(); f = Family::A;
    }
    for (int k = 0; k < power; ++k) out.push_back(Component{f, rank});
  }
  return SubdiagramType(std::move(out));
}

int SubdiagramType::rank() const {
  int r = 0;
  for (const auto& c : components_) r += c.rank;
  return r;
}

namespace {

template <class F>
std::string grouped(const std::vector<Component>& cs, F render, const std::string& power_open,
                    const std::string& power_close) {
  std::string out;
  for (std::size_t i = 0; i < cs.size();) {
    std::size_t j = i;
    while (j < cs.size() && cs[j] == cs[i]) ++j;
    if (!out.empty()) out += ' ';
    out += render(cs[i]);
    if (j - i > 1) out += power_open + std::to_string(j - i) + power_close;
    i = j;
  }
  return out;
}

}  // namespace

std::string SubdiagramType::name() const {
  return grouped(components_, [](const Component& c) { return c.name(); }, "^", "");
}

std::string SubdiagramType::tex() const {
  return grouped(components_, [](const Component& c) { return c.tex(); }, "^{", "}");
}

std::string to_string(SubdiagramKind k) {
  switch (k) {
    case SubdiagramKind::Elliptic: return "elliptic";
    case SubdiagramKind::Affine: return "affine";
    case SubdiagramKind::Other: return "other";
  }
  return "unknown";
}

std::vector<std::vector<std::size_t>> connected_components(const CoxeterDiagram& d,
                                                           const std::vector<std::size_t>& subset) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(subset.size(), false);
  for (std::size_t s = 0; s < subset.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      comp.push_back(subset[a]);
      for (std::size_t b = 0; b < subset.size(); ++b)
        if (!seen[b] && d.joined(subset[a], subset[b])) {
          seen[b] = true;
          stack.push_back(b);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

struct LocalGraph {
  std::size_t k;
  std::vector<std::vector<std::size_t>> adj;
  std::map<std::pair<std::size_t, std::size_t>, EdgeKind> kind;

  EdgeKind at(std::size_t a, std::size_t b) const { return kind.at({std::min(a, b), std::max(a, b)}); }
};

// Vertices along a path graph starting from a leaf.
std::vector<std::size_t> path_order(const LocalGraph& g) {
  std::size_t start = 0;
  for (std::size_t v = 0; v < g.k; ++v)
    if (g.adj[v].size() <= 1) {
      start = v;
      break;
    }
  std::vector<std::size_t> order{start};
  std::size_t prev = g.k;
  while (order.size() < g.k) {
    std::size_t cur = order.back();
    std::size_t nxt = g.k;
    for (auto w : g.adj[cur])
      if (w != prev) nxt = w;
    prev = cur;
    order.push_back(nxt);
  }
  return order;
}

// Walks an arm from the branch vertex; returns the arm's vertices in order.
std::vector<std::size_t> arm(const LocalGraph& g, std::size_t branch, std::size_t first) {
  std::vector<std::size_t> out{first};
  std::size_t prev = branch;
  while (g.adj[out.back()].size() == 2) {
    std::size_t cur = out.back();
    std::size_t nxt = g.adj[cur][0] == prev ? g.adj[cur][1] : g.adj[cur][0];
    prev = cur;
    out.push_back(nxt);
  }
  return out;
}

}  // namespace

std::optional<Component> recognize_component(const CoxeterDiagram& d, const std::vector<std::size_t>& vertices) {
  const std::size_t k = vertices.size();
  if (k == 0) return std::nullopt;
  if (k == 1) return Component{Family::A, 1};
  LocalGraph g{k, std::vector<std::vector<std::size_t>>(k), {}};
  std::size_t edges = 0, doubles = 0, sextuples = 0;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      EdgeKind kind = d.edge(vertices[a], vertices[b]).kind;
      if (kind == EdgeKind::None) continue;
      if (kind == EdgeKind::Divergent) return std::nullopt;
      if (kind == EdgeKind::Parallel) {
        if (k == 2) return Component{Family::AffineA, 1};
        return std::nullopt;
      }
      ++edges;
      if (kind == EdgeKind::Double) ++doubles;
      if (kind == EdgeKind::Sextuple) ++sextuples;
      g.adj[a].push_back(b);
      g.adj[b].push_back(a);
      g.kind[{a, b}] = kind;
    }
  const int ik = static_cast<int>(k);
  std::size_t max_deg = 0;
  for (const auto& a : g.adj) max_deg = std::max(max_deg, a.size());

  if (edges == k) {
    if (k >= 3 && max_deg == 2 && doubles == 0 && sextuples == 0) return Component{Family::AffineA, ik - 1};
    return std::nullopt;
  }
  if (edges != k - 1) return std::nullopt;

  if (sextuples > 0) {
    if (sextuples != 1 || doubles != 0) return std::nullopt;
    if (k == 2) return Component{Family::G, 2};
    if (k == 3 && max_deg == 2) {
      auto order = path_order(g);
      if (g.at(order[0], order[1]) == EdgeKind::Sextuple || g.at(order[1], order[2]) == EdgeKind::Sextuple)
        return Component{Family::AffineG, 2};
    }
    return std::nullopt;
  }

  if (max_deg <= 2) {
    auto order = path_order(g);
    std::vector<std::size_t> dpos;
    for (std::size_t i = 0; i + 1 < k; ++i)
      if (g.at(order[i], order[i + 1]) == EdgeKind::Double) dpos.push_back(i);
    if (dpos.empty()) return Component{Family::A, ik};
    if (dpos.size() == 1) {
      std::size_t i = dpos[0];
      if (i == 0 || i == k - 2) return Component{Family::B, ik};
      if (k == 4) return Component{Family::F, 4};
      if (k == 5) return Component{Family::AffineF, 4};
      return std::nullopt;
    }
    if (dpos.size() == 2 && dpos[0] == 0 && dpos[1] == k - 2 && k >= 3) return Component{Family::AffineC, ik - 1};
    return std::nullopt;
  }

  std::vector<std::size_t> branches;
  for (std::size_t v = 0; v < k; ++v)
    if (g.adj[v].size() >= 3) branches.push_back(v);

  if (branches.size() == 1 && g.adj[branches[0]].size() == 4) {
    if (k == 5 && doubles == 0) return Component{Family::AffineD, 4};
    return std::nullopt;
  }
  if (branches.size() == 1 && g.adj[branches[0]].size() == 3) {
    const std::size_t c = branches[0];
    std::vector<std::vector<std::size_t>> arms;
    for (auto w : g.adj[c]) arms.push_back(arm(g, c, w));
    std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    const std::size_t a = arms[0].size(), b = arms[1].size(), l = arms[2].size();
    if (doubles == 0) {
      if (a == 1 && b == 1) return Component{Family::D, ik};
      if (a == 1 && b == 2 && l >= 2 && l <= 4) return Component{Family::E, ik};
      if (a == 2 && b == 2 && l == 2) return Component{Family::AffineE, 6};
      if (a == 1 && b == 3 && l == 3) return Component{Family::AffineE, 7};
      if (a == 1 && b == 2 && l == 5) return Component{Family::AffineE, 8};
      return std::nullopt;
    }
    if (doubles == 1 && a == 1 && b == 1) {
      // The double edge must be the terminal edge of an arm; with two short
      // arms it must sit on the long one.
      for (const auto& ar : arms) {
        std::size_t before = ar.size() >= 2 ? ar[ar.size() - 2] : c;
        if (g.at(before, ar.back()) == EdgeKind::Double && (ar.size() == l)) return Component{Family::AffineB, ik - 1};
      }
    }
    return std::nullopt;
  }
  if (branches.size() == 2 && doubles == 0 && k >= 6) {
    for (auto br : branches) {
      if (g.adj[br].size() != 3) return std::nullopt;
      int leaves = 0;
      for (auto w : g.adj[br])
        if (g.adj[w].size() == 1) ++leaves;
      if (leaves != 2) return std::nullopt;
    }
    return Component{Family::AffineD, ik - 1};
  }
  return std::nullopt;
}

SubdiagramClass classify_subdiagram(const CoxeterDiagram& d, const std::vector<std::size_t>& subset) {
  if (subset.empty()) return {SubdiagramKind::Elliptic, SubdiagramType{}};
  std::vector<Component> comps;
  bool all_elliptic = true, all_affine = true, named = true;
  for (const auto& comp : connected_components(d, subset)) {
    IntMatrix g = d.gram().principal(comp);
    Inertia in = inertia(g);
    auto c = recognize_component(d, comp);
    const bool pd = in.positive == comp.size();
    const bool affine_matrix = in.negative == 0 && in.zero == 1;
    if (c) {
      if (c->affine() != affine_matrix || (!c->affine() && !pd))
        throw Error(ErrorCode::InternalConsistency, "structural type " + c->name() + " contradicts the Gram matrix");
      comps.push_back(*c);
      (c->affine() ? all_elliptic : all_affine) = false;
    } else {
      if (pd || affine_matrix)
        throw Error(ErrorCode::InternalConsistency, "definite component missing from the catalog");
      named = false;
    }
  }
  if (!named) return {SubdiagramKind::Other, SubdiagramType{}};
  if (all_elliptic) return {SubdiagramKind::Elliptic, SubdiagramType(std::move(comps))};
  if (all_affine) return {SubdiagramKind::Affine, SubdiagramType(std::move(comps))};
  return {SubdiagramKind::Other, SubdiagramType{}};
}

std::vector<Integer> affine_marks(const CoxeterDiagram& d, const std::vector<std::size_t>& subset) {
  auto cls = classify_subdiagram(d, subset);
  if (cls.kind != SubdiagramKind::Affine || cls.type.components().size() != 1)
    throw Error(ErrorCode::NotAffine, "subset is not a connected affine subdiagram");
  auto ker = nullspace(to_rational(d.gram().principal(subset)));
  if (ker.size() != 1) throw Error(ErrorCode::InternalConsistency, "affine component with kernel of dimension != 1");
  auto marks = primitive_integer_multiple(ker[0]);
  if (marks[0] < 0)
    for (auto& m : marks) m = -m;
  for (const auto& m : marks)
    if (m <= 0) throw Error(ErrorCode::InternalConsistency, "affine marks are not all positive");
  return marks;
}

namespace {

std::string subset_key(const std::vector<std::size_t>& s) {
  std::string k;
  k.reserve(s.size() * 2);
  for (auto v : s) {
    k.push_back(static_cast<char>(v & 0xff));
    k.push_back(static_cast<char>((v >> 8) & 0xff));
  }
  return k;
}

struct Pending {
  std::vector<std::size_t> subset;
  bool degenerate;
};

// Depth-first enumeration of elliptic subsets with an incremental LDL^T of
// the Gram submatrix; a candidate extends a PD set iff its new pivot is > 0.
void elliptic_dfs(const CoxeterDiagram& d, std::vector<std::size_t>& current, std::vector<std::vector<Rational>>& lrows,
                  std::vector<Rational>& pivots, std::size_t max_size, Census& out, std::vector<Pending>& pending) {
  const IntMatrix& g = d.gram();
  const std::size_t start = current.empty() ? 0 : current.back() + 1;
  for (std::size_t v = start; v < d.size(); ++v) {
    bool divergent = false;
    for (auto u : current)
      if (d.edge(u, v).kind == EdgeKind::Divergent || d.edge(u, v).kind == EdgeKind::Parallel) divergent = true;
    if (divergent && current.size() > 1) continue;  // contains a non-elliptic pair: not critical
    const std::size_t k = current.size();
    std::vector<Rational> l(k);
    Rational piv = g(v, v);
    for (std::size_t j = 0; j < k; ++j) {
      Rational s = g(v, current[j]);
      for (std::size_t i = 0; i < j; ++i) s -= l[i] * lrows[j][i] * pivots[i];
      l[j] = s / pivots[j];
      piv -= l[j] * l[j] * pivots[j];
    }
    current.push_back(v);
    if (piv > 0) {
      if (current.size() > max_size) throw Error(ErrorCode::InternalConsistency, "elliptic set larger than n");
      out.elliptic.push_back(current);
      lrows.push_back(std::move(l));
      pivots.push_back(piv);
      elliptic_dfs(d, current, lrows, pivots, max_size, out, pending);
      lrows.pop_back();
      pivots.pop_back();
    } else {
      pending.push_back(Pending{current, piv == 0});
    }
    current.pop_back();
  }
}

}  // namespace

Census census(const CoxeterDiagram& d) {
  Census out;
  std::vector<std::size_t> current;
  std::vector<std::vector<Rational>> lrows;
  std::vector<Rational> pivots;
  std::vector<Pending> pending;
  // An elliptic set spans a positive definite subspace, so has at most n elements.
  elliptic_dfs(d, current, lrows, pivots, static_cast<std::size_t>(d.form().n()), out, pending);

  std::unordered_set<std::string> elliptic_keys;
  for (const auto& s : out.elliptic) elliptic_keys.insert(subset_key(s));
  for (const auto& p : pending) {
    bool critical = true;
    if (p.subset.size() > 2) {
      std::vector<std::size_t> sub;
      for (std::size_t drop = 0; drop + 1 < p.subset.size() && critical; ++drop) {
        sub.clear();
        for (std::size_t i = 0; i < p.subset.size(); ++i)
          if (i != drop) sub.push_back(p.subset[i]);
        critical = elliptic_keys.count(subset_key(sub)) > 0;
      }
    }
    if (!critical) continue;
    (p.degenerate ? out.parabolic : out.indefinite).push_back(p.subset);
  }

  const QuadraticForm& form = d.form();
  const std::size_t n = static_cast<std::size_t>(form.n());
  for (const auto& s : out.parabolic) {
    auto marks = affine_marks(d, s);
    LatticeVector e(form.dimension());
    for (std::size_t i = 0; i < s.size(); ++i) e += marks[i] * d.roots()[s[i]].vector();
    e = e.primitive_part();
    if (e[0] < 0) e = -e;
    bool seen = false;
    for (const auto& ip : out.ideal_points)
      if (ip.e == e) seen = true;
    if (seen) continue;
    IdealPoint ip;
    ip.e = e;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (inner_product(d.roots()[i].vector(), e, form) == 0) ip.orthogonal.push_back(i);
    ip.rank = rank(d.gram().principal(ip.orthogonal));
    std::vector<Component> comps;
    bool all_affine = true;
    for (const auto& comp : connected_components(d, ip.orthogonal)) {
      auto cls = classify_subdiagram(d, comp);
      if (cls.kind == SubdiagramKind::Affine) {
        ip.affine_part.insert(ip.affine_part.end(), comp.begin(), comp.end());
        for (const auto& c : cls.type.components()) comps.push_back(c);
      } else {
        all_affine = false;
      }
    }
    std::sort(ip.affine_part.begin(), ip.affine_part.end());
    ip.affine_type = SubdiagramType(std::move(comps));
    ip.complete = all_affine && static_cast<std::size_t>(ip.affine_type.rank()) + 1 == n;
    out.ideal_points.push_back(std::move(ip));
  }
  std::sort(out.ideal_points.begin(), out.ideal_points.end(),
            [](const IdealPoint& a, const IdealPoint& b) { return a.orthogonal < b.orthogonal; });
  return out;
}

std::vector<SubdiagramType> maximal_affine_types(const Census& c) {
  std::vector<SubdiagramType> out;
  for (const auto& ip : c.ideal_points)
    if (std::find(out.begin(), out.end(), ip.affine_type) == out.end()) out.push_back(ip.affine_type);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubdiagramType> maximal_affine_types(const CoxeterDiagram& d) { return maximal_affine_types(census(d)); }

RenderFormat parse_render_format(const std::string& name) {
  if (name == "dot") return RenderFormat::Dot;
  if (name == "tikz") return RenderFormat::Tikz;
  if (name == "json") return RenderFormat::Json;
  throw Error(ErrorCode::UnknownFormat, "unknown diagram format '" + name + "'");
}

namespace {

std::string render_dot(const CoxeterDiagram& d) {
  std::ostringstream os;
  os << "graph coxeter {\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < d.size(); ++i)
    os << "  n" << i << " [label=\"" << i + 1 << "\", tooltip=\"" << d.roots()[i].vector().to_string() << "\"];\n";
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const auto& e = d.edge(i, j);
      std::string attr;
      switch (e.kind) {
        case EdgeKind::None: continue;
        case EdgeKind::Simple: break;
        case EdgeKind::Double: attr = " [color=\"black:black\"]"; break;
        case EdgeKind::Sextuple: attr = " [color=\"black:black:black\"]"; break;
        case EdgeKind::Parallel: attr = " [penwidth=3]"; break;
        case EdgeKind::Divergent: attr = " [style=dashed]"; break;
      }
      os << "  n" << i << " -- n" << j << attr << ";\n";
    }
  os << "}\n";
  return os.str();
}

std::string render_tikz(const CoxeterDiagram& d) {
  std::ostringstream os;
  os << "\\begin{tikzpicture}\n";
  const std::size_t k = d.size();
  for (std::size_t i = 0; i < k; ++i) {
    double angle = 90.0 + 360.0 * static_cast<double>(i) / static_cast<double>(k);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", angle);
    os << "  \\node[circle,draw,inner sep=1.5pt] (v" << i << ") at (" << buf << ":2) {" << i + 1 << "};\n";
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      std::string a = "(v" + std::to_string(i) + ")", b = "(v" + std::to_string(j) + ")";
      switch (d.edge(i, j).kind) {
        case EdgeKind::None: break;
        case EdgeKind::Simple: os << "  \\draw " << a << " -- " << b << ";\n"; break;
        case EdgeKind::Double: os << "  \\draw[double] " << a << " -- " << b << ";\n"; break;
        case EdgeKind::Sextuple:
          os << "  \\draw[double,double distance=2pt] " << a << " -- " << b << ";\n";
          os << "  \\draw " << a << " -- " << b << ";\n";
          break;
        case EdgeKind::Parallel: os << "  \\draw[line width=3] " << a << " -- " << b << ";\n"; break;
        case EdgeKind::Divergent: os << "  \\draw[dashed] " << a << " -- " << b << ";\n"; break;
      }
    }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace

Json diagram_json(const CoxeterDiagram& d) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["form"] = form_json(d.form());
  Json nodes = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i)
    nodes.push_back(Json{{"index", i}, {"root", vector_json(d.roots()[i].vector())}, {"norm", integer_json(d.roots()[i].norm())}});
  Json edges = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j2 = i + 1; j2 < d.size(); ++j2) {
      const auto& e = d.edge(i, j2);
      if (e.kind == EdgeKind::None) continue;
      edges.push_back(Json{{"i", i},
                           {"j", j2},
                           {"kind", to_string(e.kind)},
                           {"cos2_num", integer_json(e.cos2.get_num())},
                           {"cos2_den", integer_json(e.cos2.get_den())}});
    }
  j["nodes"] = nodes;
  j["edges"] = edges;
  return j;
}

namespace {

std::string render_json(const CoxeterDiagram& d) { return diagram_json(d).dump(2) + "\n"; }

}  // namespace

std::string render(const CoxeterDiagram& d, RenderFormat format) {
  switch (format) {
    case RenderFormat::Dot: return render_dot(d);
    case RenderFormat::Tikz: return render_tikz(d);
    case RenderFormat::Json: return render_json(d);
  }
  throw Error(ErrorCode::UnknownFormat, "unknown diagram format");
}

}  // namespace vinberg
