#include "qgtile/eigenfunction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "qgtile/error.hpp"
#include "qgtile/spectrum.hpp"

namespace qgtile {

namespace {

constexpr double kGeneratorTolerance = 1e-10;

// Coefficients of a function written along a traversal u -> w of a link as
// y(t) = p f(t) + r f(a - t), converted to the link's own orientation.
EdgePiece oriented_piece(const PeriodicGraph& g, int link, int from, double p, double r) {
  const auto& l = g.links()[link];
  EdgePiece piece;
  piece.link = link;
  piece.edge = l.edge;
  piece.n1 = l.n1;
  piece.n2 = l.n2;
  if (l.start == from) {
    piece.alpha = p;
    piece.beta = r;
  } else {
    piece.alpha = r;
    piece.beta = p;
  }
  return piece;
}

std::vector<EdgePiece> polygon_pieces(const PeriodicGraph& g, double sprime) {
  const bool even = sprime < 0.0;
  const auto cycle = g.shortest_cycle(even);
  if (!cycle) throw PreconditionError(std::string("no ") + (even ? "even " : "") + "cycle found in the graph window");
  const double s = sprime < 0.0 ? -1.0 : 1.0;
  std::vector<EdgePiece> out;
  double c = 1.0;
  for (std::size_t i = 0; i < cycle->links.size(); ++i) {
    out.push_back(oriented_piece(g, cycle->links[i], cycle->nodes[i], c, 0.0));
    c *= s;
  }
  return out;
}

// Dodecagon (alternating triangle edges p_i -> q_i and links q_i -> p_{i+1})
// plus the two remaining edges of each of its six triangles.
std::vector<EdgePiece> dodecagon_pieces(const PeriodicGraph& g, double ratio) {
  const auto tri = g.triangle_links();
  int root = -1;
  for (int i = 0; i < static_cast<int>(g.nodes().size()); ++i)
    if (g.nodes()[i].n1 == 0 && g.nodes()[i].n2 == 0) {
      root = i;
      break;
    }

  std::vector<int> nodes{root}, links;
  std::vector<char> used(g.nodes().size(), 0);
  used[root] = 1;
  std::function<bool(int)> dfs = [&](int u) -> bool {
    const std::size_t depth = links.size();
    const bool want_triangle = depth % 2 == 0;
    for (int l : g.incident(u)) {
      if (static_cast<bool>(tri[l]) != want_triangle) continue;
      const int w = g.other_end(l, u);
      if (depth + 1 == 12) {
        if (w == root) {
          links.push_back(l);
          return true;
        }
        continue;
      }
      if (used[w]) continue;
      used[w] = 1;
      nodes.push_back(w);
      links.push_back(l);
      if (dfs(w)) return true;
      nodes.pop_back();
      links.pop_back();
      used[w] = 0;
    }
    return false;
  };
  if (!dfs(root)) throw PreconditionError("no alternating 12-cycle found");

  std::vector<EdgePiece> out;
  std::vector<double> amp(6);
  amp[0] = 1.0;
  for (int i = 1; i < 6; ++i) amp[i] = amp[i - 1] * ratio;
  for (int i = 0; i < 6; ++i) {
    const int p = nodes[2 * i], q = nodes[2 * i + 1];
    const int d_link = links[2 * i], link_out = links[2 * i + 1];
    const double A = amp[i], An = amp[(i + 1) % 6];

    // Third vertex r of the triangle on p q, and the spokes r -> p, r -> q.
    int spoke_p = -1, spoke_q = -1, r = -1;
    for (int l1 : g.incident(p)) {
      if (l1 == d_link || !tri[l1]) continue;
      const int x = g.other_end(l1, p);
      for (int l2 : g.incident(q))
        if (l2 != d_link && tri[l2] && g.other_end(l2, q) == x) {
          spoke_p = l1;
          spoke_q = l2;
          r = x;
        }
    }
    if (r < 0) throw PreconditionError("triangle on a dodecagon edge not found");

    out.push_back(oriented_piece(g, d_link, p, -A, A));
    out.push_back(oriented_piece(g, link_out, q, An, -A));
    out.push_back(oriented_piece(g, spoke_p, r, A, 0.0));
    out.push_back(oriented_piece(g, spoke_q, r, -A, 0.0));
  }
  return out;
}

void check_generator(EigenfunctionKind kind, const EdgeSolutionBasis& b) {
  double defect = 0.0;
  std::string what;
  switch (kind) {
    case EigenfunctionKind::PolygonDirichlet:
      defect = std::abs(b.S);
      what = "S(a)";
      break;
    case EigenfunctionKind::DodecagonSprimeZero:
      defect = std::abs(b.Sp);
      what = "S'(a)";
      break;
    case EigenfunctionKind::TriangleRingSprimeMinus23:
      defect = std::abs(b.Sp + 2.0 / 3.0);
      what = "S'(a) + 2/3";
      break;
  }
  if (!(defect <= kGeneratorTolerance))
    throw PreconditionError("lambda = " + std::to_string(b.lambda) + " is not a root: |" + what +
                            "| = " + std::to_string(defect));
}

}  // namespace

std::string eigenfunction_label(EigenfunctionKind kind) {
  switch (kind) {
    case EigenfunctionKind::PolygonDirichlet: return "polygon_dirichlet";
    case EigenfunctionKind::DodecagonSprimeZero: return "dodecagon_sprime_zero";
    case EigenfunctionKind::TriangleRingSprimeMinus23: return "triangle_ring_sprime_minus23";
  }
  return "?";
}

EigenfunctionKind parse_eigenfunction_kind(const std::string& text) {
  for (auto k : {EigenfunctionKind::PolygonDirichlet, EigenfunctionKind::DodecagonSprimeZero,
                 EigenfunctionKind::TriangleRingSprimeMinus23})
    if (eigenfunction_label(k) == text) return k;
  throw InputError("unknown eigenfunction kind '" + text + "'");
}

VertexResiduals vertex_residuals(const PeriodicGraph& g, const std::vector<EdgePiece>& pieces,
                                 const EdgeSolutionBasis& b) {
  std::map<int, const EdgePiece*> by_link;
  std::set<int> touched;
  for (const auto& p : pieces) {
    by_link[p.link] = &p;
    touched.insert(g.links()[p.link].start);
    touched.insert(g.links()[p.link].end);
  }
  VertexResiduals res;
  for (int v : touched) {
    std::vector<double> values;
    double flux = 0.0;
    for (int l : g.incident(v)) {
      const auto it = by_link.find(l);
      const double alpha = it == by_link.end() ? 0.0 : it->second->alpha;
      const double beta = it == by_link.end() ? 0.0 : it->second->beta;
      // y(0) = beta S(a), y'(0) = alpha - beta S'(a); y(a) = alpha S(a), y'(a) = alpha S'(a) - beta.
      if (g.links()[l].start == v) {
        values.push_back(beta * b.S);
        flux += alpha - beta * b.Sp;
      }
      if (g.links()[l].end == v) {
        values.push_back(alpha * b.S);
        flux -= alpha * b.Sp - beta;
      }
    }
    for (std::size_t i = 1; i < values.size(); ++i)
      res.continuity = std::max(res.continuity, std::abs(values[i] - values[0]));
    res.kirchhoff = std::max(res.kirchhoff, std::abs(flux));
    ++res.vertices;
  }
  return res;
}

EdgewiseFunction build_eigenfunction(TilingName tiling, EigenfunctionKind kind, const Potential& q, double lambda,
                                     std::size_t samples, const SolverOptions& opts) {
  if (kind != EigenfunctionKind::PolygonDirichlet && tiling != TilingName::trH)
    throw UnsupportedTiling(eigenfunction_label(kind) + " is only defined for trH");
  require_even(q);
  const IntervalSolver solver(q, opts);
  EdgewiseFunction fn;
  fn.tiling = tiling;
  fn.kind = kind;
  fn.lambda = lambda;
  fn.basis = solver.solve(lambda);
  check_generator(kind, fn.basis);

  const PeriodicGraph graph(build_tiling(tiling));
  switch (kind) {
    case EigenfunctionKind::PolygonDirichlet:
      fn.pieces = polygon_pieces(graph, fn.basis.Sp);
      fn.recipe = "cycle of Dirichlet solutions, coefficient ratio sign(S'(a)) per step";
      break;
    case EigenfunctionKind::DodecagonSprimeZero:
      fn.pieces = dodecagon_pieces(graph, -1.0);
      fn.recipe = "dodecagon with triangle spokes, alternating amplitudes";
      break;
    case EigenfunctionKind::TriangleRingSprimeMinus23:
      fn.pieces = dodecagon_pieces(graph, 1.0);
      fn.recipe = "dodecagon with triangle spokes, constant amplitudes";
      break;
  }

  const auto sm = solver.sample(lambda, samples);
  for (auto& p : fn.pieces) {
    p.x = sm.x;
    p.y.resize(sm.x.size());
    const std::size_t m = sm.x.size() - 1;
    for (std::size_t k = 0; k <= m; ++k) p.y[k] = p.alpha * sm.S[k] + p.beta * sm.S[m - k];
  }
  fn.residuals = vertex_residuals(graph, fn.pieces, fn.basis);
  return fn;
}

}  // namespace qgtile
