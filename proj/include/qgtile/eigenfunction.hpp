#pragma once

#include <string>
#include <vector>

#include "qgtile/interval_solver.hpp"
#include "qgtile/periodic_graph.hpp"
#include "qgtile/potential.hpp"
#include "qgtile/tiling.hpp"

namespace qgtile {

enum class EigenfunctionKind { PolygonDirichlet, DodecagonSprimeZero, TriangleRingSprimeMinus23 };

std::string eigenfunction_label(EigenfunctionKind kind);
EigenfunctionKind parse_eigenfunction_kind(const std::string& text);

/// On one edge copy, y(x) = alpha f(x) + beta f(a - x) with f = S(., rho),
/// x measured from the edge's Start.
struct EdgePiece {
  int link = 0;  // index into PeriodicGraph::links()
  int edge = 0;
  int n1 = 0, n2 = 0;
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<double> x;
  std::vector<double> y;
};

struct VertexResiduals {
  double continuity = 0.0;
  double kirchhoff = 0.0;
  std::size_t vertices = 0;
};

/// Compactly supported eigenfunction; every edge not listed carries zero.
struct EdgewiseFunction {
  TilingName tiling = TilingName::trH;
  EigenfunctionKind kind = EigenfunctionKind::PolygonDirichlet;
  std::string recipe;
  double lambda = 0.0;
  EdgeSolutionBasis basis;
  std::vector<EdgePiece> pieces;
  VertexResiduals residuals;
};

/// Continuity and Kirchhoff (outgoing derivative sum) defects at every
/// vertex touched by the support, computed from the piece coefficients and
/// the endpoint values of f.
VertexResiduals vertex_residuals(const PeriodicGraph& graph, const std::vector<EdgePiece>& pieces,
                                 const EdgeSolutionBasis& basis);

/// Builds one of the flat-band eigenfunctions. The polygon construction runs
/// on any tiling with a vertex table; the other two are specific to trH.
EdgewiseFunction build_eigenfunction(TilingName tiling, EigenfunctionKind kind, const Potential& q, double lambda,
                                     std::size_t samples = 256, const SolverOptions& opts = {});

}  // namespace qgtile
