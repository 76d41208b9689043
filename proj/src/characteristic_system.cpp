#include "qgtile/characteristic_system.hpp"

#include <cmath>

#include "qgtile/dispersion.hpp"
#include "qgtile/error.hpp"

namespace qgtile {

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

cplx determinant(ComplexMatrix m) {
  const int n = m.n;
  for (const auto& z : m.a)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw InputError("matrix has non-finite entries");
  cplx det = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(m(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(m(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != col) {
      for (int c = col; c < n; ++c) std::swap(m(piv, c), m(col, c));
      det = -det;
    }
    const cplx d = m(col, col);
    det *= d;
    for (int r = col + 1; r < n; ++r) {
      const cplx f = m(r, col) / d;
      if (f == 0.0) continue;
      for (int c = col + 1; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

double hadamard_bound(const ComplexMatrix& m) {
  double bound = 1.0;
  for (int r = 0; r < m.n; ++r) {
    double s = 0.0;
    for (int c = 0; c < m.n; ++c) s += std::norm(m(r, c));
    bound *= std::sqrt(s);
  }
  return bound;
}

CharacteristicSystem assemble(const TilingSpec& spec, const EdgeSolutionBasis& basis, const QuasiMomentum& k) {
  if (!spec.has_attachments())
    throw UnsupportedTiling("tiling " + tiling_label(spec.name) + " has no vertex table to assemble");
  const int I = spec.edge_count;
  CharacteristicSystem sys;
  sys.matrix = ComplexMatrix(2 * I);

  // Adds w * (value or derivative of edge endpoint) to row r.
  auto add_value = [&](int r, const Attachment& at, cplx w) {
    const int e = at.edge - 1;
    if (at.end == EdgeEnd::Start) {
      sys.matrix(r, e) += w;
    } else {
      sys.matrix(r, e) += w * basis.C;
      sys.matrix(r, I + e) += w * basis.S;
    }
  };
  auto add_derivative = [&](int r, const Attachment& at, cplx w) {
    const int e = at.edge - 1;
    if (at.end == EdgeEnd::Start) {
      sys.matrix(r, I + e) += w;
    } else {
      sys.matrix(r, e) += w * basis.Cp;
      sys.matrix(r, I + e) += w * basis.Sp;
    }
  };

  int row = 0;
  for (const auto& v : spec.vertices) {
    for (std::size_t i = 0; i + 1 < v.attachments.size(); ++i) {
      if (row >= 2 * I) throw InputError("vertex table yields more rows than unknowns");
      add_value(row, v.attachments[i], k.factor(v.attachments[i].phase));
      add_value(row, v.attachments[i + 1], -k.factor(v.attachments[i + 1].phase));
      sys.tags.push_back({v.id, RowKind::Continuity});
      ++row;
    }
    if (row >= 2 * I) throw InputError("vertex table yields more rows than unknowns");
    for (const auto& at : v.attachments) add_derivative(row, at, static_cast<double>(at.kirchhoff_sign) * k.factor(at.phase));
    sys.tags.push_back({v.id, RowKind::Kirchhoff});
    ++row;
  }
  if (row != 2 * I) throw InputError("vertex table yields fewer rows than unknowns");
  return sys;
}

cplx determinant(const CharacteristicSystem& sys) { return determinant(sys.matrix); }

EquivalenceConstant equivalence_constant(TilingName name) {
  switch (name) {
    case TilingName::trH: return {-1, 1, -3.0, false};
    case TilingName::SS: return {3, 3, -1.0, false};
    case TilingName::RTH: return {2, 2, -2.0, false};
    case TilingName::STH: return {-6, 6, 1.0, true};
    case TilingName::trTH: return {2, 2, -1.0, false};
    default: break;
  }
  throw UnsupportedTiling("no determinant factorization for tiling " + tiling_label(name));
}

EquivalenceResult check_equivalence(const TilingSpec& spec, const EdgeSolutionBasis& basis, const QuasiMomentum& k,
                                    double even_tolerance) {
  const EquivalenceConstant ec = equivalence_constant(spec.name);
  if (!(std::abs(basis.C - basis.Sp) <= even_tolerance))
    throw PreconditionError("basis is not from an even potential: |C - S'| = " +
                            std::to_string(std::abs(basis.C - basis.Sp)));
  const CharacteristicSystem sys = assemble(spec, basis, k);
  EquivalenceResult res;
  res.det = determinant(sys);

  const QuasiMomentum kp{ec.reflect_theta1 ? -k.theta1 : k.theta1, k.theta2};
  const double p = evaluate_dispersion(spec.name, basis.Sp, kp);
  const double F = dispersion_form(spec.name).prefactor(basis.S, basis.Sp);
  res.closed_form = ec.kappa * k.factor({ec.m1, ec.m2}) * F * p;

  const double scale = hadamard_bound(sys.matrix);
  const double zero_level = 1e-14 * scale;
  if (std::abs(res.det) <= zero_level && std::abs(res.closed_form) <= zero_level) {
    res.residual = 0.0;
    return res;
  }
  res.residual = std::abs(res.det - res.closed_form) / std::max(std::abs(res.det), 1e-30);
  return res;
}

nlohmann::json to_json(const CharacteristicSystem& sys) {
  nlohmann::json j;
  j["dim"] = sys.dim();
  j["entries"] = nlohmann::json::array();
  for (int r = 0; r < sys.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < sys.dim(); ++c) row.push_back({sys.matrix(r, c).real(), sys.matrix(r, c).imag()});
    j["entries"].push_back(row);
  }
  j["rows"] = nlohmann::json::array();
  for (const auto& t : sys.tags)
    j["rows"].push_back({{"vertex", t.vertex}, {"kind", t.kind == RowKind::Continuity ? "continuity" : "kirchhoff"}});
  return j;
}

}  // namespace qgtile
