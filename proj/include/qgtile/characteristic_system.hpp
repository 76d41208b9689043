#pragma once

#include <complex>
#include <vector>

#include "json.hpp"
#include "qgtile/interval_solver.hpp"
#include "qgtile/tiling.hpp"

namespace qgtile {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major.
struct ComplexMatrix {
  int n = 0;
  std::vector<cplx> a;

  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim) {}
  static ComplexMatrix identity(int dim);

  cplx& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  const cplx& operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
};

/// Determinant by Gaussian elimination with partial pivoting.
cplx determinant(ComplexMatrix m);

/// Product of the Euclidean row norms, an upper bound for |det|.
double hadamard_bound(const ComplexMatrix& m);

enum class RowKind { Continuity, Kirchhoff };

struct RowTag {
  int vertex = 0;
  RowKind kind = RowKind::Continuity;
};

/// Unknowns are ordered A_1..A_I, B_1..B_I, where edge j carries
/// y_j = A_j C + B_j S.
struct CharacteristicSystem {
  ComplexMatrix matrix;
  std::vector<RowTag> tags;
  int dim() const { return matrix.n; }
};

CharacteristicSystem assemble(const TilingSpec& spec, const EdgeSolutionBasis& basis, const QuasiMomentum& k);

cplx determinant(const CharacteristicSystem& sys);

/// The determinant factors as kappa * exp(i (m1 theta1 + m2 theta2)) * F * p,
/// with F the prefactor and p the dispersion polynomial of the tiling. For
/// STH the polynomial is evaluated at (-theta1, theta2) because its vertex
/// table orients the first period the other way.
struct EquivalenceConstant {
  int m1 = 0;
  int m2 = 0;
  double kappa = 1.0;
  bool reflect_theta1 = false;
};

EquivalenceConstant equivalence_constant(TilingName name);

struct EquivalenceResult {
  cplx det;
  cplx closed_form;
  double residual = 0.0;
};

/// Relative discrepancy between the assembled determinant and the factored
/// closed form. Both sides below 1e-14 of the Hadamard bound count as equal
/// zeros. The basis must satisfy |C - S'| <= even_tolerance.
EquivalenceResult check_equivalence(const TilingSpec& spec, const EdgeSolutionBasis& basis, const QuasiMomentum& k,
                                    double even_tolerance = 1e-8);

nlohmann::json to_json(const CharacteristicSystem& sys);

}  // namespace qgtile
