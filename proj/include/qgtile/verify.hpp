#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qgtile/eigenfunction.hpp"
#include "qgtile/potential.hpp"
#include "qgtile/tiling.hpp"

namespace qgtile {

struct VerifyOptions {
  int range_grid = 201;
  int appendix_grid = 401;
  int g_grid = 201;
  int identity_grid = 201;
  int equivalence_samples = 100;
  std::uint64_t seed = 20240601;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  nlohmann::json details;
};

/// equivalence, ranges, appendixb, identities, eigenfunctions
const std::vector<std::string>& suite_names();

/// Runs one suite or, for "all", every suite in order.
std::vector<SuiteResult> run_verification(const std::string& suite, const VerifyOptions& opts = {});

nlohmann::json verification_report(const std::vector<SuiteResult>& results);

struct EquivalenceSweep {
  double max_residual = 0.0;
  double worst_lambda = 0.0;
  double worst_theta1 = 0.0;
  double worst_theta2 = 0.0;
  int samples = 0;
};

/// Random (lambda in [0.05, 40], theta in [-pi, pi]^2) samples of the
/// determinant against the factored closed form.
EquivalenceSweep equivalence_sweep(TilingName name, const Potential& q, int samples, std::uint64_t seed);

/// The graphene-type test potential on an edge of length a.
Potential graphene_potential(double a = 1.0);

struct EigenfunctionCheck {
  TilingName tiling;
  EigenfunctionKind kind;
  std::string potential;
  double lambda = 0.0;
  double continuity = 0.0;
  double kirchhoff = 0.0;
  std::size_t support = 0;
};

/// The three trH constructions plus polygon eigenfunctions on the other
/// assembled tilings, at the lowest admissible roots for q.
std::vector<EigenfunctionCheck> eigenfunction_checks(const Potential& q);

}  // namespace qgtile
