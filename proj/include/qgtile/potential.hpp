#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace qgtile {

/// Edge potential q on [0, a], identical on every edge of the graph.
///
/// Three kinds are supported: the zero potential, the graphene-type family
/// q(x) = depth + (scale / 1.34) sin^2(pi x / scale), and a sampled table
/// interpolated piecewise linearly.
class Potential {
 public:
  enum class Kind { Zero, GrapheneSine, SampledTable };

  static Potential zero(double edge_length);
  /// Graphene-type potential; scale defaults to the edge length (even q).
  static Potential graphene_sine(double edge_length, double depth = -0.85, double scale = 0.0);
  /// Table with strictly increasing abscissae spanning [0, a]; a = abscissae.back().
  static Potential sampled(std::vector<double> abscissae, std::vector<double> values);
  /// Two-column CSV (x, q(x)); a header row is optional. When edge_length > 0
  /// the table must end at that length.
  static Potential from_csv(const std::filesystem::path& path, double edge_length = 0.0);

  Kind kind() const { return kind_; }
  double edge_length() const { return a_; }
  double depth() const { return depth_; }
  double scale() const { return scale_; }
  const std::vector<double>& abscissae() const { return xs_; }
  const std::vector<double>& values() const { return qs_; }

  double operator()(double x) const;

  /// max |q(x) - q(a - x)| over a uniform grid of `samples` points
  /// (table potentials additionally include every abscissa).
  double evenness_residual(std::size_t samples = 4097) const;

  /// A number not larger than inf q, used to start band searches where S' > 1.
  double lower_bound() const;

  /// max |q| (1 for the zero potential); scale for relative tolerances.
  double magnitude() const;

  std::string describe() const;

 private:
  Kind kind_ = Kind::Zero;
  double a_ = 1.0;
  double depth_ = 0.0;
  double scale_ = 1.0;
  std::vector<double> xs_;
  std::vector<double> qs_;
};

}  // namespace qgtile
