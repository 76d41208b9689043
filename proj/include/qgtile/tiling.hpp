#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace qgtile {

/// The eleven Archimedean tilings. Only the last five carry vertex tables;
/// the first six are known by their dispersion forms alone.
enum class TilingName { S, H, T, ET, trS, TH, trH, SS, RTH, STH, trTH };

const std::vector<TilingName>& all_tilings();
/// trH, SS, RTH, STH, trTH
const std::vector<TilingName>& assembled_tilings();

std::string tiling_label(TilingName name);
/// Case-insensitive; accepts the labels above plus "st" for STH.
TilingName parse_tiling(const std::string& text);

enum class EdgeEnd { Start, End };

/// Exponents of the Floquet factor exp(i (p1 theta1 + p2 theta2)).
struct Phase {
  int p1 = 0;
  int p2 = 0;
  bool operator==(const Phase&) const = default;
};

struct Attachment {
  int edge = 0;  // 1-based
  EdgeEnd end = EdgeEnd::Start;
  Phase phase;
  int kirchhoff_sign = 1;
};

struct VertexSpec {
  int id = 0;
  std::vector<Attachment> attachments;
  std::size_t degree() const { return attachments.size(); }
};

struct TilingSpec {
  TilingName name = TilingName::S;
  int edge_count = 0;
  std::vector<VertexSpec> vertices;
  /// Period lattice in units of the edge length.
  std::array<std::array<double, 2>, 2> lattice_vectors{};

  bool has_attachments() const { return !vertices.empty(); }
  int matrix_dim() const { return 2 * edge_count; }
  std::size_t degree_sum() const;
};

struct QuasiMomentum {
  double theta1 = 0.0;
  double theta2 = 0.0;

  std::complex<double> alpha() const { return std::polar(1.0, theta1); }
  std::complex<double> beta() const { return std::polar(1.0, theta2); }
  std::complex<double> alpha_tilde() const { return std::polar(1.0, -theta1); }
  std::complex<double> factor(const Phase& p) const {
    return std::polar(1.0, static_cast<double>(p.p1) * theta1 + static_cast<double>(p.p2) * theta2);
  }
};

TilingSpec build_tiling(TilingName name);

struct TilingReport {
  std::size_t degree_sum = 0;
  /// Sum of phase exponents over the two endpoints of each edge.
  std::map<int, Phase> phase_totals;
  std::vector<std::string> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

TilingReport validate_tiling(const TilingSpec& spec);

nlohmann::json to_json(const TilingSpec& spec);

}  // namespace qgtile
