#include "qgtile/tiling.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "qgtile/error.hpp"

namespace qgtile {

namespace {

constexpr EdgeEnd St = EdgeEnd::Start;
constexpr EdgeEnd En = EdgeEnd::End;

Attachment at(int edge, EdgeEnd end, int sign = 1, Phase phase = {}) { return {edge, end, phase, sign}; }

std::vector<VertexSpec> numbered(std::vector<std::vector<Attachment>> rows) {
  std::vector<VertexSpec> out;
  for (std::size_t i = 0; i < rows.size(); ++i) out.push_back({static_cast<int>(i + 1), std::move(rows[i])});
  return out;
}

std::vector<VertexSpec> truncated_hexagonal() {
  return numbered({
      {at(6, St), at(1, St), at(5, St)},
      {at(1, En), at(2, En), at(7, En)},
      {at(7, St), at(4, St, 1, {0, 1}), at(6, En, -1)},
      {at(2, St), at(3, St), at(8, St)},
      {at(3, En), at(4, En), at(9, En)},
      {at(8, En), at(5, En, 1, {-1, 0}), at(9, St, -1)},
  });
}

std::vector<VertexSpec> snub_square() {
  return numbered({
      {at(1, En), at(2, En), at(5, En), at(6, St, -1), at(9, St, -1, {1, 0})},
      {at(2, St, -1), at(3, En), at(6, En, 1, {0, 1}), at(8, St, -1, {1, 1}), at(10, En, 1, {1, 0})},
      {at(1, St), at(3, St), at(4, St), at(7, St, 1, {0, 1}), at(10, St)},
      {at(4, En), at(5, St, -1), at(7, En), at(8, En), at(9, En)},
  });
}

std::vector<VertexSpec> rhombitrihexagonal() {
  return numbered({
      {at(2, St, -1), at(3, En), at(4, En), at(7, St, -1, {0, 1})},
      {at(1, En), at(2, En), at(12, En), at(9, En, 1, {0, 1})},
      {at(1, St), at(3, St), at(5, St), at(6, St)},
      {at(6, En), at(7, En), at(8, En), at(11, En)},
      {at(4, St, 1, {1, 0}), at(10, St), at(11, St), at(12, St)},
      {at(8, St, -1), at(9, St, -1), at(10, En), at(5, En, 1, {1, 0})},
  });
}

std::vector<VertexSpec> snub_trihexagonal() {
  return numbered({
      {at(1, En), at(6, En), at(15, En), at(12, En), at(13, En)},
      {at(6, St), at(5, St), at(10, St, 1, {0, 1}), at(14, En, -1), at(9, En, -1, {0, 1})},
      {at(4, En), at(5, En), at(7, En, 1, {-1, 1}), at(15, St, -1, {-1, 1}), at(11, St, -1, {0, 1})},
      {at(3, St), at(4, St), at(13, St, 1, {-1, 0}), at(14, St, 1, {-1, 0}), at(8, En, -1, {-1, 1})},
      {at(2, En), at(3, En), at(10, En), at(11, En), at(12, St, -1, {-1, 0})},
      {at(1, St), at(2, St), at(7, St), at(8, St), at(9, St)},
  });
}

std::vector<VertexSpec> truncated_trihexagonal() {
  return numbered({
      {at(1, St), at(2, St), at(10, St)},
      {at(2, En), at(3, En), at(9, En)},
      {at(3, St), at(4, St), at(5, St)},
      {at(1, En), at(4, En), at(14, En)},
      {at(18, St), at(13, St), at(14, St)},
      {at(12, En), at(13, En), at(17, En)},
      {at(15, St), at(12, St), at(11, St)},
      {at(16, En), at(11, En), at(10, En)},
      {at(9, St), at(17, St, 1, {1, 0}), at(8, St)},
      {at(8, En), at(7, En), at(18, En, 1, {1, 0})},
      {at(7, St), at(16, St, 1, {0, 1}), at(6, St)},
      {at(5, En), at(6, En), at(15, En, 1, {0, 1})},
  });
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

const std::vector<TilingName>& all_tilings() {
  static const std::vector<TilingName> names{TilingName::S,   TilingName::H,  TilingName::T,   TilingName::ET,
                                             TilingName::trS, TilingName::TH, TilingName::trH, TilingName::SS,
                                             TilingName::RTH, TilingName::STH, TilingName::trTH};
  return names;
}

const std::vector<TilingName>& assembled_tilings() {
  static const std::vector<TilingName> names{TilingName::trH, TilingName::SS, TilingName::RTH, TilingName::STH,
                                             TilingName::trTH};
  return names;
}

std::string tiling_label(TilingName name) {
  switch (name) {
    case TilingName::S: return "S";
    case TilingName::H: return "H";
    case TilingName::T: return "T";
    case TilingName::ET: return "ET";
    case TilingName::trS: return "trS";
    case TilingName::TH: return "TH";
    case TilingName::trH: return "trH";
    case TilingName::SS: return "SS";
    case TilingName::RTH: return "RTH";
    case TilingName::STH: return "STH";
    case TilingName::trTH: return "trTH";
  }
  return "?";
}

TilingName parse_tiling(const std::string& text) {
  const std::string key = lower(text);
  if (key == "st") return TilingName::STH;
  for (TilingName n : all_tilings())
    if (lower(tiling_label(n)) == key) return n;
  throw InputError("unknown tiling '" + text + "'");
}

std::size_t TilingSpec::degree_sum() const {
  std::size_t total = 0;
  for (const auto& v : vertices) total += v.degree();
  return total;
}

TilingSpec build_tiling(TilingName name) {
  const double r3 = std::sqrt(3.0);
  const double r2 = std::sqrt(2.0);
  TilingSpec spec;
  spec.name = name;
  switch (name) {
    case TilingName::S:
      spec.edge_count = 2;
      spec.lattice_vectors = {{{1.0, 0.0}, {0.0, 1.0}}};
      break;
    case TilingName::H:
      spec.edge_count = 3;
      spec.lattice_vectors = {{{r3, 0.0}, {r3 / 2.0, 1.5}}};
      break;
    case TilingName::T:
      spec.edge_count = 3;
      spec.lattice_vectors = {{{1.0, 0.0}, {0.5, r3 / 2.0}}};
      break;
    case TilingName::ET:
      spec.edge_count = 5;
      spec.lattice_vectors = {{{1.0, 0.0}, {0.5, 1.0 + r3 / 2.0}}};
      break;
    case TilingName::trS:
      spec.edge_count = 6;
      spec.lattice_vectors = {{{1.0 + r2, 0.0}, {0.0, 1.0 + r2}}};
      break;
    case TilingName::TH:
      spec.edge_count = 6;
      spec.lattice_vectors = {{{2.0, 0.0}, {1.0, r3}}};
      break;
    case TilingName::trH:
      spec.edge_count = 9;
      spec.vertices = truncated_hexagonal();
      spec.lattice_vectors = {{{2.0 + r3, 0.0}, {1.0 + r3 / 2.0, 1.5 + r3}}};
      break;
    case TilingName::SS:
      spec.edge_count = 10;
      spec.vertices = snub_square();
      spec.lattice_vectors = {{{(r3 + 1.0) / 2.0, (r3 + 1.0) / 2.0}, {(r3 + 1.0) / 2.0, -(r3 + 1.0) / 2.0}}};
      break;
    case TilingName::RTH:
      spec.edge_count = 12;
      spec.vertices = rhombitrihexagonal();
      spec.lattice_vectors = {{{(r3 + 1.0) / 2.0, (r3 + 3.0) / 2.0}, {(r3 + 1.0) / 2.0, -(r3 + 3.0) / 2.0}}};
      break;
    case TilingName::STH:
      spec.edge_count = 15;
      spec.vertices = snub_trihexagonal();
      spec.lattice_vectors = {{{2.0, r3}, {2.5, -r3 / 2.0}}};
      break;
    case TilingName::trTH:
      spec.edge_count = 18;
      spec.vertices = truncated_trihexagonal();
      spec.lattice_vectors = {{{(3.0 + 3.0 * r3) / 2.0, (3.0 + r3) / 2.0}, {(3.0 + 3.0 * r3) / 2.0, -(3.0 + r3) / 2.0}}};
      break;
  }
  return spec;
}

TilingReport validate_tiling(const TilingSpec& spec) {
  TilingReport report;
  report.degree_sum = spec.degree_sum();
  if (!spec.has_attachments()) return report;

  std::map<std::pair<int, int>, int> seen;
  for (const auto& v : spec.vertices) {
    if (v.attachments.empty()) report.diagnostics.push_back("vertex " + std::to_string(v.id) + " has no attachments");
    for (const auto& a : v.attachments) {
      if (a.edge < 1 || a.edge > spec.edge_count) {
        report.diagnostics.push_back("vertex " + std::to_string(v.id) + " references edge " + std::to_string(a.edge) +
                                     " outside 1.." + std::to_string(spec.edge_count));
        continue;
      }
      if (a.kirchhoff_sign != 1 && a.kirchhoff_sign != -1)
        report.diagnostics.push_back("vertex " + std::to_string(v.id) + " edge " + std::to_string(a.edge) +
                                     " has sign " + std::to_string(a.kirchhoff_sign));
      ++seen[{a.edge, a.end == EdgeEnd::Start ? 0 : 1}];
      // Outgoing derivatives: a Start end enters with +y', an End end with -y'.
      // Any global row sign is allowed, but it must be shared by the vertex.
      const int oriented = a.kirchhoff_sign * (a.end == EdgeEnd::Start ? 1 : -1);
      const auto& first = v.attachments.front();
      if (oriented != first.kirchhoff_sign * (first.end == EdgeEnd::Start ? 1 : -1))
        report.diagnostics.push_back("vertex " + std::to_string(v.id) + " edge " + std::to_string(a.edge) +
                                     " has a Kirchhoff sign inconsistent with its orientation");
      auto& tot = report.phase_totals[a.edge];
      tot.p1 += a.phase.p1;
      tot.p2 += a.phase.p2;
    }
  }
  for (int e = 1; e <= spec.edge_count; ++e) {
    for (int end = 0; end < 2; ++end) {
      const auto it = seen.find({e, end});
      const int count = it == seen.end() ? 0 : it->second;
      const std::string what = "edge " + std::to_string(e) + " endpoint " + (end == 0 ? "Start" : "End");
      if (count == 0) report.diagnostics.push_back(what + " unattached");
      if (count > 1) report.diagnostics.push_back(what + " attached " + std::to_string(count) + " times");
    }
  }
  if (report.degree_sum != static_cast<std::size_t>(2 * spec.edge_count))
    report.diagnostics.push_back("degree sum " + std::to_string(report.degree_sum) + " differs from 2I = " +
                                 std::to_string(2 * spec.edge_count));
  return report;
}

nlohmann::json to_json(const TilingSpec& spec) {
  nlohmann::json j;
  j["tiling"] = tiling_label(spec.name);
  j["edge_count"] = spec.edge_count;
  j["matrix_dim"] = spec.matrix_dim();
  j["lattice_vectors"] = {{spec.lattice_vectors[0][0], spec.lattice_vectors[0][1]},
                          {spec.lattice_vectors[1][0], spec.lattice_vectors[1][1]}};
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : spec.vertices) {
    nlohmann::json jv;
    jv["id"] = v.id;
    jv["attachments"] = nlohmann::json::array();
    for (const auto& a : v.attachments) {
      jv["attachments"].push_back({{"edge", a.edge},
                                   {"end", a.end == EdgeEnd::Start ? "start" : "end"},
                                   {"phase", {a.phase.p1, a.phase.p2}},
                                   {"sign", a.kirchhoff_sign}});
    }
    j["vertices"].push_back(jv);
  }
  return j;
}

}  // namespace qgtile
