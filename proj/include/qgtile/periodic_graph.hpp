#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "qgtile/tiling.hpp"

namespace qgtile {

/// Finite window of the infinite periodic graph: all cells n with
/// |n1|, |n2| <= radius. A vertex table attachment (e, end, P) at vertex v
/// means that endpoint `end` of the copy of edge e in cell n + P meets the
/// copy of v in cell n.
class PeriodicGraph {
 public:
  struct Node {
    int vertex;  // 1-based vertex id within the cell
    int n1, n2;
  };
  struct Link {
    int edge;  // 1-based edge id within the cell
    int n1, n2;
    int start;  // node index of x = 0
    int end;    // node index of x = a
  };

  PeriodicGraph(const TilingSpec& spec, int radius = 4);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Link>& links() const { return links_; }
  /// Link indices incident to a node.
  const std::vector<int>& incident(int node) const { return incident_[node]; }
  std::optional<int> node_index(int vertex, int n1, int n2) const;
  int other_end(int link, int node) const;

  /// A directed walk u0 -> u1 -> ... -> u0 through distinct nodes.
  struct Cycle {
    std::vector<int> nodes;  // u0 .. u_{m-1}
    std::vector<int> links;  // links[i] joins nodes[i] and nodes[i+1 mod m]
  };

  /// Shortest simple cycle through a node of cell (0,0); with even_only the
  /// length must be even.
  std::optional<Cycle> shortest_cycle(bool even_only, int max_length = 12) const;

  /// Link indices lying on some triangle (3-cycle).
  std::vector<bool> triangle_links() const;

 private:
  std::vector<Node> nodes_;
  std::vector<Link> links_;
  std::vector<std::vector<int>> incident_;
  std::map<std::array<int, 3>, int> index_;
};

}  // namespace qgtile
