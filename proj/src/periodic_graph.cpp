#include "qgtile/periodic_graph.hpp"

#include <functional>

#include "qgtile/error.hpp"

namespace qgtile {

PeriodicGraph::PeriodicGraph(const TilingSpec& spec, int radius) {
  if (!spec.has_attachments()) throw UnsupportedTiling("tiling " + tiling_label(spec.name) + " has no vertex table");
  for (int n1 = -radius; n1 <= radius; ++n1)
    for (int n2 = -radius; n2 <= radius; ++n2)
      for (const auto& v : spec.vertices) {
        index_[{v.id, n1, n2}] = static_cast<int>(nodes_.size());
        nodes_.push_back({v.id, n1, n2});
      }
  incident_.resize(nodes_.size());

  // Where each edge endpoint sits relative to the edge's own cell.
  struct Seat {
    int vertex = 0;
    Phase phase;
  };
  std::map<int, Seat> start_seat, end_seat;
  for (const auto& v : spec.vertices)
    for (const auto& a : v.attachments) (a.end == EdgeEnd::Start ? start_seat : end_seat)[a.edge] = {v.id, a.phase};

  for (int e = 1; e <= spec.edge_count; ++e) {
    const auto s = start_seat.find(e), t = end_seat.find(e);
    if (s == start_seat.end() || t == end_seat.end())
      throw InputError("edge " + std::to_string(e) + " is not attached at both ends");
    for (int n1 = -radius; n1 <= radius; ++n1)
      for (int n2 = -radius; n2 <= radius; ++n2) {
        const auto u = node_index(s->second.vertex, n1 - s->second.phase.p1, n2 - s->second.phase.p2);
        const auto w = node_index(t->second.vertex, n1 - t->second.phase.p1, n2 - t->second.phase.p2);
        if (!u || !w) continue;
        const int id = static_cast<int>(links_.size());
        links_.push_back({e, n1, n2, *u, *w});
        incident_[*u].push_back(id);
        if (*w != *u) incident_[*w].push_back(id);
      }
  }
}

std::optional<int> PeriodicGraph::node_index(int vertex, int n1, int n2) const {
  const auto it = index_.find({vertex, n1, n2});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int PeriodicGraph::other_end(int link, int node) const {
  const Link& l = links_[link];
  return l.start == node ? l.end : l.start;
}

std::optional<PeriodicGraph::Cycle> PeriodicGraph::shortest_cycle(bool even_only, int max_length) const {
  std::vector<int> base;
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i)
    if (nodes_[i].n1 == 0 && nodes_[i].n2 == 0) base.push_back(i);

  for (int len = 3; len <= max_length; ++len) {
    if (even_only && len % 2 != 0) continue;
    for (int root : base) {
      Cycle path;
      std::vector<char> used(nodes_.size(), 0);
      std::function<bool(int)> dfs = [&](int u) -> bool {
        const int depth = static_cast<int>(path.links.size());
        for (int l : incident_[u]) {
          if (!path.links.empty() && l == path.links.back()) continue;
          const int w = other_end(l, u);
          if (depth + 1 == len) {
            if (w == root) {
              path.links.push_back(l);
              return true;
            }
            continue;
          }
          if (used[w]) continue;
          used[w] = 1;
          path.nodes.push_back(w);
          path.links.push_back(l);
          if (dfs(w)) return true;
          path.nodes.pop_back();
          path.links.pop_back();
          used[w] = 0;
        }
        return false;
      };
      used[root] = 1;
      path.nodes.push_back(root);
      if (dfs(root)) return path;
    }
  }
  return std::nullopt;
}

std::vector<bool> PeriodicGraph::triangle_links() const {
  std::vector<bool> tri(links_.size(), false);
  for (int l = 0; l < static_cast<int>(links_.size()); ++l) {
    const int u = links_[l].start, w = links_[l].end;
    for (int l2 : incident_[w]) {
      if (l2 == l) continue;
      const int x = other_end(l2, w);
      if (x == u) continue;
      for (int l3 : incident_[x])
        if (l3 != l2 && other_end(l3, x) == u) tri[l] = true;
    }
  }
  return tri;
}

}  // namespace qgtile
