#ifndef CYCLERECON_HOM_GRAPH_HPP
#define CYCLERECON_HOM_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclerecon/hom.hpp"
#include "cyclerecon/orientation.hpp"

namespace cyclerecon {

class EnumerationCapExceeded : public std::runtime_error {
 public:
  explicit EnumerationCapExceeded(std::size_t cap)
      : std::runtime_error("homomorphism enumeration exceeded the cap of " +
                           std::to_string(cap) + " visited assignments") {}
};

inline constexpr std::size_t kDefaultEnumerationCap = 5'000'000;

// Every homomorphism between the two cycles, as image vectors in
// lexicographic order. Backtracking over partial assignments; throws
// EnumerationCapExceeded past `cap` visited nodes.
std::vector<std::vector<int>> enumerate_homs(
    const OrientationString& source, const OrientationString& target,
    std::size_t cap = kDefaultEnumerationCap);

// The explicit Hom digraph over an enumerated set of maps: winds,
// component partition (over the symmetrized adjacency), the up-motion arc
// lists, and per-component summaries.
struct HomGraph {
  struct Component {
    int wind = 0;          // wind of the first member
    bool single_wind = true;
    std::size_t size = 0;
    bool cyclic = false;   // up arcs strongly connect the component, non-trivially
  };

  HomGraph(OrientationString src, OrientationString tgt)
      : source(std::move(src)), target(std::move(tgt)) {}

  OrientationString source;
  OrientationString target;
  std::vector<std::vector<int>> homs;   // lexicographic image vectors
  std::vector<int> winds;               // per map
  std::vector<int> component;           // per map, ids in first-seen order
  std::vector<std::vector<std::int32_t>> up_out;  // arcs i -> j with Up motion
  std::vector<Component> components;

  std::size_t size() const { return homs.size(); }
};

HomGraph build_hom_graph(const OrientationString& source,
                         const OrientationString& target,
                         std::vector<std::vector<int>> homs);

inline HomGraph build_hom_graph(const OrientationString& source,
                                const OrientationString& target,
                                std::size_t cap = kDefaultEnumerationCap) {
  return build_hom_graph(source, target, enumerate_homs(source, target, cap));
}

// Per-component (wind, size, cyclic) rows, ordered by component id.
const std::vector<HomGraph::Component>& component_analysis(const HomGraph& g);

// Is the Hom-graph edge (f, g) refinable through an intermediate map that
// agrees with g on a proper subset of the moved vertices? Decided by strong
// connectivity of the movement-dependency digraph on those vertices.
bool edge_refinable(const HomContext& ctx, std::span<const int> f,
                    std::span<const int> g);

// Splits the edge into a path of non-refinable edges, recursively moving a
// terminal strong component of the dependency digraph first. (f, g) must be
// adjacent; returns {f} when f == g.
std::vector<std::vector<int>> refine_edge(const OrientationString& source,
                                          const OrientationString& target,
                                          const std::vector<int>& f,
                                          const std::vector<int>& g);

struct DotOptions {
  bool cluster_components = true;
};

// Deterministic DOT rendering: vertices labelled by image sequences,
// components clustered, arcs whose motion is Up drawn bold.
std::string export_dot(const HomGraph& g, const DotOptions& options = {});

}  // namespace cyclerecon

#endif
