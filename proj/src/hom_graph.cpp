#include "cyclerecon/hom_graph.hpp"

#include <algorithm>
#include <utility>

namespace cyclerecon {

namespace {

struct TarjanResult {
  std::vector<int> scc_id;  // ids in emission order: id 0 is a sink component
  int scc_count = 0;
};

TarjanResult tarjan_scc(const std::vector<std::vector<std::int32_t>>& adj) {
  const int count = static_cast<int>(adj.size());
  TarjanResult res;
  res.scc_id.assign(adj.size(), -1);
  std::vector<int> index(adj.size(), -1), low(adj.size(), 0);
  std::vector<int> stack;
  std::vector<char> on_stack(adj.size(), 0);
  std::vector<std::pair<int, std::size_t>> call;
  int next_index = 0;
  for (int root = 0; root < count; ++root) {
    if (index[root] != -1) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, ci] = call.back();
      if (ci == 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      bool descended = false;
      const auto& out = adj[static_cast<std::size_t>(v)];
      while (ci < out.size()) {
        const int w = out[ci++];
        if (index[w] == -1) {
          call.emplace_back(w, 0);
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        const int id = res.scc_count++;
        for (;;) {
          const int w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          res.scc_id[static_cast<std::size_t>(w)] = id;
          if (w == v) break;
        }
      }
      const int done = v;
      call.pop_back();
      if (!call.empty()) {
        const int parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return res;
}

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::vector<int>> enumerate_homs(const OrientationString& source,
                                             const OrientationString& target,
                                             std::size_t cap) {
  HomContext ctx(source, target);
  const int m = ctx.m(), n = ctx.n();
  std::vector<std::vector<int>> out;
  std::vector<int> img(static_cast<std::size_t>(m));
  std::size_t visited = 0;

  auto dfs = [&](auto&& self, int j) -> void {
    if (++visited > cap) throw EnumerationCapExceeded(cap);
    if (j == m) {
      if (ctx.step_ok(img[static_cast<std::size_t>(m - 1)], img[0],
                      source[static_cast<std::size_t>(m - 1)]))
        out.push_back(img);
      return;
    }
    const int a = img[static_cast<std::size_t>(j - 1)];
    const Orient sym = source[static_cast<std::size_t>(j - 1)];
    int cand[3] = {(a + n - 1) % n, a, (a + 1) % n};
    std::sort(cand, cand + 3);
    for (const int b : cand) {
      if (ctx.step_ok(a, b, sym)) {
        img[static_cast<std::size_t>(j)] = b;
        self(self, j + 1);
      }
    }
  };
  for (int v = 0; v < n; ++v) {
    img[0] = v;
    dfs(dfs, 1);
  }
  return out;
}

HomGraph build_hom_graph(const OrientationString& source,
                         const OrientationString& target,
                         std::vector<std::vector<int>> homs) {
  HomGraph g(source, target);
  g.homs = std::move(homs);
  HomContext ctx(source, target);
  const std::size_t count = g.homs.size();

  g.winds.resize(count);
  for (std::size_t i = 0; i < count; ++i)
    g.winds[i] = ctx.wind(g.homs[i]);

  UnionFind uf(count);
  g.up_out.assign(count, {});
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const Adjacency adj = ctx.adjacency(g.homs[i], g.homs[j]);
      if (adj.arcs == ArcPresence::None) continue;
      uf.unite(static_cast<int>(i), static_cast<int>(j));
      if (adj.motion == MotionClass::Up)
        g.up_out[i].push_back(static_cast<std::int32_t>(j));
      else if (adj.motion == MotionClass::Down)
        g.up_out[j].push_back(static_cast<std::int32_t>(i));
    }
  }

  g.component.assign(count, -1);
  std::vector<int> root_to_id(count, -1);
  for (std::size_t i = 0; i < count; ++i) {
    const int root = uf.find(static_cast<int>(i));
    if (root_to_id[static_cast<std::size_t>(root)] == -1) {
      root_to_id[static_cast<std::size_t>(root)] =
          static_cast<int>(g.components.size());
      HomGraph::Component comp;
      comp.wind = g.winds[i];
      g.components.push_back(comp);
    }
    const int id = root_to_id[static_cast<std::size_t>(root)];
    g.component[i] = id;
    auto& comp = g.components[static_cast<std::size_t>(id)];
    ++comp.size;
    if (g.winds[i] != comp.wind) comp.single_wind = false;
  }

  // A component is cyclic when its up arcs strongly connect it and it is
  // not a lone vertex.
  const TarjanResult scc = tarjan_scc(g.up_out);
  std::vector<int> comp_scc(g.components.size(), -2);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t c = static_cast<std::size_t>(g.component[i]);
    if (comp_scc[c] == -2)
      comp_scc[c] = scc.scc_id[i];
    else if (comp_scc[c] != scc.scc_id[i])
      comp_scc[c] = -1;  // split across several strong components
  }
  for (std::size_t c = 0; c < g.components.size(); ++c)
    g.components[c].cyclic = g.components[c].size >= 2 && comp_scc[c] >= 0;
  return g;
}

const std::vector<HomGraph::Component>& component_analysis(const HomGraph& g) {
  return g.components;
}

namespace {

// Movement-dependency digraph for the ordered pair (f, g), restricted to
// the vertices where they differ. For a source arc u -> v, an intermediate
// map moving only a set T must keep u -> v an arc of the image; whichever
// mixed assignment fails forces the corresponding membership implication.
std::vector<std::vector<std::int32_t>> dependency_digraph(
    const HomContext& ctx, std::span<const int> f, std::span<const int> g,
    const std::vector<int>& moved, const std::vector<int>& pos) {
  std::vector<std::vector<std::int32_t>> adj(moved.size());
  auto add_source_arc = [&](int u, int v) {
    const int pu = pos[static_cast<std::size_t>(u)];
    const int pv = pos[static_cast<std::size_t>(v)];
    if (pu < 0 || pv < 0) return;
    if (!ctx.target_arc(g[static_cast<std::size_t>(u)],
                        f[static_cast<std::size_t>(v)]))
      adj[static_cast<std::size_t>(pu)].push_back(pv);  // u in T forces v in T
    if (!ctx.target_arc(f[static_cast<std::size_t>(u)],
                        g[static_cast<std::size_t>(v)]))
      adj[static_cast<std::size_t>(pv)].push_back(pu);  // v in T forces u in T
  };
  const int m = ctx.m();
  for (int j = 0; j < m; ++j) {
    const int k = (j + 1) % m;
    const Orient sym = ctx.source()[static_cast<std::size_t>(j)];
    if (sym != Orient::Backward) add_source_arc(j, k);
    if (sym != Orient::Forward) add_source_arc(k, j);
  }
  return adj;
}

std::vector<int> moved_vertices(std::span<const int> f, std::span<const int> g) {
  std::vector<int> moved;
  for (std::size_t j = 0; j < f.size(); ++j)
    if (f[j] != g[j]) moved.push_back(static_cast<int>(j));
  return moved;
}

}  // namespace

bool edge_refinable(const HomContext& ctx, std::span<const int> f,
                    std::span<const int> g) {
  const std::vector<int> moved = moved_vertices(f, g);
  if (moved.size() <= 1) return false;
  std::vector<int> pos(static_cast<std::size_t>(ctx.m()), -1);
  for (std::size_t i = 0; i < moved.size(); ++i)
    pos[static_cast<std::size_t>(moved[i])] = static_cast<int>(i);
  const auto adj = dependency_digraph(ctx, f, g, moved, pos);
  return tarjan_scc(adj).scc_count > 1;
}

std::vector<std::vector<int>> refine_edge(const OrientationString& source,
                                          const OrientationString& target,
                                          const std::vector<int>& f,
                                          const std::vector<int>& g) {
  HomContext ctx(source, target);
  if (f.size() != source.size() || g.size() != source.size())
    throw std::invalid_argument("image sequences do not match the source");
  if (f == g) return {f};
  if (ctx.adjacency(f, g).arcs == ArcPresence::None)
    throw std::invalid_argument("refine_edge requires an adjacent pair");

  std::vector<std::vector<int>> path{f};
  auto split = [&](auto&& self, const std::vector<int>& a,
                   const std::vector<int>& b) -> void {
    const std::vector<int> moved = moved_vertices(a, b);
    std::vector<int> pos(static_cast<std::size_t>(ctx.m()), -1);
    for (std::size_t i = 0; i < moved.size(); ++i)
      pos[static_cast<std::size_t>(moved[i])] = static_cast<int>(i);
    bool splittable = false;
    std::vector<int> mid;
    if (moved.size() > 1) {
      const auto adj = dependency_digraph(ctx, a, b, moved, pos);
      const TarjanResult scc = tarjan_scc(adj);
      if (scc.scc_count > 1) {
        // The first strong component Tarjan emits is terminal: membership
        // implications never leave it, so moving exactly it is legal.
        mid = a;
        for (std::size_t i = 0; i < moved.size(); ++i)
          if (scc.scc_id[i] == 0)
            mid[static_cast<std::size_t>(moved[i])] =
                b[static_cast<std::size_t>(moved[i])];
        splittable = true;
      }
    }
    if (!splittable) {
      if (ctx.adjacency(path.back(), b).arcs == ArcPresence::None)
        throw std::logic_error("refinement produced a non-adjacent pair");
      path.push_back(b);
      return;
    }
    if (ctx.first_violation(mid))
      throw std::logic_error("refinement produced a non-homomorphism");
    self(self, a, mid);
    self(self, mid, b);
  };
  split(split, f, g);
  return path;
}

std::string export_dot(const HomGraph& g, const DotOptions& options) {
  std::string out = "digraph hom {\n";
  if (g.size() == 0) {
    out += "}\n";
    return out;
  }
  auto node_name = [&](std::size_t i) {
    return "\"" + images_to_string(g.homs[i]) + "\"";
  };
  if (options.cluster_components) {
    for (std::size_t c = 0; c < g.components.size(); ++c) {
      const auto& comp = g.components[c];
      out += "  subgraph cluster_" + std::to_string(c) + " {\n";
      out += "    label=\"wind " + std::to_string(comp.wind) + ", " +
             (comp.cyclic ? "cyclic" : "not cyclic") + "\";\n";
      for (std::size_t i = 0; i < g.size(); ++i)
        if (g.component[i] == static_cast<int>(c))
          out += "    " + node_name(i) + ";\n";
      out += "  }\n";
    }
  } else {
    for (std::size_t i = 0; i < g.size(); ++i) out += "  " + node_name(i) + ";\n";
  }
  HomContext ctx(g.source, g.target);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;  // reflexive loops are left out of the drawing
      const Adjacency adj = ctx.adjacency(g.homs[i], g.homs[j]);
      if (adj.arcs != ArcPresence::Forward && adj.arcs != ArcPresence::Both)
        continue;
      out += "  " + node_name(i) + " -> " + node_name(j);
      if (adj.motion == MotionClass::Up)
        out += " [penwidth=2, color=firebrick]";
      out += ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace cyclerecon
