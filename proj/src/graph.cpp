#include "hgraph/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace hgraph {

Multigraph::Multigraph(int vertex_count, std::vector<std::pair<Vertex, Vertex>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) throw GraphError("graph must have at least one vertex");
  incidence_.resize(vertex_count_);
  for (Edge e = 0; e < edge_count(); ++e) {
    auto [u, v] = edges_[e];
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
      throw GraphError("edge " + std::to_string(e) + " has an endpoint out of range");
    if (u == v) throw GraphError("edge " + std::to_string(e) + " is a loop");
    incidence_[u].push_back(e);
    incidence_[v].push_back(e);
  }
  std::vector<bool> seen(vertex_count_, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Edge e : incidence_[x]) {
      Vertex y = other_end(e, x);
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != vertex_count_)
    throw GraphError("graph is disconnected: " + std::to_string(reached) + " of " +
                     std::to_string(vertex_count_) + " vertices reachable from vertex 0");
}

Vertex Multigraph::other_end(Edge e, Vertex v) const {
  auto [a, b] = edges_[e];
  return a == v ? b : a;
}

bool Multigraph::incident(Edge e, Vertex v) const {
  auto [a, b] = edges_[e];
  return a == v || b == v;
}

Vertex Multigraph::origin(DirectedEdge d) const {
  return d.forward ? edges_[d.edge].first : edges_[d.edge].second;
}

Vertex Multigraph::terminus(DirectedEdge d) const {
  return d.forward ? edges_[d.edge].second : edges_[d.edge].first;
}

int Multigraph::multiplicity(Vertex u, Vertex v) const {
  if (u == v) return 0;
  int count = 0;
  for (Edge e : incidence_[u])
    if (other_end(e, u) == v) ++count;
  return count;
}

std::vector<Edge> Multigraph::edges_between(Vertex u, Vertex v) const {
  std::vector<Edge> out;
  if (u == v) return out;
  for (Edge e : incidence_[u])
    if (other_end(e, u) == v) out.push_back(e);
  return out;
}

bool Multigraph::is_simple() const {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (auto [u, v] : edges_)
    if (!seen.insert(std::minmax(u, v)).second) return false;
  return true;
}

int genus(const Multigraph& g) { return g.edge_count() - g.vertex_count() + 1; }

std::vector<Edge> cut_edges(const Multigraph& g, const std::vector<bool>& side_a) {
  std::vector<Edge> out;
  for (Edge e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.ends(e);
    if (side_a[u] != side_a[v]) out.push_back(e);
  }
  return out;
}

int edge_connectivity_exhaustive(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 1) return kUnboundedConnectivity;
  if (n > 24) throw BudgetExceeded("exhaustive cut enumeration limited to 24 vertices");
  // Vertex n-1 stays on side B, so each bipartition is visited once.
  int best = kUnboundedConnectivity;
  const std::uint32_t limit = 1u << (n - 1);
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    int size = 0;
    for (auto [u, v] : g.edges()) {
      bool a = u < n - 1 && ((mask >> u) & 1u);
      bool b = v < n - 1 && ((mask >> v) & 1u);
      if (a != b) ++size;
    }
    best = std::min(best, size);
  }
  return best;
}

namespace {

// Edmonds-Karp on the symmetric capacity matrix of an undirected multigraph.
int max_flow(const std::vector<std::vector<int>>& capacity, int source, int sink) {
  const int n = static_cast<int>(capacity.size());
  auto residual = capacity;
  int flow = 0;
  while (true) {
    std::vector<int> parent(n, -1);
    parent[source] = source;
    std::queue<int> queue;
    queue.push(source);
    while (!queue.empty() && parent[sink] < 0) {
      int x = queue.front();
      queue.pop();
      for (int y = 0; y < n; ++y) {
        if (parent[y] < 0 && residual[x][y] > 0) {
          parent[y] = x;
          queue.push(y);
        }
      }
    }
    if (parent[sink] < 0) return flow;
    int push = std::numeric_limits<int>::max();
    for (int y = sink; y != source; y = parent[y]) push = std::min(push, residual[parent[y]][y]);
    for (int y = sink; y != source; y = parent[y]) {
      residual[parent[y]][y] -= push;
      residual[y][parent[y]] += push;
    }
    flow += push;
  }
}

}  // namespace

int edge_connectivity_maxflow(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 1) return kUnboundedConnectivity;
  std::vector<std::vector<int>> capacity(n, std::vector<int>(n, 0));
  for (auto [u, v] : g.edges()) {
    ++capacity[u][v];
    ++capacity[v][u];
  }
  int best = kUnboundedConnectivity;
  for (Vertex t = 1; t < n; ++t) best = std::min(best, max_flow(capacity, 0, t));
  return best;
}

int edge_connectivity(const Multigraph& g) {
  return g.vertex_count() <= 20 ? edge_connectivity_exhaustive(g) : edge_connectivity_maxflow(g);
}

bool is_k_edge_connected(const Multigraph& g, int k) { return edge_connectivity(g) >= k; }

std::vector<Edge> bridges(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<Edge> out;
  int counter = 0;
  // Iterative DFS; the tree edge is skipped by id so parallel edges count.
  struct Frame {
    Vertex v;
    Edge via;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, -1, 0}};
  order[0] = low[0] = counter++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto incident = g.incident_edges(f.v);
    if (f.next < incident.size()) {
      Edge e = incident[f.next++];
      if (e == f.via) continue;
      Vertex w = g.other_end(e, f.v);
      if (order[w] < 0) {
        order[w] = low[w] = counter++;
        stack.push_back({w, e, 0});
      } else {
        low[f.v] = std::min(low[f.v], order[w]);
      }
    } else {
      Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Vertex parent = stack.back().v;
        low[parent] = std::min(low[parent], low[done.v]);
        if (low[done.v] > order[parent]) out.push_back(done.via);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BridgeContraction contract_bridges(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> is_bridge(g.edge_count(), false);
  for (Edge e : bridges(g)) {
    is_bridge[e] = true;
    auto [u, v] = g.ends(e);
    int a = find(u), b = find(v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Vertex> vertex_map(n, -1);
  std::vector<int> root_id(n, -1);
  int next = 0;
  for (Vertex x = 0; x < n; ++x) {
    int r = find(x);
    if (root_id[r] < 0) root_id[r] = next++;
    vertex_map[x] = root_id[r];
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Edge> edge_map(g.edge_count(), -1);
  for (Edge e = 0; e < g.edge_count(); ++e) {
    if (is_bridge[e]) continue;
    auto [u, v] = g.ends(e);
    edge_map[e] = static_cast<Edge>(edges.size());
    edges.emplace_back(vertex_map[u], vertex_map[v]);
  }
  return {Multigraph(next, std::move(edges)), std::move(vertex_map), std::move(edge_map)};
}

// ---------------------------------------------------------------------------

Multigraph banana(std::span<const int> lengths) {
  if (lengths.empty()) throw GraphError("banana graph needs at least one path");
  std::vector<std::pair<Vertex, Vertex>> edges;
  int next = 2;
  for (int len : lengths) {
    if (len < 1) throw GraphError("banana path lengths must be at least 1");
    Vertex prev = 0;
    for (int i = 1; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
  }
  return Multigraph(next, std::move(edges));
}

Multigraph banana(std::initializer_list<int> lengths) {
  return banana(std::span<const int>(lengths.begin(), lengths.size()));
}

Multigraph banana_unit(int n) {
  if (n < 1) throw GraphError("B_n needs n >= 1");
  return banana(std::vector<int>(n, 1));
}

Multigraph theta(int l) {
  if (l < 1) throw GraphError("theta graph needs l >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  const Vertex y0 = l + 1;
  for (int i = 0; i < l; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i < l; ++i) edges.emplace_back(y0 + i, y0 + i + 1);
  edges.emplace_back(0, y0);
  edges.emplace_back(0, y0);
  edges.emplace_back(l, y0 + l);
  edges.emplace_back(l, y0 + l);
  return Multigraph(2 * (l + 1), std::move(edges));
}

Multigraph cycle(int n) {
  if (n < 2) throw GraphError("cycle needs at least 2 vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Multigraph(n, std::move(edges));
}

Multigraph path(int n) {
  if (n < 1) throw GraphError("path needs at least 1 vertex");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Multigraph(n, std::move(edges));
}

Multigraph star(int leaves) {
  if (leaves < 0) throw GraphError("star needs a nonnegative number of leaves");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Multigraph(leaves + 1, std::move(edges));
}

Multigraph complete(int n) {
  if (n < 1) throw GraphError("complete graph needs at least 1 vertex");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Multigraph(n, std::move(edges));
}

Multigraph subdivide(const Multigraph& g, int k) {
  if (k < 1) throw GraphError("subdivision factor must be at least 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  int next = g.vertex_count();
  for (auto [u, v] : g.edges()) {
    Vertex prev = u;
    for (int i = 1; i < k; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, v);
  }
  return Multigraph(next, std::move(edges));
}

// ---------------------------------------------------------------------------
// Canonical labeling by individualization-refinement.  Colors are ranks of
// labeling-independent signatures, so the leaf matrices are comparable
// across different labelings of the same graph.

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix multiplicity_matrix(const Multigraph& g) {
  const int n = g.vertex_count();
  Matrix a(n, std::vector<int>(n, 0));
  for (auto [u, v] : g.edges()) {
    ++a[u][v];
    ++a[v][u];
  }
  return a;
}

int count_colors(const std::vector<int>& color) {
  return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
}

void refine(const Matrix& a, std::vector<int>& color) {
  const int n = static_cast<int>(color.size());
  int classes = count_colors(color);
  while (true) {
    using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<Signature> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (int u = 0; u < n; ++u)
        if (a[v][u] > 0) sig[v].second.emplace_back(color[u], a[v][u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                  distinct.begin());
    int now = static_cast<int>(distinct.size());
    if (now == classes) return;
    classes = now;
  }
}

std::vector<int> leaf_key(const Matrix& a, const std::vector<int>& color) {
  const int n = static_cast<int>(color.size());
  std::vector<int> at(n);
  for (int v = 0; v < n; ++v) at[color[v]] = v;
  std::vector<int> key;
  key.reserve(n * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) key.push_back(a[at[i]][at[j]]);
  return key;
}

void search(const Matrix& a, std::vector<int> color, std::vector<int>& best, bool& have_best) {
  refine(a, color);
  const int n = static_cast<int>(color.size());
  if (count_colors(color) == n) {
    auto key = leaf_key(a, color);
    if (!have_best || key < best) {
      best = std::move(key);
      have_best = true;
    }
    return;
  }
  // First non-singleton cell.
  std::vector<int> size(n, 0);
  for (int c : color) ++size[c];
  int target = 0;
  while (size[target] < 2) ++target;
  for (int v = 0; v < n; ++v) {
    if (color[v] != target) continue;
    std::vector<int> next(n);
    for (int u = 0; u < n; ++u) next[u] = 2 * color[u] + (u == v ? 0 : 1);
    // Compress to ranks; v now precedes the rest of its former cell.
    std::vector<int> values = next;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int& c : next)
      c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
    search(a, std::move(next), best, have_best);
  }
}

}  // namespace

CanonicalForm canonical_form(const Multigraph& g) {
  const int n = g.vertex_count();
  Matrix a = multiplicity_matrix(g);
  std::vector<int> color(n, 0);
  std::vector<int> best;
  bool have_best = false;
  search(a, std::move(color), best, have_best);
  return {n, std::move(best)};
}

bool are_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<std::vector<Vertex>> vertex_automorphisms(const Multigraph& g, std::size_t limit) {
  const int n = g.vertex_count();
  Matrix a = multiplicity_matrix(g);
  std::vector<int> color(n, 0);
  refine(a, color);  // automorphisms preserve the equitable partition
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> image(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, int x) -> void {
    if (x == n) {
      if (out.size() >= limit)
        throw BudgetExceeded("more than " + std::to_string(limit) + " vertex automorphisms");
      out.push_back(image);
      return;
    }
    for (Vertex y = 0; y < n; ++y) {
      if (used[y] || color[y] != color[x]) continue;
      bool ok = true;
      for (Vertex z = 0; z < x && ok; ++z) ok = a[x][z] == a[y][image[z]];
      if (!ok) continue;
      image[x] = y;
      used[y] = true;
      self(self, x + 1);
      used[y] = false;
    }
    image[x] = -1;
  };
  extend(extend, 0);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Multigraph from_canonical(const CanonicalForm& form) {
  const int n = form.vertex_count;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      for (int m = 0; m < form.upper_triangle[k]; ++m) edges.emplace_back(i, j);
  return Multigraph(n, std::move(edges));
}

bool connected_and_bridgeless(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  // Cheap connectivity test before paying for Multigraph construction.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (auto [u, v] : edges) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  if (components != 1) return false;
  return bridges(Multigraph(n, edges)).empty();
}

}  // namespace

std::vector<Multigraph> two_edge_connected_multigraphs(int max_edges) {
  std::set<std::tuple<int, int, CanonicalForm>> found;
  for (int n = 2; n <= max_edges; ++n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int slots = static_cast<int>(pairs.size());
    // Every vertex needs degree >= 2, hence |E| >= |V|.
    for (int m = n; m <= max_edges; ++m) {
      std::vector<int> mult(slots, 0);
      std::vector<int> degree(n, 0);
      std::vector<std::pair<Vertex, Vertex>> edges;
      auto place = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == slots) {
          if (remaining != 0) return;
          for (int d : degree)
            if (d < 2) return;
          if (!connected_and_bridgeless(n, edges)) return;
          Multigraph g(n, edges);
          found.emplace(m, n, canonical_form(g));
          return;
        }
        auto [u, v] = pairs[slot];
        // Once a vertex's last incident slot is passed its degree is final.
        for (int c = remaining; c >= 0; --c) {
          degree[u] += c;
          degree[v] += c;
          for (int i = 0; i < c; ++i) edges.emplace_back(u, v);
          bool viable = true;
          if (slot + 1 < slots) {
            auto [nu, nv] = pairs[slot + 1];
            if (nu != u) {
              // Vertex u has no later slots when the next slot starts at u+1.
              viable = degree[u] >= 2;
            }
            (void)nv;
          }
          if (viable) self(self, slot + 1, remaining - c);
          edges.resize(edges.size() - c);
          degree[u] -= c;
          degree[v] -= c;
        }
      };
      place(place, 0, m);
    }
  }
  std::vector<Multigraph> out;
  out.reserve(found.size());
  for (const auto& [m, n, form] : found) out.push_back(from_canonical(form));
  return out;
}

}  // namespace hgraph
