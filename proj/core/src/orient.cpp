#include "lsketch/orient.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "check.hpp"

namespace lsketch {

void OrientedGraph::rebuild_tables() {
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    if (a.tail != b.tail) return a.tail < b.tail;
    return a.head < b.head;
  });
  out_deg.assign(n, 0);
  in_deg.assign(n, 0);
  out_wdeg.assign(n, 0.0);
  in_wdeg.assign(n, 0.0);
  for (const Arc& a : arcs) {
    if (a.tail >= n || a.head >= n) throw std::invalid_argument("arc endpoint out of range");
    ++out_deg[a.tail];
    ++in_deg[a.head];
    out_wdeg[a.tail] += a.w;
    in_wdeg[a.head] += a.w;
  }
}

OrientedGraph balanced_orientation(const WeightedGraph& g) {
  OrientedGraph og;
  og.n = g.n;
  const std::size_t m = g.edges.size();

  // Augment with a virtual vertex adjacent to every odd-degree vertex; the
  // resulting multigraph has an Eulerian circuit per component, and
  // orienting along it balances in/out at every real vertex up to the one
  // virtual arc an odd vertex loses.
  std::vector<std::uint32_t> deg(g.n + 1, 0);
  for (const Edge& e : g.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  struct Half {
    std::uint32_t other;
    std::size_t id;
  };
  std::vector<std::vector<Half>> adj(g.n + 1);
  for (std::uint32_t v = 0; v <= g.n; ++v) adj[v].reserve(deg[v] + 1);
  for (std::size_t i = 0; i < m; ++i) {
    adj[g.edges[i].u].push_back({g.edges[i].v, i});
    adj[g.edges[i].v].push_back({g.edges[i].u, i});
  }
  std::size_t virt = m;
  const std::uint32_t vv = static_cast<std::uint32_t>(g.n);
  for (std::uint32_t v = 0; v < g.n; ++v) {
    if (deg[v] % 2 == 1) {
      adj[v].push_back({vv, virt});
      adj[vv].push_back({v, virt});
      ++virt;
    }
  }

  std::vector<char> used(virt, 0);
  std::vector<std::size_t> ptr(g.n + 1, 0);
  struct Item {
    std::uint32_t v;
    std::size_t via;  // edge entered through; SIZE_MAX at the root
  };
  og.arcs.reserve(m);
  std::vector<Item> stack;
  for (std::uint32_t start = 0; start <= g.n; ++start) {
    if (adj[start].empty()) continue;
    stack.push_back({start, SIZE_MAX});
    while (!stack.empty()) {
      const std::uint32_t v = stack.back().v;
      bool advanced = false;
      while (ptr[v] < adj[v].size()) {
        const Half h = adj[v][ptr[v]++];
        if (used[h.id]) continue;
        used[h.id] = true;
        stack.push_back({h.other, h.id});
        advanced = true;
        break;
      }
      if (advanced) continue;
      const Item it = stack.back();
      stack.pop_back();
      if (it.via == SIZE_MAX || it.via >= m) continue;  // root or virtual edge
      // Popped along the reverse circuit: orient from the popped vertex
      // toward its stack parent.
      const Edge& e = g.edges[it.via];
      const std::uint32_t other = e.u == it.v ? e.v : e.u;
      og.arcs.push_back({it.v, other, e.w});
    }
  }
  og.rebuild_tables();
  return og;
}

double potential(const OrientedGraph& og, double t) {
  double phi = 0.0;
  for (const Arc& a : og.arcs) {
    const double du = og.out_deg[a.tail], dv = og.out_deg[a.head];
    if (du >= t && dv < t - 1.0) phi += du - dv;
  }
  return phi;
}

std::size_t enforce_threshold(OrientedGraph& og, double t, const FlipObserver& observer) {
  if (!(t >= 1.0)) throw std::invalid_argument("threshold must be at least 1");
  const double cap = potential(og, t) / 2.0 + 10.0;

  // Mutable arc-id lists per tail; arcs move between lists as they flip.
  std::vector<std::vector<std::size_t>> by_tail(og.n);
  for (std::size_t i = 0; i < og.arcs.size(); ++i) by_tail[og.arcs[i].tail].push_back(i);

  std::deque<std::uint32_t> queue;
  std::vector<char> queued(og.n, 0);
  for (std::uint32_t v = 0; v < og.n; ++v) {
    if (og.out_deg[v] >= t) {
      queue.push_back(v);
      queued[v] = 1;
    }
  }

  std::size_t flips = 0;
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop_front();
    queued[u] = 0;
    auto& list = by_tail[u];
    std::size_t i = 0;
    while (og.out_deg[u] >= t && i < list.size()) {
      const std::size_t id = list[i];
      Arc& a = og.arcs[id];
      const std::uint32_t v = a.head;
      if (!(og.out_deg[v] < t - 1.0)) {
        ++i;
        continue;
      }
      // Flip u->v to v->u.
      std::swap(a.tail, a.head);
      --og.out_deg[u];
      ++og.in_deg[u];
      ++og.out_deg[v];
      --og.in_deg[v];
      og.out_wdeg[u] -= a.w;
      og.in_wdeg[u] += a.w;
      og.out_wdeg[v] += a.w;
      og.in_wdeg[v] -= a.w;
      list[i] = list.back();
      list.pop_back();
      by_tail[v].push_back(id);
      ++flips;
      LSKETCH_CHECK(static_cast<double>(flips) <= cap,
                    "threshold enforcement exceeded its flip budget");
      if (observer) observer(og, flips - 1, potential(og, t));
      if (og.out_deg[v] >= t && !queued[v]) {
        queue.push_back(v);
        queued[v] = 1;
      }
    }
  }
  og.rebuild_tables();
  return flips;
}

OrientedGraph assign_direction(const WeightedGraph& g, double t, std::uint64_t seed) {
  (void)seed;
  OrientedGraph og = balanced_orientation(g);
  enforce_threshold(og, t);
  return og;
}

}  // namespace lsketch
