#include "pants/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pants::detail {

int CanonGraph::add_vertex(std::string attr) {
  vertex_attrs.push_back(std::move(attr));
  return static_cast<int>(vertex_attrs.size()) - 1;
}

void CanonGraph::add_edge(int u, int v) { edges.push_back({u, v}); }

namespace {

// Stable color refinement. Colors start from vertex attributes and are
// refined by multisets of neighbor colors until the partition stabilizes.
std::vector<int> refine_colors(const CanonGraph& g) {
  const int n = static_cast<int>(g.vertex_attrs.size());
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }

  std::vector<int> color(n);
  {
    std::map<std::string, int> ids;
    for (int v = 0; v < n; ++v) ids.emplace(g.vertex_attrs[v], 0);
    int next = 0;
    for (auto& kv : ids) kv.second = next++;
    for (int v = 0; v < n; ++v) color[v] = ids.at(g.vertex_attrs[v]);
  }

  int classes = 0;
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sigs(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig;
      sig.push_back(color[v]);
      std::vector<int> nb;
      nb.reserve(adj[v].size());
      for (int w : adj[v]) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      sig.insert(sig.end(), nb.begin(), nb.end());
      sigs[v] = {std::move(sig), v};
    }
    std::map<std::vector<int>, int> ids;
    for (int v = 0; v < n; ++v) ids.emplace(sigs[v].first, 0);
    int next = 0;
    for (auto& kv : ids) kv.second = next++;
    std::vector<int> fresh(n);
    for (int v = 0; v < n; ++v) fresh[v] = ids.at(sigs[v].first);
    if (next == classes) break;
    classes = next;
    color = std::move(fresh);
  }
  return color;
}

std::string encode_with_labels(const CanonGraph& g, const std::vector<int>& label) {
  const int n = static_cast<int>(g.vertex_attrs.size());
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[label[v]] = v;

  std::string out;
  for (int i = 0; i < n; ++i) {
    out += 'V';
    out += g.vertex_attrs[inv[i]];
    out += ';';
  }
  std::vector<std::pair<int, int>> es;
  es.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    int a = label[e.u], b = label[e.v];
    es.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(es.begin(), es.end());
  for (const auto& [a, b] : es) {
    out += 'E';
    out += std::to_string(a);
    out += ',';
    out += std::to_string(b);
    out += ';';
  }
  return out;
}

}  // namespace

std::string canonical_encoding(const CanonGraph& g) {
  const int n = static_cast<int>(g.vertex_attrs.size());
  if (n == 0) return "empty";
  std::vector<int> color = refine_colors(g);

  // vertices grouped by final color; labels are assigned block by block
  int classes = *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::vector<int>> blocks(classes);
  for (int v = 0; v < n; ++v) blocks[color[v]].push_back(v);

  long long work = 1;
  for (const auto& b : blocks) {
    for (size_t k = 2; k <= b.size(); ++k) {
      work *= static_cast<long long>(k);
      if (work > 2'000'000) {
        throw std::runtime_error("canonical_encoding: symmetry class too large");
      }
    }
  }

  std::vector<int> label(n, -1);
  std::string best;

  // odometer over per-block permutations
  std::vector<std::vector<int>> perm(blocks.size());
  for (size_t b = 0; b < blocks.size(); ++b) perm[b] = blocks[b];

  int base = 0;
  std::vector<int> offsets(blocks.size());
  for (size_t b = 0; b < blocks.size(); ++b) {
    offsets[b] = base;
    base += static_cast<int>(blocks[b].size());
  }

  auto apply = [&]() {
    for (size_t b = 0; b < perm.size(); ++b) {
      for (size_t i = 0; i < perm[b].size(); ++i) {
        label[perm[b][i]] = offsets[b] + static_cast<int>(i);
      }
    }
    std::string enc = encode_with_labels(g, label);
    if (best.empty() || enc < best) best = std::move(enc);
  };

  // iterate the cartesian product of block permutations
  size_t nb = perm.size();
  for (auto& p : perm) std::sort(p.begin(), p.end());
  for (;;) {
    apply();
    size_t b = 0;
    while (b < nb && !std::next_permutation(perm[b].begin(), perm[b].end())) {
      // wrapped around: reset and carry into the next block
      std::sort(perm[b].begin(), perm[b].end());
      ++b;
    }
    if (b == nb) break;
  }
  return best;
}

}  // namespace pants::detail
