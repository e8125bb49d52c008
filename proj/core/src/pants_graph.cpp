#include "pants/pants_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "pants/canonical.hpp"

namespace pants {

FlipChoice other_choice(FlipChoice c) {
  return c == FlipChoice::Cross ? FlipChoice::Bar : FlipChoice::Cross;
}

std::string to_string(FlipChoice c) { return c == FlipChoice::Cross ? "cross" : "bar"; }

PantsGraph::PantsGraph(SurfaceSig sig, int vertex_count,
                       std::vector<std::array<SlotRef, 2>> edges, std::vector<SlotRef> legs)
    : sig_(sig), vertex_count_(vertex_count), edges_(std::move(edges)), legs_(std::move(legs)) {
  auto check_ref = [&](const SlotRef& s) {
    if (s.vertex < 0 || s.vertex >= vertex_count_ || s.slot < 0 || s.slot > 2) {
      throw std::invalid_argument("slot reference out of range");
    }
  };
  slots_.assign(static_cast<size_t>(vertex_count_), {});
  std::vector<std::array<bool, 3>> used(static_cast<size_t>(vertex_count_), {false, false, false});
  auto occupy = [&](const SlotRef& s, Occupant occ) {
    check_ref(s);
    if (used[s.vertex][s.slot]) throw std::invalid_argument("slot occupied twice");
    used[s.vertex][s.slot] = true;
    slots_[s.vertex][s.slot] = occ;
  };
  for (int e = 0; e < edge_count(); ++e) {
    occupy(edges_[e][0], {Occupant::Kind::EdgeEnd, e, 0});
    occupy(edges_[e][1], {Occupant::Kind::EdgeEnd, e, 1});
  }
  for (int l = 0; l < leg_count(); ++l) {
    occupy(legs_[l], {Occupant::Kind::Leg, l, -1});
  }
  for (int v = 0; v < vertex_count_; ++v) {
    for (int s = 0; s < 3; ++s) {
      if (!used[v][s]) throw std::invalid_argument("unoccupied slot");
    }
  }
}

const std::array<SlotRef, 2>& PantsGraph::edge_ends(int e) const {
  if (e < 0 || e >= edge_count()) throw std::invalid_argument("edge id out of range");
  return edges_[e];
}

const SlotRef& PantsGraph::leg_at(int leg_index) const {
  if (leg_index < 0 || leg_index >= leg_count()) throw std::invalid_argument("leg out of range");
  return legs_[leg_index];
}

bool PantsGraph::is_loop(int e) const {
  const auto& ends = edge_ends(e);
  return ends[0].vertex == ends[1].vertex;
}

const PantsGraph::Occupant& PantsGraph::occupant(int vertex, int slot) const {
  if (vertex < 0 || vertex >= vertex_count_ || slot < 0 || slot > 2) {
    throw std::invalid_argument("slot reference out of range");
  }
  return slots_[vertex][slot];
}

bool PantsGraph::connected() const {
  if (vertex_count_ == 0) return false;
  std::vector<bool> seen(static_cast<size_t>(vertex_count_), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int s = 0; s < 3; ++s) {
      const auto& occ = slots_[v][s];
      if (occ.kind != Occupant::Kind::EdgeEnd) continue;
      const auto& ends = edges_[occ.index];
      int w = ends[occ.end == 0 ? 1 : 0].vertex;
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count_;
}

int PantsGraph::cycle_rank() const { return edge_count() - vertex_count_ + 1; }

GraphReport validate(const PantsGraph& gr) {
  GraphReport rep;
  const auto& sig = gr.sig();
  if (!sig.valid()) rep.failures.push_back("signature violates 2g + n > 2");
  if (gr.edge_count() != sig.edge_count()) {
    rep.failures.push_back("edge count " + std::to_string(gr.edge_count()) + " != 3g-3+n = " +
                           std::to_string(sig.edge_count()));
  }
  if (gr.vertex_count() != sig.vertex_count()) {
    rep.failures.push_back("vertex count " + std::to_string(gr.vertex_count()) +
                           " != 2g-2+n = " + std::to_string(sig.vertex_count()));
  }
  if (gr.leg_count() != sig.punctures) {
    rep.failures.push_back("leg count " + std::to_string(gr.leg_count()) + " != n = " +
                           std::to_string(sig.punctures));
  }
  if (!gr.connected()) rep.failures.push_back("graph is not connected");
  if (gr.connected() && gr.cycle_rank() != sig.genus) {
    rep.failures.push_back("cycle rank " + std::to_string(gr.cycle_rank()) + " != g = " +
                           std::to_string(sig.genus));
  }
  return rep;
}

EdgeClass classify_edge(const PantsGraph& gr, int edge) {
  if (gr.is_loop(edge)) return EdgeClass::NonRegularHandleInterior;
  for (const auto& end : gr.edge_ends(edge)) {
    for (int s = 0; s < 3; ++s) {
      if (s == end.slot) continue;
      const auto& occ = gr.occupant(end.vertex, s);
      if (occ.kind == PantsGraph::Occupant::Kind::EdgeEnd && gr.is_loop(occ.index)) {
        return EdgeClass::HandleBoundary;
      }
    }
  }
  return EdgeClass::Regular;
}

PantsGraph flip_graph(const PantsGraph& gr, int edge, FlipChoice choice) {
  FlipDetail detail;
  return flip_graph(gr, edge, choice, detail);
}

PantsGraph flip_graph(const PantsGraph& gr, int edge, FlipChoice choice, FlipDetail& detail) {
  if (classify_edge(gr, edge) == EdgeClass::NonRegularHandleInterior) {
    throw std::invalid_argument("flip of a non-regular curve (loop edge " + std::to_string(edge) +
                                ")");
  }
  const auto ends = gr.edge_ends(edge);
  const int u = ends[0].vertex, v = ends[1].vertex;

  // stubs in deterministic slot order
  std::array<PantsGraph::Occupant, 4> stubs;
  std::array<SlotRef, 4> stub_pos;
  int k = 0;
  for (int s = 0; s < 3; ++s) {
    if (s != ends[0].slot) {
      stub_pos[k] = {u, s};
      stubs[k++] = gr.occupant(u, s);
    }
  }
  for (int s = 0; s < 3; ++s) {
    if (s != ends[1].slot) {
      stub_pos[k] = {v, s};
      stubs[k++] = gr.occupant(v, s);
    }
  }
  detail.stubs = stubs;
  detail.partner_of_s1 = (choice == FlipChoice::Cross) ? 2 : 3;

  // re-expansion: u keeps s1 and its partner, v the other two, new edge in slot 2
  std::array<int, 2> at_u = {0, detail.partner_of_s1};
  std::array<int, 2> at_v = {1, detail.partner_of_s1 == 2 ? 3 : 2};

  std::vector<std::array<SlotRef, 2>> new_edges(gr.edge_count());
  std::vector<SlotRef> new_legs(gr.leg_count());
  for (int e = 0; e < gr.edge_count(); ++e) new_edges[e] = gr.edge_ends(e);
  for (int l = 0; l < gr.leg_count(); ++l) new_legs[l] = gr.leg_at(l);

  auto place = [&](const PantsGraph::Occupant& occ, SlotRef where) {
    if (occ.kind == PantsGraph::Occupant::Kind::EdgeEnd) {
      new_edges[occ.index][occ.end] = where;
    } else {
      new_legs[occ.index] = where;
    }
  };
  place(stubs[at_u[0]], {u, 0});
  place(stubs[at_u[1]], {u, 1});
  place(stubs[at_v[0]], {v, 0});
  place(stubs[at_v[1]], {v, 1});
  new_edges[edge][0] = {u, 2};
  new_edges[edge][1] = {v, 2};

  return PantsGraph(gr.sig(), gr.vertex_count(), std::move(new_edges), std::move(new_legs));
}

std::vector<Handle> detect_handles(const PantsGraph& gr) {
  std::vector<Handle> out;
  for (int e = 0; e < gr.edge_count(); ++e) {
    if (!gr.is_loop(e)) continue;
    Handle h;
    h.loop_edge = e;
    h.vertex = gr.edge_ends(e)[0].vertex;
    for (int s = 0; s < 3; ++s) {
      if (s == gr.edge_ends(e)[0].slot || s == gr.edge_ends(e)[1].slot) continue;
      const auto& occ = gr.occupant(h.vertex, s);
      if (occ.kind == PantsGraph::Occupant::Kind::EdgeEnd) h.boundary_edge = occ.index;
    }
    out.push_back(h);
  }
  return out;
}

bool is_standard_graph(const PantsGraph& gr) {
  auto handles = detect_handles(gr);
  if (static_cast<int>(handles.size()) != gr.sig().genus) return false;
  std::vector<int> vs;
  for (const auto& h : handles) vs.push_back(h.vertex);
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

namespace {

// Shared canonical construction: pants vertices plus one subdivision vertex
// per edge so that parallel edges and per-edge attributes survive
// canonicalization. Used by the marked and double layers with nonempty attrs.
detail::CanonGraph to_canon(const PantsGraph& gr, const std::vector<std::string>& edge_attrs,
                            const std::string& side_tag) {
  detail::CanonGraph cg;
  std::vector<int> vid(static_cast<size_t>(gr.vertex_count()));
  for (int v = 0; v < gr.vertex_count(); ++v) {
    std::string attr = "p" + side_tag;
    std::vector<int> leg_labels;
    for (int s = 0; s < 3; ++s) {
      const auto& occ = gr.occupant(v, s);
      if (occ.kind == PantsGraph::Occupant::Kind::Leg) leg_labels.push_back(occ.index + 1);
    }
    std::sort(leg_labels.begin(), leg_labels.end());
    for (int l : leg_labels) attr += ":leg" + std::to_string(l);
    vid[v] = cg.add_vertex(attr);
  }
  for (int e = 0; e < gr.edge_count(); ++e) {
    std::string attr = "e" + side_tag;
    if (!edge_attrs.empty()) attr += ":" + edge_attrs[e];
    int ev = cg.add_vertex(attr);
    cg.add_edge(ev, vid[gr.edge_ends(e)[0].vertex]);
    cg.add_edge(ev, vid[gr.edge_ends(e)[1].vertex]);
  }
  return cg;
}

}  // namespace

namespace detail {
CanonGraph pants_graph_canon(const PantsGraph& gr, const std::vector<std::string>& edge_attrs,
                             const std::string& side_tag) {
  return to_canon(gr, edge_attrs, side_tag);
}
}  // namespace detail

std::string canonical_form(const PantsGraph& gr) {
  return detail::canonical_encoding(to_canon(gr, {}, ""));
}

PantsGraph caterpillar_graph(const SurfaceSig& sig) {
  require_valid(sig);
  const int g = sig.genus, n = sig.punctures;
  const int k = g + n - 2;  // spine vertices

  if (k == 0) {
    if (g == 2) {
      // dumbbell: bridge 0, loops 1 and 2
      std::vector<std::array<SlotRef, 2>> edges = {
          {SlotRef{0, 2}, SlotRef{1, 2}},
          {SlotRef{0, 0}, SlotRef{0, 1}},
          {SlotRef{1, 0}, SlotRef{1, 1}},
      };
      return PantsGraph(sig, 2, std::move(edges), {});
    }
    // (1,1): a single self-folded pants carrying the leg
    std::vector<std::array<SlotRef, 2>> edges = {{SlotRef{0, 0}, SlotRef{0, 1}}};
    return PantsGraph(sig, 1, std::move(edges), {SlotRef{0, 2}});
  }

  // spine vertices 0..k-1, handle vertex of handle i at k-1+i
  std::vector<SlotRef> attach;
  if (k == 1) {
    attach = {{0, 0}, {0, 1}, {0, 2}};
  } else {
    attach.push_back({0, 0});
    attach.push_back({0, 1});
    for (int j = 1; j < k - 1; ++j) attach.push_back({j, 0});
    attach.push_back({k - 1, 0});
    attach.push_back({k - 1, 1});
  }

  std::vector<std::array<SlotRef, 2>> edges(static_cast<size_t>(sig.edge_count()));
  std::vector<SlotRef> legs;
  int a = 0;
  for (int i = 1; i <= g; ++i) {
    int hv = k - 1 + i;
    edges[2 * (i - 1)] = {attach[a++], SlotRef{hv, 2}};     // companion
    edges[2 * (i - 1) + 1] = {SlotRef{hv, 0}, SlotRef{hv, 1}};  // loop
  }
  for (int l = 0; l < n; ++l) legs.push_back(attach[a++]);
  for (int j = 0; j + 1 < k; ++j) {
    // spine edge between consecutive spine vertices
    SlotRef left = (j == 0) ? SlotRef{0, 2} : SlotRef{j, 2};
    SlotRef right = (j + 1 == k - 1) ? SlotRef{k - 1, 2} : SlotRef{j + 1, 1};
    edges[2 * g + j] = {left, right};
  }
  return PantsGraph(sig, sig.vertex_count(), std::move(edges), std::move(legs));
}

}  // namespace pants
