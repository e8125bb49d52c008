#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pants/lattice.hpp"

namespace pants {

struct SlotRef {
  int vertex = -1;
  int slot = -1;  // 0..2

  bool operator==(const SlotRef&) const = default;
};

enum class EdgeClass { Regular, NonRegularHandleInterior, HandleBoundary };

enum class FlipChoice { Cross, Bar };

FlipChoice other_choice(FlipChoice c);
std::string to_string(FlipChoice c);

/// A loop edge together with the companion edge occupying the third slot of
/// its vertex. The companion is absent only when that slot holds a leg
/// (the one-holed-torus signature (1,1)).
struct Handle {
  int loop_edge = -1;
  std::optional<int> boundary_edge;
  int vertex = -1;
};

struct GraphReport {
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Dual trivalent multigraph of a pants decomposition. Vertices are pairs of
/// pants with three slots each; internal edges occupy two slots (a loop uses
/// two slots of one vertex); legs are labeled boundary features. Immutable:
/// moves return new graphs.
class PantsGraph {
 public:
  struct Occupant {
    enum class Kind { EdgeEnd, Leg };
    Kind kind = Kind::EdgeEnd;
    int index = -1;  // edge id, or leg index (0-based; label = index + 1)
    int end = -1;    // 0/1 for edge ends

    bool operator==(const Occupant&) const = default;
  };

  PantsGraph(SurfaceSig sig, int vertex_count, std::vector<std::array<SlotRef, 2>> edges,
             std::vector<SlotRef> legs);

  const SurfaceSig& sig() const { return sig_; }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int leg_count() const { return static_cast<int>(legs_.size()); }
  const std::array<SlotRef, 2>& edge_ends(int e) const;
  const SlotRef& leg_at(int leg_index) const;
  bool is_loop(int e) const;
  const Occupant& occupant(int vertex, int slot) const;
  const Occupant& occupant(const SlotRef& s) const { return occupant(s.vertex, s.slot); }

  bool connected() const;
  int cycle_rank() const;  // E - V + 1 for connected graphs

  bool operator==(const PantsGraph&) const = default;

 private:
  SurfaceSig sig_;
  int vertex_count_ = 0;
  std::vector<std::array<SlotRef, 2>> edges_;
  std::vector<SlotRef> legs_;
  std::vector<std::array<Occupant, 3>> slots_;  // derived occupancy table
};

/// Check the PantsGraph invariants against its signature; failures are
/// reported, not thrown.
GraphReport validate(const PantsGraph& gr);

/// Loop => NonRegularHandleInterior. A non-loop at the third slot of a loop
/// vertex => HandleBoundary (still flippable). Everything else Regular.
EdgeClass classify_edge(const PantsGraph& gr, int edge);

/// Result of a flip together with the stub bookkeeping the marking layer
/// needs. Stubs are listed s1,s2 (from end0's vertex, in slot order) then
/// s3,s4 (from end1's vertex). After the flip the end0 vertex carries s1 and
/// its partner (s3 for Cross, s4 for Bar) in slots 0,1 and the new edge end
/// in slot 2; the end1 vertex carries the other two stubs the same way.
struct FlipDetail {
  std::array<PantsGraph::Occupant, 4> stubs;
  int partner_of_s1 = -1;  // 2 or 3, index into stubs
};

PantsGraph flip_graph(const PantsGraph& gr, int edge, FlipChoice choice);
PantsGraph flip_graph(const PantsGraph& gr, int edge, FlipChoice choice, FlipDetail& detail);

/// One entry per loop edge, sorted by loop edge id.
std::vector<Handle> detect_handles(const PantsGraph& gr);

/// True iff the graph has exactly g handles with pairwise distinct vertices.
bool is_standard_graph(const PantsGraph& gr);

/// Equal keys iff the graphs are isomorphic as slot-structured multigraphs
/// with legs labeled.
std::string canonical_form(const PantsGraph& gr);

/// The standard caterpillar: g handle leaves and n legs hanging off a spine,
/// handles first. Edge ids: companion of handle i at 2(i-1), its loop at
/// 2(i-1)+1, spine edges after; the genus-2 dumbbell (bridge 0, loops 1,2)
/// and the signatures with no spine are laid out explicitly.
PantsGraph caterpillar_graph(const SurfaceSig& sig);

namespace detail {
struct CanonGraph;
/// Attributed-graph form used for canonical keys: one vertex per pants, one
/// subdivision vertex per edge (so parallel edges and per-edge attributes
/// survive), legs folded into pants attributes.
CanonGraph pants_graph_canon(const PantsGraph& gr, const std::vector<std::string>& edge_attrs,
                             const std::string& side_tag);
}  // namespace detail

}  // namespace pants
