#pragma once

#include <array>
#include <string>
#include <vector>

#include "pants/pants_graph.hpp"

namespace pants {

enum class Side { A, B };

Side other_side(Side s);
std::string to_string(Side s);

/// Homology-marked pants decomposition: every edge carries an oriented class
/// and a sign per end (the two ends of an edge carry opposite signs), so that
/// at every pants the signed classes of its three edge-ends sum to zero.
/// Legs contribute nothing. Immutable.
class MarkedPants {
 public:
  MarkedPants(PantsGraph graph, std::vector<ClassVector> class_of,
              std::vector<std::array<int, 2>> sign_of);

  const PantsGraph& graph() const { return graph_; }
  const ClassVector& class_of(int edge) const;
  int sign_of(int edge, int end) const;

  /// Signed contribution of a slot occupant to its pants relation.
  ClassVector contribution(const PantsGraph::Occupant& occ) const;

  bool operator==(const MarkedPants&) const = default;

 private:
  PantsGraph graph_;
  std::vector<ClassVector> class_of_;
  std::vector<std::array<int, 2>> sign_of_;
};

/// Caterpillar with g handles and n legs; loop i carries a_i (side A) or b_i
/// (side B), every other edge carries the zero class.
MarkedPants standard_marked(const SurfaceSig& sig, Side side);

GraphReport check_marking(const MarkedPants& mp);

/// Flip an edge and solve the new pants relations for the class of the new
/// curve. Consistency of the second relation is asserted; a non-primitive
/// nonzero result (impossible for states of geometric origin) is rejected.
MarkedPants flip_marked(const MarkedPants& mp, int edge, FlipChoice choice);

/// Replace a handle-interior class. Requires |<old, new>| = 1, which on a
/// one-holed torus stands in for geometric intersection number one.
MarkedPants s_move_marked(const MarkedPants& mp, int loop_edge, const ClassVector& new_class);

/// Hermite basis of the span of all edge classes.
SpanBasis lagrangian_of(const MarkedPants& mp);

/// Equal keys iff the states agree up to edge relabeling and per-curve
/// orientation choices.
std::string canonical_key(const MarkedPants& mp);

}  // namespace pants
