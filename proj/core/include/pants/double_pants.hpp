#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "pants/marked_pants.hpp"
#include "pants/move_word.hpp"

namespace pants {

using Slope = std::array<Int, 2>;

Slope canonical_slope_sign(const Slope& s);
Int slope_det(const Slope& u, const Slope& v);

/// Twistable handle shared by the two decompositions: the two interior loops,
/// the matched boundary (absent when the companion slot holds a leg), and the
/// interior slopes in the local basis frozen when the handle was first
/// tracked. Pushing a slope into the global lattice always reproduces the
/// side's current loop class.
struct HandleState {
  int loop_a = -1;
  int loop_b = -1;
  std::optional<int> boundary_a;
  std::optional<int> boundary_b;
  ClassVector basis_a;  // side-A loop class at freeze time
  ClassVector basis_b;  // side-B loop class at freeze time
  Slope slope_a{1, 0};
  Slope slope_b{0, 1};

  ClassVector push(const Slope& s) const;

  bool operator==(const HandleState&) const = default;
};

/// Two marked decompositions of the same surface, a partial matching between
/// their edges recording the shared (double) curves, and the tracked handle
/// states. Immutable.
class DoublePants {
 public:
  DoublePants(MarkedPants side_a, MarkedPants side_b, std::vector<std::pair<int, int>> matching,
              std::vector<HandleState> handles, std::vector<int> handle_order);

  const MarkedPants& side(Side s) const { return s == Side::A ? side_a_ : side_b_; }
  const SurfaceSig& sig() const { return side_a_.graph().sig(); }

  const std::vector<std::pair<int, int>>& matching() const { return matching_; }
  std::optional<int> matched_partner(Side s, int edge) const;

  const std::vector<HandleState>& handles() const { return handles_; }
  const HandleState* find_handle(int loop_a) const;

  /// Stored handle order (side-A loop ids): the abstract stand-in for the
  /// cyclic order of zipper curves on strictly standard states.
  const std::vector<int>& handle_order() const { return handle_order_; }

  bool operator==(const DoublePants&) const = default;

 private:
  MarkedPants side_a_, side_b_;
  std::vector<std::pair<int, int>> matching_;
  std::vector<HandleState> handles_;
  std::vector<int> handle_order_;
};

struct DoubleReport {
  GraphReport side_a;
  GraphReport side_b;
  std::vector<std::string> failures;  // matching / handle-state inconsistencies
  bool general_position = false;
  bool standard = false;
  bool strictly_standard = false;
  int distinct_curves = 0;
  int intersections = 0;

  bool ok() const { return side_a.ok() && side_b.ok() && failures.empty() && general_position; }
};

/// Both sides standard over the shared caterpillar, every non-loop edge
/// matched, handle i carrying slopes (1,0) / (0,1) in the basis (a_i, b_i).
DoublePants standard_double(const SurfaceSig& sig);

/// Full invariant evaluation. The standard / strictly-standard flags are
/// marking-level predicates (they do not consult the stored matching):
/// standard needs both side graphs standard and the loop-class pairing matrix
/// to be a permutation of +-1 entries; strictly standard additionally needs
/// the two sphere trees to agree relative to handle and leg labels. Curve and
/// intersection counts use the stored matching and handle states.
DoubleReport check_double(const DoublePants& dp);

/// Elementary groupoid move: flip one side's curve. A matched edge loses its
/// matching; handle states are re-derived.
DoublePants flip_one_side(const DoublePants& dp, Side side, int edge, FlipChoice choice);

/// Flip a matched double curve on both sides, keeping it matched. The side-B
/// choice is derived from the matching so the two sides regroup the same way;
/// the flip must not touch a tracked handle boundary and the two new classes
/// must agree.
DoublePants double_flip(const DoublePants& dp, int edge_a, FlipChoice choice);

/// Derive the side-B flip choice that keeps a double_flip aligned.
FlipChoice matched_flip_choice(const DoublePants& dp, int edge_a, FlipChoice choice_a);

/// Dehn twist in a tracked handle: along = A twists the side-B interior curve
/// by the side-A one (slope_b += dir * slope_a), and symmetrically.
DoublePants handle_twist(const DoublePants& dp, int handle_loop_a, Side along, int dir);

/// The certified three-twist word [along a +1; along b -1; along a +1]; the
/// resulting unoriented slopes are the swapped originals.
std::pair<DoublePants, MoveWord> double_s_move(const DoublePants& dp, int handle_loop_a);

/// Macro annotation: record that two class-equal unmatched edges are the same
/// curve. Throws if the classes disagree.
DoublePants rematch(const DoublePants& dp, int edge_a, int edge_b);

/// Forget a matched pair (inverse annotation).
DoublePants unmatch(const DoublePants& dp, int edge_a);

/// Replace a handle-interior class on one side within a double state.
DoublePants s_move_one_side(const DoublePants& dp, Side side, int loop_edge,
                            const ClassVector& new_class);

/// Word of handle twists (and at most one double S-move) after which slope_a
/// equals the target up to sign. Shortest twist word via breadth-first
/// search; verified by replay at application time.
MoveWord realize_slope(const HandleState& h, const Slope& target);

/// Transposition of two handles adjacent in the stored order, replaying the
/// twist / flip / flip / flip / twist figure with every precondition checked.
/// Requires a strictly standard state whose two handles attach either to one
/// sphere vertex (the symmetric case, an empty word) or to the two ends of a
/// single matched sphere edge.
std::pair<DoublePants, MoveWord> transpose_adjacent(const DoublePants& dp, int position);

/// Equal keys iff the sides are simultaneously isomorphic as marked graphs
/// respecting the matching and leg labels. Handle bases, slopes and the
/// stored order are gauge and do not enter.
std::string canonical_key(const DoublePants& dp);

/// Apply one step / a whole word, checking every precondition.
DoublePants apply_step(const DoublePants& dp, const Step& step);
DoublePants replay(const DoublePants& dp, const MoveWord& word);

/// Reverse word, built against the given start state (flip inverses are
/// resolved semantically) and verified to replay back to the start.
MoveWord inverse_word(const DoublePants& start, const MoveWord& word);

}  // namespace pants
