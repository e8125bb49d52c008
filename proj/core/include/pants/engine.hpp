#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pants/double_pants.hpp"
#include "pants/move_word.hpp"

namespace pants {

/// Orbit graph nodes are canonical state keys; the tag counts self-folded
/// pants (loops), which at genus 2 separates the two node shapes.
struct OrbitGraph {
  struct Node {
    std::string key;
    int loop_count = 0;
    int depth = 0;
    bool expanded = false;
  };
  struct Arc {
    int from = 0;
    int to = 0;
    std::string label;
  };
  std::vector<Node> nodes;
  std::vector<Arc> arcs;

  std::vector<int> neighbors(int node) const;  // deduplicated, sorted
};

/// Breadth-first orbit of a marked decomposition under flips, nodes keyed by
/// canonical form, to the given depth. Honors PANTS_THREADS for frontier
/// expansion; output is deterministic regardless.
OrbitGraph orbit_graph(const MarkedPants& start, int depth);

/// Same over a double decomposition, under single-side flips and handle
/// twists.
OrbitGraph orbit_graph(const DoublePants& start, int depth);

/// Replay a word of side-A flips / S-moves on a marked decomposition.
MarkedPants replay_marked(const MarkedPants& start, const MoveWord& word);

/// Genus 2: replace every type-preserving step of a flip word by a two-step
/// detour through a self-folded state, keeping the endpoints.
MoveWord alternating_normalize(const MoveWord& word, const MarkedPants& start);

/// Breadth-first search for a word of single-side flips whose replay makes
/// check_double report standard. Budget bounds the word length. Returns
/// nothing when the search exhausts the budget; this certifies nothing.
std::optional<MoveWord> standardize(const DoublePants& dp, int budget);

/// Flip word (double flips on the shared sphere tree) bringing a strictly
/// standard state to the caterpillar with attachments sorted by label: legs
/// by their labels, handles by the canonical key of their homology summand.
MoveWord normalize_sphere_part(const DoublePants& dp);

/// True iff the sphere part is that sorted caterpillar.
bool sphere_part_sorted(const DoublePants& dp);

/// Word of flips, handle twists and certified macros mapping one strictly
/// standard state to another with canonical equality (and matching stored
/// handle order). Requires the same surface and the same multiset of handle
/// summands.
MoveWord connect_standard(const DoublePants& dp1, const DoublePants& dp2);

/// A replayed figure: the word, its start state, and its verified endpoint.
struct Fixture {
  std::string name;
  DoublePants start;
  MoveWord word;
  DoublePants end;
};

/// The double S-move as three handle twists (genus 2 handle).
Fixture fixture_double_s();
/// Companion morphism for a two-flip twist of one side: the side-A loop, the
/// side-B loop, the rematch annotation and a double S-move pair.
Fixture fixture_comp_for_twist();
/// Companion morphism for two flips of different side-A curves: two side-B
/// flips restore a standard pair.
Fixture fixture_comp_for_dflip();
/// Transposition of two neighboring handles (genus 4): handle twists, a flip
/// on each side, one more side-B flip, handle twists.
Fixture fixture_cyclic_order();
/// Twist along a curve crossing two neighboring handles, as double S-moves
/// alternating with flip pairs; found once by search and replayed.
Fixture fixture_obtain_twist();

std::vector<Fixture> all_fixtures();

}  // namespace pants
