#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pants/marked_pants.hpp"

namespace pants {

/// Flip of one side's curve.
struct FlipStep {
  Side side = Side::A;
  int edge = -1;
  FlipChoice choice = FlipChoice::Cross;
};

/// Flip of a matched curve on both sides at once (side-A edge id; the side-B
/// choice is derived so the two sides stay aligned).
struct DoubleFlipStep {
  int edge_a = -1;
  FlipChoice choice = FlipChoice::Cross;
};

/// Dehn twist in a handle along one of its two interior curves. The handle is
/// addressed by its side-A loop edge.
struct HandleTwistStep {
  int handle_loop_a = -1;
  Side along = Side::A;
  int dir = +1;
};

/// Replace a handle-interior class on one side (|pairing with old| = 1).
struct SMoveStep {
  Side side = Side::A;
  int loop_edge = -1;
  ClassVector new_class;
};

/// The certified three-twist macro swapping the two interior curves.
struct DoubleSMoveStep {
  int handle_loop_a = -1;
};

/// Macro annotation: declare a side-A/side-B edge pair matched. Used when a
/// replayed figure identifies curves the marking layer cannot; the replay
/// verifies the classes agree.
struct RematchStep {
  int edge_a = -1;
  int edge_b = -1;
};

/// Inverse annotation: forget a matched pair (addressed by its side-A edge).
struct UnmatchStep {
  int edge_a = -1;
};

using Step = std::variant<FlipStep, DoubleFlipStep, HandleTwistStep, SMoveStep, DoubleSMoveStep,
                          RematchStep, UnmatchStep>;

std::string to_string(const Step& step);

/// Replayable sequence of generator applications.
struct MoveWord {
  std::vector<Step> steps;

  bool empty() const { return steps.empty(); }
  int size() const { return static_cast<int>(steps.size()); }
  void append(Step s) { steps.push_back(std::move(s)); }
  void extend(const MoveWord& w) {
    steps.insert(steps.end(), w.steps.begin(), w.steps.end());
  }
};

std::string to_string(const MoveWord& w);

}  // namespace pants
