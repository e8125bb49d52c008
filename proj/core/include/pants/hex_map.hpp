#pragma once

#include <array>
#include <string>
#include <vector>

#include "pants/pants_graph.hpp"

namespace pants {

/// Loose form of a hexagon map, as read from files or built by hand: faces of
/// arbitrary length whose sides are curve banks (carrying a curve id) or
/// zipper segments (carrying a boundary-circle label).
struct RawHexMap {
  struct RawSide {
    bool is_curve = false;
    int id = -1;
  };
  std::vector<std::vector<RawSide>> faces;
};

/// One side S+ of a zipper system compatible with a pants decomposition,
/// stored as a hexagonal combinatorial map. Face f has curve sides (f,0),
/// (f,1), (f,2) at even positions and zipper segments (f,0..2) at odd ones;
/// segment (f,k) lies between curve sides (f,k) and (f,k+1 mod 3). The two
/// banks of a curve arc are the two sides carrying the same curve id (both in
/// one face exactly for the interior curve of a handle). Immutable.
class HexMap {
 public:
  HexMap(std::vector<int> curve_of, std::vector<int> circle_of);

  int face_count() const { return static_cast<int>(curve_of_.size()) / 3; }
  int genus() const { return face_count() / 2 + 1; }
  int curve_of(int face, int k) const { return curve_of_[index(face, k)]; }
  int circle_of(int face, int k) const { return circle_of_[index(face, k)]; }

  std::vector<int> curve_ids() const;
  /// The two (face, k) positions carrying this curve id.
  std::array<std::pair<int, int>, 2> banks(int curve) const;

  /// Segment following the given one along its boundary circle (corner walk
  /// across the glued arc endpoint).
  std::pair<int, int> next_segment(int face, int k) const;

  static HexMap from_raw(const RawHexMap& raw);
  RawHexMap to_raw() const;

  bool operator==(const HexMap&) const = default;

 private:
  size_t index(int face, int k) const;
  std::vector<int> curve_of_;
  std::vector<int> circle_of_;
};

/// The S+ map of the strictly standard decomposition of a closed genus-g
/// surface: one hexagon per pants of the standard caterpillar, curve ids
/// equal to the caterpillar edge ids, z_0 the principle zipper and z_i the
/// circle inside handle i.
HexMap hexmap_standard(int genus);

/// All HexMap invariants: hexagon faces with alternating side types, every
/// curve on exactly one arc (two banks), boundary circles consistent with the
/// corner walk, Euler characteristic of a disk with g holes, connectivity.
GraphReport validate_hexmap(const RawHexMap& raw);
GraphReport validate_hexmap(const HexMap& hm);

/// Both admissible re-splits of the octagon obtained by deleting the curve's
/// arc: entry 0 re-inserts the deleted arc (the identity), entry 1 is the
/// unique different re-split (the zipped flip).
std::array<HexMap, 2> octagon_resplits(const HexMap& hm, int curve);

/// Replace a regular curve by the unique other curve meeting the zipper
/// system twice and nothing else. An involution.
HexMap zipped_flip(const HexMap& hm, int curve);

/// Forgetful projection: one pants per hexagon, one edge per curve id.
PantsGraph project_to_graph(const HexMap& hm);

/// Equal keys iff the maps are equal up to face reordering and rotation
/// (curve ids and circle labels are preserved).
std::string canonical_hex_key(const HexMap& hm);

}  // namespace pants
