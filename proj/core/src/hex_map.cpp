#include "pants/hex_map.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace pants {

HexMap::HexMap(std::vector<int> curve_of, std::vector<int> circle_of)
    : curve_of_(std::move(curve_of)), circle_of_(std::move(circle_of)) {
  if (curve_of_.size() != circle_of_.size() || curve_of_.size() % 6 != 0 || curve_of_.empty()) {
    throw std::invalid_argument("hex map tables must cover an even number of hexagons");
  }
  std::map<int, int> uses;
  for (int c : curve_of_) ++uses[c];
  for (const auto& [c, n] : uses) {
    if (n != 2) {
      throw std::invalid_argument("curve " + std::to_string(c) +
                                  " must have exactly two banks, has " + std::to_string(n));
    }
  }
}

size_t HexMap::index(int face, int k) const {
  if (face < 0 || face >= face_count() || k < 0 || k > 2) {
    throw std::invalid_argument("hex side out of range");
  }
  return static_cast<size_t>(3 * face + k);
}

std::vector<int> HexMap::curve_ids() const {
  std::vector<int> ids = curve_of_;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::array<std::pair<int, int>, 2> HexMap::banks(int curve) const {
  std::array<std::pair<int, int>, 2> out{std::pair<int, int>{-1, -1}, {-1, -1}};
  int n = 0;
  for (int f = 0; f < face_count(); ++f) {
    for (int k = 0; k < 3; ++k) {
      if (curve_of(f, k) == curve) {
        if (n == 2) throw std::invalid_argument("curve has more than two banks");
        out[static_cast<size_t>(n++)] = {f, k};
      }
    }
  }
  if (n != 2) throw std::invalid_argument("unknown curve id " + std::to_string(curve));
  return out;
}

std::pair<int, int> HexMap::next_segment(int face, int k) const {
  // segment (f,k) follows curve side (f,k); cross that arc endpoint
  int cs_curve = curve_of(face, k);
  auto b = banks(cs_curve);
  auto [f2, k2] = b[0] == std::pair<int, int>{face, k} ? b[1] : b[0];
  return {f2, (k2 + 2) % 3};
}

HexMap hexmap_standard(int genus) {
  if (genus < 2) throw std::invalid_argument("hexmap_standard requires genus >= 2");
  PantsGraph cat = caterpillar_graph({genus, 0});
  auto handles = detect_handles(cat);

  const int faces = cat.vertex_count();
  std::vector<int> curve_of(static_cast<size_t>(3 * faces), -1);
  std::vector<int> circle_of(static_cast<size_t>(3 * faces), 0);

  for (int v = 0; v < faces; ++v) {
    for (int s = 0; s < 3; ++s) {
      const auto& occ = cat.occupant(v, s);
      curve_of[static_cast<size_t>(3 * v + s)] = occ.index;  // closed surface: no legs
    }
  }
  // loops occupy slots 0,1 of their vertex, so segment (v,0) lies between the
  // two banks: that is the circle z_i inside handle i
  int zi = 1;
  for (const auto& h : handles) {
    circle_of[static_cast<size_t>(3 * h.vertex + 0)] = zi++;
  }
  return HexMap(std::move(curve_of), std::move(circle_of));
}

HexMap HexMap::from_raw(const RawHexMap& raw) {
  auto rep = validate_hexmap(raw);
  if (!rep.ok()) {
    throw std::invalid_argument("invalid hex map: " + rep.failures.front());
  }
  std::vector<int> curve_of, circle_of;
  for (const auto& face : raw.faces) {
    size_t start = face[0].is_curve ? 0 : 1;
    for (size_t k = 0; k < 3; ++k) {
      curve_of.push_back(face[(start + 2 * k) % 6].id);
      circle_of.push_back(face[(start + 2 * k + 1) % 6].id);
    }
  }
  return HexMap(std::move(curve_of), std::move(circle_of));
}

RawHexMap HexMap::to_raw() const {
  RawHexMap raw;
  for (int f = 0; f < face_count(); ++f) {
    std::vector<RawHexMap::RawSide> face;
    for (int k = 0; k < 3; ++k) {
      face.push_back({true, curve_of(f, k)});
      face.push_back({false, circle_of(f, k)});
    }
    raw.faces.push_back(std::move(face));
  }
  return raw;
}

GraphReport validate_hexmap(const RawHexMap& raw) {
  GraphReport rep;
  if (raw.faces.empty()) {
    rep.failures.push_back("no faces");
    return rep;
  }
  for (size_t f = 0; f < raw.faces.size(); ++f) {
    const auto& face = raw.faces[f];
    if (face.size() != 6) {
      rep.failures.push_back("face " + std::to_string(f) + " has " +
                             std::to_string(face.size()) + " sides, not 6");
      continue;
    }
    for (size_t i = 0; i < 6; ++i) {
      if (face[i].is_curve == face[(i + 1) % 6].is_curve) {
        rep.failures.push_back("face " + std::to_string(f) +
                               " does not alternate curve and zipper sides");
        break;
      }
    }
  }
  if (!rep.ok()) return rep;
  if (raw.faces.size() % 2 != 0) {
    rep.failures.push_back("odd number of hexagons");
    return rep;
  }

  std::map<int, int> curve_uses;
  for (const auto& face : raw.faces) {
    for (const auto& side : face) {
      if (side.is_curve) ++curve_uses[side.id];
    }
  }
  for (const auto& [c, n] : curve_uses) {
    if (n != 2) {
      rep.failures.push_back("curve " + std::to_string(c) + " meets the zipper circles in " +
                             std::to_string(2 * n) + " points, not 2");
    }
  }
  if (!rep.ok()) return rep;

  HexMap hm = [&] {
    std::vector<int> curve_of, circle_of;
    for (const auto& face : raw.faces) {
      size_t start = face[0].is_curve ? 0 : 1;
      for (size_t k = 0; k < 3; ++k) {
        curve_of.push_back(face[(start + 2 * k) % 6].id);
        circle_of.push_back(face[(start + 2 * k + 1) % 6].id);
      }
    }
    return HexMap(std::move(curve_of), std::move(circle_of));
  }();

  // boundary circles: corner-walk orbits must be label-constant and the
  // labels must be exactly 0..g
  const int F = hm.face_count();
  const int g = hm.genus();
  std::set<std::pair<int, int>> seen;
  int orbits = 0;
  std::set<int> labels;
  for (int f = 0; f < F; ++f) {
    for (int k = 0; k < 3; ++k) {
      if (seen.count({f, k})) continue;
      ++orbits;
      int label = hm.circle_of(f, k);
      labels.insert(label);
      std::pair<int, int> cur{f, k};
      do {
        seen.insert(cur);
        if (hm.circle_of(cur.first, cur.second) != label) {
          rep.failures.push_back("boundary circle labels are inconsistent along an orbit");
          return rep;
        }
        cur = hm.next_segment(cur.first, cur.second);
      } while (cur != std::pair<int, int>{f, k});
    }
  }
  if (orbits != g + 1) {
    rep.failures.push_back("expected " + std::to_string(g + 1) + " boundary circles, found " +
                           std::to_string(orbits));
  }
  if (static_cast<int>(labels.size()) != orbits) {
    rep.failures.push_back("boundary circles must carry distinct labels");
  }
  if (!labels.empty() && (*labels.begin() != 0 || *labels.rbegin() != g)) {
    rep.failures.push_back("boundary circle labels must be 0..g");
  }

  // Euler characteristic of the realized map: one vertex per arc endpoint,
  // edges are arcs and segments
  int arcs = static_cast<int>(curve_uses.size());
  int segments = 3 * F;
  int chi = 2 * arcs - (arcs + segments) + F;
  if (chi != 1 - g) {
    rep.failures.push_back("Euler characteristic " + std::to_string(chi) + " != 1-g = " +
                           std::to_string(1 - g));
  }

  // connectivity through shared curves
  std::map<int, std::vector<int>> faces_of_curve;
  for (int f = 0; f < F; ++f) {
    for (int k = 0; k < 3; ++k) faces_of_curve[hm.curve_of(f, k)].push_back(f);
  }
  std::vector<bool> reached(static_cast<size_t>(F), false);
  std::vector<int> stack{0};
  reached[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int k = 0; k < 3; ++k) {
      for (int f2 : faces_of_curve[hm.curve_of(f, k)]) {
        if (!reached[static_cast<size_t>(f2)]) {
          reached[static_cast<size_t>(f2)] = true;
          ++count;
          stack.push_back(f2);
        }
      }
    }
  }
  if (count != F) rep.failures.push_back("hex map is not connected");
  return rep;
}

GraphReport validate_hexmap(const HexMap& hm) { return validate_hexmap(hm.to_raw()); }

std::array<HexMap, 2> octagon_resplits(const HexMap& hm, int curve) {
  auto b = hm.banks(curve);
  auto [f1, k1] = b[0];
  auto [f2, k2] = b[1];
  if (f1 == f2) {
    throw std::invalid_argument("zipped flip of a non-regular curve (both banks in one hexagon)");
  }

  // octagon sides, cyclically, after deleting the arc:
  //   [Z1][C1][Z2][C2][Z3][C3][Z4][C4]
  // Z1 and Z3 are the merged segments at the two freed endpoints.
  struct Zip {
    int label;
  };
  struct Crv {
    int id;
  };
  int z1 = hm.circle_of(f1, k1);  // merges with (f2, k2+2): same circle point
  if (z1 != hm.circle_of(f2, (k2 + 2) % 3)) {
    throw std::logic_error("octagon merge: endpoint segments lie on different circles");
  }
  int z3 = hm.circle_of(f1, (k1 + 2) % 3);
  if (z3 != hm.circle_of(f2, k2)) {
    throw std::logic_error("octagon merge: endpoint segments lie on different circles");
  }
  Crv c1{hm.curve_of(f1, (k1 + 1) % 3)};
  Zip z2{hm.circle_of(f1, (k1 + 1) % 3)};
  Crv c2{hm.curve_of(f1, (k1 + 2) % 3)};
  Crv c3{hm.curve_of(f2, (k2 + 1) % 3)};
  Zip z4{hm.circle_of(f2, (k2 + 1) % 3)};
  Crv c4{hm.curve_of(f2, (k2 + 2) % 3)};

  auto rebuild = [&](const std::array<int, 6>& curves_a, const std::array<int, 6>& curves_b) {
    // curves_a/b encode the two hexagons as (curve, circle) triples
    std::vector<int> curve_of, circle_of;
    for (int f = 0; f < hm.face_count(); ++f) {
      if (f == f1 || f == f2) continue;
      for (int k = 0; k < 3; ++k) {
        curve_of.push_back(hm.curve_of(f, k));
        circle_of.push_back(hm.circle_of(f, k));
      }
    }
    for (int k = 0; k < 3; ++k) {
      curve_of.push_back(curves_a[static_cast<size_t>(2 * k)]);
      circle_of.push_back(curves_a[static_cast<size_t>(2 * k + 1)]);
    }
    for (int k = 0; k < 3; ++k) {
      curve_of.push_back(curves_b[static_cast<size_t>(2 * k)]);
      circle_of.push_back(curves_b[static_cast<size_t>(2 * k + 1)]);
    }
    return HexMap(std::move(curve_of), std::move(circle_of));
  };

  // chord Z1 -> Z3 restores the deleted arc:
  //   [arc, Z1b..., C1, Z2, C2, Z3a] and [arc, Z3b, C3, Z4, C4, Z1a]
  HexMap identity = rebuild({curve, z1, c1.id, z2.label, c2.id, z3},
                            {curve, z3, c3.id, z4.label, c4.id, z1});
  // chord Z2 -> Z4 is the flip:
  //   [arc, Z2b, C2, Z3, C3, Z4a] and [arc, Z4b, C4, Z1, C1, Z2a]
  HexMap flipped = rebuild({curve, z2.label, c2.id, z3, c3.id, z4.label},
                           {curve, z4.label, c4.id, z1, c1.id, z2.label});
  return {std::move(identity), std::move(flipped)};
}

HexMap zipped_flip(const HexMap& hm, int curve) { return octagon_resplits(hm, curve)[1]; }

PantsGraph project_to_graph(const HexMap& hm) {
  auto ids = hm.curve_ids();
  std::map<int, int> edge_of;
  for (size_t i = 0; i < ids.size(); ++i) edge_of[ids[i]] = static_cast<int>(i);

  std::vector<std::array<SlotRef, 2>> edges(ids.size());
  std::vector<int> filled(ids.size(), 0);
  for (int f = 0; f < hm.face_count(); ++f) {
    for (int k = 0; k < 3; ++k) {
      int e = edge_of.at(hm.curve_of(f, k));
      int& n = filled[static_cast<size_t>(e)];
      edges[static_cast<size_t>(e)][static_cast<size_t>(n)] = SlotRef{f, k};
      ++n;
    }
  }
  return PantsGraph({hm.genus(), 0}, hm.face_count(), std::move(edges), {});
}

std::string canonical_hex_key(const HexMap& hm) {
  std::vector<std::string> faces;
  for (int f = 0; f < hm.face_count(); ++f) {
    std::string best;
    for (int rot = 0; rot < 3; ++rot) {
      std::string enc;
      for (int k = 0; k < 3; ++k) {
        enc += "c" + std::to_string(hm.curve_of(f, (k + rot) % 3));
        enc += "z" + std::to_string(hm.circle_of(f, (k + rot) % 3));
      }
      if (best.empty() || enc < best) best = enc;
    }
    faces.push_back(best);
  }
  std::sort(faces.begin(), faces.end());
  std::string out;
  for (const auto& s : faces) {
    out += s;
    out += '|';
  }
  return out;
}

}  // namespace pants
