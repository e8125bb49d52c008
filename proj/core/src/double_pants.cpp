#include "pants/double_pants.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "pants/canonical.hpp"

namespace pants {

Slope canonical_slope_sign(const Slope& s) {
  if (s[0] < 0 || (s[0] == 0 && s[1] < 0)) return {-s[0], -s[1]};
  return s;
}

Int slope_det(const Slope& u, const Slope& v) { return u[0] * v[1] - u[1] * v[0]; }

static Int slope_gcd(const Slope& s) { return std::gcd(s[0], s[1]); }

ClassVector HandleState::push(const Slope& s) const {
  return add(scale(s[0], basis_a), scale(s[1], basis_b));
}

DoublePants::DoublePants(MarkedPants side_a, MarkedPants side_b,
                         std::vector<std::pair<int, int>> matching,
                         std::vector<HandleState> handles, std::vector<int> handle_order)
    : side_a_(std::move(side_a)),
      side_b_(std::move(side_b)),
      matching_(std::move(matching)),
      handles_(std::move(handles)),
      handle_order_(std::move(handle_order)) {
  if (!(side_a_.graph().sig() == side_b_.graph().sig())) {
    throw std::invalid_argument("the two sides must share a surface signature");
  }
  std::sort(matching_.begin(), matching_.end());
  std::set<int> as, bs;
  for (const auto& [ea, eb] : matching_) {
    if (ea < 0 || ea >= side_a_.graph().edge_count() || eb < 0 ||
        eb >= side_b_.graph().edge_count()) {
      throw std::invalid_argument("matching references an edge out of range");
    }
    if (!as.insert(ea).second || !bs.insert(eb).second) {
      throw std::invalid_argument("matching is not a partial bijection");
    }
  }
  std::sort(handles_.begin(), handles_.end(),
            [](const HandleState& x, const HandleState& y) { return x.loop_a < y.loop_a; });
  for (int id : handle_order_) {
    if (!find_handle(id)) throw std::invalid_argument("handle order references unknown handle");
  }
}

std::optional<int> DoublePants::matched_partner(Side s, int edge) const {
  for (const auto& [ea, eb] : matching_) {
    if (s == Side::A && ea == edge) return eb;
    if (s == Side::B && eb == edge) return ea;
  }
  return std::nullopt;
}

const HandleState* DoublePants::find_handle(int loop_a) const {
  for (const auto& h : handles_) {
    if (h.loop_a == loop_a) return &h;
  }
  return nullptr;
}

namespace {

// coordinates of c in the frozen handle basis, when c lies in that summand
std::optional<Slope> express_in_basis(const ClassVector& basis_a, const ClassVector& basis_b,
                                      const ClassVector& c) {
  Int eps = symplectic_pairing(basis_a, basis_b);
  if (eps != 1 && eps != -1) return std::nullopt;
  Int y = symplectic_pairing(basis_a, c) / eps;
  Int x = -symplectic_pairing(basis_b, c) / eps;
  if (add(scale(x, basis_a), scale(y, basis_b)) != c) return std::nullopt;
  return Slope{x, y};
}

std::optional<int> companion_leg_label(const PantsGraph& gr, const Handle& h) {
  for (int s = 0; s < 3; ++s) {
    const auto& occ = gr.occupant(h.vertex, s);
    if (occ.kind == PantsGraph::Occupant::Kind::Leg) return occ.index + 1;
  }
  return std::nullopt;
}

std::optional<int> partner_in(const std::vector<std::pair<int, int>>& matching, Side s, int edge) {
  for (const auto& [ea, eb] : matching) {
    if (s == Side::A && ea == edge) return eb;
    if (s == Side::B && eb == edge) return ea;
  }
  return std::nullopt;
}

// The tracked handle states are exactly the unambiguous (matched-boundary,
// pairing +-1) pairs of one-side handles. Frozen bases survive from `prior`;
// slopes are re-expressed from the current loop classes.
std::vector<HandleState> derive_handles(const MarkedPants& A, const MarkedPants& B,
                                        const std::vector<std::pair<int, int>>& matching,
                                        const std::vector<HandleState>& prior) {
  auto ha = detect_handles(A.graph());
  auto hb = detect_handles(B.graph());
  struct Cand {
    Handle a, b;
  };
  std::vector<Cand> cands;
  for (const auto& a : ha) {
    for (const auto& b : hb) {
      bool boundary_ok = false;
      if (a.boundary_edge && b.boundary_edge) {
        auto p = partner_in(matching, Side::A, *a.boundary_edge);
        boundary_ok = p && *p == *b.boundary_edge;
      } else if (!a.boundary_edge && !b.boundary_edge) {
        auto la = companion_leg_label(A.graph(), a);
        auto lb = companion_leg_label(B.graph(), b);
        boundary_ok = la && lb && *la == *lb;
      }
      if (!boundary_ok) continue;
      Int p = symplectic_pairing(A.class_of(a.loop_edge), B.class_of(b.loop_edge));
      if (p == 1 || p == -1) cands.push_back({a, b});
    }
  }
  std::map<int, int> count_a, count_b;
  for (const auto& c : cands) {
    ++count_a[c.a.loop_edge];
    ++count_b[c.b.loop_edge];
  }

  std::vector<HandleState> out;
  for (const auto& c : cands) {
    if (count_a[c.a.loop_edge] != 1 || count_b[c.b.loop_edge] != 1) continue;
    const ClassVector& ca = A.class_of(c.a.loop_edge);
    const ClassVector& cb = B.class_of(c.b.loop_edge);

    const HandleState* old = nullptr;
    for (const auto& h : prior) {
      if (h.loop_a == c.a.loop_edge && h.loop_b == c.b.loop_edge) old = &h;
    }
    HandleState h;
    h.loop_a = c.a.loop_edge;
    h.loop_b = c.b.loop_edge;
    h.boundary_a = c.a.boundary_edge;
    h.boundary_b = c.b.boundary_edge;
    if (old) {
      h.basis_a = old->basis_a;
      h.basis_b = old->basis_b;
      auto sa = express_in_basis(h.basis_a, h.basis_b, ca);
      auto sb = express_in_basis(h.basis_a, h.basis_b, cb);
      if (!sa || !sb) continue;  // classes left the frozen summand: stop tracking
      h.slope_a = *sa;
      h.slope_b = *sb;
      if (std::abs(slope_det(h.slope_a, h.slope_b)) != 1) continue;
    } else {
      h.basis_a = ca;
      h.basis_b = cb;
      h.slope_a = {1, 0};
      h.slope_b = {0, 1};
    }
    out.push_back(h);
  }
  std::sort(out.begin(), out.end(),
            [](const HandleState& x, const HandleState& y) { return x.loop_a < y.loop_a; });
  return out;
}

std::vector<int> surviving_order(const std::vector<int>& order,
                                 const std::vector<HandleState>& handles) {
  std::vector<int> out;
  for (int id : order) {
    for (const auto& h : handles) {
      if (h.loop_a == id) {
        out.push_back(id);
        break;
      }
    }
  }
  // newly tracked handles go to the back, by id
  for (const auto& h : handles) {
    if (std::find(out.begin(), out.end(), h.loop_a) == out.end()) out.push_back(h.loop_a);
  }
  return out;
}

std::vector<ClassVector> all_classes(const DoublePants& dp) {
  std::vector<ClassVector> all;
  for (Side s : {Side::A, Side::B}) {
    const auto& mp = dp.side(s);
    for (int e = 0; e < mp.graph().edge_count(); ++e) all.push_back(mp.class_of(e));
  }
  return all;
}

}  // namespace

DoublePants standard_double(const SurfaceSig& sig) {
  require_valid(sig);
  MarkedPants a = standard_marked(sig, Side::A);
  MarkedPants b = standard_marked(sig, Side::B);

  std::vector<std::pair<int, int>> matching;
  for (int e = 0; e < a.graph().edge_count(); ++e) {
    if (!a.graph().is_loop(e)) matching.emplace_back(e, e);
  }
  std::vector<HandleState> handles = derive_handles(a, b, matching, {});
  std::vector<int> order;
  for (const auto& h : handles) order.push_back(h.loop_a);
  return DoublePants(std::move(a), std::move(b), std::move(matching), std::move(handles),
                     std::move(order));
}

// --- structural standardness -------------------------------------------------

namespace {

// permutation pairing the two sides' handles by |<alpha_i, beta_j>| = 1 with
// zeros elsewhere; empty when no such bijection exists
std::optional<std::vector<std::pair<Handle, Handle>>> handle_pairing(const MarkedPants& A,
                                                                     const MarkedPants& B) {
  const int g = A.graph().sig().genus;
  auto ha = detect_handles(A.graph());
  auto hb = detect_handles(B.graph());
  if (static_cast<int>(ha.size()) != g || static_cast<int>(hb.size()) != g) return std::nullopt;
  std::vector<std::pair<Handle, Handle>> out;
  std::vector<bool> used(hb.size(), false);
  for (const auto& a : ha) {
    int hit = -1;
    for (size_t j = 0; j < hb.size(); ++j) {
      Int p = symplectic_pairing(A.class_of(a.loop_edge), B.class_of(hb[j].loop_edge));
      if (p == 1 || p == -1) {
        if (hit >= 0) return std::nullopt;  // ambiguous row
        hit = static_cast<int>(j);
      } else if (p != 0) {
        return std::nullopt;  // neither unit nor zero: not a standard position
      }
    }
    if (hit < 0 || used[hit]) return std::nullopt;
    used[hit] = true;
    out.emplace_back(a, hb[static_cast<size_t>(hit)]);
  }
  return out;
}

// canonical key of the sphere part (handle complement) with companion
// attachments labeled by the handle pair index and legs by their labels
std::string sphere_tree_key(const MarkedPants& mp, const std::map<int, int>& companion_pair_label) {
  const auto& gr = mp.graph();
  std::vector<bool> is_handle_vertex(static_cast<size_t>(gr.vertex_count()), false);
  for (const auto& h : detect_handles(gr)) is_handle_vertex[static_cast<size_t>(h.vertex)] = true;

  detail::CanonGraph cg;
  std::map<int, int> vid;
  for (int v = 0; v < gr.vertex_count(); ++v) {
    if (is_handle_vertex[static_cast<size_t>(v)]) continue;
    std::vector<std::string> tags;
    for (int s = 0; s < 3; ++s) {
      const auto& occ = gr.occupant(v, s);
      if (occ.kind == PantsGraph::Occupant::Kind::Leg) {
        tags.push_back("leg" + std::to_string(occ.index + 1));
      } else if (auto it = companion_pair_label.find(occ.index);
                 it != companion_pair_label.end()) {
        tags.push_back("h" + std::to_string(it->second));
      }
    }
    std::sort(tags.begin(), tags.end());
    std::string attr = "s";
    for (const auto& t : tags) attr += ":" + t;
    vid[v] = cg.add_vertex(attr);
  }
  if (vid.empty()) return "empty";
  for (int e = 0; e < gr.edge_count(); ++e) {
    const auto& ends = gr.edge_ends(e);
    auto u = vid.find(ends[0].vertex);
    auto v = vid.find(ends[1].vertex);
    if (u != vid.end() && v != vid.end()) {
      int ev = cg.add_vertex("t");
      cg.add_edge(ev, u->second);
      cg.add_edge(ev, v->second);
    }
  }
  return detail::canonical_encoding(cg);
}

}  // namespace

DoubleReport check_double(const DoublePants& dp) {
  DoubleReport rep;
  const MarkedPants& A = dp.side(Side::A);
  const MarkedPants& B = dp.side(Side::B);
  rep.side_a = check_marking(A);
  rep.side_b = check_marking(B);

  for (const auto& [ea, eb] : dp.matching()) {
    if (canonical_sign(A.class_of(ea)) != canonical_sign(B.class_of(eb))) {
      rep.failures.push_back("matched pair (" + std::to_string(ea) + "," + std::to_string(eb) +
                             ") carries different classes");
    }
  }

  rep.general_position = spans_full(all_classes(dp), dp.sig().homology_rank());

  // the stored handle list must be exactly the derivable one
  auto derived = derive_handles(A, B, dp.matching(), dp.handles());
  if (derived != dp.handles()) {
    rep.failures.push_back("stored handle states disagree with the derived ones");
  }
  for (const auto& h : dp.handles()) {
    if (slope_gcd(h.slope_a) != 1 || slope_gcd(h.slope_b) != 1) {
      rep.failures.push_back("handle slopes must be primitive");
    }
    if (std::abs(slope_det(h.slope_a, h.slope_b)) != 1) {
      rep.failures.push_back("handle slope determinant must be +-1");
    }
    if (h.push(h.slope_a) != A.class_of(h.loop_a) || h.push(h.slope_b) != B.class_of(h.loop_b)) {
      rep.failures.push_back("handle slopes do not push to the loop classes");
    }
  }

  auto pairing = handle_pairing(A, B);
  rep.standard = is_standard_graph(A.graph()) && is_standard_graph(B.graph()) &&
                 pairing.has_value() && rep.general_position;
  if (rep.standard) {
    std::vector<std::pair<ClassVector, size_t>> keys;
    for (size_t i = 0; i < pairing->size(); ++i) {
      keys.emplace_back(canonical_sign(A.class_of((*pairing)[i].first.loop_edge)), i);
    }
    std::sort(keys.begin(), keys.end());
    std::map<int, int> label_a, label_b;
    for (size_t rank = 0; rank < keys.size(); ++rank) {
      const auto& pr = (*pairing)[keys[rank].second];
      if (pr.first.boundary_edge) label_a[*pr.first.boundary_edge] = static_cast<int>(rank);
      if (pr.second.boundary_edge) label_b[*pr.second.boundary_edge] = static_cast<int>(rank);
    }
    rep.strictly_standard = sphere_tree_key(A, label_a) == sphere_tree_key(B, label_b);
  }

  rep.distinct_curves = A.graph().edge_count() + B.graph().edge_count() -
                        static_cast<int>(dp.matching().size());
  rep.intersections = 0;
  for (const auto& h : dp.handles()) {
    rep.intersections += static_cast<int>(std::abs(slope_det(h.slope_a, h.slope_b)));
  }
  return rep;
}

// --- elementary moves ---------------------------------------------------------

DoublePants flip_one_side(const DoublePants& dp, Side side, int edge, FlipChoice choice) {
  MarkedPants flipped = flip_marked(dp.side(side), edge, choice);
  std::vector<std::pair<int, int>> matching;
  for (const auto& [ea, eb] : dp.matching()) {
    if ((side == Side::A && ea == edge) || (side == Side::B && eb == edge)) continue;
    matching.emplace_back(ea, eb);
  }
  const MarkedPants& A = side == Side::A ? flipped : dp.side(Side::A);
  const MarkedPants& B = side == Side::B ? flipped : dp.side(Side::B);
  auto handles = derive_handles(A, B, matching, dp.handles());
  auto order = surviving_order(dp.handle_order(), handles);
  return DoublePants(A, B, std::move(matching), std::move(handles), std::move(order));
}

namespace {

// stub identities of a flipped edge, phrased in side-B terms: legs by label,
// side-A edges through the matching, side-B edges by their own id
std::optional<std::array<std::string, 4>> stub_keys(const DoublePants& dp, Side side, int edge) {
  const auto& gr = dp.side(side).graph();
  const auto ends = gr.edge_ends(edge);
  std::array<std::string, 4> out;
  int k = 0;
  for (int which = 0; which < 2; ++which) {
    for (int s = 0; s < 3; ++s) {
      if (s == ends[which].slot) continue;
      const auto& occ = gr.occupant(ends[which].vertex, s);
      if (occ.kind == PantsGraph::Occupant::Kind::Leg) {
        out[static_cast<size_t>(k++)] = "leg" + std::to_string(occ.index + 1);
        continue;
      }
      int id_b;
      if (side == Side::B) {
        id_b = occ.index;
      } else if (auto p = dp.matched_partner(Side::A, occ.index)) {
        id_b = *p;
      } else {
        return std::nullopt;  // unmatched stub: no cross-side identity
      }
      out[static_cast<size_t>(k++)] = "e" + std::to_string(id_b);
    }
  }
  return out;
}

std::array<std::multiset<std::string>, 2> groups_for(const std::array<std::string, 4>& key,
                                                     FlipChoice c) {
  size_t partner = (c == FlipChoice::Cross) ? 2 : 3;
  size_t rest = partner == 2 ? 3 : 2;
  return {std::multiset<std::string>{key[0], key[partner]},
          std::multiset<std::string>{key[1], key[rest]}};
}

}  // namespace

FlipChoice matched_flip_choice(const DoublePants& dp, int edge_a, FlipChoice choice_a) {
  auto eb = dp.matched_partner(Side::A, edge_a);
  if (!eb) throw std::invalid_argument("double flip requires a matched edge");

  auto ka = stub_keys(dp, Side::A, edge_a);
  auto kb = stub_keys(dp, Side::B, *eb);
  if (!ka || !kb) return choice_a;  // unmatched stubs around: keep the same label

  auto want = groups_for(*ka, choice_a);
  for (FlipChoice cb : {FlipChoice::Cross, FlipChoice::Bar}) {
    auto got = groups_for(*kb, cb);
    if ((got[0] == want[0] && got[1] == want[1]) || (got[0] == want[1] && got[1] == want[0])) {
      return cb;
    }
  }
  throw std::invalid_argument("double flip: the two sides' stub structures are not aligned");
}

DoublePants double_flip(const DoublePants& dp, int edge_a, FlipChoice choice) {
  auto eb = dp.matched_partner(Side::A, edge_a);
  if (!eb) throw std::invalid_argument("double flip requires a matched edge");
  if (dp.side(Side::A).graph().is_loop(edge_a) || dp.side(Side::B).graph().is_loop(*eb)) {
    throw std::invalid_argument("double flip of a non-regular curve");
  }
  for (const auto& h : dp.handles()) {
    if ((h.boundary_a && *h.boundary_a == edge_a) || (h.boundary_b && *h.boundary_b == *eb)) {
      throw std::invalid_argument(
          "double flip of a tracked handle boundary would desynchronize the handles");
    }
  }
  FlipChoice choice_b = matched_flip_choice(dp, edge_a, choice);
  MarkedPants A = flip_marked(dp.side(Side::A), edge_a, choice);
  MarkedPants B = flip_marked(dp.side(Side::B), *eb, choice_b);
  if (canonical_sign(A.class_of(edge_a)) != canonical_sign(B.class_of(*eb))) {
    throw std::invalid_argument("double flip desynchronizes the matching: new classes differ");
  }
  auto matching = dp.matching();  // the pair survives under the reused edge ids
  auto handles = derive_handles(A, B, matching, dp.handles());
  auto order = surviving_order(dp.handle_order(), handles);
  return DoublePants(std::move(A), std::move(B), std::move(matching), std::move(handles),
                     std::move(order));
}

DoublePants handle_twist(const DoublePants& dp, int handle_loop_a, Side along, int dir) {
  if (dir != 1 && dir != -1) throw std::invalid_argument("twist direction must be +-1");
  const HandleState* h = dp.find_handle(handle_loop_a);
  if (!h) {
    throw std::invalid_argument("handle twist: no tracked handle with side-A loop " +
                                std::to_string(handle_loop_a));
  }
  MarkedPants A = dp.side(Side::A);
  MarkedPants B = dp.side(Side::B);
  if (along == Side::A) {
    Slope sb{h->slope_b[0] + dir * h->slope_a[0], h->slope_b[1] + dir * h->slope_a[1]};
    B = s_move_marked(B, h->loop_b, h->push(sb));
  } else {
    Slope sa{h->slope_a[0] + dir * h->slope_b[0], h->slope_a[1] + dir * h->slope_b[1]};
    A = s_move_marked(A, h->loop_a, h->push(sa));
  }
  auto handles = derive_handles(A, B, dp.matching(), dp.handles());
  auto order = surviving_order(dp.handle_order(), handles);
  return DoublePants(std::move(A), std::move(B), dp.matching(), std::move(handles),
                     std::move(order));
}

std::pair<DoublePants, MoveWord> double_s_move(const DoublePants& dp, int handle_loop_a) {
  const HandleState* h = dp.find_handle(handle_loop_a);
  if (!h) throw std::invalid_argument("double S-move: unknown handle");
  Slope old_a = canonical_slope_sign(h->slope_a);
  Slope old_b = canonical_slope_sign(h->slope_b);

  MoveWord w;
  w.append(HandleTwistStep{handle_loop_a, Side::A, +1});
  w.append(HandleTwistStep{handle_loop_a, Side::B, -1});
  w.append(HandleTwistStep{handle_loop_a, Side::A, +1});

  DoublePants out = dp;
  for (const auto& s : w.steps) out = apply_step(out, s);

  const HandleState* hh = out.find_handle(handle_loop_a);
  if (!hh || canonical_slope_sign(hh->slope_a) != old_b ||
      canonical_slope_sign(hh->slope_b) != old_a) {
    throw std::logic_error("double S-move macro failed to swap the slopes");
  }
  return {std::move(out), std::move(w)};
}

DoublePants rematch(const DoublePants& dp, int edge_a, int edge_b) {
  if (dp.matched_partner(Side::A, edge_a) || dp.matched_partner(Side::B, edge_b)) {
    throw std::invalid_argument("rematch: edge already matched");
  }
  if (canonical_sign(dp.side(Side::A).class_of(edge_a)) !=
      canonical_sign(dp.side(Side::B).class_of(edge_b))) {
    throw std::invalid_argument("rematch: classes differ");
  }
  auto matching = dp.matching();
  matching.emplace_back(edge_a, edge_b);
  auto handles =
      derive_handles(dp.side(Side::A), dp.side(Side::B), matching, dp.handles());
  auto order = surviving_order(dp.handle_order(), handles);
  return DoublePants(dp.side(Side::A), dp.side(Side::B), std::move(matching), std::move(handles),
                     std::move(order));
}

DoublePants unmatch(const DoublePants& dp, int edge_a) {
  if (!dp.matched_partner(Side::A, edge_a)) {
    throw std::invalid_argument("unmatch: edge is not matched");
  }
  std::vector<std::pair<int, int>> matching;
  for (const auto& [ea, eb] : dp.matching()) {
    if (ea != edge_a) matching.emplace_back(ea, eb);
  }
  auto handles = derive_handles(dp.side(Side::A), dp.side(Side::B), matching, dp.handles());
  auto order = surviving_order(dp.handle_order(), handles);
  return DoublePants(dp.side(Side::A), dp.side(Side::B), std::move(matching), std::move(handles),
                     std::move(order));
}

DoublePants s_move_one_side(const DoublePants& dp, Side side, int loop_edge,
                            const ClassVector& new_class) {
  if (dp.matched_partner(side, loop_edge)) {
    throw std::invalid_argument("s_move of a matched curve");
  }
  MarkedPants moved = s_move_marked(dp.side(side), loop_edge, new_class);
  const MarkedPants& A = side == Side::A ? moved : dp.side(Side::A);
  const MarkedPants& B = side == Side::B ? moved : dp.side(Side::B);
  auto handles = derive_handles(A, B, dp.matching(), dp.handles());
  auto order = surviving_order(dp.handle_order(), handles);
  return DoublePants(A, B, dp.matching(), std::move(handles), std::move(order));
}

MoveWord realize_slope(const HandleState& h, const Slope& target) {
  if (slope_gcd(target) != 1) {
    throw std::invalid_argument("realize_slope: target slope must be primitive");
  }
  Slope want = canonical_slope_sign(target);
  if (canonical_slope_sign(h.slope_a) == want) return {};
  if (canonical_slope_sign(h.slope_b) == want) {
    MoveWord w;
    w.append(DoubleSMoveStep{h.loop_a});
    return w;
  }

  // shortest twist word by BFS over oriented slope pairs
  Int bound = 2;
  for (Int x : {h.slope_a[0], h.slope_a[1], h.slope_b[0], h.slope_b[1], target[0], target[1]}) {
    bound = std::max(bound, std::abs(x));
  }
  bound += 2;

  using State = std::array<Int, 4>;
  State start{h.slope_a[0], h.slope_a[1], h.slope_b[0], h.slope_b[1]};
  std::map<State, std::pair<State, std::pair<Side, int>>> parent;
  std::deque<State> queue{start};
  parent[start] = {start, {Side::A, 0}};

  auto expand = [&](const State& s) {
    std::vector<std::pair<State, std::pair<Side, int>>> next;
    for (int dir : {+1, -1}) {
      next.push_back({{s[0], s[1], s[2] + dir * s[0], s[3] + dir * s[1]}, {Side::A, dir}});
      next.push_back({{s[0] + dir * s[2], s[1] + dir * s[3], s[2], s[3]}, {Side::B, dir}});
    }
    return next;
  };
  auto in_bound = [&](const State& s) {
    return std::abs(s[0]) <= bound && std::abs(s[1]) <= bound && std::abs(s[2]) <= bound &&
           std::abs(s[3]) <= bound;
  };

  State goal{};
  bool found = false;
  while (!queue.empty() && !found) {
    State s = queue.front();
    queue.pop_front();
    for (const auto& [t, mv] : expand(s)) {
      if (!in_bound(t) || parent.count(t)) continue;
      parent[t] = {s, mv};
      if (canonical_slope_sign(Slope{t[0], t[1]}) == want) {
        goal = t;
        found = true;
        break;
      }
      queue.push_back(t);
    }
  }
  if (!found) throw std::logic_error("realize_slope: breadth-first search exhausted its bound");

  std::vector<Step> rev;
  for (State s = goal; s != start; s = parent[s].first) {
    auto [along, dir] = parent[s].second;
    rev.push_back(HandleTwistStep{h.loop_a, along, dir});
  }
  MoveWord w;
  w.steps.assign(rev.rbegin(), rev.rend());
  return w;
}

// --- transposition macro -------------------------------------------------------

namespace {

// vertex on the sphere side of a handle's boundary edge
int attachment_vertex(const PantsGraph& gr, const HandleState& h, Side side) {
  auto be = side == Side::A ? h.boundary_a : h.boundary_b;
  if (!be) throw std::invalid_argument("transpose: handle bounded by a leg cannot move");
  const auto& ends = gr.edge_ends(*be);
  int hv = -1;
  for (const auto& hh : detect_handles(gr)) {
    if (hh.loop_edge == (side == Side::A ? h.loop_a : h.loop_b)) hv = hh.vertex;
  }
  return ends[0].vertex == hv ? ends[1].vertex : ends[0].vertex;
}

// flip choice grouping the two given occupant edges together
FlipChoice choice_grouping(const PantsGraph& gr, int edge, int want_x, int want_y) {
  const auto ends = gr.edge_ends(edge);
  std::array<int, 4> stub_edge{-1, -1, -1, -1};
  int k = 0;
  for (int which = 0; which < 2; ++which) {
    for (int s = 0; s < 3; ++s) {
      if (s == ends[which].slot) continue;
      const auto& occ = gr.occupant(ends[which].vertex, s);
      stub_edge[static_cast<size_t>(k++)] =
          occ.kind == PantsGraph::Occupant::Kind::EdgeEnd ? occ.index : -(occ.index + 2);
    }
  }
  auto pos = [&](int id) {
    for (int i = 0; i < 4; ++i) {
      if (stub_edge[static_cast<size_t>(i)] == id) return i;
    }
    throw std::invalid_argument("transpose: expected stub not present at the flipped edge");
  };
  int i = pos(want_x), j = pos(want_y);
  if (i > j) std::swap(i, j);
  if (i >= 2 || j < 2) {
    throw std::invalid_argument("transpose: stubs to regroup sit on the same side of the edge");
  }
  // Cross pairs stub 0 with 2 and 1 with 3
  bool cross = (i == 0 && j == 2) || (i == 1 && j == 3);
  return cross ? FlipChoice::Cross : FlipChoice::Bar;
}

}  // namespace

std::pair<DoublePants, MoveWord> transpose_adjacent(const DoublePants& dp, int position) {
  auto rep = check_double(dp);
  if (!rep.ok() || !rep.strictly_standard) {
    throw std::invalid_argument("transpose: state must be strictly standard");
  }
  const auto& order = dp.handle_order();
  if (position < 0 || position + 1 >= static_cast<int>(order.size())) {
    throw std::invalid_argument("transpose: position out of range");
  }
  int id1 = order[static_cast<size_t>(position)];
  int id2 = order[static_cast<size_t>(position) + 1];
  const HandleState* h1 = dp.find_handle(id1);
  const HandleState* h2 = dp.find_handle(id2);
  if (!h1 || !h2) throw std::logic_error("transpose: stale handle order");

  auto swap_order = [&](DoublePants state) {
    auto ord = state.handle_order();
    auto it1 = std::find(ord.begin(), ord.end(), id1);
    auto it2 = std::find(ord.begin(), ord.end(), id2);
    if (it1 == ord.end() || it2 == ord.end()) {
      throw std::logic_error("transpose: handles lost during the macro");
    }
    std::iter_swap(it1, it2);
    return DoublePants(state.side(Side::A), state.side(Side::B), state.matching(),
                       state.handles(), std::move(ord));
  };

  const auto& ga = dp.side(Side::A).graph();
  int u1 = attachment_vertex(ga, *h1, Side::A);
  int u2 = attachment_vertex(ga, *h2, Side::A);

  if (u1 == u2) {
    // the two handles hang off one pants: transposition is a symmetry
    return {swap_order(dp), MoveWord{}};
  }

  // the matched sphere edge between the two attachment pants
  int m_a = -1;
  for (int s = 0; s < 3; ++s) {
    const auto& occ = ga.occupant(u1, s);
    if (occ.kind != PantsGraph::Occupant::Kind::EdgeEnd) continue;
    const auto& ends = ga.edge_ends(occ.index);
    int other = ends[occ.end == 0 ? 1 : 0].vertex;
    if (other == u2 && dp.matched_partner(Side::A, occ.index)) m_a = occ.index;
  }
  if (m_a < 0) {
    throw std::invalid_argument(
        "transpose: handles are not joined by a matched sphere edge; normalize first");
  }
  int m_b = *dp.matched_partner(Side::A, m_a);

  MoveWord w;
  DoublePants cur = dp;
  auto do_step = [&](Step s) {
    cur = apply_step(cur, s);
    w.append(std::move(s));
  };

  do_step(HandleTwistStep{id1, Side::A, +1});
  do_step(HandleTwistStep{id2, Side::A, +1});

  // regroup side A: handle 1's companion joins the far stub of u2
  {
    const auto& g = cur.side(Side::A).graph();
    int c1 = *cur.find_handle(id1)->boundary_a;
    int c2 = *cur.find_handle(id2)->boundary_a;
    const auto ends = g.edge_ends(m_a);
    int far = -1;
    for (int which = 0; which < 2; ++which) {
      if (ends[which].vertex != u2) continue;
      for (int s = 0; s < 3; ++s) {
        if (s == ends[which].slot) continue;
        const auto& occ = g.occupant(u2, s);
        int key = occ.kind == PantsGraph::Occupant::Kind::EdgeEnd ? occ.index : -(occ.index + 2);
        if (key != c2) far = key;
      }
    }
    do_step(FlipStep{Side::A, m_a, choice_grouping(g, m_a, c1, far)});
  }

  // side B reaches the same regrouping through the two-flip detour
  {
    const auto& g = cur.side(Side::B).graph();
    int c1 = *cur.find_handle(id1)->boundary_b;
    int c2 = *cur.find_handle(id2)->boundary_b;
    int ub2 = attachment_vertex(g, *cur.find_handle(id2), Side::B);
    const auto ends = g.edge_ends(m_b);
    int far = -1;
    for (int which = 0; which < 2; ++which) {
      if (ends[which].vertex != ub2) continue;
      for (int s = 0; s < 3; ++s) {
        if (s == ends[which].slot) continue;
        const auto& occ = g.occupant(ub2, s);
        int key = occ.kind == PantsGraph::Occupant::Kind::EdgeEnd ? occ.index : -(occ.index + 2);
        if (key != c2) far = key;
      }
    }
    FlipChoice direct = choice_grouping(g, m_b, c1, far);
    do_step(FlipStep{Side::B, m_b, other_choice(direct)});
    // second flip: from the detour state, pick the choice that reaches the goal
    const auto& g2 = cur.side(Side::B).graph();
    do_step(FlipStep{Side::B, m_b, choice_grouping(g2, m_b, c1, far)});
  }

  do_step(RematchStep{m_a, m_b});
  do_step(HandleTwistStep{id1, Side::A, -1});
  do_step(HandleTwistStep{id2, Side::A, -1});

  DoublePants out = swap_order(cur);
  auto post = check_double(out);
  if (!post.ok() || !post.strictly_standard) {
    throw std::logic_error("transpose: endpoint is not strictly standard");
  }
  return {std::move(out), std::move(w)};
}

// --- canonical key -------------------------------------------------------------

std::string canonical_key(const DoublePants& dp) {
  detail::CanonGraph cg;
  std::array<std::vector<int>, 2> edge_vertex;
  for (Side s : {Side::A, Side::B}) {
    const auto& mp = dp.side(s);
    const auto& gr = mp.graph();
    std::string tag = to_string(s);
    std::vector<int> vid(static_cast<size_t>(gr.vertex_count()));
    for (int v = 0; v < gr.vertex_count(); ++v) {
      std::string attr = "p" + tag;
      std::vector<int> leg_labels;
      for (int sl = 0; sl < 3; ++sl) {
        const auto& occ = gr.occupant(v, sl);
        if (occ.kind == PantsGraph::Occupant::Kind::Leg) leg_labels.push_back(occ.index + 1);
      }
      std::sort(leg_labels.begin(), leg_labels.end());
      for (int l : leg_labels) attr += ":leg" + std::to_string(l);
      vid[static_cast<size_t>(v)] = cg.add_vertex(attr);
    }
    auto& evs = edge_vertex[s == Side::A ? 0 : 1];
    evs.resize(static_cast<size_t>(gr.edge_count()));
    for (int e = 0; e < gr.edge_count(); ++e) {
      int ev = cg.add_vertex("e" + tag + ":" + to_string(canonical_sign(mp.class_of(e))));
      evs[static_cast<size_t>(e)] = ev;
      cg.add_edge(ev, vid[static_cast<size_t>(gr.edge_ends(e)[0].vertex)]);
      cg.add_edge(ev, vid[static_cast<size_t>(gr.edge_ends(e)[1].vertex)]);
    }
  }
  for (const auto& [ea, eb] : dp.matching()) {
    cg.add_edge(edge_vertex[0][static_cast<size_t>(ea)], edge_vertex[1][static_cast<size_t>(eb)]);
  }
  return detail::canonical_encoding(cg);
}

}  // namespace pants
