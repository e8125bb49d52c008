#include "pants/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "pants/lattice.hpp"

namespace pants {

namespace {

int thread_budget() {
  if (const char* s = std::getenv("PANTS_THREADS")) {
    int n = std::atoi(s);
    if (n >= 1) return std::min(n, 64);
  }
  return 1;
}

// Expand a frontier in parallel: one successor list per frontier entry,
// merged in frontier order so the result is deterministic.
template <typename State, typename Succ>
std::vector<std::vector<std::pair<std::string, State>>> expand_frontier(
    const std::vector<const State*>& frontier, Succ successors) {
  std::vector<std::vector<std::pair<std::string, State>>> out(frontier.size());
  int threads = thread_budget();
  if (threads <= 1 || frontier.size() < 2) {
    for (size_t i = 0; i < frontier.size(); ++i) out[i] = successors(*frontier[i]);
    return out;
  }
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= frontier.size()) return;
        out[i] = successors(*frontier[i]);
      }
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

template <typename State>
OrbitGraph orbit_bfs(const State& start, int depth,
                     std::vector<std::pair<std::string, State>> (*successors)(const State&),
                     std::string (*key_of)(const State&), int (*loops_of)(const State&)) {
  OrbitGraph og;
  std::vector<State> states;
  std::map<std::string, int> index;

  auto intern = [&](const State& s, int d) {
    std::string key = key_of(s);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(og.nodes.size());
    index.emplace(key, id);
    og.nodes.push_back({key, loops_of(s), d, false});
    states.push_back(s);
    return id;
  };

  intern(start, 0);
  std::vector<int> frontier{0};
  for (int d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<const State*> ptrs;
    for (int id : frontier) ptrs.push_back(&states[static_cast<size_t>(id)]);
    auto expanded = expand_frontier(ptrs, successors);
    std::vector<int> next_frontier;
    for (size_t i = 0; i < frontier.size(); ++i) {
      int from = frontier[i];
      og.nodes[static_cast<size_t>(from)].expanded = true;
      for (const auto& [label, succ] : expanded[i]) {
        size_t before = og.nodes.size();
        int to = intern(succ, d + 1);
        if (og.nodes.size() > before) next_frontier.push_back(to);
        og.arcs.push_back({from, to, label});
      }
    }
    frontier = std::move(next_frontier);
  }
  return og;
}

std::vector<std::pair<std::string, MarkedPants>> marked_successors(const MarkedPants& mp) {
  std::vector<std::pair<std::string, MarkedPants>> out;
  for (int e = 0; e < mp.graph().edge_count(); ++e) {
    if (mp.graph().is_loop(e)) continue;
    for (FlipChoice c : {FlipChoice::Cross, FlipChoice::Bar}) {
      out.emplace_back("flip e" + std::to_string(e) + " " + to_string(c), flip_marked(mp, e, c));
    }
  }
  return out;
}

std::vector<std::pair<std::string, DoublePants>> double_successors(const DoublePants& dp) {
  std::vector<std::pair<std::string, DoublePants>> out;
  for (Side side : {Side::A, Side::B}) {
    const auto& mp = dp.side(side);
    for (int e = 0; e < mp.graph().edge_count(); ++e) {
      if (mp.graph().is_loop(e)) continue;
      for (FlipChoice c : {FlipChoice::Cross, FlipChoice::Bar}) {
        out.emplace_back("flip " + to_string(side) + " e" + std::to_string(e) + " " + to_string(c),
                         flip_one_side(dp, side, e, c));
      }
    }
  }
  for (const auto& h : dp.handles()) {
    for (Side along : {Side::A, Side::B}) {
      for (int dir : {+1, -1}) {
        out.emplace_back("twist h" + std::to_string(h.loop_a) + " " + to_string(along) +
                             (dir > 0 ? "+" : "-"),
                         handle_twist(dp, h.loop_a, along, dir));
      }
    }
  }
  return out;
}

std::string marked_key(const MarkedPants& mp) { return canonical_key(mp); }
std::string double_key(const DoublePants& dp) { return canonical_key(dp); }
int marked_loops(const MarkedPants& mp) {
  return static_cast<int>(detect_handles(mp.graph()).size());
}
int double_loops(const DoublePants& dp) {
  return static_cast<int>(detect_handles(dp.side(Side::A).graph()).size() +
                          detect_handles(dp.side(Side::B).graph()).size());
}

}  // namespace

std::vector<int> OrbitGraph::neighbors(int node) const {
  std::set<int> out;
  for (const auto& a : arcs) {
    if (a.from == node) out.insert(a.to);
  }
  return {out.begin(), out.end()};
}

OrbitGraph orbit_graph(const MarkedPants& start, int depth) {
  return orbit_bfs<MarkedPants>(start, depth, marked_successors, marked_key, marked_loops);
}

OrbitGraph orbit_graph(const DoublePants& start, int depth) {
  return orbit_bfs<DoublePants>(start, depth, double_successors, double_key, double_loops);
}

MarkedPants replay_marked(const MarkedPants& start, const MoveWord& word) {
  MarkedPants cur = start;
  for (const auto& step : word.steps) {
    if (const auto* f = std::get_if<FlipStep>(&step)) {
      if (f->side != Side::A) throw std::invalid_argument("marked replay supports side A only");
      cur = flip_marked(cur, f->edge, f->choice);
    } else if (const auto* m = std::get_if<SMoveStep>(&step)) {
      if (m->side != Side::A) throw std::invalid_argument("marked replay supports side A only");
      cur = s_move_marked(cur, m->loop_edge, m->new_class);
    } else {
      throw std::invalid_argument("marked replay: unsupported step " + to_string(step));
    }
  }
  return cur;
}

MoveWord alternating_normalize(const MoveWord& word, const MarkedPants& start) {
  if (start.graph().sig().genus != 2 || start.graph().sig().punctures != 0) {
    throw std::invalid_argument("alternating_normalize is a genus-2 procedure");
  }
  std::vector<MarkedPants> states{start};
  for (const auto& step : word.steps) {
    MoveWord one;
    one.append(step);
    states.push_back(replay_marked(states.back(), one));
  }
  auto type_of = [](const MarkedPants& mp) {
    return detect_handles(mp.graph()).size() == 2;  // self-folded
  };

  MoveWord out;
  for (size_t i = 0; i < word.steps.size(); ++i) {
    const MarkedPants& here = states[i];
    const MarkedPants& there = states[i + 1];
    if (type_of(here) != type_of(there)) {
      out.append(word.steps[i]);
      continue;
    }
    // type-preserving step: reroute through a self-folded state
    std::string target = canonical_key(there);
    bool found = false;
    for (int e = 0; e < here.graph().edge_count() && !found; ++e) {
      if (here.graph().is_loop(e)) continue;
      for (FlipChoice c1 : {FlipChoice::Cross, FlipChoice::Bar}) {
        MarkedPants mid = flip_marked(here, e, c1);
        if (!type_of(mid)) continue;
        for (int e2 = 0; e2 < mid.graph().edge_count() && !found; ++e2) {
          if (mid.graph().is_loop(e2)) continue;
          for (FlipChoice c2 : {FlipChoice::Cross, FlipChoice::Bar}) {
            if (canonical_key(flip_marked(mid, e2, c2)) == target) {
              out.append(FlipStep{Side::A, e, c1});
              out.append(FlipStep{Side::A, e2, c2});
              found = true;
              break;
            }
          }
        }
        if (found) break;
      }
    }
    if (!found) throw std::logic_error("alternating_normalize: no two-step detour found");
  }

  if (canonical_key(replay_marked(start, out)) != canonical_key(states.back())) {
    throw std::logic_error("alternating_normalize: endpoint changed");
  }
  return out;
}

std::optional<MoveWord> standardize(const DoublePants& dp, int budget) {
  auto gate = check_double(dp);
  if (!gate.ok()) {
    throw std::invalid_argument("standardize: state fails its invariants (general position?)");
  }
  if (gate.standard) return MoveWord{};

  struct NodeInfo {
    int parent;
    Step step;
  };
  std::vector<DoublePants> states{dp};
  std::vector<NodeInfo> info{{-1, FlipStep{}}};
  std::map<std::string, int> seen{{canonical_key(dp), 0}};
  std::vector<int> frontier{0};

  for (int d = 0; d < budget && !frontier.empty(); ++d) {
    std::vector<int> next_frontier;
    for (int id : frontier) {
      const DoublePants& cur = states[static_cast<size_t>(id)];
      for (Side side : {Side::A, Side::B}) {
        const auto& mp = cur.side(side);
        for (int e = 0; e < mp.graph().edge_count(); ++e) {
          if (mp.graph().is_loop(e)) continue;
          for (FlipChoice c : {FlipChoice::Cross, FlipChoice::Bar}) {
            DoublePants succ = flip_one_side(cur, side, e, c);
            std::string key = canonical_key(succ);
            if (seen.count(key)) continue;
            int sid = static_cast<int>(states.size());
            seen.emplace(key, sid);
            states.push_back(succ);
            info.push_back({id, FlipStep{side, e, c}});
            if (check_double(succ).standard) {
              MoveWord w;
              for (int at = sid; at != 0; at = info[static_cast<size_t>(at)].parent) {
                w.append(info[static_cast<size_t>(at)].step);
              }
              std::reverse(w.steps.begin(), w.steps.end());
              return w;
            }
            next_frontier.push_back(sid);
          }
        }
      }
    }
    frontier = std::move(next_frontier);
  }
  return std::nullopt;
}

// --- sphere part normalization --------------------------------------------------

namespace {

std::string summand_key(const MarkedPants& A, const MarkedPants& B, const HandleState& h) {
  SpanBasis span = span_basis({A.class_of(h.loop_a), B.class_of(h.loop_b)});
  std::string out = "h";
  for (const auto& row : span.rows) out += to_string(row);
  return out;
}

struct SphereItem {
  std::string key;  // sort key: handle summand or leg label
  int vertex = -1;  // side-A vertex it attaches to
};

struct SphereShape {
  std::vector<int> sphere_vertices;            // side-A vertex ids
  std::vector<SphereItem> items;               // attachments
  std::vector<std::pair<int, int>> tree_edges;  // side-A edge id -> present
  std::vector<int> tree_edge_ids;
};

SphereShape sphere_shape(const DoublePants& dp) {
  const auto& A = dp.side(Side::A);
  const auto& gr = A.graph();
  std::set<int> handle_vertices;
  std::map<int, const HandleState*> by_boundary;
  for (const auto& h : dp.handles()) {
    for (const auto& hh : detect_handles(gr)) {
      if (hh.loop_edge == h.loop_a) handle_vertices.insert(hh.vertex);
    }
    if (h.boundary_a) by_boundary[*h.boundary_a] = &h;
  }

  SphereShape shape;
  for (int v = 0; v < gr.vertex_count(); ++v) {
    if (!handle_vertices.count(v)) shape.sphere_vertices.push_back(v);
  }
  std::set<int> sphere_set(shape.sphere_vertices.begin(), shape.sphere_vertices.end());

  for (int v : shape.sphere_vertices) {
    for (int s = 0; s < 3; ++s) {
      const auto& occ = gr.occupant(v, s);
      if (occ.kind == PantsGraph::Occupant::Kind::Leg) {
        shape.items.push_back({"l" + std::to_string(occ.index + 1), v});
      } else if (auto it = by_boundary.find(occ.index); it != by_boundary.end()) {
        shape.items.push_back({summand_key(A, dp.side(Side::B), *it->second), v});
      }
    }
  }
  for (int e = 0; e < gr.edge_count(); ++e) {
    const auto& ends = gr.edge_ends(e);
    if (sphere_set.count(ends[0].vertex) && sphere_set.count(ends[1].vertex) &&
        !by_boundary.count(e) && !gr.is_loop(e)) {
      shape.tree_edges.emplace_back(ends[0].vertex, ends[1].vertex);
      shape.tree_edge_ids.push_back(e);
    }
  }
  return shape;
}

}  // namespace

bool sphere_part_sorted(const DoublePants& dp) {
  SphereShape shape = sphere_shape(dp);
  if (shape.sphere_vertices.size() <= 1) return true;

  // spine must be a path
  std::map<int, std::vector<int>> adj;
  for (const auto& [u, v] : shape.tree_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  if (shape.tree_edges.size() + 1 != shape.sphere_vertices.size()) return false;
  std::vector<int> ends;
  for (int v : shape.sphere_vertices) {
    size_t deg = adj[v].size();
    if (deg > 2) return false;
    if (deg <= 1) ends.push_back(v);
  }
  if (ends.size() != 2) return false;

  // items per vertex: two at the ends, one in the middle
  std::map<int, std::vector<std::string>> at;
  for (const auto& it : shape.items) at[it.vertex].push_back(it.key);
  for (int v : shape.sphere_vertices) {
    size_t want = (v == ends[0] || v == ends[1]) ? 2 : 1;
    if (at[v].size() != want) return false;
  }

  std::vector<std::string> sorted_keys;
  for (const auto& it : shape.items) sorted_keys.push_back(it.key);
  std::sort(sorted_keys.begin(), sorted_keys.end());

  // walk from either end and compare with the sorted arrangement
  for (int start : {ends[0], ends[1]}) {
    std::vector<std::string> seq;
    int prev = -1, cur = start;
    bool first = true;
    for (;;) {
      auto keys = at[cur];
      std::sort(keys.begin(), keys.end());
      if (first) {
        seq.insert(seq.end(), keys.begin(), keys.end());
        first = false;
      } else {
        seq.insert(seq.end(), keys.begin(), keys.end());
      }
      int next = -1;
      for (int w : adj[cur]) {
        if (w != prev) next = w;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    if (seq == sorted_keys) return true;
  }
  return false;
}

MoveWord normalize_sphere_part(const DoublePants& dp) {
  auto rep = check_double(dp);
  if (!rep.ok() || !rep.standard) {
    throw std::invalid_argument("normalize_sphere_part expects a standard state");
  }
  if (sphere_part_sorted(dp)) return {};

  struct NodeInfo {
    int parent;
    Step step;
  };
  std::vector<DoublePants> states{dp};
  std::vector<NodeInfo> info{{-1, FlipStep{}}};
  std::map<std::string, int> seen{{canonical_key(dp), 0}};
  std::deque<int> queue{0};

  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    const DoublePants cur = states[static_cast<size_t>(id)];
    SphereShape shape = sphere_shape(cur);
    for (int e : shape.tree_edge_ids) {
      for (FlipChoice c : {FlipChoice::Cross, FlipChoice::Bar}) {
        DoublePants succ = double_flip(cur, e, c);
        std::string key = canonical_key(succ);
        if (seen.count(key)) continue;
        int sid = static_cast<int>(states.size());
        seen.emplace(key, sid);
        states.push_back(succ);
        info.push_back({id, DoubleFlipStep{e, c}});
        if (sphere_part_sorted(succ)) {
          MoveWord w;
          for (int at = sid; at != 0; at = info[static_cast<size_t>(at)].parent) {
            w.append(info[static_cast<size_t>(at)].step);
          }
          std::reverse(w.steps.begin(), w.steps.end());
          return w;
        }
        queue.push_back(sid);
      }
    }
  }
  throw std::logic_error("normalize_sphere_part: search exhausted without a sorted caterpillar");
}

// --- connection -----------------------------------------------------------------

MoveWord connect_standard(const DoublePants& dp1, const DoublePants& dp2) {
  if (!(dp1.sig() == dp2.sig())) {
    throw std::invalid_argument("connect_standard: signature mismatch");
  }
  for (const DoublePants* dp : {&dp1, &dp2}) {
    auto rep = check_double(*dp);
    if (!rep.ok() || !rep.strictly_standard) {
      throw std::invalid_argument("connect_standard expects strictly standard states");
    }
  }

  MoveWord w;
  DoublePants cur = dp1;
  auto run = [&](const MoveWord& part) {
    cur = replay(cur, part);
    w.extend(part);
  };

  run(normalize_sphere_part(dp1));
  MoveWord n2 = normalize_sphere_part(dp2);
  DoublePants tgt = replay(dp2, n2);

  auto key_seq = [](const DoublePants& dp) {
    std::vector<std::string> seq;
    for (int id : dp.handle_order()) {
      const HandleState* h = dp.find_handle(id);
      seq.push_back(summand_key(dp.side(Side::A), dp.side(Side::B), *h));
    }
    return seq;
  };

  std::vector<std::string> want = key_seq(tgt);
  {
    std::vector<std::string> have = key_seq(cur);
    auto sorted_have = have, sorted_want = want;
    std::sort(sorted_have.begin(), sorted_have.end());
    std::sort(sorted_want.begin(), sorted_want.end());
    if (sorted_have != sorted_want) {
      throw std::invalid_argument(
          "connect_standard: the states do not share their handle summands");
    }
    // bubble the stored order into the target order
    for (size_t i = 0; i < want.size(); ++i) {
      size_t j = i;
      while (j < have.size() && have[j] != want[i]) ++j;
      for (; j > i; --j) {
        auto [next, tw] = transpose_adjacent(cur, static_cast<int>(j) - 1);
        cur = next;
        w.extend(tw);
        std::swap(have[j], have[j - 1]);
      }
    }
  }

  // the transposition macros may have rearranged the sphere tree
  run(normalize_sphere_part(cur));

  // per-handle slope realization
  for (const std::string& key : want) {
    const HandleState* hc = nullptr;
    for (const auto& h : cur.handles()) {
      if (summand_key(cur.side(Side::A), cur.side(Side::B), h) == key) hc = &h;
    }
    const HandleState* ht = nullptr;
    for (const auto& h : tgt.handles()) {
      if (summand_key(tgt.side(Side::A), tgt.side(Side::B), h) == key) ht = &h;
    }
    if (!hc || !ht) throw std::logic_error("connect_standard: lost a handle summand");
    int loop_id = hc->loop_a;

    ClassVector want_a = tgt.side(Side::A).class_of(ht->loop_a);
    ClassVector want_b = tgt.side(Side::B).class_of(ht->loop_b);

    auto express = [&](const HandleState& h, const ClassVector& c) -> Slope {
      Int eps = symplectic_pairing(h.basis_a, h.basis_b);
      Slope s{-symplectic_pairing(h.basis_b, c) / eps, symplectic_pairing(h.basis_a, c) / eps};
      if (h.push(s) != c) {
        throw std::invalid_argument("connect_standard: target class outside the handle summand");
      }
      return s;
    };

    run(realize_slope(*cur.find_handle(loop_id), express(*cur.find_handle(loop_id), want_a)));

    const HandleState* h = cur.find_handle(loop_id);
    Slope tb = express(*h, want_b);
    bool fixed = false;
    for (int sign : {+1, -1}) {
      Slope d{sign * tb[0] - h->slope_b[0], sign * tb[1] - h->slope_b[1]};
      // d must be an integer multiple of slope_a
      Int k = 0;
      if (h->slope_a[0] != 0 && d[0] % h->slope_a[0] == 0) {
        k = d[0] / h->slope_a[0];
      } else if (h->slope_a[1] != 0 && d[1] % h->slope_a[1] == 0) {
        k = d[1] / h->slope_a[1];
      }
      if (Slope{k * h->slope_a[0], k * h->slope_a[1]} == d) {
        MoveWord tw;
        for (Int i = 0; i < std::abs(k); ++i) {
          tw.append(HandleTwistStep{loop_id, Side::A, k > 0 ? +1 : -1});
        }
        run(tw);
        fixed = true;
        break;
      }
    }
    if (!fixed) throw std::logic_error("connect_standard: slope_b not reachable along slope_a");

    h = cur.find_handle(loop_id);
    if (canonical_sign(cur.side(Side::A).class_of(h->loop_a)) != canonical_sign(want_a) ||
        canonical_sign(cur.side(Side::B).class_of(h->loop_b)) != canonical_sign(want_b)) {
      throw std::logic_error("connect_standard: handle classes missed their targets");
    }
  }

  if (canonical_key(cur) != canonical_key(tgt) || key_seq(cur) != key_seq(tgt)) {
    throw std::logic_error("connect_standard: endpoint differs from the normalized target");
  }
  return w;
}

// --- fixtures -------------------------------------------------------------------

namespace {

DoublePants apply_all(Fixture& fx, const std::vector<Step>& steps) {
  DoublePants cur = fx.start;
  for (const auto& s : steps) {
    cur = apply_step(cur, s);
    fx.word.append(s);
  }
  return cur;
}

}  // namespace

Fixture fixture_double_s() {
  Fixture fx{"double-s", standard_double({2, 0}), {}, standard_double({2, 0})};
  auto [end, word] = double_s_move(fx.start, 1);
  fx.word = word;
  fx.end = end;
  return fx;
}

Fixture fixture_comp_for_twist() {
  Fixture fx{"comp-for-twist", standard_double({2, 0}), {}, standard_double({2, 0})};
  fx.end = apply_all(fx, {
                             FlipStep{Side::A, 0, FlipChoice::Cross},
                             FlipStep{Side::A, 0, FlipChoice::Cross},
                             FlipStep{Side::B, 0, FlipChoice::Cross},
                             FlipStep{Side::B, 0, FlipChoice::Cross},
                             RematchStep{0, 0},
                             DoubleSMoveStep{1},
                             DoubleSMoveStep{1},
                         });
  return fx;
}

Fixture fixture_comp_for_dflip() {
  Fixture fx{"comp-for-dflip", standard_double({2, 0}), {}, standard_double({2, 0})};
  fx.end = apply_all(fx, {
                             FlipStep{Side::A, 0, FlipChoice::Cross},
                             FlipStep{Side::A, 1, FlipChoice::Cross},
                             FlipStep{Side::B, 0, FlipChoice::Bar},
                             FlipStep{Side::B, 2, FlipChoice::Cross},
                         });
  return fx;
}

Fixture fixture_cyclic_order() {
  DoublePants start = standard_double({4, 0});
  auto [end, word] = transpose_adjacent(start, 1);
  return Fixture{"cyclic-order", std::move(start), std::move(word), std::move(end)};
}

Fixture fixture_obtain_twist() {
  DoublePants start = standard_double({2, 0});

  // twist along a curve crossing the two handles once each: the two target
  // states for c = a1 +- a2 (b_i picks up <b_i,c> c)
  std::set<std::string> targets;
  for (Int s : {+1, -1}) {
    ClassVector c{1, 0, s, 0};
    MarkedPants b = standard_marked({2, 0}, Side::B);
    for (const auto& h : detect_handles(b.graph())) {
      ClassVector old = b.class_of(h.loop_edge);
      Int pair = symplectic_pairing(old, c);
      b = s_move_marked(b, h.loop_edge, add(old, scale(pair, c)));
    }
    DoublePants twisted(standard_marked({2, 0}, Side::A), std::move(b), start.matching(), {}, {});
    targets.insert(canonical_key(twisted));
  }

  // breadth-first search over flip pairs, double S-moves and rematch
  // annotations, capped coordinates, following the figure's step pattern
  struct NodeInfo {
    int parent;
    int depth;
    std::vector<Step> steps;
  };
  auto small = [](const DoublePants& dp) {
    for (Side s : {Side::A, Side::B}) {
      const auto& mp = dp.side(s);
      for (int e = 0; e < mp.graph().edge_count(); ++e) {
        for (Int x : mp.class_of(e)) {
          if (std::abs(x) > 2) return false;
        }
      }
    }
    return true;
  };

  std::vector<DoublePants> states{start};
  std::vector<NodeInfo> info{{-1, 0, {}}};
  std::map<std::string, int> seen{{canonical_key(start), 0}};
  std::deque<int> queue{0};
  int found = -1;

  while (!queue.empty() && found < 0 && states.size() < 60000) {
    int id = queue.front();
    queue.pop_front();
    const DoublePants cur = states[static_cast<size_t>(id)];
    int depth = info[static_cast<size_t>(id)].depth;

    std::vector<std::vector<Step>> moves;
    for (const auto& h : cur.handles()) moves.push_back({DoubleSMoveStep{h.loop_a}});
    const auto& A = cur.side(Side::A);
    const auto& B = cur.side(Side::B);
    for (int ea = 0; ea < A.graph().edge_count(); ++ea) {
      if (A.graph().is_loop(ea)) continue;
      for (int eb = 0; eb < B.graph().edge_count(); ++eb) {
        if (B.graph().is_loop(eb)) continue;
        for (FlipChoice ca : {FlipChoice::Cross, FlipChoice::Bar}) {
          for (FlipChoice cb : {FlipChoice::Cross, FlipChoice::Bar}) {
            moves.push_back({FlipStep{Side::A, ea, ca}, FlipStep{Side::B, eb, cb}});
          }
        }
      }
    }
    for (int ea = 0; ea < A.graph().edge_count(); ++ea) {
      if (cur.matched_partner(Side::A, ea)) continue;
      for (int eb = 0; eb < B.graph().edge_count(); ++eb) {
        if (cur.matched_partner(Side::B, eb)) continue;
        if (canonical_sign(A.class_of(ea)) == canonical_sign(B.class_of(eb))) {
          moves.push_back({RematchStep{ea, eb}});
        }
      }
    }

    for (const auto& mv : moves) {
      DoublePants succ = cur;
      bool ok = true;
      for (const auto& s : mv) {
        try {
          succ = apply_step(succ, s);
        } catch (const std::exception&) {
          ok = false;
          break;
        }
      }
      if (!ok || !small(succ)) continue;
      std::string key = canonical_key(succ);
      if (seen.count(key)) continue;
      int sid = static_cast<int>(states.size());
      seen.emplace(key, sid);
      states.push_back(succ);
      info.push_back({id, depth + 1, mv});
      if (targets.count(key)) {
        found = sid;
        break;
      }
      if (depth + 1 < 10) queue.push_back(sid);
    }
  }
  if (found < 0) {
    throw std::logic_error("fixture_obtain_twist: search did not reach the twisted state");
  }

  std::vector<std::vector<Step>> chain;
  for (int at = found; at != 0; at = info[static_cast<size_t>(at)].parent) {
    chain.push_back(info[static_cast<size_t>(at)].steps);
  }
  std::reverse(chain.begin(), chain.end());
  Fixture fx{"obtain-twist", start, {}, start};
  std::vector<Step> flat;
  for (const auto& part : chain) {
    for (const auto& s : part) flat.push_back(s);
  }
  fx.end = apply_all(fx, flat);
  return fx;
}

std::vector<Fixture> all_fixtures() {
  std::vector<Fixture> out;
  out.push_back(fixture_double_s());
  out.push_back(fixture_comp_for_twist());
  out.push_back(fixture_comp_for_dflip());
  out.push_back(fixture_cyclic_order());
  out.push_back(fixture_obtain_twist());
  return out;
}

}  // namespace pants
