#include "pants/marked_pants.hpp"

#include <stdexcept>

#include "pants/canonical.hpp"

namespace pants {

Side other_side(Side s) { return s == Side::A ? Side::B : Side::A; }

std::string to_string(Side s) { return s == Side::A ? "a" : "b"; }

MarkedPants::MarkedPants(PantsGraph graph, std::vector<ClassVector> class_of,
                         std::vector<std::array<int, 2>> sign_of)
    : graph_(std::move(graph)), class_of_(std::move(class_of)), sign_of_(std::move(sign_of)) {
  if (static_cast<int>(class_of_.size()) != graph_.edge_count() ||
      static_cast<int>(sign_of_.size()) != graph_.edge_count()) {
    throw std::invalid_argument("marking tables must cover every edge");
  }
}

const ClassVector& MarkedPants::class_of(int edge) const {
  if (edge < 0 || edge >= graph_.edge_count()) throw std::invalid_argument("edge out of range");
  return class_of_[edge];
}

int MarkedPants::sign_of(int edge, int end) const {
  if (edge < 0 || edge >= graph_.edge_count() || end < 0 || end > 1) {
    throw std::invalid_argument("edge end out of range");
  }
  return sign_of_[edge][end];
}

ClassVector MarkedPants::contribution(const PantsGraph::Occupant& occ) const {
  if (occ.kind == PantsGraph::Occupant::Kind::Leg) {
    return zero_class(graph_.sig().genus);
  }
  return scale(sign_of(occ.index, occ.end), class_of(occ.index));
}

MarkedPants standard_marked(const SurfaceSig& sig, Side side) {
  require_valid(sig);
  PantsGraph gr = caterpillar_graph(sig);
  const int g = sig.genus;
  std::vector<ClassVector> classes(static_cast<size_t>(gr.edge_count()), zero_class(g));
  std::vector<std::array<int, 2>> signs(static_cast<size_t>(gr.edge_count()),
                                        std::array<int, 2>{+1, -1});

  auto handles = detect_handles(gr);
  int i = 0;
  for (const auto& h : handles) {
    ClassVector c = zero_class(g);
    c[static_cast<size_t>(2 * i + (side == Side::A ? 0 : 1))] = 1;
    classes[static_cast<size_t>(h.loop_edge)] = c;
    ++i;
  }
  return MarkedPants(std::move(gr), std::move(classes), std::move(signs));
}

GraphReport check_marking(const MarkedPants& mp) {
  GraphReport rep = validate(mp.graph());
  const auto& gr = mp.graph();
  const int g = gr.sig().genus;

  for (int e = 0; e < gr.edge_count(); ++e) {
    const auto& c = mp.class_of(e);
    if (static_cast<int>(c.size()) != 2 * g) {
      rep.failures.push_back("edge " + std::to_string(e) + ": class length != 2g");
      continue;
    }
    int s0 = mp.sign_of(e, 0), s1 = mp.sign_of(e, 1);
    if ((s0 != 1 && s0 != -1) || s1 != -s0) {
      rep.failures.push_back("edge " + std::to_string(e) + ": end signs must be opposite units");
    }
    if (!is_zero(c) && !is_primitive(c)) {
      rep.failures.push_back("edge " + std::to_string(e) + ": class neither zero nor primitive");
    }
  }

  for (int v = 0; v < gr.vertex_count(); ++v) {
    ClassVector sum = zero_class(g);
    for (int s = 0; s < 3; ++s) sum = add(sum, mp.contribution(gr.occupant(v, s)));
    if (!is_zero(sum)) {
      rep.failures.push_back("pants " + std::to_string(v) + ": signed boundary classes sum to " +
                             to_string(sum));
    }
  }

  for (const auto& h : detect_handles(gr)) {
    if (h.boundary_edge && !is_zero(mp.class_of(*h.boundary_edge))) {
      rep.failures.push_back("handle boundary edge " + std::to_string(*h.boundary_edge) +
                             " must carry the zero class");
    }
  }
  return rep;
}

MarkedPants flip_marked(const MarkedPants& mp, int edge, FlipChoice choice) {
  FlipDetail detail;
  PantsGraph flipped = flip_graph(mp.graph(), edge, choice, detail);

  // the new curve's class solves the relation at the end0 vertex
  ClassVector c_first = mp.contribution(detail.stubs[0]);
  ClassVector c_partner = mp.contribution(detail.stubs[static_cast<size_t>(detail.partner_of_s1)]);
  ClassVector fresh = negate(add(c_first, c_partner));

  // the relation at the other vertex must agree
  int other1 = 1;
  int other2 = detail.partner_of_s1 == 2 ? 3 : 2;
  ClassVector check = add(add(mp.contribution(detail.stubs[static_cast<size_t>(other1)]),
                              mp.contribution(detail.stubs[static_cast<size_t>(other2)])),
                          negate(fresh));
  if (!is_zero(check)) {
    throw std::logic_error("flip_marked: the two pants relations disagree");
  }
  if (!is_zero(fresh) && !is_primitive(fresh)) {
    throw std::domain_error("flip_marked: new curve class is neither zero nor primitive");
  }

  std::vector<ClassVector> classes;
  std::vector<std::array<int, 2>> signs;
  classes.reserve(static_cast<size_t>(flipped.edge_count()));
  signs.reserve(static_cast<size_t>(flipped.edge_count()));
  for (int e = 0; e < flipped.edge_count(); ++e) {
    classes.push_back(mp.class_of(e));
    signs.push_back({mp.sign_of(e, 0), mp.sign_of(e, 1)});
  }
  classes[static_cast<size_t>(edge)] = fresh;
  signs[static_cast<size_t>(edge)] = {+1, -1};
  return MarkedPants(std::move(flipped), std::move(classes), std::move(signs));
}

MarkedPants s_move_marked(const MarkedPants& mp, int loop_edge, const ClassVector& new_class) {
  if (!mp.graph().is_loop(loop_edge)) {
    throw std::invalid_argument("s_move: edge " + std::to_string(loop_edge) + " is not a loop");
  }
  Int p = symplectic_pairing(mp.class_of(loop_edge), new_class);
  if (p != 1 && p != -1) {
    throw std::invalid_argument("s_move: pairing with the old interior class must be +-1, got " +
                                std::to_string(p));
  }
  std::vector<ClassVector> classes;
  std::vector<std::array<int, 2>> signs;
  for (int e = 0; e < mp.graph().edge_count(); ++e) {
    classes.push_back(mp.class_of(e));
    signs.push_back({mp.sign_of(e, 0), mp.sign_of(e, 1)});
  }
  classes[static_cast<size_t>(loop_edge)] = new_class;
  return MarkedPants(mp.graph(), std::move(classes), std::move(signs));
}

SpanBasis lagrangian_of(const MarkedPants& mp) {
  std::vector<ClassVector> all;
  all.reserve(static_cast<size_t>(mp.graph().edge_count()));
  for (int e = 0; e < mp.graph().edge_count(); ++e) all.push_back(mp.class_of(e));
  if (all.empty()) return {};
  return span_basis(all);
}

std::string canonical_key(const MarkedPants& mp) {
  std::vector<std::string> attrs;
  attrs.reserve(static_cast<size_t>(mp.graph().edge_count()));
  for (int e = 0; e < mp.graph().edge_count(); ++e) {
    attrs.push_back(to_string(canonical_sign(mp.class_of(e))));
  }
  return detail::canonical_encoding(detail::pants_graph_canon(mp.graph(), attrs, ""));
}

}  // namespace pants
