#include "pants/move_word.hpp"

#include <stdexcept>

#include "pants/double_pants.hpp"

namespace pants {

std::string to_string(const Step& step) {
  struct Printer {
    std::string operator()(const FlipStep& s) const {
      return "flip " + to_string(s.side) + " e" + std::to_string(s.edge) + " " +
             to_string(s.choice);
    }
    std::string operator()(const DoubleFlipStep& s) const {
      return "double_flip e" + std::to_string(s.edge_a) + " " + to_string(s.choice);
    }
    std::string operator()(const HandleTwistStep& s) const {
      return "handle_twist h" + std::to_string(s.handle_loop_a) + " along " +
             to_string(s.along) + (s.dir > 0 ? " +1" : " -1");
    }
    std::string operator()(const SMoveStep& s) const {
      return "s_move " + to_string(s.side) + " e" + std::to_string(s.loop_edge) + " -> " +
             pants::to_string(s.new_class);
    }
    std::string operator()(const DoubleSMoveStep& s) const {
      return "double_s_move h" + std::to_string(s.handle_loop_a);
    }
    std::string operator()(const RematchStep& s) const {
      return "rematch e" + std::to_string(s.edge_a) + " ~ e" + std::to_string(s.edge_b);
    }
    std::string operator()(const UnmatchStep& s) const {
      return "unmatch e" + std::to_string(s.edge_a);
    }
  };
  return std::visit(Printer{}, step);
}

std::string to_string(const MoveWord& w) {
  std::string out;
  for (size_t i = 0; i < w.steps.size(); ++i) {
    if (i) out += "; ";
    out += to_string(w.steps[i]);
  }
  return out;
}

DoublePants apply_step(const DoublePants& dp, const Step& step) {
  struct Apply {
    const DoublePants& dp;
    DoublePants operator()(const FlipStep& s) const {
      return flip_one_side(dp, s.side, s.edge, s.choice);
    }
    DoublePants operator()(const DoubleFlipStep& s) const {
      return double_flip(dp, s.edge_a, s.choice);
    }
    DoublePants operator()(const HandleTwistStep& s) const {
      return handle_twist(dp, s.handle_loop_a, s.along, s.dir);
    }
    DoublePants operator()(const SMoveStep& s) const {
      return s_move_one_side(dp, s.side, s.loop_edge, s.new_class);
    }
    DoublePants operator()(const DoubleSMoveStep& s) const {
      return double_s_move(dp, s.handle_loop_a).first;
    }
    DoublePants operator()(const RematchStep& s) const { return rematch(dp, s.edge_a, s.edge_b); }
    DoublePants operator()(const UnmatchStep& s) const { return unmatch(dp, s.edge_a); }
  };
  return std::visit(Apply{dp}, step);
}

DoublePants replay(const DoublePants& dp, const MoveWord& word) {
  DoublePants cur = dp;
  int i = 0;
  for (const auto& s : word.steps) {
    try {
      cur = apply_step(cur, s);
    } catch (const std::exception& e) {
      throw std::invalid_argument("replay failed at step " + std::to_string(i) + " (" +
                                  to_string(s) + "): " + e.what());
    }
    ++i;
  }
  return cur;
}

MoveWord inverse_word(const DoublePants& start, const MoveWord& word) {
  std::vector<DoublePants> states{start};
  for (const auto& s : word.steps) states.push_back(apply_step(states.back(), s));

  MoveWord rev;
  for (size_t i = word.steps.size(); i-- > 0;) {
    const DoublePants& before = states[i];
    const DoublePants& after = states[i + 1];
    const Step& s = word.steps[i];

    if (const auto* f = std::get_if<FlipStep>(&s)) {
      bool done = false;
      for (FlipChoice c : {FlipChoice::Cross, FlipChoice::Bar}) {
        DoublePants back = flip_one_side(after, f->side, f->edge, c);
        if (canonical_key(back) == canonical_key(before)) {
          rev.append(FlipStep{f->side, f->edge, c});
          done = true;
          break;
        }
      }
      if (!done) throw std::logic_error("inverse_word: flip has no inverse choice");
    } else if (const auto* f = std::get_if<DoubleFlipStep>(&s)) {
      bool done = false;
      for (FlipChoice c : {FlipChoice::Cross, FlipChoice::Bar}) {
        DoublePants back = double_flip(after, f->edge_a, c);
        if (canonical_key(back) == canonical_key(before)) {
          rev.append(DoubleFlipStep{f->edge_a, c});
          done = true;
          break;
        }
      }
      if (!done) throw std::logic_error("inverse_word: double flip has no inverse choice");
    } else if (const auto* t = std::get_if<HandleTwistStep>(&s)) {
      rev.append(HandleTwistStep{t->handle_loop_a, t->along, -t->dir});
    } else if (const auto* m = std::get_if<SMoveStep>(&s)) {
      rev.append(SMoveStep{m->side, m->loop_edge, before.side(m->side).class_of(m->loop_edge)});
    } else if (const auto* d = std::get_if<DoubleSMoveStep>(&s)) {
      rev.append(DoubleSMoveStep{d->handle_loop_a});
    } else if (const auto* r = std::get_if<RematchStep>(&s)) {
      rev.append(UnmatchStep{r->edge_a});
    } else if (const auto* u = std::get_if<UnmatchStep>(&s)) {
      auto p = before.matched_partner(Side::A, u->edge_a);
      rev.append(RematchStep{u->edge_a, *p});
    }
  }

  if (canonical_key(replay(states.back(), rev)) != canonical_key(start)) {
    throw std::logic_error("inverse_word: reverse word does not replay to the start");
  }
  return rev;
}

}  // namespace pants
