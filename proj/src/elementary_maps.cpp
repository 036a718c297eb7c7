#include "callan/combinat.hpp"
#include "callan/error.hpp"

namespace callan {

MBarredSequence swap_colors(const MBarredSequence& s) {
  if (auto v = validate_mbarred(s); !v) throw Error(ErrorCode::invalid_argument, "swap_colors: " + v.diagnostic);
  // Both base sets start at m+1, so exchanging blocks needs no relabeling.
  MBarredSequence out{s.m, s.n, s.k, s.elements};
  for (auto& e : out.elements) {
    if (auto* p = std::get_if<CallanPair>(&e)) std::swap(p->blue, p->red);
  }
  return out;
}

BarredCallanSequence mbarred_to_barred(const MBarredSequence& s) {
  if (s.m != 0) throw Error(ErrorCode::invalid_argument, "mbarred_to_barred: requires m = 0");
  BarredCallanSequence b{underlying_callan(s), 0};
  bool found = false;
  std::size_t pairs_seen = 0;
  for (const auto& e : s.elements) {
    if (is_pair(e)) {
      ++pairs_seen;
    } else {
      if (found) throw Error(ErrorCode::invalid_argument, "mbarred_to_barred: more than one bar");
      found = true;
      b.bar_slot = pairs_seen;
    }
  }
  if (!found) throw Error(ErrorCode::invalid_argument, "mbarred_to_barred: no bar");
  return b;
}

MBarredSequence barred_to_mbarred(const BarredCallanSequence& b) {
  if (b.callan.shift != 0) throw Error(ErrorCode::invalid_argument, "barred_to_mbarred: shifted base");
  if (b.bar_slot >= b.callan.pairs.size()) {
    throw Error(ErrorCode::invalid_argument, "barred_to_mbarred: bar cannot be at the end");
  }
  MBarredSequence s{0, b.callan.k, b.callan.n, {}};
  for (std::size_t i = 0; i < b.callan.pairs.size(); ++i) {
    if (i == b.bar_slot) s.elements.emplace_back(Bar{Color::red, 0});
    s.elements.emplace_back(b.callan.pairs[i]);
  }
  return s;
}

DumontPermutation mbarred_to_dumont(const MBarredSequence& s) {
  if (s.k != 0 || s.n != 0) throw Error(ErrorCode::invalid_argument, "mbarred_to_dumont: requires k = n = 0");
  const auto& e = s.elements;
  if (e.size() < 2 || !is_pair(e.back()) || !is_bar(e[e.size() - 2])) {
    throw Error(ErrorCode::invalid_argument, "mbarred_to_dumont: malformed sequence");
  }
  const auto& closing = std::get<Bar>(e[e.size() - 2]);
  if (closing.color != Color::red || closing.label != s.m) {
    throw Error(ErrorCode::invalid_argument, "mbarred_to_dumont: extra pair not preceded by red |m");
  }
  DumontPermutation p;
  for (std::size_t i = 0; i + 2 < e.size(); ++i) {
    const auto* b = std::get_if<Bar>(&e[i]);
    if (!b) throw Error(ErrorCode::invalid_argument, "mbarred_to_dumont: unexpected pair");
    p.values.push_back(2 * b->label + (b->color == Color::red ? 1 : 0));
  }
  return p;
}

MBarredSequence dumont_to_mbarred(const DumontPermutation& p) {
  if (p.values.size() % 2 != 0) throw Error(ErrorCode::invalid_argument, "dumont_to_mbarred: odd length");
  const int m = static_cast<int>(p.values.size() / 2);
  MBarredSequence s{m, 0, 0, {}};
  for (int v : p.values) {
    s.elements.emplace_back(Bar{v % 2 == 0 ? Color::blue : Color::red, v / 2});
  }
  s.elements.emplace_back(Bar{Color::red, m});
  s.elements.emplace_back(CallanPair{{}, {}, true});
  return s;
}

}  // namespace callan
