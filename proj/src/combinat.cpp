#include "callan/combinat.hpp"

#include <algorithm>
#include <sstream>

#include "callan/error.hpp"
#include "layout.hpp"

namespace callan {

namespace {

std::string describe(const Bar& b) {
  return std::string(b.color == Color::blue ? "blue" : "red") + " bar |" + std::to_string(b.label);
}

bool strictly_ascending(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

// Checks that the blocks of `side` partition {base+1..base+size}.
Validation check_partition(const std::vector<const std::vector<int>*>& blocks, int base, int size,
                           const char* side) {
  std::vector<int> seen(static_cast<std::size_t>(size), 0);
  for (const auto* block : blocks) {
    if (!strictly_ascending(*block)) {
      return Validation::fail(std::string(side) + " block is not strictly ascending");
    }
    for (int x : *block) {
      if (x <= base || x > base + size) {
        return Validation::fail(std::string(side) + " element " + std::to_string(x) + " outside " +
                                std::to_string(base + 1) + ".." + std::to_string(base + size));
      }
      if (seen[static_cast<std::size_t>(x - base - 1)]++) {
        return Validation::fail(std::string(side) + " element " + std::to_string(x) + " appears twice");
      }
    }
  }
  for (int i = 0; i < size; ++i) {
    if (!seen[static_cast<std::size_t>(i)]) {
      return Validation::fail(std::string(side) + " element " + std::to_string(base + i + 1) + " missing");
    }
  }
  return Validation::pass();
}

Validation check_pairs(const std::vector<const CallanPair*>& pairs, int blue_shift, int k, int red_shift,
                       int n) {
  if (pairs.empty()) return Validation::fail("no Callan pair");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const bool last = i + 1 == pairs.size();
    if (pairs[i]->extra != last) {
      return Validation::fail(last ? "last pair is not the extra pair" : "extra pair before the end");
    }
    if (!last && (pairs[i]->blue.empty() || pairs[i]->red.empty())) {
      return Validation::fail("ordinary pair " + std::to_string(i + 1) + " has an empty block");
    }
  }
  std::vector<const std::vector<int>*> blue, red;
  for (const auto* p : pairs) {
    blue.push_back(&p->blue);
    red.push_back(&p->red);
  }
  if (auto v = check_partition(blue, blue_shift, k, "blue"); !v) return v;
  return check_partition(red, red_shift, n, "red");
}

bool has_wide(const std::vector<int>& block) {
  return std::any_of(block.begin(), block.end(), [](int x) { return x > 9; });
}

// Once any label has two digits, every block of the object is dot-separated.
void append_block(std::ostringstream& os, const std::vector<int>& block, bool star, bool wide) {
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i && wide) os << '.';
    os << block[i];
  }
  if (star) os << '*';
}

}  // namespace

Validation validate_callan(const CallanSequence& s) {
  if (s.k < 0 || s.n < 0 || s.shift < 0) return Validation::fail("negative size");
  std::vector<const CallanPair*> pairs;
  for (const auto& p : s.pairs) pairs.push_back(&p);
  return check_pairs(pairs, s.shift, s.k, s.shift, s.n);
}

Validation validate_mbarred(const MBarredSequence& s) {
  if (s.m < 0 || s.k < 0 || s.n < 0) return Validation::fail("negative size");
  return detail::validate_layout(s.elements, {s.m, s.m, s.m, s.k, s.m, s.n});
}

namespace detail {

Validation validate_layout(const std::vector<Element>& elements, const Layout& layout) {
  if (elements.empty() || !is_pair(elements.back())) {
    return Validation::fail("last element is not a Callan pair");
  }

  std::vector<int> blue_seen(static_cast<std::size_t>(layout.blue_bars) + 1, 0);
  std::vector<int> red_seen(static_cast<std::size_t>(layout.red_bars) + 1, 0);
  std::vector<const CallanPair*> pairs;
  for (const auto& e : elements) {
    if (const auto* b = std::get_if<Bar>(&e)) {
      const bool blue = b->color == Color::blue;
      const int lo = blue ? 1 : 0;
      const int hi = blue ? layout.blue_bars : layout.red_bars;
      if (b->label < lo || b->label > hi) return Validation::fail(describe(*b) + " label out of range");
      auto& seen = blue ? blue_seen : red_seen;
      if (seen[static_cast<std::size_t>(b->label)]++) return Validation::fail(describe(*b) + " repeated");
    } else {
      pairs.push_back(&std::get<CallanPair>(e));
    }
  }
  for (int i = 1; i <= layout.blue_bars; ++i) {
    if (!blue_seen[static_cast<std::size_t>(i)]) return Validation::fail("blue bar |" + std::to_string(i) + " missing");
  }
  for (int i = 0; i <= layout.red_bars; ++i) {
    if (!red_seen[static_cast<std::size_t>(i)]) return Validation::fail("red bar |" + std::to_string(i) + " missing");
  }

  if (auto v = check_pairs(pairs, layout.blue_shift, layout.blue_size, layout.red_shift, layout.red_size); !v) {
    return v;
  }

  for (std::size_t i = 0; i + 1 < elements.size(); ++i) {
    const auto* b = std::get_if<Bar>(&elements[i]);
    if (!b) continue;
    const auto* next = std::get_if<Bar>(&elements[i + 1]);
    if (b->color == Color::blue) {
      if (!next || next->label >= b->label) {
        return Validation::fail(describe(*b) + " not followed by a bar with smaller label");
      }
    } else if (next && next->label <= b->label) {
      return Validation::fail(describe(*b) + " followed by a bar with label not greater");
    }
  }

  // Every maximal bar run ends with a red bar.
  for (std::size_t i = 0; i + 1 < elements.size(); ++i) {
    const auto* b = std::get_if<Bar>(&elements[i]);
    if (b && is_pair(elements[i + 1]) && b->color != Color::red) {
      return Validation::fail("bar group ends with " + describe(*b));
    }
  }
  return Validation::pass();
}

}  // namespace detail

Validation validate_dumont(const DumontPermutation& p) {
  const auto size = p.values.size();
  if (size % 2 != 0) return Validation::fail("odd length");
  std::vector<bool> seen(size + 1, false);
  for (int v : p.values) {
    if (v < 1 || static_cast<std::size_t>(v) > size || seen[static_cast<std::size_t>(v)]) {
      return Validation::fail("not a permutation of 1.." + std::to_string(size));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t i = 0; i < size; ++i) {
    const int v = p.values[i];
    const bool last = i + 1 == size;
    if (v % 2 == 0 && (last || p.values[i + 1] > v)) {
      return Validation::fail("even entry " + std::to_string(v) + " does not begin a descent");
    }
    if (v % 2 == 1 && !last && p.values[i + 1] < v) {
      return Validation::fail("odd entry " + std::to_string(v) + " begins a descent");
    }
  }
  return Validation::pass();
}

const CallanPair& extra_pair(const MBarredSequence& s) {
  if (s.elements.empty()) throw Error(ErrorCode::domain, "empty sequence");
  const auto* p = std::get_if<CallanPair>(&s.elements.back());
  if (!p || !p->extra) throw Error(ErrorCode::domain, "sequence does not end with the extra pair");
  return *p;
}

CallanPair& extra_pair(MBarredSequence& s) {
  return const_cast<CallanPair&>(extra_pair(static_cast<const MBarredSequence&>(s)));
}

CallanSequence underlying_callan(const MBarredSequence& s) {
  CallanSequence c{s.k, s.n, s.m, {}};
  for (const auto& e : s.elements) {
    if (const auto* p = std::get_if<CallanPair>(&e)) c.pairs.push_back(*p);
  }
  return c;
}

const char* to_string(Cell c) {
  switch (c) {
    case Cell::red_star_nonempty: return "R*-nonempty";
    case Cell::star_only: return "star-only";
    case Cell::star_only_barred_max: return "star-only-with-barred-max-singleton";
  }
  return "?";
}

bool has_barred_singleton(const MBarredSequence& s, int label) {
  for (std::size_t i = 1; i < s.elements.size(); ++i) {
    const auto* p = std::get_if<CallanPair>(&s.elements[i]);
    if (p && !p->extra && p->blue.size() == 1 && p->blue.front() == label) {
      return is_bar(s.elements[i - 1]);
    }
  }
  return false;
}

Cell classify(const MBarredSequence& s) {
  if (!extra_pair(s).red.empty()) return Cell::red_star_nonempty;
  if (s.k >= 1 && has_barred_singleton(s, s.m + s.k)) return Cell::star_only_barred_max;
  return Cell::star_only;
}

namespace {

void append_pair(std::ostringstream& os, const CallanPair& p, bool wide) {
  os << '(';
  append_block(os, p.blue, p.extra, wide);
  os << ',';
  append_block(os, p.red, p.extra, wide);
  os << ')';
}

template <class Range>
bool any_wide(const Range& pairs) {
  return std::any_of(pairs.begin(), pairs.end(), [](const CallanPair* p) { return has_wide(p->blue) || has_wide(p->red); });
}

std::vector<const CallanPair*> pairs_of(const std::vector<Element>& elements) {
  std::vector<const CallanPair*> out;
  for (const auto& e : elements) {
    if (const auto* p = std::get_if<CallanPair>(&e)) out.push_back(p);
  }
  return out;
}

std::vector<const CallanPair*> pairs_of(const std::vector<CallanPair>& pairs) {
  std::vector<const CallanPair*> out;
  for (const auto& p : pairs) out.push_back(&p);
  return out;
}

}  // namespace

std::string to_text(const CallanPair& p) {
  std::ostringstream os;
  append_pair(os, p, has_wide(p.blue) || has_wide(p.red));
  return os.str();
}

std::string to_text(const MBarredSequence& s) {
  const bool wide = any_wide(pairs_of(s.elements));
  std::ostringstream os;
  for (const auto& e : s.elements) {
    if (const auto* b = std::get_if<Bar>(&e)) {
      os << '|' << (b->color == Color::blue ? 'b' : 'r') << b->label;
    } else {
      append_pair(os, std::get<CallanPair>(e), wide);
    }
  }
  return os.str();
}

std::string to_text(const CallanSequence& s) {
  const bool wide = any_wide(pairs_of(s.pairs));
  std::ostringstream os;
  for (const auto& p : s.pairs) append_pair(os, p, wide);
  return os.str();
}

std::string to_text(const BarredCallanSequence& b) {
  const bool wide = any_wide(pairs_of(b.callan.pairs));
  std::ostringstream os;
  for (std::size_t i = 0; i < b.callan.pairs.size(); ++i) {
    if (i == b.bar_slot) os << '|';
    append_pair(os, b.callan.pairs[i], wide);
  }
  return os.str();
}

std::string to_text(const DumontPermutation& p) {
  const bool wide = p.values.size() > 9;
  std::string out;
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    if (i && wide) out += ' ';
    out += std::to_string(p.values[i]);
  }
  return out;
}

std::string canonical_key(const MBarredSequence& s) {
  std::string key;
  key.reserve(s.elements.size() * 6);
  auto put = [&key](int x) { key.push_back(static_cast<char>(x + 1)); };
  put(s.m);
  put(s.k);
  put(s.n);
  for (const auto& e : s.elements) {
    if (const auto* b = std::get_if<Bar>(&e)) {
      key.push_back(b->color == Color::blue ? 'B' : 'R');
      put(b->label);
    } else {
      const auto& p = std::get<CallanPair>(e);
      key.push_back(p.extra ? 'X' : 'P');
      for (int x : p.blue) put(x);
      key.push_back('/');
      for (int x : p.red) put(x);
      key.push_back(';');
    }
  }
  return key;
}

}  // namespace callan
