#include "callan/bijections.hpp"

#include <algorithm>
#include <iterator>

#include "callan/error.hpp"
#include "layout.hpp"

namespace callan {

namespace {

using Elements = std::vector<Element>;

CallanPair& pair_at(Elements& e, std::size_t i) { return std::get<CallanPair>(e[i]); }
const CallanPair& pair_at(const Elements& e, std::size_t i) { return std::get<CallanPair>(e[i]); }

bool contains(const std::vector<int>& block, int x) {
  return std::binary_search(block.begin(), block.end(), x);
}

void insert_sorted(std::vector<int>& block, int x) {
  block.insert(std::upper_bound(block.begin(), block.end(), x), x);
}

void erase_value(std::vector<int>& block, int x) {
  block.erase(std::lower_bound(block.begin(), block.end(), x));
}

std::size_t first_pair(const Elements& e) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (is_pair(e[i])) return i;
  }
  throw Error(ErrorCode::domain, "sequence has no Callan pair");
}

std::size_t next_pair(const Elements& e, std::size_t i) {
  for (std::size_t j = i + 1; j < e.size(); ++j) {
    if (is_pair(e[j])) return j;
  }
  throw Error(ErrorCode::consistency, "no pair after position " + std::to_string(i));
}

template <class Pred>
std::size_t find_pair(const Elements& e, Pred pred) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (const auto* p = std::get_if<CallanPair>(&e[i]); p && pred(*p)) return i;
  }
  return e.size();
}

// Index of the first bar of the maximal bar run ending right before `i`.
std::size_t run_start(const Elements& e, std::size_t i) {
  while (i > 0 && is_bar(e[i - 1])) --i;
  return i;
}

// Moves e[from..to] (inclusive) to the front.
void move_to_front(Elements& e, std::size_t from, std::size_t to) {
  std::rotate(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(from),
              e.begin() + static_cast<std::ptrdiff_t>(to + 1));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::domain, what);
}

void require_valid(const MBarredSequence& s, const char* op) {
  if (auto v = validate_mbarred(s); !v) throw Error(ErrorCode::domain, std::string(op) + ": " + v.diagnostic);
}

void check_output(const MBarredSequence& s, const char* op) {
  if (auto v = validate_mbarred(s); !v) {
    throw Error(ErrorCode::consistency, std::string(op) + " produced an invalid sequence: " + v.diagnostic);
  }
}

detail::Layout intermediate_layout(const PsiIntermediate& s) {
  return {s.m + 1, s.m, s.m + 1, s.k - 1, s.m, s.n};
}

}  // namespace

const char* to_string(PhiCase c) {
  switch (c) {
    case PhiCase::A1: return "A1";
    case PhiCase::A2: return "A2";
    case PhiCase::B1: return "B1";
    case PhiCase::B2: return "B2";
  }
  return "?";
}

const char* to_string(PsiRedCase c) { return c == PsiRedCase::extra ? "extra" : "ordinary"; }

bool in_phi_domain(const MBarredSequence& s) {
  return validate_mbarred(s) && s.n >= 1 && !extra_pair(s).red.empty();
}

bool in_phi_codomain(const MBarredSequence& t) {
  return validate_mbarred(t) && t.k >= 1 && extra_pair(t).red.empty() && !has_barred_singleton(t, t.m + t.k);
}

PhiCase phi_case(const MBarredSequence& s) {
  require_valid(s, "phi");
  require(s.n >= 1, "phi: needs n >= 1");
  const auto& extra = extra_pair(s);
  require(!extra.red.empty(), "phi: extra red block is empty");
  const int mu = s.m + s.n;
  if (contains(extra.red, mu)) return extra.red.size() == 1 ? PhiCase::A1 : PhiCase::A2;
  const auto i = find_pair(s.elements, [mu](const CallanPair& p) { return contains(p.red, mu); });
  return pair_at(s.elements, i).red.size() == 1 ? PhiCase::B1 : PhiCase::B2;
}

MBarredSequence phi(const MBarredSequence& s) {
  const PhiCase c = phi_case(s);
  const int mu = s.m + s.n;
  const int new_blue = s.m + s.k + 1;
  MBarredSequence out{s.m, s.k + 1, s.n - 1, s.elements};
  auto& e = out.elements;
  auto extra_red = std::move(extra_pair(out).red);
  extra_pair(out).red.clear();

  switch (c) {
    case PhiCase::A1:
      pair_at(e, first_pair(e)).blue.push_back(new_blue);
      break;
    case PhiCase::A2:
      erase_value(extra_red, mu);
      e.insert(e.begin(), CallanPair{{new_blue}, std::move(extra_red), false});
      break;
    case PhiCase::B1: {
      const auto i = find_pair(e, [mu](const CallanPair& p) { return contains(p.red, mu); });
      pair_at(e, i).red = std::move(extra_red);
      pair_at(e, next_pair(e, i)).blue.push_back(new_blue);
      move_to_front(e, run_start(e, i), i);
      break;
    }
    case PhiCase::B2: {
      const auto i = find_pair(e, [mu](const CallanPair& p) { return contains(p.red, mu); });
      auto rest = std::move(pair_at(e, i).red);
      erase_value(rest, mu);
      pair_at(e, i).red = std::move(extra_red);
      e.insert(e.begin() + static_cast<std::ptrdiff_t>(i + 1), CallanPair{{new_blue}, std::move(rest), false});
      move_to_front(e, run_start(e, i), i);
      break;
    }
  }
  check_output(out, "phi");
  return out;
}

PhiCase phi_inverse_case(const MBarredSequence& t) {
  require_valid(t, "phi_inverse");
  require(t.k >= 1, "phi_inverse: needs k >= 1");
  require(extra_pair(t).red.empty(), "phi_inverse: extra red block is not empty");
  const int new_blue = t.m + t.k;
  require(!has_barred_singleton(t, new_blue), "phi_inverse: maximal blue element is a barred singleton");
  const auto j = find_pair(t.elements, [new_blue](const CallanPair& p) { return contains(p.blue, new_blue); });
  const auto& p = pair_at(t.elements, j);
  const bool first = j == first_pair(t.elements);
  const bool single = !p.extra && p.blue.size() == 1;
  if (first) return single ? PhiCase::A2 : PhiCase::A1;
  return single ? PhiCase::B2 : PhiCase::B1;
}

MBarredSequence phi_inverse(const MBarredSequence& t) {
  const PhiCase c = phi_inverse_case(t);
  const int new_blue = t.m + t.k;
  const int mu = t.m + t.n + 1;
  MBarredSequence out{t.m, t.k - 1, t.n + 1, t.elements};
  auto& e = out.elements;
  const auto j = find_pair(e, [new_blue](const CallanPair& p) { return contains(p.blue, new_blue); });
  const auto f = first_pair(e);

  switch (c) {
    case PhiCase::A1:
      erase_value(pair_at(e, j).blue, new_blue);
      extra_pair(out).red = {mu};
      break;
    case PhiCase::A2: {
      auto red = std::move(pair_at(e, j).red);
      red.push_back(mu);
      e.erase(e.begin() + static_cast<std::ptrdiff_t>(j));
      extra_pair(out).red = std::move(red);
      break;
    }
    case PhiCase::B1:
    case PhiCase::B2: {
      auto& lead = pair_at(e, f);
      extra_pair(out).red = std::move(lead.red);
      std::size_t target = j;
      if (c == PhiCase::B1) {
        erase_value(pair_at(e, j).blue, new_blue);
        lead.red = {mu};
      } else {
        auto red = std::move(pair_at(e, j).red);
        red.push_back(mu);
        lead.red = std::move(red);
        e.erase(e.begin() + static_cast<std::ptrdiff_t>(j));
      }
      Elements group(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(f + 1));
      e.erase(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(f + 1));
      target -= f + 1;
      // B1 reinserts before the bar run of the pair that received the new
      // element; in B2 that pair had no bar run and was removed.
      const auto at = c == PhiCase::B1 ? run_start(e, target) : target;
      e.insert(e.begin() + static_cast<std::ptrdiff_t>(at), group.begin(), group.end());
      break;
    }
  }
  check_output(out, "phi_inverse");
  return out;
}

MBarredSequence relabel_max_min(const MBarredSequence& s) {
  require_valid(s, "relabel");
  require(s.k >= 1 && extra_pair(s).red.empty(), "relabel: needs k >= 1 and extra red block {*}");
  const int lo = s.m + 1;
  const int hi = s.m + s.k;
  require(has_barred_singleton(s, hi) || has_barred_singleton(s, lo),
          "relabel: neither extreme blue element is a barred ordinary singleton");
  MBarredSequence out = s;
  for (auto& el : out.elements) {
    auto* p = std::get_if<CallanPair>(&el);
    if (!p) continue;
    for (int& x : p->blue) x = x == lo ? hi : x == hi ? lo : x;
    std::sort(p->blue.begin(), p->blue.end());
  }
  check_output(out, "relabel");
  return out;
}

bool in_psi_domain(const MBarredSequence& s) {
  return validate_mbarred(s) && s.k >= 1 && s.n >= 1 && extra_pair(s).red.empty() &&
         has_barred_singleton(s, s.m + 1);
}

Validation validate_psi_intermediate(const PsiIntermediate& s) {
  if (s.m < 0 || s.k < 1 || s.n < 1) return Validation::fail("intermediate needs m >= 0, k >= 1, n >= 1");
  if (auto v = detail::validate_layout(s.elements, intermediate_layout(s)); !v) return v;
  if (std::get<CallanPair>(s.elements.back()).red.empty()) return Validation::fail("extra red block is empty");
  return Validation::pass();
}

PsiIntermediate psi_b(const MBarredSequence& s) {
  require(in_psi_domain(s), "psi_b: input not in C_n^k(m,*,|m+1)");
  const int lo = s.m + 1;
  const auto& e = s.elements;
  const auto i = find_pair(e, [lo](const CallanPair& p) { return !p.extra && p.blue == std::vector<int>{lo}; });
  const auto w1 = run_start(e, i);
  const auto after = next_pair(e, i);

  PsiIntermediate out{s.m, s.k, s.n, {}};
  auto& o = out.elements;
  o.reserve(e.size());
  o.insert(o.end(), e.begin(), e.begin() + static_cast<std::ptrdiff_t>(w1));
  o.insert(o.end(), e.begin() + static_cast<std::ptrdiff_t>(i + 1), e.begin() + static_cast<std::ptrdiff_t>(after));
  o.emplace_back(Bar{Color::blue, lo});
  o.insert(o.end(), e.begin() + static_cast<std::ptrdiff_t>(w1), e.begin() + static_cast<std::ptrdiff_t>(i));
  o.insert(o.end(), e.begin() + static_cast<std::ptrdiff_t>(after), e.end());
  std::get<CallanPair>(o.back()).red = pair_at(e, i).red;

  if (auto v = validate_psi_intermediate(out); !v) {
    throw Error(ErrorCode::consistency, "psi_b produced an invalid intermediate: " + v.diagnostic);
  }
  return out;
}

PsiRedCase psi_r_case(const PsiIntermediate& s) {
  if (auto v = validate_psi_intermediate(s); !v) throw Error(ErrorCode::domain, "psi_r: " + v.diagnostic);
  return contains(std::get<CallanPair>(s.elements.back()).red, s.m + 1) ? PsiRedCase::extra : PsiRedCase::ordinary;
}

MBarredSequence psi_r(const PsiIntermediate& s) {
  const PsiRedCase c = psi_r_case(s);
  const int lo = s.m + 1;
  MBarredSequence out{s.m + 1, s.k - 1, s.n - 1, s.elements};
  auto& e = out.elements;
  if (c == PsiRedCase::extra) {
    erase_value(extra_pair(out).red, lo);
    e.insert(e.end() - 1, Bar{Color::red, lo});
  } else {
    const auto i = find_pair(e, [lo](const CallanPair& p) { return contains(p.red, lo); });
    auto rest = std::move(pair_at(e, i).red);
    erase_value(rest, lo);
    pair_at(e, i).red = std::move(extra_pair(out).red);
    extra_pair(out).red = std::move(rest);
    e.insert(e.begin() + static_cast<std::ptrdiff_t>(i), Bar{Color::red, lo});
  }
  check_output(out, "psi_r");
  return out;
}

PsiIntermediate psi_r_inverse(const MBarredSequence& t) {
  require_valid(t, "psi_inverse");
  require(t.m >= 1, "psi_inverse: needs m >= 1");
  const int top = t.m;
  PsiIntermediate out{t.m - 1, t.k + 1, t.n + 1, t.elements};
  auto& e = out.elements;
  std::size_t b = 0;
  while (!(is_bar(e[b]) && std::get<Bar>(e[b]) == Bar{Color::red, top})) ++b;
  e.erase(e.begin() + static_cast<std::ptrdiff_t>(b));
  auto& extra = std::get<CallanPair>(e.back());
  auto& target = pair_at(e, b);
  if (target.extra) {
    insert_sorted(extra.red, top);
  } else {
    auto restored = std::move(extra.red);
    insert_sorted(restored, top);
    extra.red = std::move(target.red);
    target.red = std::move(restored);
  }
  if (auto v = validate_psi_intermediate(out); !v) {
    throw Error(ErrorCode::consistency, "psi_r inverse produced an invalid intermediate: " + v.diagnostic);
  }
  return out;
}

MBarredSequence psi_b_inverse(const PsiIntermediate& s) {
  if (auto v = validate_psi_intermediate(s); !v) throw Error(ErrorCode::domain, "psi_b inverse: " + v.diagnostic);
  const int lo = s.m + 1;
  const auto& e = s.elements;
  std::size_t b = 0;
  while (!(is_bar(e[b]) && std::get<Bar>(e[b]) == Bar{Color::blue, lo})) ++b;
  const auto w2 = run_start(e, b);
  const auto after = next_pair(e, b);

  MBarredSequence out{s.m, s.k, s.n, {}};
  auto& o = out.elements;
  o.reserve(e.size());
  o.insert(o.end(), e.begin(), e.begin() + static_cast<std::ptrdiff_t>(w2));
  o.insert(o.end(), e.begin() + static_cast<std::ptrdiff_t>(b + 1), e.begin() + static_cast<std::ptrdiff_t>(after));
  o.emplace_back(CallanPair{{lo}, std::get<CallanPair>(e.back()).red, false});
  o.insert(o.end(), e.begin() + static_cast<std::ptrdiff_t>(w2), e.begin() + static_cast<std::ptrdiff_t>(b));
  o.insert(o.end(), e.begin() + static_cast<std::ptrdiff_t>(after), e.end());
  extra_pair(out).red.clear();

  check_output(out, "psi_b inverse");
  if (!in_psi_domain(out)) throw Error(ErrorCode::consistency, "psi_b inverse left the psi domain");
  return out;
}

MBarredSequence psi(const MBarredSequence& s) { return psi_r(psi_b(s)); }

MBarredSequence psi_inverse(const MBarredSequence& t) { return psi_b_inverse(psi_r_inverse(t)); }

std::string to_text(const PsiIntermediate& s) { return to_text(MBarredSequence{s.m, s.k, s.n, s.elements}); }

}  // namespace callan
