#include <algorithm>
#include <optional>

#include "callan/combinat.hpp"
#include "callan/error.hpp"

namespace callan {

namespace {

struct OrderedPartitions {
  std::vector<std::vector<std::vector<int>>> blocks;
  std::vector<std::vector<int>> rest;
};

// All ordered partitions of subsets of {base+1..base+size} into `parts`
// nonempty blocks, lexicographically sorted, with the leftover elements.
OrderedPartitions ordered_partitions(int base, int size, int parts) {
  OrderedPartitions out;
  const auto n = static_cast<std::size_t>(size);
  std::vector<int> assign(n, 0);  // 0 = leftover, 1..parts = block index
  std::vector<std::pair<std::vector<std::vector<int>>, std::vector<int>>> all;
  while (true) {
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(parts));
    std::vector<int> rest;
    for (std::size_t i = 0; i < n; ++i) {
      const int x = base + static_cast<int>(i) + 1;
      if (assign[i] == 0) {
        rest.push_back(x);
      } else {
        blocks[static_cast<std::size_t>(assign[i] - 1)].push_back(x);
      }
    }
    if (std::none_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.empty(); })) {
      all.emplace_back(std::move(blocks), std::move(rest));
    }
    std::size_t i = 0;
    while (i < n && assign[i] == parts) assign[i++] = 0;
    if (i == n) break;
    ++assign[i];
  }
  std::sort(all.begin(), all.end());
  for (auto& [b, r] : all) {
    out.blocks.push_back(std::move(b));
    out.rest.push_back(std::move(r));
  }
  return out;
}

void arrange(int m, int pairs, std::vector<Bar>& run, BarArrangement& current,
             std::vector<bool>& blue_used, std::vector<bool>& red_used, int bars_left,
             std::vector<BarArrangement>& out) {
  const std::optional<Bar> prev = run.empty() ? std::nullopt : std::optional<Bar>(run.back());
  const int placed = static_cast<int>(current.size());

  // Close the run with the next pair.
  if (!(prev && prev->color == Color::blue)) {
    const bool last = placed + 1 == pairs;
    if (!last || bars_left == 0) {
      current.push_back(run);
      if (last) {
        out.push_back(current);
      } else {
        std::vector<Bar> next_run;
        arrange(m, pairs, next_run, current, blue_used, red_used, bars_left, out);
      }
      current.pop_back();
    }
  }
  if (bars_left == 0) return;

  for (int label = 0; label <= m; ++label) {
    if (prev) {
      if (prev->color == Color::blue && label >= prev->label) break;
      if (prev->color == Color::red && label <= prev->label) continue;
    }
    for (Color color : {Color::blue, Color::red}) {
      auto& used = color == Color::blue ? blue_used : red_used;
      if (color == Color::blue && label == 0) continue;
      if (used[static_cast<std::size_t>(label)]) continue;
      used[static_cast<std::size_t>(label)] = true;
      run.push_back({color, label});
      arrange(m, pairs, run, current, blue_used, red_used, bars_left - 1, out);
      run.pop_back();
      used[static_cast<std::size_t>(label)] = false;
    }
  }
}

}  // namespace

std::vector<BarArrangement> bar_arrangements(int m, int pairs) {
  if (m < 0 || pairs < 1) throw Error(ErrorCode::invalid_argument, "bar_arrangements: need m >= 0, pairs >= 1");
  std::vector<BarArrangement> out;
  std::vector<Bar> run;
  BarArrangement current;
  std::vector<bool> blue_used(static_cast<std::size_t>(m) + 1, false);
  std::vector<bool> red_used(static_cast<std::size_t>(m) + 1, false);
  arrange(m, pairs, run, current, blue_used, red_used, 2 * m + 1, out);
  return out;
}

CallanEnumerator::CallanEnumerator(int k, int n, int shift) : k_(k), n_(n), shift_(shift) {
  if (k < 0 || n < 0 || shift < 0) throw Error(ErrorCode::invalid_argument, "enumerate: negative size");
  for (int p = 0; p <= std::min(k, n); ++p) {
    auto blue = ordered_partitions(shift, k, p);
    auto red = ordered_partitions(shift, n, p);
    levels_.push_back({std::move(blue.blocks), std::move(blue.rest), std::move(red.blocks), std::move(red.rest)});
  }
}

bool CallanEnumerator::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else if (++red_ == levels_[level_].red.size()) {
    red_ = 0;
    if (++blue_ == levels_[level_].blue.size()) {
      blue_ = 0;
      ++level_;
    }
  }
  while (level_ < levels_.size() && (levels_[level_].blue.empty() || levels_[level_].red.empty())) ++level_;
  if (level_ == levels_.size()) {
    done_ = true;
    return false;
  }
  return true;
}

std::vector<CallanPair> CallanEnumerator::current_pairs() const {
  const auto& lv = levels_[level_];
  std::vector<CallanPair> pairs;
  pairs.reserve(level_ + 1);
  for (std::size_t j = 0; j < level_; ++j) pairs.push_back({lv.blue[blue_][j], lv.red[red_][j], false});
  pairs.push_back({lv.blue_rest[blue_], lv.red_rest[red_], true});
  return pairs;
}

std::optional<CallanSequence> CallanEnumerator::next() {
  if (!advance()) return std::nullopt;
  return CallanSequence{k_, n_, shift_, current_pairs()};
}

MBarredEnumerator::MBarredEnumerator(int k, int n, int m) : pairs_(k, n, m), m_(m) {
  if (m < 0) throw Error(ErrorCode::invalid_argument, "enumerate: negative m");
  for (std::size_t p = 0; p < pairs_.levels_.size(); ++p) {
    bars_.push_back(bar_arrangements(m, static_cast<int>(p) + 1));
  }
}

std::optional<MBarredSequence> MBarredEnumerator::next() {
  while (true) {
    if (have_pairs_ && ++arrangement_ < bars_[pairs_.level_].size()) break;
    if (!pairs_.advance()) return std::nullopt;
    have_pairs_ = true;
    arrangement_ = 0;
    current_ = pairs_.current_pairs();
    if (!bars_[pairs_.level_].empty()) break;
  }
  const auto& runs = bars_[pairs_.level_][arrangement_];
  MBarredSequence s{m_, pairs_.k_, pairs_.n_, {}};
  for (std::size_t j = 0; j < current_.size(); ++j) {
    for (const auto& b : runs[j]) s.elements.emplace_back(b);
    s.elements.emplace_back(current_[j]);
  }
  return s;
}

DumontEnumerator::DumontEnumerator(int two_n) : size_(two_n) {
  if (two_n < 0 || two_n % 2 != 0) {
    throw Error(ErrorCode::invalid_argument, "enumerate_dumont: length must be even and non-negative");
  }
  used_.assign(static_cast<std::size_t>(two_n) + 1, false);
}

// Depth-first search for the next complete permutation, values ascending at
// every position.
bool DumontEnumerator::extend() {
  while (true) {
    const std::size_t pos = values_.size();
    if (static_cast<int>(pos) == size_) {
      if (size_ == 0 || values_.back() % 2 == 1) return true;
    } else {
      if (tried_.size() <= pos) tried_.push_back(0);
      const int prev = pos ? values_.back() : 0;
      int v = tried_[pos] + 1;
      for (; v <= size_; ++v) {
        if (used_[static_cast<std::size_t>(v)]) continue;
        if (pos && prev % 2 == 0 && v > prev) break;  // even must descend
        if (pos && prev % 2 == 1 && v < prev) continue;  // odd must ascend
        break;
      }
      const bool ok = v <= size_ && !(pos && prev % 2 == 0 && v > prev);
      if (ok) {
        tried_[pos] = v;
        used_[static_cast<std::size_t>(v)] = true;
        values_.push_back(v);
        continue;
      }
      tried_.resize(pos);
    }
    // Backtrack.
    if (values_.empty()) return false;
    used_[static_cast<std::size_t>(values_.back())] = false;
    values_.pop_back();
  }
}

std::optional<DumontPermutation> DumontEnumerator::next() {
  if (done_) return std::nullopt;
  if (!extend()) {
    done_ = true;
    return std::nullopt;
  }
  DumontPermutation p{values_};
  if (size_ == 0) {
    done_ = true;
  } else {
    // Force the next call to move past this leaf.
    used_[static_cast<std::size_t>(values_.back())] = false;
    values_.pop_back();
  }
  return p;
}

std::vector<CallanSequence> enumerate_callan(int k, int n, int shift) {
  std::vector<CallanSequence> out;
  CallanEnumerator e(k, n, shift);
  while (auto s = e.next()) out.push_back(std::move(*s));
  return out;
}

std::vector<MBarredSequence> enumerate_mbarred(int k, int n, int m) {
  std::vector<MBarredSequence> out;
  MBarredEnumerator e(k, n, m);
  while (auto s = e.next()) out.push_back(std::move(*s));
  return out;
}

std::vector<DumontPermutation> enumerate_dumont(int two_n) {
  std::vector<DumontPermutation> out;
  DumontEnumerator e(two_n);
  while (auto p = e.next()) out.push_back(std::move(*p));
  return out;
}

void for_each_mbarred(int k, int n, int m, const std::function<void(const MBarredSequence&)>& visit) {
  MBarredEnumerator e(k, n, m);
  while (auto s = e.next()) visit(*s);
}

std::size_t count_mbarred(int k, int n, int m) {
  std::size_t count = 0;
  MBarredEnumerator e(k, n, m);
  while (e.next()) ++count;
  return count;
}

}  // namespace callan
