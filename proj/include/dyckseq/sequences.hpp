#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace dyckseq {

using entry_t = std::uint32_t;

// A sequence u_1..u_n of nonnegative integers with u_1 = 0 and
// u_i <= 1 + (number of ascents in u_1..u_{i-1}). Immutable once built.
class AscentSequence {
 public:
  // Validating constructor; throws dyckseq::error.
  explicit AscentSequence(std::span<const std::int64_t> raw);
  AscentSequence(std::initializer_list<std::int64_t> raw)
      : AscentSequence(std::span<const std::int64_t>(raw.begin(), raw.size())) {}

  AscentSequence(detail::unchecked_t, std::vector<entry_t> entries)
      : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const entry_t> entries() const noexcept { return entries_; }
  // 1-based access.
  entry_t at(std::size_t position) const {
    if (position == 0 || position > entries_.size())
      throw error(errc::index_out_of_range, position);
    return entries_[position - 1];
  }
  entry_t back() const noexcept { return entries_.back(); }

  AscentSequence prefix(std::size_t length) const {
    if (length == 0 || length > entries_.size())
      throw error(errc::index_out_of_range, length);
    return {detail::unchecked,
            std::vector<entry_t>(entries_.begin(), entries_.begin() + length)};
  }

  friend bool operator==(const AscentSequence&, const AscentSequence&) = default;
  friend auto operator<=>(const AscentSequence& a, const AscentSequence& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<entry_t> entries_;
};

inline AscentSequence::AscentSequence(std::span<const std::int64_t> raw) {
  if (raw.empty()) throw error(errc::empty_input);
  if (raw[0] != 0) throw error(errc::first_entry_nonzero, 1);
  std::int64_t ascents = 0;
  entries_.reserve(raw.size());
  entries_.push_back(0);
  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (raw[i] < 0) throw error(errc::negative_entry, i + 1);
    if (raw[i] > ascents + 1) throw error(errc::ascent_bound_violated, i + 1);
    if (raw[i - 1] < raw[i]) ++ascents;
    entries_.push_back(static_cast<entry_t>(raw[i]));
  }
}

inline AscentSequence validate_ascent_sequence(std::span<const std::int64_t> raw) {
  return AscentSequence(raw);
}

inline std::size_t ascent_count(std::span<const entry_t> entries) noexcept {
  std::size_t count = 0;
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i - 1] < entries[i]) ++count;
  return count;
}

inline std::size_t ascent_count(const AscentSequence& seq) noexcept {
  return ascent_count(seq.entries());
}

inline std::size_t descent_count(const AscentSequence& seq) noexcept {
  auto e = seq.entries();
  std::size_t count = 0;
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i - 1] > e[i]) ++count;
  return count;
}

// For ascent sequences (which start at 0) avoidance of 021 is the same as the
// nonzero entries being weakly increasing.
inline bool is_021_avoiding(const AscentSequence& seq) noexcept {
  entry_t last_nonzero = 0;
  for (entry_t v : seq.entries()) {
    if (v == 0) continue;
    if (v < last_nonzero) return false;
    last_nonzero = v;
  }
  return true;
}

// Cubic triple scan for i<j<k with x_i < x_k < x_j. Works on any list and is
// kept deliberately naive: it is the cross-check for is_021_avoiding.
template <typename T>
bool contains_pattern_021_bruteforce(std::span<const T> entries) noexcept {
  const std::size_t n = entries.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (entries[i] < entries[k] && entries[k] < entries[j]) return true;
  return false;
}

inline bool contains_pattern_021_bruteforce(std::initializer_list<std::int64_t> entries) noexcept {
  return contains_pattern_021_bruteforce(
      std::span<const std::int64_t>(entries.begin(), entries.size()));
}

// The list A_i of nonzero values that Case 4 of the forward map may consume,
// together with the maximum m and ascent count a it was built from.
struct AllowableList {
  std::vector<entry_t> values;
  entry_t max_entry = 0;
  std::size_t ascents = 0;

  std::size_t size() const noexcept { return values.size(); }
  bool empty() const noexcept { return values.empty(); }
  // 1-based position of v in the list, if present.
  std::optional<std::size_t> position_of(entry_t v) const noexcept {
    if (values.empty() || v < values.front() || v > values.back()) return std::nullopt;
    return static_cast<std::size_t>(v - values.front()) + 1;
  }
  friend bool operator==(const AllowableList&, const AllowableList&) = default;
};

namespace detail {

// Running summary of a prefix; enough to extend it one entry at a time.
struct prefix_state {
  std::size_t ascents = 0;
  entry_t max_entry = 0;
  entry_t last = 0;

  static prefix_state of(std::span<const entry_t> entries) noexcept {
    prefix_state s;
    s.ascents = ascent_count(entries);
    s.max_entry = entries.empty() ? 0 : *std::max_element(entries.begin(), entries.end());
    s.last = entries.empty() ? 0 : entries.back();
    return s;
  }

  void push(entry_t v) noexcept {
    if (last < v) ++ascents;
    max_entry = std::max(max_entry, v);
    last = v;
  }

  AllowableList allowable() const {
    AllowableList list;
    list.max_entry = max_entry;
    list.ascents = ascents;
    const std::size_t lo = last == 0 ? std::max<std::size_t>(max_entry, 1)
                                     : static_cast<std::size_t>(max_entry) + 1;
    for (std::size_t v = lo; v <= ascents; ++v) list.values.push_back(static_cast<entry_t>(v));
    return list;
  }

  // Ascending, duplicate-free.
  template <typename F>
  void for_each_next(F&& f) const {
    f(entry_t{0});
    const entry_t lo = last == 0 ? std::max<entry_t>(max_entry, 1) : last;
    for (std::size_t v = lo; v <= ascents + 1; ++v) f(static_cast<entry_t>(v));
  }
};

}  // namespace detail

inline AllowableList allowable_nonzero_values(const AscentSequence& prefix) {
  return detail::prefix_state::of(prefix.entries()).allowable();
}

// Every v for which prefix+v is again a 021-avoiding ascent sequence: 0, the
// repeat of a nonzero last entry, the list A_i, and a+1.
inline std::vector<entry_t> allowable_next_values(const AscentSequence& prefix) {
  std::vector<entry_t> out;
  detail::prefix_state::of(prefix.entries()).for_each_next([&](entry_t v) { out.push_back(v); });
  return out;
}

// Visits every 021-avoiding ascent sequence of length n in lexicographic order.
// Memory use is O(n) regardless of how many sequences are produced.
template <typename F>
void for_each_021_avoiding(std::size_t n, F&& visit) {
  if (n == 0) throw error(errc::size_zero);
  std::vector<entry_t> entries;
  entries.reserve(n);
  entries.push_back(0);
  auto recurse = [&](auto& self, const detail::prefix_state& state) -> void {
    if (entries.size() == n) {
      visit(AscentSequence(detail::unchecked, entries));
      return;
    }
    state.for_each_next([&](entry_t v) {
      detail::prefix_state next = state;
      next.push(v);
      entries.push_back(v);
      self(self, next);
      entries.pop_back();
    });
  };
  recurse(recurse, detail::prefix_state{});
}

inline std::vector<AscentSequence> enumerate_021_avoiding(std::size_t n) {
  std::vector<AscentSequence> out;
  for_each_021_avoiding(n, [&](const AscentSequence& s) { out.push_back(s); });
  return out;
}

struct SequenceStats {
  std::size_t initial_zeros = 0;
  std::size_t terminal_zeros = 0;
  std::size_t ascents = 0;
  std::size_t descents = 0;
  // Absent exactly when every entry is zero.
  std::optional<std::size_t> eq_run_before_last_nonzero;

  friend bool operator==(const SequenceStats&, const SequenceStats&) = default;
};

inline SequenceStats sequence_statistics(const AscentSequence& seq) {
  auto e = seq.entries();
  const std::size_t n = e.size();
  SequenceStats st;
  while (st.initial_zeros < n && e[st.initial_zeros] == 0) ++st.initial_zeros;
  if (st.initial_zeros == n) {
    st.terminal_zeros = n - 1;
  } else {
    while (e[n - 1 - st.terminal_zeros] == 0) ++st.terminal_zeros;
  }
  st.ascents = ascent_count(seq);
  st.descents = descent_count(seq);
  if (st.initial_zeros != n) {
    std::size_t k = n - 1 - st.terminal_zeros;
    std::size_t run = 0;
    while (run < k && e[k - 1 - run] == e[k]) ++run;
    st.eq_run_before_last_nonzero = run;
  }
  return st;
}

// Text forms: "0,1,0,1,2,2,0,3" always; "01012203" when every entry is a digit.
inline std::string format_sequence(const AscentSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seq.entries()[i]);
  }
  return out;
}

inline std::vector<std::int64_t> parse_integer_list(std::string_view text) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  std::size_t b = 0, e = text.size();
  while (b < e && is_space(text[b])) ++b;
  while (e > b && is_space(text[e - 1])) --e;
  std::vector<std::int64_t> values;
  if (b == e) throw error(errc::empty_input);
  const bool compact = text.substr(b, e - b).find(',') == std::string_view::npos;
  if (compact) {
    for (std::size_t i = b; i < e; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw error(errc::bad_character, i + 1);
      values.push_back(text[i] - '0');
    }
    return values;
  }
  std::size_t i = b;
  while (true) {
    while (i < e && is_space(text[i])) ++i;
    bool negative = false;
    if (i < e && text[i] == '-') {
      negative = true;
      ++i;
    }
    if (i >= e || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw error(errc::bad_character, i + 1);
    std::int64_t v = 0;
    while (i < e && std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (v > (INT64_MAX - 9) / 10) throw error(errc::bad_character, i + 1, "entry too large");
      v = v * 10 + (text[i] - '0');
      ++i;
    }
    values.push_back(negative ? -v : v);
    while (i < e && is_space(text[i])) ++i;
    if (i == e) break;
    if (text[i] != ',') throw error(errc::bad_character, i + 1);
    ++i;
  }
  return values;
}

inline AscentSequence parse_sequence(std::string_view text) {
  auto values = parse_integer_list(text);
  return AscentSequence(std::span<const std::int64_t>(values));
}

}  // namespace dyckseq
