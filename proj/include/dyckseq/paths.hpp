#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace dyckseq {

enum class Step : std::uint8_t { Up, Down };

// Addresses a single step; index is 1-based.
struct StepRef {
  std::size_t index = 0;
  Step kind = Step::Up;
  friend bool operator==(const StepRef&, const StepRef&) = default;
};

// Inclusive 1-based range of step indices.
struct StepRange {
  std::size_t first = 0;
  std::size_t last = 0;
  std::size_t length() const noexcept { return last - first + 1; }
  bool contains(std::size_t i) const noexcept { return first <= i && i <= last; }
  friend bool operator==(const StepRange&, const StepRange&) = default;
};

namespace detail {

// Returns 0 when valid, otherwise the 1-based step where the walk goes below
// ground; SIZE_MAX for an unbalanced or empty walk.
inline std::size_t first_dip(std::span<const Step> steps) noexcept {
  long h = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    h += steps[i] == Step::Up ? 1 : -1;
    if (h < 0) return i + 1;
  }
  return (h != 0 || steps.empty()) ? SIZE_MAX : 0;
}

}  // namespace detail

// Steps over {Up, Down} with equal counts that never go below ground level.
// Steps are numbered 1..2n; vertex k is the point reached after k steps.
class DyckPath {
 public:
  explicit DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw error(errc::empty_input);
    const std::size_t dip = detail::first_dip(steps_);
    if (dip == SIZE_MAX) throw error(errc::unbalanced);
    if (dip != 0) throw error(errc::dips_below_ground, dip);
  }

  DyckPath(detail::unchecked_t, std::vector<Step> steps) : steps_(std::move(steps)) {}

  // The single-peak path UD.
  static DyckPath unit() { return DyckPath(detail::unchecked, {Step::Up, Step::Down}); }

  std::size_t size() const noexcept { return steps_.size() / 2; }
  std::size_t length() const noexcept { return steps_.size(); }
  std::span<const Step> steps() const noexcept { return steps_; }
  // 1-based.
  Step step(std::size_t index) const {
    if (index == 0 || index > steps_.size()) throw error(errc::index_out_of_range, index);
    return steps_[index - 1];
  }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath& a, const DyckPath& b) { return a.steps_ <=> b.steps_; }

 private:
  std::vector<Step> steps_;
};

// "U"/"D" string.
inline std::string format_path(const DyckPath& p) {
  std::string out;
  out.reserve(p.length());
  for (Step s : p.steps()) out += s == Step::Up ? 'U' : 'D';
  return out;
}

inline std::string format_path_paren(const DyckPath& p) {
  std::string out;
  out.reserve(p.length());
  for (Step s : p.steps()) out += s == Step::Up ? '(' : ')';
  return out;
}

// Accepts U/D or ( / ). Surrounding whitespace is ignored.
inline DyckPath parse_path(std::string_view text) {
  std::size_t b = 0, e = text.size();
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (b < e && space(text[b])) ++b;
  while (e > b && space(text[e - 1])) --e;
  std::vector<Step> steps;
  steps.reserve(e - b);
  for (std::size_t i = b; i < e; ++i) {
    switch (text[i]) {
      case 'U': case '(': steps.push_back(Step::Up); break;
      case 'D': case ')': steps.push_back(Step::Down); break;
      default: throw error(errc::bad_character, i - b + 1);
    }
  }
  return DyckPath(std::move(steps));
}

// Bit k (from the most significant used bit) is 1 for Down. Ordering of codes
// for paths of equal length agrees with lexicographic U < D. Requires 2n <= 64.
inline std::uint64_t path_code(const DyckPath& p) noexcept {
  std::uint64_t code = 0;
  for (Step s : p.steps()) code = (code << 1) | (s == Step::Down ? 1u : 0u);
  return code;
}

inline long vertex_height(const DyckPath& p, std::size_t vertex) {
  if (vertex > p.length()) throw error(errc::index_out_of_range, vertex);
  long h = 0;
  for (std::size_t i = 0; i < vertex; ++i) h += p.steps()[i] == Step::Up ? 1 : -1;
  return h;
}

inline std::vector<long> vertex_heights(const DyckPath& p) {
  std::vector<long> h(p.length() + 1, 0);
  for (std::size_t i = 0; i < p.length(); ++i)
    h[i + 1] = h[i] + (p.steps()[i] == Step::Up ? 1 : -1);
  return h;
}

inline std::size_t last_ascent_length(const DyckPath& p) noexcept {
  auto s = p.steps();
  std::size_t i = s.size();
  while (i > 0 && s[i - 1] == Step::Down) --i;
  std::size_t len = 0;
  while (i > 0 && s[i - 1] == Step::Up) --i, ++len;
  return len;
}

inline std::size_t first_descent_length(const DyckPath& p) noexcept {
  auto s = p.steps();
  std::size_t i = 0;
  while (i < s.size() && s[i] == Step::Up) ++i;
  std::size_t len = 0;
  while (i < s.size() && s[i] == Step::Down) ++i, ++len;
  return len;
}

inline std::size_t valley_count(const DyckPath& p) noexcept {
  auto s = p.steps();
  std::size_t count = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] == Step::Down && s[i] == Step::Up) ++count;
  return count;
}

inline std::size_t duu_count(const DyckPath& p) noexcept {
  auto s = p.steps();
  std::size_t count = 0;
  for (std::size_t i = 2; i < s.size(); ++i)
    if (s[i - 2] == Step::Down && s[i - 1] == Step::Up && s[i] == Step::Up) ++count;
  return count;
}

// Vertex indices of peak vertices, left to right.
inline std::vector<std::size_t> peak_positions(const DyckPath& p) {
  auto s = p.steps();
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] == Step::Up && s[i] == Step::Down) out.push_back(i);
  return out;
}

inline std::vector<std::size_t> valley_positions(const DyckPath& p) {
  auto s = p.steps();
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] == Step::Down && s[i] == Step::Up) out.push_back(i);
  return out;
}

inline std::size_t return_count(const DyckPath& p) noexcept {
  std::size_t returns = 0;
  long h = 0;
  for (Step s : p.steps()) {
    h += s == Step::Up ? 1 : -1;
    if (h == 0) ++returns;
  }
  return returns;
}

inline bool is_elevated(const DyckPath& p) noexcept { return return_count(p) == 1; }

inline bool is_pyramid(const DyckPath& p) noexcept {
  auto s = p.steps();
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != (i < n ? Step::Up : Step::Down)) return false;
  return true;
}

inline bool ends_with_peak_at_ground(const DyckPath& p) noexcept {
  auto s = p.steps();
  return s.size() >= 2 && s[s.size() - 2] == Step::Up && s.back() == Step::Down;
}

// Height of the lowest valley vertex; absent for pyramids, which have none.
inline std::optional<long> degree_of_elevation(const DyckPath& p) {
  auto s = p.steps();
  std::optional<long> lowest;
  long h = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    h += s[i] == Step::Up ? 1 : -1;
    if (s[i] == Step::Down && i + 1 < s.size() && s[i + 1] == Step::Up)
      lowest = lowest ? std::min(*lowest, h) : h;
  }
  return lowest;
}

namespace detail {

inline void check_ref(const DyckPath& p, StepRef r) {
  if (r.index == 0 || r.index > p.length()) throw error(errc::index_out_of_range, r.index);
  if (p.steps()[r.index - 1] != r.kind) throw error(errc::wrong_kind, r.index);
}

}  // namespace detail

inline StepRef match_of_downstep(const DyckPath& p, StepRef down) {
  if (down.kind != Step::Down) throw error(errc::wrong_kind, down.index);
  detail::check_ref(p, down);
  auto s = p.steps();
  long depth = 0;
  for (std::size_t i = down.index; i-- > 0;) {
    depth += s[i] == Step::Down ? 1 : -1;
    if (depth == 0) return {i + 1, Step::Up};
  }
  throw error(errc::internal_invariant, down.index, "unmatched downstep");
}

inline StepRef match_of_upstep(const DyckPath& p, StepRef up) {
  if (up.kind != Step::Up) throw error(errc::wrong_kind, up.index);
  detail::check_ref(p, up);
  auto s = p.steps();
  long depth = 0;
  for (std::size_t i = up.index - 1; i < s.size(); ++i) {
    depth += s[i] == Step::Up ? 1 : -1;
    if (depth == 0) return {i + 1, Step::Down};
  }
  throw error(errc::internal_invariant, up.index, "unmatched upstep");
}

inline StepRange terminal_descent(const DyckPath& p) noexcept {
  auto s = p.steps();
  std::size_t first = s.size();
  while (first > 1 && s[first - 2] == Step::Down) --first;
  return {first, s.size()};
}

// Downsteps of the terminal descent whose matching upstep is the middle U of
// a DUU factor, left to right.
inline std::vector<StepRef> key_downsteps(const DyckPath& p) {
  auto s = p.steps();
  const StepRange td = terminal_descent(p);
  // Right-to-left scan; each upstep closes the most recent open downstep.
  std::vector<std::size_t> open;
  std::vector<StepRef> keys;
  for (std::size_t i = s.size(); i > 0; --i) {
    if (s[i - 1] == Step::Down) {
      open.push_back(i);
      continue;
    }
    const std::size_t d = open.back();
    open.pop_back();
    const std::size_t u = i;
    if (td.contains(d) && u >= 2 && u < s.size() && s[u - 2] == Step::Down && s[u] == Step::Up)
      keys.push_back({d, Step::Down});
  }
  std::sort(keys.begin(), keys.end(), [](StepRef a, StepRef b) { return a.index < b.index; });
  return keys;
}

inline DyckPath insert_ud_at_vertex(const DyckPath& p, std::size_t vertex) {
  if (vertex > p.length()) throw error(errc::index_out_of_range, vertex);
  std::vector<Step> s(p.steps().begin(), p.steps().end());
  const Step ud[] = {Step::Up, Step::Down};
  s.insert(s.begin() + static_cast<std::ptrdiff_t>(vertex), std::begin(ud), std::end(ud));
  return DyckPath(detail::unchecked, std::move(s));
}

inline DyckPath append_ud(const DyckPath& p) { return insert_ud_at_vertex(p, p.length()); }

inline DyckPath elevate(const DyckPath& p) {
  std::vector<Step> s;
  s.reserve(p.length() + 2);
  s.push_back(Step::Up);
  s.insert(s.end(), p.steps().begin(), p.steps().end());
  s.push_back(Step::Down);
  return DyckPath(detail::unchecked, std::move(s));
}

inline DyckPath lower(const DyckPath& p) {
  if (p.size() < 2) throw error(errc::too_small);
  if (!is_elevated(p)) throw error(errc::not_elevated);
  return DyckPath(detail::unchecked,
                  std::vector<Step>(p.steps().begin() + 1, p.steps().end() - 1));
}

// Removes the rightmost UD factor.
inline DyckPath delete_last_peak(const DyckPath& p) {
  if (p.size() < 2) throw error(errc::too_small);
  auto s = p.steps();
  std::size_t i = s.size() - 1;
  while (!(s[i - 1] == Step::Up && s[i] == Step::Down)) --i;
  std::vector<Step> out;
  out.reserve(s.size() - 2);
  out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i - 1));
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(i + 1), s.end());
  return DyckPath(detail::unchecked, std::move(out));
}

namespace detail {

inline DyckPath revalidate(std::vector<Step> steps) {
  const std::size_t dip = first_dip(steps);
  if (dip != 0) throw error(errc::result_invalid, dip == SIZE_MAX ? std::nullopt : std::optional(dip));
  return DyckPath(unchecked, std::move(steps));
}

}  // namespace detail

// Moves k upsteps from the start of the path to immediately before the
// referenced upstep (index taken in p), i.e. into that upstep's ascent.
inline DyckPath transfer_upsteps_from_front(const DyckPath& p, std::size_t k, StepRef to_ascent_of) {
  if (to_ascent_of.kind != Step::Up) throw error(errc::wrong_kind, to_ascent_of.index);
  detail::check_ref(p, to_ascent_of);
  if (k == 0) return p;
  auto s = p.steps();
  for (std::size_t i = 0; i < k; ++i)
    if (i >= s.size() || s[i] != Step::Up) throw error(errc::not_enough_upsteps, i + 1);
  const std::size_t t = to_ascent_of.index;
  if (t <= k) throw error(errc::not_enough_upsteps, t, "target lies inside the moved block");
  std::vector<Step> out;
  out.reserve(s.size());
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(k), s.begin() + static_cast<std::ptrdiff_t>(t - 1));
  out.insert(out.end(), k, Step::Up);
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(t - 1), s.end());
  return detail::revalidate(std::move(out));
}

// Inverse of transfer_upsteps_from_front: the k upsteps directly preceding the
// referenced upstep (same ascent) move to the start of the path.
inline DyckPath transfer_upsteps_to_front(const DyckPath& p, std::size_t k, StepRef before_up) {
  if (before_up.kind != Step::Up) throw error(errc::wrong_kind, before_up.index);
  detail::check_ref(p, before_up);
  if (k == 0) return p;
  auto s = p.steps();
  const std::size_t t = before_up.index;
  if (t <= k) throw error(errc::not_enough_upsteps, t);
  for (std::size_t i = t - 1 - k; i < t - 1; ++i)
    if (s[i] != Step::Up) throw error(errc::not_enough_upsteps, t);
  std::vector<Step> out;
  out.reserve(s.size());
  out.insert(out.end(), k, Step::Up);
  out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(t - 1 - k));
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(t - 1), s.end());
  return detail::revalidate(std::move(out));
}

// Visits all Dyck paths of size n, lexicographically with U < D.
template <typename F>
void for_each_dyck_path(std::size_t n, F&& visit) {
  if (n == 0) throw error(errc::size_zero);
  std::vector<Step> s;
  s.reserve(2 * n);
  auto recurse = [&](auto& self, std::size_t ups, std::size_t downs) -> void {
    if (downs == n) {
      visit(DyckPath(detail::unchecked, s));
      return;
    }
    if (ups < n) {
      s.push_back(Step::Up);
      self(self, ups + 1, downs);
      s.pop_back();
    }
    if (downs < ups) {
      s.push_back(Step::Down);
      self(self, ups, downs + 1);
      s.pop_back();
    }
  };
  recurse(recurse, 0, 0);
}

inline std::vector<DyckPath> enumerate_dyck_paths(std::size_t n) {
  std::vector<DyckPath> out;
  for_each_dyck_path(n, [&](const DyckPath& p) { out.push_back(p); });
  return out;
}

struct PathStats {
  std::size_t first_descent_length = 0;
  std::size_t last_ascent_length = 0;
  std::size_t valleys = 0;
  std::size_t duu_count = 0;
  std::optional<long> degree_of_elevation;

  friend bool operator==(const PathStats&, const PathStats&) = default;
};

inline PathStats path_statistics(const DyckPath& p) {
  return {first_descent_length(p), last_ascent_length(p), valley_count(p), duu_count(p),
          degree_of_elevation(p)};
}

// One row per height level, top row first. '/' marks an upstep rising to that
// level, '\' a downstep falling from it. Rows have trailing spaces removed.
inline std::string render_ascii(const DyckPath& p) {
  const auto h = vertex_heights(p);
  const long top = *std::max_element(h.begin(), h.end());
  std::string out;
  for (long row = top; row >= 1; --row) {
    std::string line(p.length(), ' ');
    for (std::size_t i = 0; i < p.length(); ++i) {
      if (p.steps()[i] == Step::Up && h[i + 1] == row) line[i] = '/';
      if (p.steps()[i] == Step::Down && h[i] == row) line[i] = '\\';
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace dyckseq
