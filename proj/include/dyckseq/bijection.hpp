#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"
#include "paths.hpp"
#include "sequences.hpp"

namespace dyckseq {

// Forward map: 021-avoiding ascent sequence -> Dyck path of the same size,
// built one entry at a time starting from UD. Inverse map peels a path back
// down to UD, emitting one entry per step.

struct ForwardStepRecord {
  std::size_t position = 0;  // i
  entry_t entry = 0;         // u_i
  int case_id = 0;
  std::optional<AllowableList> allowable;  // Case 4 only
  std::optional<std::size_t> j;            // Case 4 only, 1-based
  std::optional<long> e;                   // Case 4 only
  std::vector<StepRef> key_downsteps_before;
  DyckPath path_after = DyckPath::unit();
};

struct ForwardTrace {
  DyckPath initial = DyckPath::unit();
  std::vector<ForwardStepRecord> records;

  const DyckPath& result() const { return records.empty() ? initial : records.back().path_after; }
};

// Marker for an inverse Case 2 step: the entry equals its predecessor, which
// is only known once the unwind has finished.
struct RepeatPrevious {
  friend bool operator==(RepeatPrevious, RepeatPrevious) = default;
};
using Emitted = std::variant<entry_t, RepeatPrevious>;

struct InverseStepRecord {
  std::size_t size = 0;  // size of P before the step
  int case_id = 0;
  Emitted emitted = entry_t{0};
  std::optional<StepRef> marked_step;        // Case 4 only, index in P
  std::optional<StepRef> marked_in_result;   // Case 4 only, index in Q
  std::optional<std::size_t> rank_right_to_left;
  DyckPath path_after = DyckPath::unit();
};

struct InverseTrace {
  DyckPath initial = DyckPath::unit();
  std::vector<InverseStepRecord> records;
  AscentSequence result{0};
};

namespace detail {

inline bool entry_allowed(const prefix_state& st, entry_t u) noexcept {
  if (u == 0) return true;
  const entry_t lo = st.last == 0 ? std::max<entry_t>(st.max_entry, 1) : st.last;
  return u >= lo && u <= st.ascents + 1;
}

[[noreturn]] inline void internal(std::size_t position, const std::string& what) {
  throw error(errc::internal_invariant, position, what);
}

// One forward step. position is the 1-based index of u in the full sequence.
inline DyckPath forward_advance(const DyckPath& p, const prefix_state& st, entry_t u,
                                std::size_t position, ForwardStepRecord* rec) {
  if (!entry_allowed(st, u)) throw error(errc::entry_not_allowed, position);
  if (rec) {
    rec->position = position;
    rec->entry = u;
  }
  if (u == 0) {
    if (rec) rec->case_id = 1;
    return insert_ud_at_vertex(p, peak_positions(p).back());
  }
  if (u == st.last) {
    if (rec) rec->case_id = 2;
    return elevate(p);
  }
  if (u == st.ascents + 1) {
    if (rec) rec->case_id = 3;
    return append_ud(p);
  }

  AllowableList allowable = st.allowable();
  if (allowable.empty()) internal(position, "case 4 with empty allowable list");
  const auto j = allowable.position_of(u);
  if (!j) throw error(errc::entry_not_allowed, position);
  const auto e = degree_of_elevation(p);
  if (!e) internal(position, "case 4 on a pyramid path");
  auto keys = key_downsteps(p);
  if (keys.size() != allowable.size())
    internal(position, "allowable list size differs from key downstep count");

  const StepRef key = keys[*j - 1];
  const StepRef up = match_of_downstep(p, key);
  DyckPath q = insert_ud_at_vertex(p, key.index - 1);
  try {
    q = transfer_upsteps_from_front(q, static_cast<std::size_t>(*e), up);
  } catch (const error& err) {
    internal(position, std::string("upstep transfer failed: ") + err.what());
  }
  if (rec) {
    rec->case_id = 4;
    rec->allowable = std::move(allowable);
    rec->j = *j;
    rec->e = *e;
    rec->key_downsteps_before = std::move(keys);
  }
  return q;
}

inline std::optional<std::size_t> first_021_violation(const AscentSequence& seq) noexcept {
  entry_t last_nonzero = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const entry_t v = seq.entries()[i];
    if (v == 0) continue;
    if (v < last_nonzero) return i + 1;
    last_nonzero = v;
  }
  return std::nullopt;
}

inline void require_021_avoiding(const AscentSequence& seq) {
  if (auto at = first_021_violation(seq)) throw error(errc::not_021_avoiding, *at);
}

}  // namespace detail

// Extends forward(prefix) by the entry u.
inline std::pair<DyckPath, ForwardStepRecord> forward_step(const DyckPath& p,
                                                           const AscentSequence& prefix,
                                                           entry_t u) {
  detail::require_021_avoiding(prefix);
  if (p.size() != prefix.size())
    throw error(errc::internal_invariant, std::nullopt, "path size differs from prefix length");
  ForwardStepRecord rec;
  rec.key_downsteps_before = key_downsteps(p);
  DyckPath q = detail::forward_advance(p, detail::prefix_state::of(prefix.entries()), u,
                                       prefix.size() + 1, &rec);
  rec.path_after = q;
  return {std::move(q), std::move(rec)};
}

inline DyckPath forward(const AscentSequence& seq) {
  detail::require_021_avoiding(seq);
  DyckPath p = DyckPath::unit();
  detail::prefix_state st;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const entry_t u = seq.entries()[i];
    p = detail::forward_advance(p, st, u, i + 1, nullptr);
    st.push(u);
  }
  return p;
}

inline ForwardTrace forward_trace(const AscentSequence& seq) {
  detail::require_021_avoiding(seq);
  ForwardTrace trace;
  DyckPath p = DyckPath::unit();
  detail::prefix_state st;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const entry_t u = seq.entries()[i];
    ForwardStepRecord rec;
    rec.key_downsteps_before = key_downsteps(p);
    p = detail::forward_advance(p, st, u, i + 1, &rec);
    rec.path_after = p;
    trace.records.push_back(std::move(rec));
    st.push(u);
  }
  return trace;
}

inline int classify_inverse_case(const DyckPath& p) {
  if (p.size() < 2) throw error(errc::too_small);
  if (last_ascent_length(p) >= 2) return 1;
  if (is_elevated(p)) return 2;
  if (ends_with_peak_at_ground(p)) return 3;
  return 4;
}

inline InverseStepRecord inverse_step(const DyckPath& p) {
  InverseStepRecord rec;
  rec.size = p.size();
  rec.case_id = classify_inverse_case(p);
  switch (rec.case_id) {
    case 1:
      rec.emitted = entry_t{0};
      rec.path_after = delete_last_peak(p);
      return rec;
    case 2:
      rec.emitted = RepeatPrevious{};
      rec.path_after = lower(p);
      return rec;
    case 3:
      rec.emitted = static_cast<entry_t>(valley_count(p));
      rec.path_after = delete_last_peak(p);
      return rec;
    default:
      break;
  }

  const StepRange td = terminal_descent(p);
  if (td.length() < 2) detail::internal(p.size(), "case 4 with a one-step terminal descent");
  // The peak's downstep is td.first; the mark is the next one, and after the
  // peak is removed it sits two places to the left.
  const StepRef mark{td.first + 1, Step::Down};
  const DyckPath shrunk = delete_last_peak(p);
  const StepRef mark_shrunk{mark.index - 2, Step::Down};
  const StepRef up = match_of_downstep(shrunk, mark_shrunk);
  std::size_t preceding = 0;
  while (up.index - 1 - preceding >= 1 && shrunk.steps()[up.index - 2 - preceding] == Step::Up)
    ++preceding;
  DyckPath q = p;
  try {
    q = transfer_upsteps_to_front(shrunk, preceding, up);
  } catch (const error& err) {
    detail::internal(p.size(), std::string("upstep transfer failed: ") + err.what());
  }
  // Steps at or after the matching upstep keep their index.
  const StepRef mark_q = mark_shrunk;
  const auto keys = key_downsteps(q);
  const auto it = std::find(keys.begin(), keys.end(), mark_q);
  if (it == keys.end()) detail::internal(p.size(), "marked downstep is not a key downstep");
  const std::size_t rank = static_cast<std::size_t>(keys.end() - it);
  const std::size_t valleys = valley_count(p);
  if (rank > valleys) detail::internal(p.size(), "rank exceeds valley count");

  rec.emitted = static_cast<entry_t>(valleys - rank);
  rec.marked_step = mark;
  rec.marked_in_result = mark_q;
  rec.rank_right_to_left = rank;
  rec.path_after = std::move(q);
  return rec;
}

namespace detail {

// Emissions arrive for sizes n, n-1, ..., 2; u_1 = 0.
inline AscentSequence resolve_emissions(const std::vector<InverseStepRecord>& records) {
  std::vector<std::int64_t> raw(records.size() + 1, 0);
  for (std::size_t i = 2; i <= raw.size(); ++i) {
    const InverseStepRecord& rec = records[raw.size() - i];
    if (std::holds_alternative<RepeatPrevious>(rec.emitted)) {
      raw[i - 1] = raw[i - 2];
      if (raw[i - 1] == 0) internal(i, "repeated entry resolved to zero");
    } else {
      raw[i - 1] = std::get<entry_t>(rec.emitted);
    }
  }
  try {
    AscentSequence seq{std::span<const std::int64_t>(raw)};
    if (auto at = first_021_violation(seq)) internal(*at, "inverse produced a 021 occurrence");
    return seq;
  } catch (const error& err) {
    if (err.is_internal()) throw;
    internal(err.position().value_or(0), std::string("inverse produced ") + err.what());
  }
}

}  // namespace detail

inline InverseTrace inverse_trace(const DyckPath& p) {
  InverseTrace trace;
  trace.initial = p;
  DyckPath current = p;
  while (current.size() > 1) {
    trace.records.push_back(inverse_step(current));
    current = trace.records.back().path_after;
  }
  trace.result = detail::resolve_emissions(trace.records);
  return trace;
}

inline AscentSequence inverse(const DyckPath& p) { return inverse_trace(p).result; }

}  // namespace dyckseq
