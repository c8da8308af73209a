#pragma once

#include <cstdio>
#include <optional>
#include <string>
#include <variant>

#include "bijection.hpp"
#include "paths.hpp"
#include "sequences.hpp"
#include "verify.hpp"

namespace dyckseq {

namespace detail {

template <typename T>
std::string or_dash(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

inline std::string list_text(const std::vector<StepRef>& refs) {
  std::string s = "[";
  for (std::size_t i = 0; i < refs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(refs[i].index);
  }
  return s + "]";
}

inline std::string allowable_text(const std::optional<AllowableList>& a) {
  if (!a) return "-";
  std::string s = "(";
  for (std::size_t i = 0; i < a->values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a->values[i]);
  }
  return s + ")";
}

}  // namespace detail

// Tab-separated table, one row per entry u_1..u_n, followed by the image path.
inline std::string format_forward_trace(const ForwardTrace& trace) {
  std::string out = "#i\tu\tcase\tA\tj\te\tkeys\tpath\n";
  out += "1\t0\t-\t-\t-\t-\t-\t" + format_path(trace.initial) + "\n";
  for (const auto& r : trace.records) {
    out += std::to_string(r.position) + '\t' + std::to_string(r.entry) + '\t' +
           std::to_string(r.case_id) + '\t' + detail::allowable_text(r.allowable) + '\t' +
           detail::or_dash(r.j) + '\t' + detail::or_dash(r.e) + '\t' +
           detail::list_text(r.key_downsteps_before) + '\t' + format_path(r.path_after) + '\n';
  }
  out += format_path(trace.result()) + "\n";
  return out;
}

inline std::string emitted_text(const Emitted& e) {
  return std::holds_alternative<RepeatPrevious>(e) ? std::string("=")
                                                    : std::to_string(std::get<entry_t>(e));
}

// One row per inverse step; "=" marks an entry copied from its predecessor.
inline std::string format_inverse_trace(const InverseTrace& trace) {
  std::string out = "#size\tcase\temit\tmark\trank\tpath\n";
  for (const auto& r : trace.records) {
    out += std::to_string(r.size) + '\t' + std::to_string(r.case_id) + '\t' +
           emitted_text(r.emitted) + '\t' +
           (r.marked_step ? std::to_string(r.marked_step->index) : std::string("-")) + '\t' +
           detail::or_dash(r.rank_right_to_left) + '\t' + format_path(r.path_after) + '\n';
  }
  out += format_sequence(trace.result) + "\n";
  return out;
}

// Five rows in table order, "-" for an absent value. The path side prints
// last ascent length minus one so matching pairs print identically.
inline std::string format_stats(const SequenceStats& s) {
  return "initial_zeros\t" + std::to_string(s.initial_zeros) + "\n" +
         "terminal_zeros\t" + std::to_string(s.terminal_zeros) + "\n" +
         "ascents\t" + std::to_string(s.ascents) + "\n" +
         "descents\t" + std::to_string(s.descents) + "\n" +
         "eq_run_before_last_nonzero\t" + detail::or_dash(s.eq_run_before_last_nonzero) + "\n";
}

inline std::string format_stats(const PathStats& p) {
  return "first_descent\t" + std::to_string(p.first_descent_length) + "\n" +
         "last_ascent_minus_1\t" + std::to_string(p.last_ascent_length - 1) + "\n" +
         "valleys\t" + std::to_string(p.valleys) + "\n" +
         "duu\t" + std::to_string(p.duu_count) + "\n" +
         "degree_of_elevation\t" + detail::or_dash(p.degree_of_elevation) + "\n";
}

inline std::string format_report(const VerifyReport& r) {
  std::string checks;
  for (std::size_t i = 0; i < r.checks.size(); ++i) checks += (i ? "," : "") + r.checks[i];
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3fs", r.elapsed.count());
  std::string out = "n=" + std::to_string(r.n) + " checks=" + checks +
                    " sequences=" + std::to_string(r.sequences_checked) +
                    " paths=" + std::to_string(r.paths_checked) +
                    " failures=" + std::to_string(r.failures.size()) + " elapsed=" + elapsed + "\n";
  for (const auto& s : r.equidistribution)
    out += "  " + s.name + "\t" + (s.passed ? "pass" : "FAIL") + "\n";
  for (const auto& f : r.failures)
    out += "  failure\t" + f.kind + "\t" + f.witness + (f.detail.empty() ? "" : "\t" + f.detail) + "\n";
  return out;
}

}  // namespace dyckseq
