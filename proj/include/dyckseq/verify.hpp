#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <iterator>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "bijection.hpp"
#include "error.hpp"
#include "paths.hpp"
#include "sequences.hpp"

namespace dyckseq {

// Exact Catalan number from the convolution recurrence. Throws cap_exceeded
// once the value no longer fits in 64 bits (n > 36).
inline std::uint64_t catalan(std::size_t n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    std::uint64_t sum = 0;
    for (std::size_t k = 0; k < m; ++k) {
      std::uint64_t term = 0;
      if (__builtin_mul_overflow(c[k], c[m - 1 - k], &term) ||
          __builtin_add_overflow(sum, term, &sum))
        throw error(errc::cap_exceeded, m, "Catalan number exceeds 64 bits");
    }
    c[m] = sum;
  }
  return c[n];
}

struct Failure {
  std::string kind;
  std::string witness;
  std::string detail;

  friend bool operator==(const Failure&, const Failure&) = default;
  friend auto operator<=>(const Failure& a, const Failure& b) {
    return std::tie(a.kind, a.witness, a.detail) <=> std::tie(b.kind, b.witness, b.detail);
  }
};

struct StatisticCheck {
  std::string name;
  bool passed = true;
  friend bool operator==(const StatisticCheck&, const StatisticCheck&) = default;
};

// The five rows of the equidistribution table, sequence side <-> path side.
inline const std::vector<std::string>& statistic_names() {
  static const std::vector<std::string> names = {
      "initial_zeros~first_descent",
      "terminal_zeros~last_ascent_minus_1",
      "ascents~valleys",
      "descents~duu",
      "eq_run_before_last_nonzero~degree_of_elevation",
  };
  return names;
}

struct VerifyReport {
  std::size_t n = 0;
  std::vector<std::string> checks;
  std::size_t sequences_checked = 0;
  std::size_t paths_checked = 0;
  std::vector<Failure> failures;
  std::vector<StatisticCheck> equidistribution;
  std::chrono::duration<double> elapsed{0};

  bool passed() const noexcept { return failures.empty(); }

  // Associative; failure lists are kept sorted so the result does not depend
  // on how the work was split.
  VerifyReport& merge(const VerifyReport& other) {
    n = std::max(n, other.n);
    for (const auto& c : other.checks)
      if (std::find(checks.begin(), checks.end(), c) == checks.end()) checks.push_back(c);
    sequences_checked += other.sequences_checked;
    paths_checked += other.paths_checked;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    std::sort(failures.begin(), failures.end());
    for (const auto& s : other.equidistribution) {
      auto it = std::find_if(equidistribution.begin(), equidistribution.end(),
                             [&](const StatisticCheck& x) { return x.name == s.name; });
      if (it == equidistribution.end())
        equidistribution.push_back(s);
      else
        it->passed = it->passed && s.passed;
    }
    elapsed += other.elapsed;
    return *this;
  }
};

struct VerifyOptions {
  static constexpr std::size_t default_cap = 12;
  static constexpr std::size_t extended_cap = 14;
  // Largest length accepted by check_characterization (cubic oracle over the
  // unrestricted ascent sequences).
  static constexpr std::size_t characterization_cap = 11;

  std::size_t cap = default_cap;
  unsigned jobs = 1;
  // Upper bound on stored failures per check; counting continues past it.
  std::size_t max_failures = 100;
};

namespace detail {

inline void require_within_cap(std::size_t n, const VerifyOptions& opt) {
  if (n == 0) throw error(errc::size_zero);
  if (n > opt.cap)
    throw error(errc::cap_exceeded, n, "limit is " + std::to_string(opt.cap));
}

inline void add_failure(VerifyReport& r, const VerifyOptions& opt, std::string kind,
                        std::string witness, std::string detail = {}) {
  if (r.failures.size() < opt.max_failures)
    r.failures.push_back({std::move(kind), std::move(witness), std::move(detail)});
}

// Runs body(worker, workers, report) on `jobs` threads; each worker handles
// the items whose enumeration index is congruent to its id.
template <typename Body>
VerifyReport run_partitioned(std::size_t n, std::string check, const VerifyOptions& opt,
                             Body body) {
  const auto start = std::chrono::steady_clock::now();
  const unsigned workers = std::max(1u, opt.jobs);
  std::vector<VerifyReport> parts(workers);
  if (workers == 1) {
    body(0u, 1u, parts[0]);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w)
      threads.emplace_back([&, w] {
        try {
          body(w, workers, parts[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : threads) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  VerifyReport report;
  for (auto& p : parts) report.merge(p);
  if (report.failures.size() > opt.max_failures) report.failures.resize(opt.max_failures);
  report.n = n;
  report.checks = {std::move(check)};
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

inline std::string describe(const ForwardStepRecord& r) {
  std::string s = "u_" + std::to_string(r.position) + "=" + std::to_string(r.entry) +
                  " case " + std::to_string(r.case_id) + " -> " + format_path(r.path_after);
  return s;
}

}  // namespace detail

inline VerifyReport check_counts(std::size_t n, const VerifyOptions& opt = {}) {
  detail::require_within_cap(n, opt);
  return detail::run_partitioned(n, "counts", opt, [&](unsigned w, unsigned, VerifyReport& r) {
    if (w != 0) return;
    const std::uint64_t expected = catalan(n);
    std::optional<AscentSequence> prev_seq;
    for_each_021_avoiding(n, [&](const AscentSequence& s) {
      ++r.sequences_checked;
      if (prev_seq && !(*prev_seq < s))
        detail::add_failure(r, opt, "sequence-order", format_sequence(s));
      if (!is_021_avoiding(s)) detail::add_failure(r, opt, "sequence-not-021", format_sequence(s));
      prev_seq = s;
    });
    std::optional<DyckPath> prev_path;
    for_each_dyck_path(n, [&](const DyckPath& p) {
      ++r.paths_checked;
      if (prev_path && !(*prev_path < p)) detail::add_failure(r, opt, "path-order", format_path(p));
      prev_path = p;
    });
    if (r.sequences_checked != expected)
      detail::add_failure(r, opt, "sequence-count", std::to_string(n),
                          std::to_string(r.sequences_checked) + " != " + std::to_string(expected));
    if (r.paths_checked != expected)
      detail::add_failure(r, opt, "path-count", std::to_string(n),
                          std::to_string(r.paths_checked) + " != " + std::to_string(expected));
  });
}

inline VerifyReport check_roundtrip(std::size_t n, const VerifyOptions& opt = {}) {
  detail::require_within_cap(n, opt);
  return detail::run_partitioned(n, "roundtrip", opt, [&](unsigned w, unsigned workers, VerifyReport& r) {
    std::size_t index = 0;
    for_each_021_avoiding(n, [&](const AscentSequence& s) {
      if (index++ % workers != w) return;
      ++r.sequences_checked;
      try {
        const DyckPath p = forward(s);
        const AscentSequence back = inverse(p);
        if (back != s)
          detail::add_failure(r, opt, "inverse(forward(s))", format_sequence(s),
                              format_path(p) + " -> " + format_sequence(back));
      } catch (const error& e) {
        detail::add_failure(r, opt, "inverse(forward(s))", format_sequence(s), e.what());
      }
    });
    index = 0;
    for_each_dyck_path(n, [&](const DyckPath& p) {
      if (index++ % workers != w) return;
      ++r.paths_checked;
      try {
        const AscentSequence s = inverse(p);
        const DyckPath back = forward(s);
        if (back != p)
          detail::add_failure(r, opt, "forward(inverse(p))", format_path(p),
                              format_sequence(s) + " -> " + format_path(back));
      } catch (const error& e) {
        detail::add_failure(r, opt, "forward(inverse(p))", format_path(p), e.what());
      }
    });
  });
}

inline VerifyReport check_bijectivity(std::size_t n, const VerifyOptions& opt = {}) {
  detail::require_within_cap(n, opt);
  return detail::run_partitioned(n, "bijectivity", opt, [&](unsigned w, unsigned, VerifyReport& r) {
    if (w != 0) return;
    std::vector<std::uint64_t> image;
    image.reserve(catalan(n));
    for_each_021_avoiding(n, [&](const AscentSequence& s) {
      ++r.sequences_checked;
      try {
        image.push_back(path_code(forward(s)));
      } catch (const error& e) {
        detail::add_failure(r, opt, "forward-error", format_sequence(s), e.what());
      }
    });
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end())
      detail::add_failure(r, opt, "image-duplicate", std::to_string(n));
    std::vector<std::uint64_t> all;
    for_each_dyck_path(n, [&](const DyckPath& p) {
      ++r.paths_checked;
      all.push_back(path_code(p));
    });
    std::sort(all.begin(), all.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    std::vector<std::uint64_t> missed;
    std::set_difference(all.begin(), all.end(), image.begin(), image.end(),
                        std::back_inserter(missed));
    for (std::uint64_t code : missed) {
      std::vector<Step> steps;
      for (std::size_t k = 2 * n; k-- > 0;) steps.push_back((code >> k) & 1 ? Step::Down : Step::Up);
      detail::add_failure(r, opt, "image-misses-path", format_path(DyckPath(std::move(steps))));
    }
  });
}

inline VerifyReport check_invariants(std::size_t n, const VerifyOptions& opt = {}) {
  detail::require_within_cap(n, opt);
  return detail::run_partitioned(n, "invariants", opt, [&](unsigned w, unsigned workers, VerifyReport& r) {
    std::size_t index = 0;
    for_each_021_avoiding(n, [&](const AscentSequence& s) {
      if (index++ % workers != w) return;
      ++r.sequences_checked;
      ForwardTrace trace;
      try {
        trace = forward_trace(s);
      } catch (const error& e) {
        detail::add_failure(r, opt, "forward-error", format_sequence(s), e.what());
        return;
      }
      const DyckPath* before = &trace.initial;
      for (const auto& rec : trace.records) {
        const DyckPath& after = rec.path_after;
        auto fail = [&](const char* kind) {
          detail::add_failure(r, opt, kind, format_sequence(s), detail::describe(rec));
        };
        if (after.size() != before->size() + 1) fail("size-increment");
        const bool long_last = last_ascent_length(after) >= 2;
        if ((rec.case_id == 1) != long_last) fail("long-last-ascent-only-in-case-1");
        if (rec.case_id == 4) {
          if (!rec.allowable || rec.allowable->empty()) fail("case4-empty-allowable");
          if (rec.allowable && rec.allowable->size() != rec.key_downsteps_before.size())
            fail("case4-allowable-vs-key-downsteps");
          if (!rec.j || *rec.j < 1 || (rec.allowable && *rec.j > rec.allowable->size()))
            fail("case4-j-range");
          if (is_pyramid(*before)) fail("case4-pyramid-input");
          if (long_last || is_elevated(after) || ends_with_peak_at_ground(after))
            fail("case4-result-shape");
        }
        before = &after;
      }
    });
    if (n < 2) return;
    index = 0;
    for_each_dyck_path(n, [&](const DyckPath& p) {
      if (index++ % workers != w) return;
      ++r.paths_checked;
      const bool shortest = last_ascent_length(p) == 1;
      const bool raw[4] = {
          !shortest,
          shortest && is_elevated(p),
          shortest && ends_with_peak_at_ground(p),
          shortest && !is_elevated(p) && !ends_with_peak_at_ground(p),
      };
      if (std::count(std::begin(raw), std::end(raw), true) != 1)
        detail::add_failure(r, opt, "inverse-cases-not-exclusive", format_path(p));
    });
  });
}

inline VerifyReport check_statistics(std::size_t n, const VerifyOptions& opt = {}) {
  detail::require_within_cap(n, opt);
  auto report = detail::run_partitioned(n, "statistics", opt, [&](unsigned w, unsigned workers, VerifyReport& r) {
    const auto& names = statistic_names();
    for (const auto& name : names) r.equidistribution.push_back({name, true});
    std::size_t index = 0;
    for_each_021_avoiding(n, [&](const AscentSequence& s) {
      if (index++ % workers != w) return;
      ++r.sequences_checked;
      ++r.paths_checked;
      const SequenceStats a = sequence_statistics(s);
      const PathStats b = path_statistics(forward(s));
      std::optional<std::size_t> degree;
      if (b.degree_of_elevation) degree = static_cast<std::size_t>(*b.degree_of_elevation);
      const bool ok[5] = {
          a.initial_zeros == b.first_descent_length,
          a.terminal_zeros + 1 == b.last_ascent_length,
          a.ascents == b.valleys,
          a.descents == b.duu_count,
          a.eq_run_before_last_nonzero == degree,
      };
      for (std::size_t k = 0; k < 5; ++k) {
        if (ok[k]) continue;
        r.equidistribution[k].passed = false;
        detail::add_failure(r, opt, "statistic:" + names[k], format_sequence(s));
      }
    });
  });
  return report;
}

namespace detail {

// All ascent sequences (not only 021-avoiding) of length n with entries <= max_value.
template <typename F>
void for_each_ascent_sequence(std::size_t n, std::optional<entry_t> max_value, F&& visit) {
  std::vector<std::int64_t> e{0};
  auto recurse = [&](auto& self, std::int64_t ascents) -> void {
    if (e.size() == n) {
      visit(std::as_const(e));
      return;
    }
    std::int64_t hi = ascents + 1;
    if (max_value) hi = std::min<std::int64_t>(hi, *max_value);
    for (std::int64_t v = 0; v <= hi; ++v) {
      const std::int64_t next = ascents + (e.back() < v ? 1 : 0);
      e.push_back(v);
      self(self, next);
      e.pop_back();
    }
  };
  recurse(recurse, 0);
}

}  // namespace detail

// Compares is_021_avoiding with the triple-scan oracle on every ascent
// sequence of length 1..max_len; max_value bounds the entries (none = only the
// ascent condition).
inline VerifyReport check_characterization(std::size_t max_len = 10,
                                           std::optional<entry_t> max_value = 6,
                                           const VerifyOptions& opt = {}) {
  if (max_len == 0) throw error(errc::size_zero);
  if (max_len > VerifyOptions::characterization_cap)
    throw error(errc::cap_exceeded, max_len,
                "limit is " + std::to_string(VerifyOptions::characterization_cap));
  return detail::run_partitioned(max_len, "characterization", opt,
                                 [&](unsigned w, unsigned workers, VerifyReport& r) {
    std::size_t index = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      detail::for_each_ascent_sequence(len, max_value, [&](const std::vector<std::int64_t>& raw) {
        if (index++ % workers != w) return;
        ++r.sequences_checked;
        const AscentSequence s(raw);
        const bool fast = is_021_avoiding(s);
        const bool oracle = !contains_pattern_021_bruteforce(std::span<const std::int64_t>(raw));
        if (fast != oracle)
          detail::add_failure(r, opt, "characterization-disagrees", format_sequence(s));
      });
    }
  });
}

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"counts", "roundtrip", "bijectivity",
                                                 "invariants", "statistics"};
  return names;
}

inline VerifyReport run_check(const std::string& name, std::size_t n, const VerifyOptions& opt = {}) {
  if (name == "counts") return check_counts(n, opt);
  if (name == "roundtrip") return check_roundtrip(n, opt);
  if (name == "bijectivity") return check_bijectivity(n, opt);
  if (name == "invariants") return check_invariants(n, opt);
  if (name == "statistics") return check_statistics(n, opt);
  if (name == "characterization") return check_characterization(std::min(n, VerifyOptions::characterization_cap), std::nullopt, opt);
  throw error(errc::invalid_argument, std::nullopt, "unknown check '" + name + "'");
}

}  // namespace dyckseq
