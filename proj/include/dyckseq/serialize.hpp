#pragma once

#include <nlohmann/json.hpp>

#include "bijection.hpp"
#include "paths.hpp"
#include "sequences.hpp"
#include "verify.hpp"

namespace dyckseq {

using json = nlohmann::json;

inline json to_json(const AscentSequence& s) {
  return json(std::vector<entry_t>(s.entries().begin(), s.entries().end()));
}

inline AscentSequence sequence_from_json(const json& j) {
  if (!j.is_array()) throw error(errc::invalid_argument, std::nullopt, "expected a JSON array");
  std::vector<std::int64_t> raw;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw error(errc::bad_character, i + 1, "expected an integer");
    raw.push_back(j[i].get<std::int64_t>());
  }
  return AscentSequence(std::span<const std::int64_t>(raw));
}

inline json pair_json(const AscentSequence& s, const DyckPath& p) {
  return {{"sequence", to_json(s)}, {"path", format_path(p)}};
}

inline json to_json(const ForwardStepRecord& r) {
  json refs = json::array();
  for (const auto& k : r.key_downsteps_before) refs.push_back(k.index);
  return {
      {"position", r.position},
      {"entry", r.entry},
      {"case", r.case_id},
      {"A", r.allowable ? json(r.allowable->values) : json(nullptr)},
      {"j", r.j ? json(*r.j) : json(nullptr)},
      {"e", r.e ? json(*r.e) : json(nullptr)},
      {"key_downsteps", refs},
      {"path", format_path(r.path_after)},
  };
}

inline json to_json(const ForwardTrace& t) {
  json records = json::array();
  for (const auto& r : t.records) records.push_back(to_json(r));
  return records;
}

inline json to_json(const InverseStepRecord& r) {
  return {
      {"size", r.size},
      {"case", r.case_id},
      {"entry", std::holds_alternative<RepeatPrevious>(r.emitted)
                    ? json("repeat_previous")
                    : json(std::get<entry_t>(r.emitted))},
      {"marked_step", r.marked_step ? json(r.marked_step->index) : json(nullptr)},
      {"rank_right_to_left", r.rank_right_to_left ? json(*r.rank_right_to_left) : json(nullptr)},
      {"path", format_path(r.path_after)},
  };
}

inline json to_json(const InverseTrace& t) {
  json records = json::array();
  for (const auto& r : t.records) records.push_back(to_json(r));
  return records;
}

inline json to_json(const VerifyReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"kind", f.kind}, {"witness", f.witness}, {"detail", f.detail}});
  json equi = json::object();
  for (const auto& s : r.equidistribution) equi[s.name] = s.passed;
  return {
      {"n", r.n},
      {"checks", r.checks},
      {"sequences_checked", r.sequences_checked},
      {"paths_checked", r.paths_checked},
      {"failures", failures},
      {"equidistribution", equi},
      {"elapsed_seconds", r.elapsed.count()},
      {"passed", r.passed()},
  };
}

}  // namespace dyckseq
