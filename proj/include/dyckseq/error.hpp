#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dyckseq {

namespace detail {
// Selects constructors that skip validation; callers guarantee the invariant.
struct unchecked_t {};
inline constexpr unchecked_t unchecked{};
}  // namespace detail

enum class errc {
  empty_input,
  first_entry_nonzero,
  negative_entry,
  ascent_bound_violated,
  bad_character,
  unbalanced,
  dips_below_ground,
  index_out_of_range,
  wrong_kind,
  not_elevated,
  too_small,
  not_enough_upsteps,
  result_invalid,
  entry_not_allowed,
  not_021_avoiding,
  size_zero,
  cap_exceeded,
  invalid_argument,
  internal_invariant,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::empty_input: return "empty input";
    case errc::first_entry_nonzero: return "first entry nonzero";
    case errc::negative_entry: return "negative entry";
    case errc::ascent_bound_violated: return "ascent bound violated";
    case errc::bad_character: return "bad character";
    case errc::unbalanced: return "unbalanced";
    case errc::dips_below_ground: return "dips below ground";
    case errc::index_out_of_range: return "index out of range";
    case errc::wrong_kind: return "wrong step kind";
    case errc::not_elevated: return "not elevated";
    case errc::too_small: return "too small";
    case errc::not_enough_upsteps: return "not enough upsteps";
    case errc::result_invalid: return "result invalid";
    case errc::entry_not_allowed: return "entry not allowed";
    case errc::not_021_avoiding: return "not 021-avoiding";
    case errc::size_zero: return "size zero";
    case errc::cap_exceeded: return "cap exceeded";
    case errc::invalid_argument: return "invalid argument";
    case errc::internal_invariant: return "internal invariant violated";
  }
  return "unknown error";
}

// Every failure in the library is reported through this type. Positions are
// 1-based, matching the u_1..u_n and step 1..2n numbering used in reports.
class error : public std::runtime_error {
 public:
  error(errc code, std::optional<std::size_t> position = std::nullopt,
        const std::string& detail = {})
      : std::runtime_error(format(code, position, detail)),
        code_(code),
        position_(position) {}

  errc code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

  // Errors that indicate a defect in the library rather than bad input.
  bool is_internal() const noexcept {
    return code_ == errc::internal_invariant || code_ == errc::result_invalid;
  }

 private:
  static std::string format(errc code, std::optional<std::size_t> position,
                            const std::string& detail) {
    std::string msg(to_string(code));
    if (position) msg += " at position " + std::to_string(*position);
    if (!detail.empty()) msg += ": " + detail;
    return msg;
  }

  errc code_;
  std::optional<std::size_t> position_;
};

}  // namespace dyckseq
