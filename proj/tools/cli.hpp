#pragma once

#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dyckseq/dyckseq.hpp"
#include "dyckseq/serialize.hpp"

namespace dyckseq::cli {

enum exit_code : int { ok = 0, user_error = 1, internal_error = 2 };

namespace detail {

inline std::string read_operand(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline AscentSequence read_sequence(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw error(errc::invalid_argument, std::nullopt, "malformed JSON");
    return sequence_from_json(j);
  }
  return parse_sequence(text);
}

inline std::string path_in_format(const DyckPath& p, const std::string& format) {
  return format == "paren" ? format_path_paren(p) : format_path(p);
}

inline std::string seq_stats_cells(const SequenceStats& s) {
  std::string out;
  for (const char* sep = ""; const auto& line : std::vector<std::string>{
           std::to_string(s.initial_zeros), std::to_string(s.terminal_zeros),
           std::to_string(s.ascents), std::to_string(s.descents),
           s.eq_run_before_last_nonzero ? std::to_string(*s.eq_run_before_last_nonzero) : "-"}) {
    out += sep + line;
    sep = "\t";
  }
  return out;
}

inline std::string path_stats_cells(const PathStats& p) {
  std::string out;
  for (const char* sep = ""; const auto& line : std::vector<std::string>{
           std::to_string(p.first_descent_length), std::to_string(p.last_ascent_length - 1),
           std::to_string(p.valleys), std::to_string(p.duu_count),
           p.degree_of_elevation ? std::to_string(*p.degree_of_elevation) : "-"}) {
    out += sep + line;
    sep = "\t";
  }
  return out;
}

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace detail

// Runs one invocation. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Bijection between 021-avoiding ascent sequences and Dyck paths", "dyckseq"};
  app.require_subcommand(1, 1);

  std::string operand;
  bool trace = false;
  std::string format = "ud";

  auto* map = app.add_subcommand("map", "Map an ascent sequence to its Dyck path");
  map->add_option("sequence", operand, "e.g. 0,1,0,1,2,2,0,3 or 01012203 or [0,1], '-' for stdin")
      ->required();
  map->add_flag("--trace", trace, "Print every intermediate path and case record");
  map->add_option("--format", format, "Output format")->check(CLI::IsMember({"ud", "paren", "json"}));

  std::string unmap_format = "text";
  auto* unmap = app.add_subcommand("unmap", "Map a Dyck path back to its ascent sequence");
  unmap->add_option("path", operand, "U/D or parenthesis string, '-' for stdin")->required();
  unmap->add_flag("--trace", trace, "Print every inverse step");
  unmap->add_option("--format", unmap_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::size_t n = 0;
  std::string side = "seq";
  bool with_stats = false;
  std::string enum_format = "text";
  auto* enumerate = app.add_subcommand("enumerate", "Stream every object of size n");
  enumerate->add_option("n", n, "Size")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--side", side, "seq, path or pairs")->check(CLI::IsMember({"seq", "path", "pairs"}));
  enumerate->add_flag("--stats", with_stats, "Append the five statistics to each line");
  enumerate->add_option("--format", enum_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string stats_seq, stats_path, stats_format = "text";
  auto* stats = app.add_subcommand("stats", "Print the five statistics of a sequence or path");
  auto* seq_opt = stats->add_option("--seq", stats_seq, "Ascent sequence ('-' for stdin)");
  auto* path_opt = stats->add_option("--path", stats_path, "Dyck path ('-' for stdin)");
  seq_opt->excludes(path_opt);
  stats->add_option("--format", stats_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string checks_arg;
  bool extended = false, upto = false;
  unsigned jobs = 1;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "Exhaustively verify the bijection at size n");
  verify->add_option("n", n, "Size")->required()->check(CLI::PositiveNumber);
  verify->add_option("--checks", checks_arg,
                     "Comma-separated subset of counts,roundtrip,bijectivity,invariants,"
                     "statistics,characterization");
  verify->add_flag("--extended", extended, "Raise the size cap from 12 to 14");
  verify->add_flag("--upto", upto, "Run every size from 1 to n");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  verify->add_option("--format", verify_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* render = app.add_subcommand("render", "Draw a Dyck path as ASCII art");
  render->add_option("path", operand, "U/D or parenthesis string, '-' for stdin")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : user_error;
  }

  try {
    if (map->parsed()) {
      const AscentSequence seq = detail::read_sequence(detail::read_operand(operand, in));
      if (format == "json") {
        json j;
        if (trace) {
          const ForwardTrace t = forward_trace(seq);
          j = pair_json(seq, t.result());
          j["trace"] = to_json(t);
        } else {
          j = pair_json(seq, forward(seq));
        }
        out << j.dump() << '\n';
      } else if (trace) {
        const ForwardTrace t = forward_trace(seq);
        std::string text = format_forward_trace(t);
        if (format == "paren") {
          text.resize(text.rfind('\n', text.size() - 2) + 1);
          text += format_path_paren(t.result()) + "\n";
        }
        out << text;
      } else {
        out << detail::path_in_format(forward(seq), format) << '\n';
      }
    } else if (unmap->parsed()) {
      const DyckPath p = parse_path(detail::read_operand(operand, in));
      const InverseTrace t = inverse_trace(p);
      if (unmap_format == "json") {
        json j = pair_json(t.result, p);
        if (trace) j["trace"] = to_json(t);
        out << j.dump() << '\n';
      } else if (trace) {
        out << format_inverse_trace(t);
      } else {
        out << format_sequence(t.result) << '\n';
      }
    } else if (enumerate->parsed()) {
      auto emit_seq = [&](const AscentSequence& s) {
        if (enum_format == "json") {
          json j = side == "pairs" ? pair_json(s, forward(s)) : to_json(s);
          out << j.dump() << '\n';
          return;
        }
        out << format_sequence(s);
        if (side == "pairs") out << '\t' << format_path(forward(s));
        if (with_stats) {
          out << '\t' << detail::seq_stats_cells(sequence_statistics(s));
          if (side == "pairs") out << '\t' << detail::path_stats_cells(path_statistics(forward(s)));
        }
        out << '\n';
      };
      if (side == "path") {
        for_each_dyck_path(n, [&](const DyckPath& p) {
          if (enum_format == "json") {
            out << json(format_path(p)).dump() << '\n';
            return;
          }
          out << format_path(p);
          if (with_stats) out << '\t' << detail::path_stats_cells(path_statistics(p));
          out << '\n';
        });
      } else {
        for_each_021_avoiding(n, emit_seq);
      }
    } else if (stats->parsed()) {
      if (seq_opt->count() == 0 && path_opt->count() == 0) {
        err << "stats: one of --seq or --path is required\n";
        return user_error;
      }
      if (seq_opt->count()) {
        const AscentSequence s = detail::read_sequence(detail::read_operand(stats_seq, in));
        dyckseq::detail::require_021_avoiding(s);
        const SequenceStats st = sequence_statistics(s);
        if (stats_format == "json") {
          out << json{{"initial_zeros", st.initial_zeros},
                      {"terminal_zeros", st.terminal_zeros},
                      {"ascents", st.ascents},
                      {"descents", st.descents},
                      {"eq_run_before_last_nonzero", st.eq_run_before_last_nonzero
                                                         ? json(*st.eq_run_before_last_nonzero)
                                                         : json(nullptr)}}
                     .dump()
              << '\n';
        } else {
          out << format_stats(st);
        }
      } else {
        const DyckPath p = parse_path(detail::read_operand(stats_path, in));
        const PathStats st = path_statistics(p);
        if (stats_format == "json") {
          out << json{{"first_descent_length", st.first_descent_length},
                      {"last_ascent_length", st.last_ascent_length},
                      {"valleys", st.valleys},
                      {"duu_count", st.duu_count},
                      {"degree_of_elevation",
                       st.degree_of_elevation ? json(*st.degree_of_elevation) : json(nullptr)}}
                     .dump()
              << '\n';
        } else {
          out << format_stats(st);
        }
      }
    } else if (verify->parsed()) {
      VerifyOptions opt;
      opt.cap = extended ? VerifyOptions::extended_cap : VerifyOptions::default_cap;
      opt.jobs = jobs;
      std::vector<std::string> checks =
          checks_arg.empty() ? check_names() : detail::split_commas(checks_arg);
      bool all_passed = true;
      json reports = json::array();
      for (std::size_t size = upto ? 1 : n; size <= n; ++size) {
        VerifyReport total;
        std::size_t seqs = 0, paths = 0;
        for (const auto& c : checks) {
          VerifyReport r = run_check(c, size, opt);
          total.merge(r);
          // Objects per side is the family size, not a sum over checks.
          seqs = std::max(seqs, r.sequences_checked);
          paths = std::max(paths, r.paths_checked);
        }
        total.sequences_checked = seqs;
        total.paths_checked = paths;
        total.n = size;
        all_passed = all_passed && total.passed();
        if (verify_format == "json")
          reports.push_back(to_json(total));
        else
          out << format_report(total);
      }
      if (verify_format == "json") out << (upto ? reports : reports[0]).dump() << '\n';
      out << std::flush;
      if (!all_passed) {
        err << "verify: failures found\n";
        return internal_error;
      }
      if (verify_format == "text") out << "PASS\n";
    } else if (render->parsed()) {
      out << render_ascii(parse_path(detail::read_operand(operand, in)));
    }
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_internal() ? internal_error : user_error;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return user_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return internal_error;
  }
  return ok;
}

}  // namespace dyckseq::cli
