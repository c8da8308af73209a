#include <gtest/gtest.h>

#include "dyckseq/paths.hpp"
#include "oracle.hpp"

namespace dyckseq {
namespace {

DyckPath P(std::string_view s) { return parse_path(s); }

DyckPath pyramid(std::size_t n) { return P(std::string(n, 'U') + std::string(n, 'D')); }

template <typename F>
std::pair<errc, std::optional<std::size_t>> failure_of(F&& f) {
  try {
    f();
  } catch (const error& e) {
    return {e.code(), e.position()};
  }
  ADD_FAILURE() << "no error thrown";
  return {errc::internal_invariant, std::nullopt};
}

TEST(Parse, AcceptsBothAlphabets) {
  EXPECT_EQ(P("UDUUDD").size(), 3u);
  EXPECT_EQ(P("(())"), P("UUDD"));
  EXPECT_EQ(format_path_paren(P("UDUUDD")), "()(())");
}

TEST(Parse, Errors) {
  EXPECT_EQ(failure_of([] { P("UUDDDU"); }),
            std::make_pair(errc::dips_below_ground, std::optional<std::size_t>(5)));
  EXPECT_EQ(failure_of([] { P("UXD"); }).first, errc::bad_character);
  EXPECT_EQ(failure_of([] { P("UXD"); }).second, 2u);
  EXPECT_EQ(failure_of([] { P("UUD"); }).first, errc::unbalanced);
  EXPECT_EQ(failure_of([] { P(""); }).first, errc::empty_input);
}

TEST(Parse, RoundTripAllPathsUpTo8) {
  for (unsigned n = 1; n <= 8; ++n)
    for (const auto& w : oracle::all_dyck_words(n)) ASSERT_EQ(format_path(P(w)), w);
}

TEST(Heights, Vertex) {
  const auto p = P("UDUUDD");
  EXPECT_EQ(vertex_height(p, 4), 2);
  EXPECT_EQ(vertex_height(p, 0), 0);
  EXPECT_EQ(vertex_height(p, 6), 0);
  EXPECT_EQ(failure_of([&] { vertex_height(p, 7); }).first, errc::index_out_of_range);
}

TEST(Anatomy, RunsAndFactors) {
  const auto final_path = P("UDUUUDUDUUDDUDDD");
  EXPECT_EQ(valley_count(final_path), 4u);
  EXPECT_EQ(duu_count(final_path), 2u);
  EXPECT_EQ(first_descent_length(final_path), 1u);
  EXPECT_EQ(last_ascent_length(final_path), 1u);

  const auto pyr = pyramid(4);
  EXPECT_EQ(valley_count(pyr), 0u);
  EXPECT_EQ(duu_count(pyr), 0u);
  EXPECT_EQ(first_descent_length(pyr), 4u);
  EXPECT_EQ(last_ascent_length(pyr), 4u);

  EXPECT_EQ(valley_count(P("UUDUUDUDUUDDDD")), 3u);
  EXPECT_EQ(peak_positions(P("UDUUDD")), (std::vector<std::size_t>{1, 4}));
}

TEST(Anatomy, FactorCountsMatchSubstringSearch) {
  for (unsigned n = 1; n <= 8; ++n)
    for (const auto& w : oracle::all_dyck_words(n)) {
      const auto p = P(w);
      ASSERT_EQ(valley_count(p), static_cast<std::size_t>(oracle::count_factor(w, "DU")));
      ASSERT_EQ(duu_count(p), static_cast<std::size_t>(oracle::count_factor(w, "DUU")));
      // valleys split into DUU and DUD occurrences
      ASSERT_EQ(valley_count(p), duu_count(p) + oracle::count_factor(w, "DUD"));
    }
}

TEST(Elevation, Predicates) {
  EXPECT_TRUE(is_elevated(P("UUDUDD")));
  EXPECT_FALSE(is_elevated(P("UDUD")));
  EXPECT_TRUE(is_elevated(P("UUDD")));
  EXPECT_TRUE(is_pyramid(P("UUDD")));
  EXPECT_FALSE(is_pyramid(P("UUDUDD")));
}

TEST(Elevation, Degree) {
  EXPECT_EQ(degree_of_elevation(P("UUDUUDUDUDDD")), 1);
  EXPECT_EQ(degree_of_elevation(P("UDUUDD")), 0);
  EXPECT_EQ(degree_of_elevation(pyramid(5)), std::nullopt);
}

TEST(Elevation, DegreeZeroIffNotElevated) {
  for (unsigned n = 1; n <= 10; ++n)
    for_each_dyck_path(n, [](const DyckPath& p) {
      const auto d = degree_of_elevation(p);
      ASSERT_EQ(!d, is_pyramid(p));
      if (d) {
        ASSERT_EQ(*d == 0, !is_elevated(p)) << format_path(p);
      }
    });
}

TEST(Matching, Examples) {
  EXPECT_EQ(match_of_downstep(P("UDUUDD"), {6, Step::Down}), (StepRef{3, Step::Up}));
  EXPECT_EQ(match_of_downstep(P("UUDD"), {3, Step::Down}), (StepRef{2, Step::Up}));
  EXPECT_EQ(match_of_downstep(P("UDUUDUDD"), {8, Step::Down}), (StepRef{3, Step::Up}));
  EXPECT_EQ(failure_of([] { match_of_downstep(P("UD"), {1, Step::Down}); }).first, errc::wrong_kind);
  EXPECT_EQ(failure_of([] { match_of_upstep(P("UD"), {2, Step::Up}); }).first, errc::wrong_kind);
  EXPECT_EQ(failure_of([] { match_of_upstep(P("UD"), {3, Step::Up}); }).first,
            errc::index_out_of_range);
}

TEST(Matching, InvolutionNestingAndOracleUpTo8) {
  for (unsigned n = 1; n <= 8; ++n)
    for (const auto& w : oracle::all_dyck_words(n)) {
      const auto p = P(w);
      const auto partner = oracle::partners(w);
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 1; i <= w.size(); ++i) {
        if (w[i - 1] != 'D') continue;
        const StepRef up = match_of_downstep(p, {i, Step::Down});
        ASSERT_EQ(up.index, partner[i]);
        ASSERT_EQ(match_of_upstep(p, up), (StepRef{i, Step::Down}));
        pairs.emplace_back(up.index, i);
      }
      for (auto [a, b] : pairs)
        for (auto [c, d] : pairs) ASSERT_FALSE(a < c && c < b && b < d) << w;
    }
}

TEST(TerminalDescent, Examples) {
  EXPECT_EQ(terminal_descent(P("UUDUUDUDUUDDDD")), (StepRange{11, 14}));
  EXPECT_EQ(terminal_descent(P("UDUD")), (StepRange{4, 4}));
  EXPECT_EQ(terminal_descent(pyramid(3)), (StepRange{4, 6}));
}

std::vector<std::size_t> key_indices(const DyckPath& p) {
  std::vector<std::size_t> out;
  for (auto r : key_downsteps(p)) out.push_back(r.index);
  return out;
}

TEST(KeyDownsteps, Examples) {
  EXPECT_EQ(key_indices(P("UUDUUDUDUUDDDD")), (std::vector<std::size_t>{12, 13}));
  EXPECT_EQ(key_indices(P("UDUUDD")), (std::vector<std::size_t>{6}));
  EXPECT_TRUE(key_downsteps(pyramid(6)).empty());
  // The non-elevated example path of size 7: the last two downsteps.
  EXPECT_EQ(key_indices(P("UUUDDUDDUUDUUDDD")), (std::vector<std::size_t>{15, 16}));
}

TEST(KeyDownsteps, MatchesDefinitionUpTo10) {
  for (unsigned n = 1; n <= 10; ++n)
    for_each_dyck_path(n, [](const DyckPath& p) {
      const std::string w = format_path(p);
      const auto partner = oracle::partners(w);
      const StepRange td = terminal_descent(p);
      std::vector<std::size_t> expected;
      for (std::size_t d = td.first; d <= td.last; ++d) {
        const std::size_t u = partner[d];
        if (u >= 2 && u < w.size() && w.compare(u - 2, 3, "DUU") == 0) expected.push_back(d);
      }
      ASSERT_EQ(key_indices(p), expected) << w;
      for (auto k : key_downsteps(p)) ASSERT_TRUE(td.contains(k.index));
    });
}

TEST(Edits, InsertUD) {
  EXPECT_EQ(insert_ud_at_vertex(P("UDUD"), 3), P("UDUUDD"));
  EXPECT_EQ(insert_ud_at_vertex(P("UD"), 1), P("UUDD"));
  EXPECT_EQ(insert_ud_at_vertex(P("UDUUDUDD"), 7), P("UDUUDUDUDD"));
  EXPECT_EQ(failure_of([] { insert_ud_at_vertex(P("UD"), 3); }).first, errc::index_out_of_range);
}

TEST(Edits, ElevateLower) {
  EXPECT_EQ(elevate(P("UDUUDUDUDD")), P("UUDUUDUDUDDD"));
  EXPECT_EQ(lower(P("UUDUDD")), P("UDUD"));
  EXPECT_EQ(elevate(P("UD")), P("UUDD"));
  EXPECT_EQ(failure_of([] { lower(P("UDUD")); }).first, errc::not_elevated);
  EXPECT_EQ(failure_of([] { lower(P("UD")); }).first, errc::too_small);
}

TEST(Edits, ElevateLowerInverseUpTo10) {
  for (unsigned n = 1; n <= 10; ++n)
    for_each_dyck_path(n, [](const DyckPath& p) {
      ASSERT_EQ(lower(elevate(p)), p);
      if (p.size() >= 2 && is_elevated(p)) {
        ASSERT_EQ(elevate(lower(p)), p);
      }
    });
}

TEST(Edits, DeleteLastPeak) {
  EXPECT_EQ(delete_last_peak(P("UUDUUDDD")), P("UUDUDD"));
  EXPECT_EQ(delete_last_peak(P("UUDUDDUD")), P("UUDUDD"));
  EXPECT_EQ(delete_last_peak(P("UUDD")), P("UD"));
  EXPECT_EQ(failure_of([] { delete_last_peak(P("UD")); }).first, errc::too_small);
}

TEST(Edits, TransferUpsteps) {
  // Insertion at the final forward step of the worked example, then a
  // one-upstep transfer into the ascent of step 4.
  const auto inserted = P("UUDUUDUDUUDDUDDD");
  EXPECT_EQ(transfer_upsteps_from_front(inserted, 1, {4, Step::Up}), P("UDUUUDUDUUDDUDDD"));
  EXPECT_EQ(transfer_upsteps_from_front(inserted, 0, {4, Step::Up}), inserted);
  // The inverse direction from the peak-deleted path of the inverse example.
  const auto shrunk = P("UDUUDUUUDDDD");
  EXPECT_EQ(transfer_upsteps_to_front(shrunk, 1, {7, Step::Up}), P("UUDUUDUUDDDD"));
  EXPECT_EQ(transfer_upsteps_to_front(shrunk, 0, {7, Step::Up}), shrunk);

  EXPECT_EQ(failure_of([] { transfer_upsteps_from_front(P("UDUUDD"), 2, {3, Step::Up}); }).first,
            errc::not_enough_upsteps);
  EXPECT_EQ(failure_of([] { transfer_upsteps_to_front(P("UDUUDD"), 2, {4, Step::Up}); }).first,
            errc::not_enough_upsteps);
  // Moving the only leading upstep in front of the last ascent dips the path.
  EXPECT_EQ(failure_of([] { transfer_upsteps_from_front(P("UUDDUD"), 2, {5, Step::Up}); }).first,
            errc::result_invalid);
}

TEST(Edits, TransfersAreMutuallyInverse) {
  for (unsigned n = 2; n <= 8; ++n)
    for_each_dyck_path(n, [](const DyckPath& p) {
      const auto s = p.steps();
      std::size_t lead = 0;
      while (s[lead] == Step::Up) ++lead;
      for (std::size_t t = 2; t <= p.length(); ++t) {
        if (s[t - 1] != Step::Up || s[t - 2] != Step::Down) continue;
        for (std::size_t k = 0; k <= lead; ++k) {
          DyckPath moved = p;
          try {
            moved = transfer_upsteps_from_front(p, k, {t, Step::Up});
          } catch (const error& e) {
            ASSERT_EQ(e.code(), errc::result_invalid);
            continue;
          }
          ASSERT_EQ(transfer_upsteps_to_front(moved, k, {t, Step::Up}), p);
        }
      }
    });
}

TEST(Enumerate, SmallAndBruteForce) {
  EXPECT_EQ(enumerate_dyck_paths(2), (std::vector<DyckPath>{P("UUDD"), P("UDUD")}));
  for (unsigned n = 1; n <= 9; ++n) {
    std::vector<std::string> got;
    for (const auto& p : enumerate_dyck_paths(n)) got.push_back(format_path(p));
    ASSERT_EQ(got, oracle::all_dyck_words(n)) << "n=" << n;
  }
  EXPECT_EQ(enumerate_dyck_paths(10).size(), 16796u);
  EXPECT_EQ(failure_of([] { enumerate_dyck_paths(0); }).first, errc::size_zero);
}

TEST(Enumerate, CatalanCountsUpTo12) {
  for (unsigned n = 1; n <= 12; ++n) {
    std::size_t count = 0;
    for_each_dyck_path(n, [&](const DyckPath&) { ++count; });
    ASSERT_EQ(count, oracle::catalan_closed_form(n));
  }
}

TEST(Statistics, Examples) {
  EXPECT_EQ(path_statistics(P("UDUUUDUDUUDDUDDD")), (PathStats{1, 1, 4, 2, 0}));
  EXPECT_EQ(path_statistics(pyramid(4)), (PathStats{4, 4, 0, 0, std::nullopt}));
  EXPECT_EQ(path_statistics(P("UUDUUDUDUUDDDD")), (PathStats{1, 2, 3, 2, 1}));
}

TEST(Render, Grid) {
  EXPECT_EQ(render_ascii(P("UD")), "/\\\n");
  EXPECT_EQ(render_ascii(P("UUDD")), " /\\\n/  \\\n");
  EXPECT_EQ(render_ascii(P("UDUUDD")), "   /\\\n/\\/  \\\n");
}

TEST(Code, OrdersLikeSteps) {
  const auto paths = enumerate_dyck_paths(6);
  for (std::size_t i = 1; i < paths.size(); ++i)
    ASSERT_LT(path_code(paths[i - 1]), path_code(paths[i]));
}

}  // namespace
}  // namespace dyckseq
