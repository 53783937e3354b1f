#include "awgclos/awg.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace awgclos;

TEST(AwgRoute, ThreeByFourCases) {
  const AwgSpec awg(3, 4);
  EXPECT_EQ(awg.lambda_count(), 4);
  EXPECT_EQ(awg_route(awg, 0, 2), 2);
  EXPECT_EQ(awg_route(awg, 0, 0), 0);
  EXPECT_EQ(awg_route(AwgSpec(2, 2), 1, 0), 1);
}

TEST(AwgRoute, RangeChecks) {
  const AwgSpec awg(3, 4);
  EXPECT_THROW(awg_route(awg, 3, 0), Error);
  EXPECT_THROW(awg_route(awg, 0, 4), Error);
  EXPECT_THROW(AwgSpec(0, 1), Error);
}

// Every wavelength entering input j leaves at some output k with
// [j + k] = i, and the forward and inverse maps agree.
TEST(AwgRoute, ExhaustiveDuality) {
  for (int r = 1; r <= 6; ++r) {
    for (int m = 1; m <= 6; ++m) {
      const AwgSpec awg(r, m);
      const int L = std::max(r, m);
      for (int j = 0; j < r; ++j) {
        for (int k = 0; k < m; ++k) {
          const int i = (j + k) % L;
          EXPECT_EQ(awg_wavelength(awg, j, k), i);
          EXPECT_EQ(awg_route(awg, j, i), k);
        }
      }
    }
  }
}

TEST(WavelengthSets, InputSets) {
  const AwgSpec awg(3, 4);
  EXPECT_EQ(input_wavelength_set(awg, 0).members(),
            (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(input_wavelength_set(AwgSpec(1, 1), 0).members(),
            (std::vector<int>{0}));
  std::set<int> all;
  for (int a = 0; a < 3; ++a) {
    const auto set = input_wavelength_set(awg, a);
    all.insert(set.members().begin(), set.members().end());
  }
  EXPECT_EQ(all, (std::set<int>{0, 1, 2, 3}));
  EXPECT_THROW(input_wavelength_set(awg, 3), Error);
}

TEST(WavelengthSets, OutputSets) {
  EXPECT_EQ(output_wavelength_set(AwgSpec(3, 4), 2).members(),
            (std::vector<int>{2, 3, 0}));
  EXPECT_EQ(output_wavelength_set(AwgSpec(4, 4), 1).members(),
            (std::vector<int>{1, 2, 3, 0}));
  EXPECT_THROW(output_wavelength_set(AwgSpec(3, 4), 4), Error);
}

// Port sets read off the table column by column.
TEST(WavelengthSets, AgreeWithTable) {
  for (int r = 1; r <= 5; ++r) {
    for (int m = 1; m <= 5; ++m) {
      const AwgSpec awg(r, m);
      const auto t = routing_table(awg);
      for (int k = 0; k < m; ++k) {
        std::vector<int> col;
        for (int j = 0; j < r; ++j)
          col.push_back(t.at(j, k));
        EXPECT_EQ(col, output_wavelength_set(awg, k).members());
      }
      for (int j = 0; j < r; ++j) {
        std::vector<int> row;
        for (int k = 0; k < m; ++k)
          row.push_back(t.at(j, k));
        EXPECT_EQ(row, input_wavelength_set(awg, j).members());
      }
    }
  }
}

TEST(RoutingTable, ThreeByFour) {
  const auto t = routing_table(AwgSpec(3, 4));
  const int expect[3][4] = {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}};
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 4; ++k)
      EXPECT_EQ(t.at(j, k), expect[j][k]);
  EXPECT_TRUE(t.rows_and_columns_distinct());
  EXPECT_FALSE(t.is_latin_square());
}

TEST(RoutingTable, SquareIsLatin) {
  for (int n = 1; n <= 8; ++n)
    EXPECT_TRUE(routing_table(AwgSpec(n, n)).is_latin_square()) << n;
}

TEST(RoutingTable, CorruptedTableDetected) {
  auto t = routing_table(AwgSpec(4, 4));
  t.at(1, 1) = t.at(1, 2);
  EXPECT_FALSE(t.rows_and_columns_distinct());
  EXPECT_FALSE(t.is_latin_square());
}

TEST(RoutingTable, Format) {
  const auto text = format_routing_table(routing_table(AwgSpec(3, 4)));
  EXPECT_NE(text.find("in\\out"), std::string::npos);
  EXPECT_NE(text.find("L3"), std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
}

TEST(Decompose, NineByThree) {
  const auto dec = decompose(AwgSpec(9, 3), 3);
  EXPECT_EQ(dec.module_count, 3);
  EXPECT_EQ(dec.module_size, 3);
  EXPECT_EQ(dec.direction, DecompositionSide::Input);
  std::set<int> seen;
  for (int A = 0; A < 3; ++A) {
    EXPECT_EQ(dec.per_module_sets[static_cast<std::size_t>(A)].members(),
              (std::vector<int>{3 * A, 3 * A + 1, 3 * A + 2}));
    for (int w : dec.per_module_sets[static_cast<std::size_t>(A)].members())
      EXPECT_TRUE(seen.insert(w).second);
  }
  EXPECT_EQ(seen.size(), 9u);
}

TEST(Decompose, OutputSide) {
  const auto dec = decompose(AwgSpec(2, 8), 2);
  EXPECT_EQ(dec.direction, DecompositionSide::Output);
  EXPECT_EQ(dec.module_count, 4);
  EXPECT_EQ(dec.depth, 4);
}

TEST(Decompose, RejectsNonPowers) {
  EXPECT_THROW(decompose(AwgSpec(6, 4), 4), Error);
  EXPECT_THROW(decompose(AwgSpec(6, 3), 2), Error);
  EXPECT_THROW(decompose(AwgSpec(4, 1), 1), Error);
}

TEST(DecomposedRoute, Example) {
  const auto dec = decompose(AwgSpec(9, 3), 3);
  const auto p = decomposed_route(dec, 7, 2);
  EXPECT_EQ(p.module, 2);
  EXPECT_EQ(p.local, 1);
  EXPECT_EQ(p.wavelength, 6);
  EXPECT_THROW(decomposed_route(dec, 9, 0), Error);
  EXPECT_THROW(decomposed_route(dec, 0, 3), Error);
}

TEST(DecomposedRoute, WavelengthInOwnModuleSet) {
  for (int n = 2; n <= 4; ++n) {
    for (int d = 2; d <= 4; ++d) {
      const auto dec = decompose(AwgSpec(ipow(n, d - 1), n), n);
      for (int alpha = 0; alpha < dec.global_ports(); ++alpha) {
        for (int g = 0; g < n; ++g) {
          const auto p = decomposed_route(dec, alpha, g);
          EXPECT_EQ(p.wavelength, (alpha / n) * n + (alpha % n + g) % n);
          EXPECT_TRUE(dec.per_module_sets[static_cast<std::size_t>(alpha / n)]
                          .contains(p.wavelength));
        }
      }
    }
  }
}

TEST(DecomposedPaths, PassesExhaustively) {
  for (int n = 1; n <= 4; ++n) {
    for (int d = 2; d <= 4; ++d) {
      if (n == 1 && d > 2)
        continue;
      const auto dec = decompose(AwgSpec(ipow(n, d - 1), n), n);
      const auto rep = verify_lemma1(dec);
      EXPECT_TRUE(rep.pass) << n << "," << d << ": " << rep.message;
      EXPECT_EQ(rep.paths_checked,
                static_cast<std::size_t>(dec.global_ports() * n));
    }
  }
}

TEST(DecomposedPaths, CorruptedDecompositionCaught) {
  auto dec = decompose(AwgSpec(4, 2), 2);
  // Module 1 reuses module 0's wavelengths: ports 0 and 2 collide at a Mux.
  dec.per_module_sets[1] = dec.per_module_sets[0];
  const auto rep = verify_lemma1(dec);
  EXPECT_FALSE(rep.pass);
  EXPECT_EQ(rep.failure, Lemma1Report::Failure::SharedOutputWavelength);
  ASSERT_TRUE(rep.counterexample);
  EXPECT_EQ(rep.counterexample->first, std::make_pair(0, 0));
  EXPECT_EQ(rep.counterexample->second, std::make_pair(2, 0));
}
