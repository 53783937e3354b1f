#include "awgclos/rwa.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace awgclos;

namespace {

struct ExampleRow {
  int alpha, gamma, beta, x, y;
};

// Twelve-call S_A(4,3,4) reference example, indexed by call.
const ExampleRow kExample[12] = {
    {0, 0, 0, 0, 0}, {0, 1, 1, 1, 2}, {0, 2, 1, 2, 2}, {0, 3, 0, 3, 1},
    {1, 0, 1, 1, 1}, {1, 1, 0, 2, 1}, {1, 2, 0, 3, 0}, {1, 3, 1, 0, 3},
    {2, 0, 2, 2, 2}, {2, 1, 2, 3, 3}, {2, 2, 2, 0, 3}, {2, 3, 2, 1, 0},
};

CallSet example_calls() {
  CallSet calls;
  int next[3] = {0, 0, 0};
  for (int k = 0; k < 12; ++k)
    calls.push_back(
        {k / 4, k % 4, kExample[k].beta, next[kExample[k].beta]++});
  return calls;
}

std::vector<int> example_gammas() {
  std::vector<int> g;
  for (const auto &row : kExample)
    g.push_back(row.gamma);
  return g;
}

// Stand-alone S_A checker: distinct central module per module endpoint and
// wavelengths from the cyclic rule.
bool sa_oracle(const NetworkSpec &spec, const RouteAssignment &a) {
  std::set<std::pair<int, int>> in_used, out_used;
  const int L = std::max(spec.r, spec.m);
  for (const auto &rt : a.routes) {
    const int g = rt.gammas.at(0);
    if (g < 0 || g >= spec.m)
      return false;
    if (!in_used.insert({rt.call.alpha, g}).second ||
        !out_used.insert({rt.call.beta, g}).second)
      return false;
    if (rt.conversions.at(0) != (rt.call.alpha + g) % L ||
        rt.conversions.at(1) != (rt.call.beta + g) % L)
      return false;
  }
  return true;
}

} // namespace

TEST(ConflictGraph, Example12) {
  const auto g = build_conflict_graph(NetworkSpec::sa(4, 3, 4), example_calls());
  EXPECT_EQ(g.left_count + g.right_count, 6);
  EXPECT_EQ(g.edges.size(), 12u);
  EXPECT_EQ(g.max_degree, 4);
  std::map<int, int> dl, dr;
  for (auto [u, v] : g.edges) {
    ++dl[u];
    ++dr[v];
  }
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(dl[i], 4);
    EXPECT_EQ(dr[i], 4);
  }
}

TEST(ConflictGraph, RejectsInvalidCalls) {
  const CallSet dup = {{0, 0, 0, 0}, {0, 0, 1, 0}};
  EXPECT_THROW(build_conflict_graph(NetworkSpec::sa(2, 2, 2), dup), Error);
}

TEST(EdgeColor, Example12ColoringMatchesReference) {
  const auto g = build_conflict_graph(NetworkSpec::sa(4, 3, 4), example_calls());
  const auto c = edge_color(g, 4);
  EXPECT_TRUE(c.proper(g));
  EXPECT_EQ(c.color_of, example_gammas());
  EXPECT_EQ(c.colors_used(), 4);
}

TEST(EdgeColor, TooFewColors) {
  const auto g = build_conflict_graph(NetworkSpec::sa(4, 3, 4), example_calls());
  try {
    edge_color(g, 3);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::Infeasible);
  }
}

// Regular multigraphs use exactly max-degree colors.
TEST(EdgeColor, RegularGraphsUseDeltaColors) {
  for (int n = 1; n <= 6; ++n) {
    for (int r = 1; r <= 6; ++r) {
      const auto spec = NetworkSpec::sa(n, r, n);
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = build_conflict_graph(spec, random_permutation(spec, seed));
        const auto c = edge_color(g, n);
        ASSERT_TRUE(c.proper(g));
        EXPECT_EQ(c.colors_used(), g.max_degree);
      }
    }
  }
}

TEST(EdgeColoring, InsertRemoveKeepsProper) {
  EdgeColoring ec(3, 3, 2);
  const auto a = ec.insert(0, 0);
  EXPECT_EQ(a.color, 0);
  EXPECT_TRUE(a.recolored.empty());
  ec.insert(1, 1);
  ec.insert(0, 1);
  EXPECT_TRUE(ec.proper());
  EXPECT_EQ(ec.degree_left(0), 2);
  EXPECT_THROW(ec.insert(0, 2), Error);
  ec.remove(a.edge);
  EXPECT_EQ(ec.degree_left(0), 1);
  EXPECT_THROW(ec.remove(a.edge), Error);
  ec.insert(0, 2);
  EXPECT_TRUE(ec.proper());
}

TEST(ExpandSA, Example12ConsistentRows) {
  const auto spec = NetworkSpec::sa(4, 3, 4);
  const auto calls = example_calls();
  for (int k : {0, 1, 4, 5, 8, 9}) {
    const auto r = expand_route_sa(spec, calls[static_cast<std::size_t>(k)],
                                   kExample[k].gamma);
    EXPECT_EQ(r.x, kExample[k].x) << "C" << k;
    EXPECT_EQ(r.y, kExample[k].y) << "C" << k;
  }
}

// The remaining rows agree on x and disagree on y with the cyclic rule.
TEST(ExpandSA, Example12InconsistentRowsDisagreeOnY) {
  const auto spec = NetworkSpec::sa(4, 3, 4);
  const auto calls = example_calls();
  for (int k : {2, 3, 6, 7, 10, 11}) {
    const auto r = expand_route_sa(spec, calls[static_cast<std::size_t>(k)],
                                   kExample[k].gamma);
    EXPECT_EQ(r.x, kExample[k].x) << "C" << k;
    EXPECT_EQ(r.y, (kExample[k].beta + kExample[k].gamma) % 4);
    EXPECT_NE(r.y, kExample[k].y) << "C" << k;
  }
}

TEST(ExpandSA, RangeChecks) {
  const auto spec = NetworkSpec::sa(4, 3, 4);
  EXPECT_THROW(expand_route_sa(spec, {0, 0, 0, 0}, 4), Error);
  EXPECT_THROW(expand_route_sa(spec, {3, 0, 0, 0}, 0), Error);
}

TEST(RouteCalls, Example12WithReferenceGammasVerifies) {
  const auto t = build_sa(4, 3, 4);
  const auto calls = example_calls();
  const auto a = route_calls(t, calls, example_gammas());
  EXPECT_TRUE(sa_oracle(t.spec(), a));
  const auto rep = verify_contention_free(t, a);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.calls_checked, 12u);
  for (std::size_t i = 0; i < calls.size(); ++i)
    EXPECT_EQ(a.routes[i].conversions[0], kExample[i].x);
}

TEST(ExpandSB, GoldenSubCall) {
  const auto spec = NetworkSpec::sb(2, 4);
  ASSERT_EQ(spec.r, 8);
  const auto s = expand_route_sb(spec, {3, 1, 5, 0}, 1);
  EXPECT_EQ(s.in_module, 1);
  EXPECT_EQ(s.in_wavelength, 2);
  EXPECT_EQ(s.out_module, 2);
  EXPECT_EQ(s.out_wavelength, 4);
  EXPECT_EQ(s.cell, "g1");
}

// x = A n + x' and y = B n + y' for every call and central module.
TEST(ExpandSB, OffsetComposition) {
  for (int n = 2; n <= 3; ++n) {
    for (int d = 2; d <= 4; ++d) {
      const auto spec = NetworkSpec::sb(n, d);
      for (int a = 0; a < spec.r; ++a) {
        for (int b = 0; b < spec.r; ++b) {
          for (int g = 0; g < n; ++g) {
            const Call c{a, 0, b, 0};
            const auto sb = expand_route_sb(spec, c, g);
            const auto sc = expand_route_sc(n, c, g);
            EXPECT_EQ(sb.in_module, sc.in_module);
            EXPECT_EQ(sb.in_wavelength, sc.in_module * n + sc.in_wavelength);
            EXPECT_EQ(sb.out_wavelength, sc.out_module * n + sc.out_wavelength);
          }
        }
      }
    }
  }
}

TEST(RouteCalls, SBVerifies) {
  for (int n = 2; n <= 3; ++n) {
    for (int d = 2; d <= 3; ++d) {
      const auto t = build_sb(n, d);
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto a = route_calls(t, random_permutation(t.spec(), seed));
        EXPECT_TRUE(verify_contention_free(t, a).ok);
      }
    }
  }
}

TEST(Recursive, SingleCallB22) {
  const auto t = build_recursive(2, 2);
  const CallSet calls = {{0, 0, 0, 0}};
  const auto a = expand_route_recursive(t, calls);
  ASSERT_EQ(a.routes.size(), 1u);
  EXPECT_EQ(a.routes[0].gammas, (std::vector<int>{0}));
  for (const auto &h : a.routes[0].hops)
    EXPECT_EQ(h.wavelength, 0);
  EXPECT_TRUE(verify_contention_free(t, a).ok);
}

TEST(Recursive, IdentityB24FullyActive) {
  const auto t = build_recursive(2, 4);
  const auto a = expand_route_recursive(t, full_load_identity(t.spec()));
  EXPECT_TRUE(verify_contention_free(t, a).ok);
  const auto u = utilization(t, a);
  EXPECT_EQ(u.active_twcs, u.total_twcs);
  EXPECT_DOUBLE_EQ(u.twc, 1.0);
  EXPECT_DOUBLE_EQ(u.awg_channel, 1.0);
  for (const auto &rt : a.routes) {
    EXPECT_EQ(rt.gammas.size(), 3u);
    EXPECT_EQ(rt.conversions.size(), 7u);
  }
}

TEST(Recursive, RandomB23) {
  const auto t = build_recursive(2, 3);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = route_calls(t, random_permutation(t.spec(), seed));
    EXPECT_TRUE(verify_contention_free(t, a).ok) << seed;
  }
}

// Per cell: at most one sub-call per original input module, distinct
// wavelengths per cell input module, and a valid call set.
TEST(Recursive, CellLoadInvariant) {
  for (auto [n, d] : {std::pair{2, 4}, {3, 3}, {2, 3}}) {
    const auto t = build_recursive(n, d);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto a = route_calls(t, random_permutation(t.spec(), seed));
      std::map<std::string, std::vector<std::pair<const SubCall *, int>>> cells;
      for (const auto &rt : a.routes)
        for (const auto &s : rt.subcalls)
          cells[s.cell].push_back({&s, rt.call.alpha});
      for (const auto &[cell, subs] : cells) {
        const int level = subs.front().first->level;
        const int k = d - level;
        std::set<int> origin;
        std::set<std::pair<int, int>> in_ch, out_ch;
        for (const auto &[s, alpha] : subs) {
          EXPECT_TRUE(origin.insert(alpha).second) << cell;
          EXPECT_TRUE(in_ch.insert({s->in_module, s->in_wavelength}).second);
          EXPECT_TRUE(out_ch.insert({s->out_module, s->out_wavelength}).second);
          EXPECT_LT(s->in_module, ipow(n, k - 1));
          EXPECT_LT(s->in_wavelength, n);
        }
      }
    }
  }
}

TEST(Recursive, RejectsWrongFamily) {
  const auto t = build_sa(2, 2, 2);
  EXPECT_THROW(expand_route_recursive(t, {}), Error);
  const auto b = build_recursive(2, 2);
  const CallSet one = {{0, 0, 0, 0}};
  EXPECT_THROW(route_calls(b, one, std::vector<int>{0}), Error);
}

TEST(RouteCalls, FullLoadNeedsExactlyNCentralModules) {
  for (int n = 1; n <= 6; ++n) {
    for (int r = 1; r <= 6; ++r) {
      const auto t = build_sa(n, r, n);
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto calls = random_permutation(t.spec(), seed);
        const auto a = route_calls(t, calls);
        ASSERT_TRUE(sa_oracle(t.spec(), a));
        ASSERT_TRUE(verify_contention_free(t, a).ok);
        if (n >= 2) {
          const auto small = build_sa(n, r, n - 1);
          EXPECT_THROW(route_calls(small, calls), Error);
        }
      }
    }
  }
}

TEST(RouteCalls, FixedGammaRangeChecked) {
  const auto t = build_sa(2, 2, 2);
  const CallSet one = {{0, 0, 0, 0}};
  EXPECT_THROW(route_calls(t, one, std::vector<int>{2}), Error);
  EXPECT_THROW(route_calls(t, one, std::vector<int>{0, 1}), Error);
}

TEST(Verify, SingleCall) {
  const auto t = build_sa(3, 3, 3);
  const CallSet one = {{2, 1, 0, 2}};
  EXPECT_TRUE(verify_contention_free(t, route_calls(t, one)).ok);
}

TEST(Verify, SharedCentralModuleFromOneInputModule) {
  const auto t = build_sa(2, 2, 2);
  const CallSet calls = {{0, 0, 0, 0}, {0, 1, 1, 0}};
  const auto a = route_calls(t, calls, std::vector<int>{0, 0});
  const auto rep = verify_contention_free(t, a);
  ASSERT_FALSE(rep.ok);
  const auto it = std::find_if(
      rep.violations.begin(), rep.violations.end(),
      [](const Violation &v) { return v.kind == ViolationKind::ChannelConflict; });
  ASSERT_NE(it, rep.violations.end());
  const auto &v = *it;
  EXPECT_EQ(v.calls, (std::vector<std::size_t>{0, 1}));
  // Both calls leave input module 0 on wavelength 0 toward the AWG.
  EXPECT_EQ(t.link(v.link).src, t.find_node("in.0").value());
  EXPECT_EQ(v.wavelength, 0);
}

TEST(Verify, DuplicatedRouteGivesOneViolation) {
  const auto t = build_recursive(2, 3);
  auto a = route_calls(t, random_permutation(t.spec(), 7));
  a.routes.push_back(a.routes[3]);
  const auto rep = verify_contention_free(t, a);
  ASSERT_EQ(rep.violations.size(), 1u);
  EXPECT_EQ(rep.violations[0].kind, ViolationKind::ChannelConflict);
}

TEST(Verify, TamperedHopsCaught) {
  const auto t = build_sa(4, 3, 4);
  const auto good = route_calls(t, example_calls(), example_gammas());

  auto a = good;
  a.routes[0].hops[2].wavelength = 1; // AWG output must keep its wavelength
  auto rep = verify_contention_free(t, a);
  ASSERT_FALSE(rep.ok);
  EXPECT_EQ(rep.violations[0].kind, ViolationKind::AwgRouting);

  a = good;
  a.routes[0].hops[2].wavelength = 3; // not on AWG output 0 at all
  rep = verify_contention_free(t, a);
  ASSERT_FALSE(rep.ok);
  EXPECT_EQ(rep.violations[0].kind, ViolationKind::CarriedSet);

  a = good;
  a.routes[0].hops.pop_back();
  rep = verify_contention_free(t, a);
  ASSERT_FALSE(rep.ok);
  EXPECT_EQ(rep.violations[0].kind, ViolationKind::Endpoint);

  a = good;
  a.routes[0].hops.back().wavelength = 3;
  rep = verify_contention_free(t, a);
  ASSERT_FALSE(rep.ok);
  EXPECT_EQ(rep.violations[0].kind, ViolationKind::Endpoint);

  a = good;
  std::swap(a.routes[0].hops[2], a.routes[0].hops[3]);
  rep = verify_contention_free(t, a);
  ASSERT_FALSE(rep.ok);
  EXPECT_EQ(rep.violations[0].kind, ViolationKind::Disconnected);
}

TEST(Verify, AwgRuleChecked) {
  // Mid-module 1 claims wavelength 0 toward AWG R input 1, which that AWG
  // would deliver to output 1 rather than output 0.
  const auto t = build_sa(2, 2, 2);
  const CallSet one = {{0, 0, 0, 0}};
  auto a = route_calls(t, one, std::vector<int>{1});
  auto rep = verify_contention_free(t, a);
  ASSERT_TRUE(rep.ok);
  a.routes[0].hops[3].wavelength = 0;
  rep = verify_contention_free(t, a);
  ASSERT_FALSE(rep.ok);
  EXPECT_EQ(rep.violations[0].kind, ViolationKind::AwgRouting);
}

TEST(Verify, TwcCollisionCaught) {
  // Two calls into output module 0 both converted to omega' = 0.
  const auto t = build_sa(2, 2, 2);
  const CallSet calls = {{0, 0, 0, 0}, {1, 0, 0, 1}};
  auto a = route_calls(t, calls);
  ASSERT_TRUE(verify_contention_free(t, a).ok);
  a.routes[1].hops.back().wavelength = 0;
  a.routes[1].call.omega_prime = 0;
  const auto rep = verify_contention_free(t, a);
  ASSERT_FALSE(rep.ok);
  bool collision = false;
  for (const auto &v : rep.violations)
    collision |= v.kind == ViolationKind::TwcCollision;
  EXPECT_TRUE(collision);
}

TEST(TwoStage, Blocking) {
  const auto spec = NetworkSpec::two_stage(2, 2, 2);
  const auto v = check_two_stage_blocking(spec, {0, 0, 0, 0}, {0, 1, 0, 1});
  EXPECT_TRUE(v.blocked);
  const auto ok = check_two_stage_blocking(spec, {0, 0, 0, 0}, {0, 1, 1, 0});
  EXPECT_FALSE(ok.blocked);
  EXPECT_EQ(ok.wavelengths, (std::array<int, 2>{0, 1}));
}

TEST(TwoStage, SingleCallWavelength) {
  const auto spec = NetworkSpec::two_stage(4, 3, 4);
  const auto v = check_two_stage_blocking(spec, {1, 0, 2, 0}, {0, 0, 0, 0});
  EXPECT_EQ(v.wavelengths[0], 3);
  const auto t = build_two_stage(4, 3, 4);
  const CallSet one = {{1, 0, 2, 0}};
  const auto a = route_calls(t, one);
  EXPECT_EQ(a.routes[0].conversions[0], 3);
  EXPECT_TRUE(verify_contention_free(t, a).ok);
}

TEST(TwoStage, Errors) {
  const auto spec = NetworkSpec::two_stage(2, 2, 2);
  EXPECT_THROW(check_two_stage_blocking(spec, {0, 0, 0, 0}, {0, 0, 0, 0}),
               Error);
  EXPECT_THROW(
      check_two_stage_blocking(NetworkSpec::sa(2, 2, 2), {0, 0, 0, 0},
                               {1, 0, 1, 0}),
      Error);
  const auto t = build_two_stage(2, 2, 2);
  const CallSet pair = {{0, 0, 0, 0}, {0, 1, 0, 1}};
  try {
    route_calls(t, pair);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::Infeasible);
  }
}

TEST(Utilization, Empty) {
  const auto t = build_recursive(2, 3);
  const auto u = utilization(t, RouteAssignment{});
  EXPECT_EQ(u.twc, 0.0);
  EXPECT_EQ(u.awg_channel, 0.0);
}

TEST(Utilization, CrossbarIsOneOverN) {
  const auto t = build_awg_crossbar(4);
  const auto a = route_calls(t, random_permutation(t.spec(), 1));
  EXPECT_TRUE(verify_contention_free(t, a).ok);
  const auto u = utilization(t, a);
  EXPECT_DOUBLE_EQ(u.awg_channel, 0.25);
  EXPECT_EQ(u.used_awg_channels, 4u);
  EXPECT_EQ(u.total_awg_channels, 16u);
}

TEST(Utilization, FullLoadSA) {
  const auto t = build_sa(3, 4, 3);
  const auto u = utilization(t, route_calls(t, random_permutation(t.spec(), 5)));
  EXPECT_DOUBLE_EQ(u.twc, 1.0);
  EXPECT_DOUBLE_EQ(u.awg_channel, 1.0);
}
