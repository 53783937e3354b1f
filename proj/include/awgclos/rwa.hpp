#ifndef AWGCLOS_RWA_HPP_INCLUDED
#define AWGCLOS_RWA_HPP_INCLUDED

#include "awgclos/core.hpp"
#include "awgclos/fabric.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace awgclos {

/// Bipartite graph G(V u U, E): input modules on the left, output modules on
/// the right, one edge per call. Parallel edges are kept.
struct ConflictGraph {
  int left_count = 0;
  int right_count = 0;
  std::vector<std::pair<int, int>> edges;
  int max_degree = 0;
};

ConflictGraph build_conflict_graph(const NetworkSpec &spec,
                                   std::span<const Call> calls);

/// Proper edge coloring; color g corresponds to central module g.
struct Coloring {
  std::vector<int> color_of;
  int color_count = 0;

  int colors_used() const;
  bool proper(const ConflictGraph &graph) const;
};

/// Incremental bipartite edge coloring. Each insertion takes the lowest
/// color free at both ends; otherwise it swaps colors along one alternating
/// path (the Slepian-Duguid / Paull-matrix step) and reports the edges it
/// recolored.
class EdgeColoring {
public:
  struct Recolor {
    int edge;
    int from;
    int to;
  };
  struct Insertion {
    int edge = -1;
    int color = -1;
    std::vector<Recolor> recolored;
  };

  EdgeColoring(int left_count, int right_count, int colors);

  /// Throws Error(CapacityExceeded) when an endpoint has no free color.
  Insertion insert(int u, int v);
  void remove(int edge);

  int color_of(int edge) const;
  std::pair<int, int> endpoints(int edge) const;
  int colors() const noexcept { return colors_; }
  int degree_left(int u) const;
  int degree_right(int v) const;
  /// Every live edge has a color no other edge at either end shares.
  bool proper() const;

private:
  void place(int edge, int color);
  void unplace(int edge);
  std::vector<int> alternating_path(bool from_left, int vertex, int first,
                                    int second) const;

  int colors_;
  std::vector<std::vector<int>> left_;  // [u][color] -> edge or -1
  std::vector<std::vector<int>> right_; // [v][color] -> edge or -1
  std::vector<std::pair<int, int>> ends_;
  std::vector<int> color_;
  std::vector<bool> live_;
};

/// Colors `graph` with at most `colors` colors in edge order. Throws
/// Error(Infeasible) when colors < max_degree.
Coloring edge_color(const ConflictGraph &graph, int colors);

/// C'(A, lambda_x, B, lambda_y) inside a central module.
struct SubCall {
  int level = 1;
  /// Central-module path, e.g. "g1.g0".
  std::string cell;
  int in_module = 0;
  WavelengthIndex in_wavelength = 0;
  int out_module = 0;
  WavelengthIndex out_wavelength = 0;

  friend bool operator==(const SubCall &, const SubCall &) = default;
};

struct CallRoute {
  Call call;
  /// Central module chosen at each recursion level, outermost first.
  std::vector<int> gammas;
  /// Output wavelength of every TWC-module on the path, in order.
  std::vector<WavelengthIndex> conversions;
  std::vector<Hop> hops;
  std::vector<SubCall> subcalls;

  friend bool operator==(const CallRoute &, const CallRoute &) = default;
};

struct RouteAssignment {
  std::vector<CallRoute> routes;

  friend bool operator==(const RouteAssignment &,
                         const RouteAssignment &) = default;
};

/// S_A hop wavelengths: x = [alpha + gamma], y = [beta + gamma] mod |Lambda|.
struct SaRoute {
  int gamma = 0;
  WavelengthIndex x = 0;
  WavelengthIndex y = 0;
};

SaRoute expand_route_sa(const NetworkSpec &spec, const Call &call, int gamma);

/// S_B sub-call: A = alpha / n, B = beta / n, x = A n + [alpha mod n +
/// gamma]_n, y = B n + [beta mod n + gamma]_n.
SubCall expand_route_sb(const NetworkSpec &spec, const Call &call, int gamma);

/// Cell-local sub-call of the recursive network: wavelengths
/// x' = [alpha mod n + gamma]_n and y' = [beta mod n + gamma]_n.
SubCall expand_route_sc(int n, const Call &call, int gamma);

/// Full assignment on a B(n,d) topology: top-level edge coloring, then the
/// induced sub-call set of every cell is routed recursively.
RouteAssignment expand_route_recursive(const Topology &topology,
                                       std::span<const Call> calls);

/// Routes `calls` on any family. `gammas`, when given, fixes the top-level
/// central module of every call (S_A and S_B only).
RouteAssignment route_calls(const Topology &topology,
                            std::span<const Call> calls,
                            std::optional<std::vector<int>> gammas = {});

enum class ViolationKind {
  ChannelConflict,
  CarriedSet,
  Disconnected,
  Endpoint,
  AwgRouting,
  PassThrough,
  TwcDomain,
  TwcRange,
  TwcCollision,
};

std::string_view to_string(ViolationKind k);

struct Violation {
  ViolationKind kind = ViolationKind::ChannelConflict;
  std::vector<std::size_t> calls;
  int link = -1;
  int node = -1;
  WavelengthIndex wavelength = -1;
  std::string message;
};

struct VerificationReport {
  bool ok = true;
  std::size_t calls_checked = 0;
  std::size_t hops_checked = 0;
  std::vector<Violation> violations;

  explicit operator bool() const noexcept { return ok; }
};

/// No (link, wavelength) pair used twice, every AWG hop follows the cyclic
/// routing rule, every conversion stays inside its module's sets and is
/// injective. Conflicts are reported once per pair of calls.
VerificationReport verify_contention_free(const Topology &topology,
                                          const RouteAssignment &assignment);

struct TwoStageVerdict {
  bool blocked = false;
  /// AWG wavelength [alpha + beta] mod |Lambda| of each call.
  std::array<WavelengthIndex, 2> wavelengths{};
};

TwoStageVerdict check_two_stage_blocking(const NetworkSpec &spec,
                                         const Call &first,
                                         const Call &second);

struct Utilization {
  double twc = 0.0;
  double awg_channel = 0.0;
  std::size_t active_twcs = 0;
  std::size_t total_twcs = 0;
  std::size_t used_awg_channels = 0;
  std::size_t total_awg_channels = 0;
};

Utilization utilization(const Topology &topology,
                        const RouteAssignment &assignment);

} // namespace awgclos

#endif // AWGCLOS_RWA_HPP_INCLUDED
