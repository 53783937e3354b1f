#ifndef AWGCLOS_FABRIC_HPP_INCLUDED
#define AWGCLOS_FABRIC_HPP_INCLUDED

#include "awgclos/awg.hpp"
#include "awgclos/core.hpp"
#include "awgclos/twc.hpp"

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace awgclos {

enum class NodeKind { Twc, Awg, Mux, Demux };

std::string_view to_string(NodeKind k);
NodeKind node_kind_from_string(std::string_view s);

/// A component placed in a staged topology. Ids are dotted hierarchical
/// coordinates: "g1.g0.in.3" is input TWC-module 3 of the sub-network inside
/// central module 0 of central module 1.
struct Node {
  NodeKind kind = NodeKind::Twc;
  std::string id;
  int stage = 0;
  /// Cell on the input side; for a TWC-module this is its L-half.
  std::string cell;
  /// Cell on the output side; differs from `cell` only for TWC-modules.
  std::string cell_out;
  int in_ports = 1;
  int out_ports = 1;

  // AWG: wavelengths base .. base + lambda_count - 1, rows = in_ports,
  // cols = out_ports.
  int base = 0;
  int lambda_count = 0;

  // TWC-module: Pi and Sigma.
  std::optional<TwcModuleSpec> twc;

  AwgSpec awg_spec() const { return AwgSpec(in_ports, out_ports); }

  friend bool operator==(const Node &, const Node &) = default;
};

inline constexpr int kExternal = -1;

/// Directed fiber between two node ports. kExternal marks the network's
/// own input and output fibers.
struct Link {
  int src = kExternal;
  int src_port = 0;
  int dst = kExternal;
  int dst_port = 0;
  WavelengthSet carried;

  friend bool operator==(const Link &, const Link &) = default;
};

struct Hop {
  int link = 0;
  WavelengthIndex wavelength = 0;

  friend bool operator==(const Hop &, const Hop &) = default;
};

/// Immutable staged graph produced by the builders.
class Topology {
public:
  Topology(NetworkSpec spec, int universe, std::vector<Node> nodes,
           std::vector<Link> links);

  const NetworkSpec &spec() const noexcept { return spec_; }
  /// Every wavelength index used anywhere is below this.
  int universe() const noexcept { return universe_; }
  const std::vector<Node> &nodes() const noexcept { return nodes_; }
  const std::vector<Link> &links() const noexcept { return links_; }
  const Node &node(int i) const { return nodes_.at(static_cast<std::size_t>(i)); }
  const Link &link(int i) const { return links_.at(static_cast<std::size_t>(i)); }

  /// External fiber feeding input module `module`.
  int input_link(int module) const;
  /// External fiber leaving output module `module`.
  int output_link(int module) const;
  int input_module_of(int link) const;
  int output_module_of(int link) const;
  int out_link(int node, int port) const;
  int in_link(int node, int port) const;
  std::optional<int> find_node(std::string_view id) const;

  friend bool operator==(const Topology &a, const Topology &b) {
    return a.spec_ == b.spec_ && a.universe_ == b.universe_ &&
           a.nodes_ == b.nodes_ && a.links_ == b.links_;
  }

private:
  NetworkSpec spec_;
  int universe_;
  std::vector<Node> nodes_;
  std::vector<Link> links_;
  std::vector<int> inputs_;
  std::vector<int> outputs_;
  std::vector<std::vector<int>> out_links_;
  std::vector<std::vector<int>> in_links_;
};

/// T(n,r,m): r input n x m TWC-modules, one r x m AWG, m output r x r
/// TWC-modules.
Topology build_two_stage(int n, int r, int m);
/// S_A(n,r,m): T(n,r,m) followed by a reverse T(n,r,m).
Topology build_sa(int n, int r, int m);
/// S_B(n,n^(d-1),n): S_A with both AWGs replaced by N_I / N_O.
Topology build_sb(int n, int d);
/// B(n,d): S_C cell partition applied recursively down to d = 2.
Topology build_recursive(int n, int d);
/// N x N AWG with one TWC on each input; the comparison baseline.
Topology build_awg_crossbar(int ports);
/// Dispatch on spec.family.
Topology build(const NetworkSpec &spec);

struct ComponentCensus {
  NetworkSpec spec;
  int twc_columns = 0;
  int awg_columns = 0;
  int twc_module_count = 0;
  int awg_count = 0;
  int mux_count = 0;
  int demux_count = 0;
  int stage_count = 0;
  /// rows x cols when every AWG has the same size.
  std::optional<std::pair<int, int>> awg_size;
  /// Internal links from stage s to stage s+1, indexed by s.
  std::vector<int> boundary_links;
  /// Set when every stage boundary has the same link count.
  std::optional<int> links_per_boundary;
  /// Distinct wavelengths on internal links.
  int wavelength_granularity = 0;
  int max_conversion_range = 0;
  int twc_count = 0;
};

ComponentCensus census(const Topology &topology);

struct PhysicalParams {
  /// Coherent-crosstalk power penalty per AWG stage, dB.
  double p = 0.0;
  double insertion_loss_per_awg = 6.0;
};

struct PhysicalEstimate {
  double total_penalty_db = 0.0;
  double total_insertion_loss_db = 0.0;
  /// AWG columns traversed by every connection.
  int stage_count = 0;
};

/// Closed-form estimate for B(n,d): penalty 2 p log_n N, insertion loss per
/// AWG column.
PhysicalEstimate estimate_physical(const ComponentCensus &census,
                                   const PhysicalParams &params);

/// Follows a call through the topology. `conversions` lists the output
/// wavelength of every TWC-module met along the way, in order.
std::vector<Hop> trace(const Topology &topology, int alpha,
                       WavelengthIndex omega,
                       std::span<const WavelengthIndex> conversions);

/// Link carried sets against node port universes; empty when consistent.
std::vector<std::string> check_carried_sets(const Topology &topology);

/// Links never join two different cells; empty when consistent.
std::vector<std::string> check_cells(const Topology &topology);

struct CellIndependenceReport {
  bool ok = true;
  std::string message;
};

/// For every pair of AWGs in the same column: identical wavelength universes
/// and no connection that avoids every TWC fictitious boundary.
CellIndependenceReport check_cell_independence(const Topology &topology);

/// Output channels (beta, omega') reachable from I(alpha, omega) when every
/// TWC may convert to any wavelength of its range set.
std::set<std::pair<int, int>> reachable_outputs(const Topology &topology,
                                                int alpha,
                                                WavelengthIndex omega);

} // namespace awgclos

#endif // AWGCLOS_FABRIC_HPP_INCLUDED
