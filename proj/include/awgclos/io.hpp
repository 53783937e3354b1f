#ifndef AWGCLOS_IO_HPP_INCLUDED
#define AWGCLOS_IO_HPP_INCLUDED

#include "awgclos/awg.hpp"
#include "awgclos/core.hpp"
#include "awgclos/fabric.hpp"
#include "awgclos/online.hpp"
#include "awgclos/rwa.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace awgclos {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const NetworkSpec &spec);
/// Rebuilds the NetworkSpec through its family factory; throws ParseError if the
/// stored N, r or m disagree with it.
NetworkSpec spec_from_json(const Json &j);

Json to_json(const Call &c);
Call call_from_json(const Json &j);

/// A call file: {"calls": [{alpha, omega, beta, omega_prime, gamma?}, ...]}
/// or a bare array. Gammas are kept only when every call has one.
struct CallFile {
  CallSet calls;
  std::optional<std::vector<int>> gammas;
};
Json to_json(const CallFile &f);
CallFile call_file_from_json(const Json &j);

Json to_json(const RouteAssignment &a);
RouteAssignment assignment_from_json(const Json &j);

/// {schema_version, spec, universe, nodes[], links[], assignment?}. Node
/// ids replace node indices; external endpoints are null.
Json to_json(const Topology &t, const RouteAssignment *assignment = nullptr);

struct Artifact {
  Topology topology;
  std::optional<RouteAssignment> assignment;
};
Artifact artifact_from_json(const Json &j);

Json to_json(const ComponentCensus &c);
Json to_json(const PhysicalEstimate &e);
Json to_json(const VerificationReport &r);
Json to_json(const Utilization &u);
Json to_json(const RoutingTable &t);
Json to_json(const OnlineEvent &e);

/// Parses text; throws Error(ParseError) with the parser's message.
Json parse_json(const std::string &text);

/// Graphviz digraph. Every cell is a cluster, nodes carry their stage as
/// rank, and each TWC-module is drawn as two half-nodes joined by a dashed
/// boundary edge.
std::string to_dot(const Topology &t);

/// One row per call: input channel, central path, conversion chain, output
/// channel.
std::string format_route_table(const RouteAssignment &a);

std::string format_census(const ComponentCensus &c);

} // namespace awgclos

#endif // AWGCLOS_IO_HPP_INCLUDED
