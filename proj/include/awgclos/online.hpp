#ifndef AWGCLOS_ONLINE_HPP_INCLUDED
#define AWGCLOS_ONLINE_HPP_INCLUDED

#include "awgclos/core.hpp"
#include "awgclos/fabric.hpp"
#include "awgclos/rwa.hpp"

#include <map>
#include <string>
#include <vector>

namespace awgclos {

struct OnlineEvent {
  enum class Kind { Assign, Recolor, Release };

  Kind kind = Kind::Assign;
  std::size_t call = 0;
  int from = -1;
  int to = -1;

  friend bool operator==(const OnlineEvent &, const OnlineEvent &) = default;
};

std::string_view to_string(OnlineEvent::Kind k);

struct InsertResult {
  std::size_t id = 0;
  int gamma = -1;
  int rearrangements = 0;
  std::vector<OnlineEvent> events;
};

/// Single-writer call state for S_A or S_B. Each call keeps a central module;
/// a blocked insert is resolved by swapping central modules along one
/// alternating path.
class OnlineRouter {
public:
  explicit OnlineRouter(Topology topology);

  /// Throws Error(InvalidCallSet) if a channel is busy or out of range and
  /// Error(CapacityExceeded) if an endpoint module has no central module left.
  InsertResult insert(const Call &call);
  std::vector<OnlineEvent> remove(std::size_t id);

  const Topology &topology() const noexcept { return topology_; }
  std::size_t size() const noexcept { return calls_.size(); }
  /// Live call ids, ascending.
  std::vector<std::size_t> ids() const;
  const Call &call(std::size_t id) const { return calls_.at(id); }
  int gamma(std::size_t id) const;
  /// Live calls in id order, routed with their current central modules.
  RouteAssignment assignment() const;

private:
  Topology topology_;
  EdgeColoring coloring_;
  std::map<std::size_t, Call> calls_;
  std::map<std::pair<int, int>, std::size_t> inputs_;
  std::map<std::pair<int, int>, std::size_t> outputs_;
};

} // namespace awgclos

#endif // AWGCLOS_ONLINE_HPP_INCLUDED
