#include "awgclos/online.hpp"

#include <spdlog/spdlog.h>

namespace awgclos {

std::string_view to_string(OnlineEvent::Kind k) {
  switch (k) {
  case OnlineEvent::Kind::Assign:
    return "assign";
  case OnlineEvent::Kind::Recolor:
    return "recolor";
  case OnlineEvent::Kind::Release:
    return "release";
  }
  return "?";
}

namespace {

int central_count(const NetworkSpec &spec) {
  switch (spec.family) {
  case Family::SA:
    return spec.m;
  case Family::SB:
    return spec.n;
  default:
    throw Error(ErrorCode::InvalidParameter,
                "online routing needs an SA or SB topology, got " +
                    std::string(to_string(spec.family)));
  }
}

} // namespace

OnlineRouter::OnlineRouter(Topology topology)
    : topology_(std::move(topology)),
      coloring_(topology_.spec().input_modules(),
                topology_.spec().output_modules(),
                central_count(topology_.spec())) {}

InsertResult OnlineRouter::insert(const Call &call) {
  const Call one[] = {call};
  if (auto v = validate_call_set(topology_.spec(), one); !v)
    throw Error(ErrorCode::InvalidCallSet, v.message);
  if (auto it = inputs_.find({call.alpha, call.omega}); it != inputs_.end())
    throw Error(ErrorCode::InvalidCallSet,
                "input channel already used by call " +
                    std::to_string(it->second));
  if (auto it = outputs_.find({call.beta, call.omega_prime});
      it != outputs_.end())
    throw Error(ErrorCode::InvalidCallSet,
                "output channel already used by call " +
                    std::to_string(it->second));

  const auto ins = coloring_.insert(call.alpha, call.beta);
  InsertResult out;
  out.id = static_cast<std::size_t>(ins.edge);
  out.gamma = ins.color;
  out.rearrangements = static_cast<int>(ins.recolored.size());
  for (const auto &rc : ins.recolored)
    out.events.push_back({OnlineEvent::Kind::Recolor,
                          static_cast<std::size_t>(rc.edge), rc.from, rc.to});
  out.events.push_back({OnlineEvent::Kind::Assign, out.id, -1, ins.color});

  calls_.emplace(out.id, call);
  inputs_.emplace(std::pair{call.alpha, call.omega}, out.id);
  outputs_.emplace(std::pair{call.beta, call.omega_prime}, out.id);
  spdlog::debug("online insert {} -> gamma {}, {} rearranged", out.id,
                out.gamma, out.rearrangements);
  return out;
}

std::vector<OnlineEvent> OnlineRouter::remove(std::size_t id) {
  auto it = calls_.find(id);
  if (it == calls_.end())
    throw Error(ErrorCode::IndexOutOfRange,
                "no live call " + std::to_string(id));
  const int g = coloring_.color_of(static_cast<int>(id));
  coloring_.remove(static_cast<int>(id));
  inputs_.erase({it->second.alpha, it->second.omega});
  outputs_.erase({it->second.beta, it->second.omega_prime});
  calls_.erase(it);
  return {{OnlineEvent::Kind::Release, id, g, -1}};
}

std::vector<std::size_t> OnlineRouter::ids() const {
  std::vector<std::size_t> v;
  v.reserve(calls_.size());
  for (const auto &[id, c] : calls_)
    v.push_back(id);
  return v;
}

int OnlineRouter::gamma(std::size_t id) const {
  if (!calls_.count(id))
    throw Error(ErrorCode::IndexOutOfRange,
                "no live call " + std::to_string(id));
  return coloring_.color_of(static_cast<int>(id));
}

RouteAssignment OnlineRouter::assignment() const {
  CallSet calls;
  std::vector<int> gammas;
  for (const auto &[id, c] : calls_) {
    calls.push_back(c);
    gammas.push_back(coloring_.color_of(static_cast<int>(id)));
  }
  return route_calls(topology_, calls, std::move(gammas));
}

} // namespace awgclos
