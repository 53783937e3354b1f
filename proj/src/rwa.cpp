#include "awgclos/rwa.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <spdlog/spdlog.h>

namespace awgclos {

ConflictGraph build_conflict_graph(const NetworkSpec &spec,
                                   std::span<const Call> calls) {
  require_valid(spec, calls);
  ConflictGraph g;
  g.left_count = spec.input_modules();
  g.right_count = spec.output_modules();
  std::vector<int> deg_l(static_cast<std::size_t>(g.left_count), 0);
  std::vector<int> deg_r(static_cast<std::size_t>(g.right_count), 0);
  for (const auto &c : calls) {
    g.edges.emplace_back(c.alpha, c.beta);
    g.max_degree = std::max(
        {g.max_degree, ++deg_l[static_cast<std::size_t>(c.alpha)],
         ++deg_r[static_cast<std::size_t>(c.beta)]});
  }
  return g;
}

int Coloring::colors_used() const {
  return static_cast<int>(
      std::set<int>(color_of.begin(), color_of.end()).size());
}

bool Coloring::proper(const ConflictGraph &graph) const {
  if (color_of.size() != graph.edges.size())
    return false;
  std::set<std::pair<int, int>> left, right;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const int c = color_of[e];
    if (c < 0 || c >= color_count)
      return false;
    if (!left.insert({graph.edges[e].first, c}).second ||
        !right.insert({graph.edges[e].second, c}).second)
      return false;
  }
  return true;
}

EdgeColoring::EdgeColoring(int left_count, int right_count, int colors)
    : colors_(colors) {
  if (left_count < 0 || right_count < 0 || colors < 0)
    throw Error(ErrorCode::InvalidParameter, "negative graph dimensions");
  left_.assign(static_cast<std::size_t>(left_count),
               std::vector<int>(static_cast<std::size_t>(colors), -1));
  right_.assign(static_cast<std::size_t>(right_count),
                std::vector<int>(static_cast<std::size_t>(colors), -1));
}

void EdgeColoring::place(int edge, int color) {
  const auto [u, v] = ends_[static_cast<std::size_t>(edge)];
  left_[static_cast<std::size_t>(u)][static_cast<std::size_t>(color)] = edge;
  right_[static_cast<std::size_t>(v)][static_cast<std::size_t>(color)] = edge;
  color_[static_cast<std::size_t>(edge)] = color;
}

void EdgeColoring::unplace(int edge) {
  const auto [u, v] = ends_[static_cast<std::size_t>(edge)];
  const auto c = static_cast<std::size_t>(color_[static_cast<std::size_t>(edge)]);
  left_[static_cast<std::size_t>(u)][c] = -1;
  right_[static_cast<std::size_t>(v)][c] = -1;
  color_[static_cast<std::size_t>(edge)] = -1;
}

std::vector<int> EdgeColoring::alternating_path(bool from_left, int vertex,
                                                int first, int second) const {
  std::vector<int> path;
  int color = first;
  bool on_left = from_left;
  int at = vertex;
  for (;;) {
    const auto &slots = on_left ? left_[static_cast<std::size_t>(at)]
                                : right_[static_cast<std::size_t>(at)];
    const int e = slots[static_cast<std::size_t>(color)];
    if (e < 0)
      break;
    path.push_back(e);
    const auto [u, v] = ends_[static_cast<std::size_t>(e)];
    at = on_left ? v : u;
    on_left = !on_left;
    color = color == first ? second : first;
  }
  return path;
}

EdgeColoring::Insertion EdgeColoring::insert(int u, int v) {
  if (u < 0 || u >= static_cast<int>(left_.size()) || v < 0 ||
      v >= static_cast<int>(right_.size()))
    throw Error(ErrorCode::IndexOutOfRange, "edge endpoint out of range");

  auto first_free = [&](const std::vector<int> &slots) {
    for (int c = 0; c < colors_; ++c)
      if (slots[static_cast<std::size_t>(c)] < 0)
        return c;
    return -1;
  };
  const auto &lu = left_[static_cast<std::size_t>(u)];
  const auto &rv = right_[static_cast<std::size_t>(v)];
  const int a = first_free(lu);
  const int b = first_free(rv);
  if (a < 0 || b < 0)
    throw Error(ErrorCode::CapacityExceeded,
                "module " + std::to_string(a < 0 ? u : v) +
                    " already uses all " + std::to_string(colors_) +
                    " central modules");

  Insertion ins;
  ins.edge = static_cast<int>(ends_.size());
  ends_.emplace_back(u, v);
  color_.push_back(-1);
  live_.push_back(true);

  for (int c = 0; c < colors_; ++c) {
    if (lu[static_cast<std::size_t>(c)] < 0 &&
        rv[static_cast<std::size_t>(c)] < 0) {
      place(ins.edge, c);
      ins.color = c;
      return ins;
    }
  }

  // a is free at u but busy at v, b the other way round. Take the lower of
  // the two and clear it along the a/b path that starts at the end where it
  // is busy. In a bipartite graph that path cannot return to the other end.
  const int keep = std::min(a, b);
  const int other = std::max(a, b);
  const bool start_left = keep == b;
  const auto path = alternating_path(start_left, start_left ? u : v, keep, other);
  std::vector<int> old;
  for (int e : path) {
    old.push_back(color_[static_cast<std::size_t>(e)]);
    unplace(e);
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    const int to = old[i] == keep ? other : keep;
    place(path[i], to);
    ins.recolored.push_back({path[i], old[i], to});
  }
  place(ins.edge, keep);
  ins.color = keep;
  return ins;
}

void EdgeColoring::remove(int edge) {
  if (edge < 0 || edge >= static_cast<int>(ends_.size()) ||
      !live_[static_cast<std::size_t>(edge)])
    throw Error(ErrorCode::IndexOutOfRange,
                "no live edge " + std::to_string(edge));
  unplace(edge);
  live_[static_cast<std::size_t>(edge)] = false;
}

int EdgeColoring::color_of(int edge) const {
  return color_.at(static_cast<std::size_t>(edge));
}

std::pair<int, int> EdgeColoring::endpoints(int edge) const {
  return ends_.at(static_cast<std::size_t>(edge));
}

int EdgeColoring::degree_left(int u) const {
  const auto &s = left_.at(static_cast<std::size_t>(u));
  return static_cast<int>(std::count_if(s.begin(), s.end(),
                                        [](int e) { return e >= 0; }));
}

int EdgeColoring::degree_right(int v) const {
  const auto &s = right_.at(static_cast<std::size_t>(v));
  return static_cast<int>(std::count_if(s.begin(), s.end(),
                                        [](int e) { return e >= 0; }));
}

bool EdgeColoring::proper() const {
  std::set<std::pair<int, int>> l, r;
  for (std::size_t e = 0; e < ends_.size(); ++e) {
    if (!live_[e])
      continue;
    const int c = color_[e];
    if (c < 0 || c >= colors_)
      return false;
    if (!l.insert({ends_[e].first, c}).second ||
        !r.insert({ends_[e].second, c}).second)
      return false;
    if (left_[static_cast<std::size_t>(ends_[e].first)]
             [static_cast<std::size_t>(c)] != static_cast<int>(e))
      return false;
  }
  return true;
}

Coloring edge_color(const ConflictGraph &graph, int colors) {
  if (graph.max_degree > colors)
    throw Error(ErrorCode::Infeasible,
                "maximum degree " + std::to_string(graph.max_degree) +
                    " exceeds " + std::to_string(colors) + " central modules");
  EdgeColoring ec(graph.left_count, graph.right_count, colors);
  for (const auto &[u, v] : graph.edges)
    ec.insert(u, v);
  Coloring out;
  out.color_count = colors;
  out.color_of.reserve(graph.edges.size());
  for (std::size_t e = 0; e < graph.edges.size(); ++e)
    out.color_of.push_back(ec.color_of(static_cast<int>(e)));
  return out;
}

SaRoute expand_route_sa(const NetworkSpec &spec, const Call &call, int gamma) {
  if (gamma < 0 || gamma >= spec.m)
    throw Error(ErrorCode::IndexOutOfRange,
                "central module " + std::to_string(gamma) + " out of range");
  if (call.alpha < 0 || call.alpha >= spec.r || call.beta < 0 ||
      call.beta >= spec.r)
    throw Error(ErrorCode::IndexOutOfRange, "call endpoint out of range");
  const int L = spec.lambda_count();
  return {gamma, mod(call.alpha + gamma, L), mod(call.beta + gamma, L)};
}

SubCall expand_route_sb(const NetworkSpec &spec, const Call &call, int gamma) {
  const int n = spec.n;
  if (gamma < 0 || gamma >= n)
    throw Error(ErrorCode::IndexOutOfRange,
                "central module " + std::to_string(gamma) + " out of range");
  if (call.alpha < 0 || call.alpha >= spec.r || call.beta < 0 ||
      call.beta >= spec.r)
    throw Error(ErrorCode::IndexOutOfRange, "call endpoint out of range");
  const int A = call.alpha / n;
  const int B = call.beta / n;
  return {1,
          "g" + std::to_string(gamma),
          A,
          A * n + mod(call.alpha % n + gamma, n),
          B,
          B * n + mod(call.beta % n + gamma, n)};
}

SubCall expand_route_sc(int n, const Call &call, int gamma) {
  if (n < 1 || gamma < 0 || gamma >= n)
    throw Error(ErrorCode::IndexOutOfRange,
                "central module " + std::to_string(gamma) + " out of range");
  if (call.alpha < 0 || call.beta < 0)
    throw Error(ErrorCode::IndexOutOfRange, "call endpoint out of range");
  return {1,
          "g" + std::to_string(gamma),
          call.alpha / n,
          mod(call.alpha % n + gamma, n),
          call.beta / n,
          mod(call.beta % n + gamma, n)};
}

namespace {

struct LocalRoute {
  std::vector<int> gammas;
  std::vector<WavelengthIndex> chain;
  std::vector<SubCall> subcalls;
};

std::string join_cell(const std::string &parent, int gamma) {
  const std::string me = "g" + std::to_string(gamma);
  return parent.empty() ? me : parent + "." + me;
}

std::vector<LocalRoute> route_b_level(int n, int k, std::span<const Call> calls,
                                      const std::string &cell, int level) {
  const auto spec = NetworkSpec::b(n, k);
  if (auto v = validate_call_set(spec, calls); !v)
    throw Error(ErrorCode::InvalidCallSet,
                "cell-load invariant violated in cell '" + cell +
                    "': " + v.message);
  const auto coloring = edge_color(build_conflict_graph(spec, calls), n);
  std::vector<LocalRoute> routes(calls.size());

  if (k == 2) {
    for (std::size_t i = 0; i < calls.size(); ++i) {
      const int g = coloring.color_of[i];
      const auto sa = expand_route_sa(spec, calls[i], g);
      routes[i].gammas = {g};
      routes[i].chain = {sa.x, sa.y, calls[i].omega_prime};
    }
    return routes;
  }

  std::vector<std::vector<Call>> sub(static_cast<std::size_t>(n));
  std::vector<std::vector<std::size_t>> owner(static_cast<std::size_t>(n));
  std::vector<SubCall> own(calls.size());
  for (std::size_t i = 0; i < calls.size(); ++i) {
    const int g = coloring.color_of[i];
    own[i] = expand_route_sc(n, calls[i], g);
    own[i].level = level;
    own[i].cell = join_cell(cell, g);
    sub[static_cast<std::size_t>(g)].push_back(
        {own[i].in_module, own[i].in_wavelength, own[i].out_module,
         own[i].out_wavelength});
    owner[static_cast<std::size_t>(g)].push_back(i);
  }

  for (int g = 0; g < n; ++g) {
    const auto &members = owner[static_cast<std::size_t>(g)];
    const auto inner = route_b_level(n, k - 1, sub[static_cast<std::size_t>(g)],
                                     join_cell(cell, g), level + 1);
    for (std::size_t j = 0; j < members.size(); ++j) {
      const std::size_t i = members[j];
      auto &rt = routes[i];
      rt.gammas.push_back(g);
      rt.gammas.insert(rt.gammas.end(), inner[j].gammas.begin(),
                       inner[j].gammas.end());
      rt.chain.push_back(own[i].in_wavelength);
      rt.chain.insert(rt.chain.end(), inner[j].chain.begin(),
                      inner[j].chain.end());
      rt.chain.push_back(calls[i].omega_prime);
      rt.subcalls.push_back(own[i]);
      rt.subcalls.insert(rt.subcalls.end(), inner[j].subcalls.begin(),
                         inner[j].subcalls.end());
    }
  }
  return routes;
}

std::vector<int> top_level_gammas(const NetworkSpec &spec,
                                  std::span<const Call> calls, int colors,
                                  const std::optional<std::vector<int>> &fixed) {
  if (!fixed)
    return edge_color(build_conflict_graph(spec, calls), colors).color_of;
  if (fixed->size() != calls.size())
    throw Error(ErrorCode::InvalidParameter,
                "one central module per call is required");
  for (int g : *fixed)
    if (g < 0 || g >= colors)
      throw Error(ErrorCode::IndexOutOfRange,
                  "central module " + std::to_string(g) + " out of range");
  return *fixed;
}

} // namespace

RouteAssignment expand_route_recursive(const Topology &topology,
                                       std::span<const Call> calls) {
  const auto &spec = topology.spec();
  if (spec.family != Family::B)
    throw Error(ErrorCode::InvalidParameter,
                "recursive expansion needs a B(n,d) topology");
  require_valid(spec, calls);
  const auto local = route_b_level(spec.n, spec.d.value(), calls, "", 1);

  RouteAssignment out;
  out.routes.reserve(calls.size());
  for (std::size_t i = 0; i < calls.size(); ++i) {
    CallRoute rt;
    rt.call = calls[i];
    rt.gammas = local[i].gammas;
    rt.conversions = local[i].chain;
    rt.subcalls = local[i].subcalls;
    rt.hops = trace(topology, calls[i].alpha, calls[i].omega, rt.conversions);
    out.routes.push_back(std::move(rt));
  }
  spdlog::debug("routed {} calls on B({},{})", calls.size(), spec.n,
                spec.d.value());
  return out;
}

RouteAssignment route_calls(const Topology &topology,
                            std::span<const Call> calls,
                            std::optional<std::vector<int>> gammas) {
  const auto &spec = topology.spec();
  require_valid(spec, calls);
  if (gammas && spec.family != Family::SA && spec.family != Family::SB)
    throw Error(ErrorCode::InvalidParameter,
                "fixed central modules apply to SA and SB only");

  if (spec.family == Family::B)
    return expand_route_recursive(topology, calls);

  RouteAssignment out;
  out.routes.resize(calls.size());
  for (std::size_t i = 0; i < calls.size(); ++i)
    out.routes[i].call = calls[i];

  switch (spec.family) {
  case Family::TwoStage: {
    std::map<std::pair<int, int>, std::size_t> pair_owner;
    for (std::size_t i = 0; i < calls.size(); ++i) {
      auto [it, fresh] =
          pair_owner.emplace(std::pair{calls[i].alpha, calls[i].beta}, i);
      if (!fresh)
        throw Error(ErrorCode::Infeasible,
                    "calls " + std::to_string(it->second) + " and " +
                        std::to_string(i) +
                        " share both endpoint modules of the two-stage network");
      out.routes[i].conversions = {
          mod(calls[i].alpha + calls[i].beta, spec.lambda_count()),
          calls[i].omega_prime};
    }
    break;
  }
  case Family::SA: {
    const auto g = top_level_gammas(spec, calls, spec.m, gammas);
    for (std::size_t i = 0; i < calls.size(); ++i) {
      const auto sa = expand_route_sa(spec, calls[i], g[i]);
      out.routes[i].gammas = {g[i]};
      out.routes[i].conversions = {sa.x, sa.y, calls[i].omega_prime};
    }
    break;
  }
  case Family::SB: {
    const auto g = top_level_gammas(spec, calls, spec.n, gammas);
    for (std::size_t i = 0; i < calls.size(); ++i) {
      const auto sub = expand_route_sb(spec, calls[i], g[i]);
      out.routes[i].gammas = {g[i]};
      out.routes[i].conversions = {sub.in_wavelength, sub.out_wavelength,
                                   calls[i].omega_prime};
      out.routes[i].subcalls = {sub};
    }
    break;
  }
  case Family::Crossbar:
    for (std::size_t i = 0; i < calls.size(); ++i)
      out.routes[i].conversions = {
          mod(calls[i].alpha + calls[i].beta, spec.lambda_count())};
    break;
  case Family::B:
    break;
  }

  for (auto &rt : out.routes)
    rt.hops = trace(topology, rt.call.alpha, rt.call.omega, rt.conversions);
  return out;
}

std::string_view to_string(ViolationKind k) {
  switch (k) {
  case ViolationKind::ChannelConflict:
    return "channel-conflict";
  case ViolationKind::CarriedSet:
    return "carried-set";
  case ViolationKind::Disconnected:
    return "disconnected";
  case ViolationKind::Endpoint:
    return "endpoint";
  case ViolationKind::AwgRouting:
    return "awg-routing";
  case ViolationKind::PassThrough:
    return "pass-through";
  case ViolationKind::TwcDomain:
    return "twc-domain";
  case ViolationKind::TwcRange:
    return "twc-range";
  case ViolationKind::TwcCollision:
    return "twc-collision";
  }
  return "?";
}

namespace {

/// First problem on a single call's path, if any.
std::optional<Violation> check_path(const Topology &t, const CallRoute &rt,
                                    std::size_t id,
                                    std::map<int, ConversionState> &states) {
  auto bad = [&](ViolationKind kind, int link, int node, int w,
                 std::string msg) {
    return Violation{kind, {id}, link, node, w,
                     "call " + std::to_string(id) + ": " + std::move(msg)};
  };
  const auto &c = rt.call;
  const auto &hops = rt.hops;
  const int link_count = static_cast<int>(t.links().size());

  if (hops.empty())
    return bad(ViolationKind::Endpoint, -1, -1, -1, "empty path");
  for (const auto &h : hops) {
    if (h.link < 0 || h.link >= link_count)
      return bad(ViolationKind::Disconnected, h.link, -1, h.wavelength,
                 "unknown link " + std::to_string(h.link));
    if (!t.link(h.link).carried.contains(h.wavelength))
      return bad(ViolationKind::CarriedSet, h.link, -1, h.wavelength,
                 "link " + std::to_string(h.link) + " does not carry wavelength " +
                     std::to_string(h.wavelength));
  }
  if (c.alpha < 0 || c.alpha >= t.spec().input_modules() ||
      hops.front().link != t.input_link(c.alpha) ||
      hops.front().wavelength != c.omega)
    return bad(ViolationKind::Endpoint, hops.front().link, -1,
               hops.front().wavelength, "path does not start at I(alpha, omega)");
  const auto &last = t.link(hops.back().link);
  const bool converted_out =
      last.src != kExternal && t.node(last.src).kind == NodeKind::Twc;
  if (c.beta < 0 || c.beta >= t.spec().output_modules() ||
      hops.back().link != t.output_link(c.beta) ||
      (converted_out && hops.back().wavelength != c.omega_prime))
    return bad(ViolationKind::Endpoint, hops.back().link, -1,
               hops.back().wavelength, "path does not end at O(beta, omega')");

  for (std::size_t k = 0; k + 1 < hops.size(); ++k) {
    const auto &in = t.link(hops[k].link);
    const auto &out = t.link(hops[k + 1].link);
    const int w_in = hops[k].wavelength;
    const int w_out = hops[k + 1].wavelength;
    if (in.dst == kExternal || in.dst != out.src)
      return bad(ViolationKind::Disconnected, hops[k + 1].link, -1, w_out,
                 "links " + std::to_string(hops[k].link) + " and " +
                     std::to_string(hops[k + 1].link) + " are not adjacent");
    const int node = in.dst;
    const auto &nd = t.node(node);
    switch (nd.kind) {
    case NodeKind::Awg: {
      const int local = w_in - nd.base;
      const bool ok = w_in == w_out && local >= 0 &&
                      local < nd.lambda_count &&
                      mod(local - in.dst_port, nd.lambda_count) == out.src_port;
      if (!ok)
        return bad(ViolationKind::AwgRouting, hops[k + 1].link, node, w_in,
                   nd.id + " cannot send wavelength " + std::to_string(w_in) +
                       " from input " + std::to_string(in.dst_port) +
                       " to output " + std::to_string(out.src_port));
      break;
    }
    case NodeKind::Mux:
    case NodeKind::Demux:
      if (w_in != w_out)
        return bad(ViolationKind::PassThrough, hops[k + 1].link, node, w_out,
                   nd.id + " changed the wavelength");
      break;
    case NodeKind::Twc: {
      if (!nd.twc->domain().contains(w_in))
        return bad(ViolationKind::TwcDomain, hops[k].link, node, w_in,
                   std::to_string(w_in) + " outside the domain of " + nd.id);
      if (!nd.twc->range().contains(w_out))
        return bad(ViolationKind::TwcRange, hops[k + 1].link, node, w_out,
                   std::to_string(w_out) + " outside the range of " + nd.id);
      auto it = states.try_emplace(node, *nd.twc).first;
      try {
        it->second.set(w_in, w_out);
      } catch (const Error &e) {
        return bad(ViolationKind::TwcCollision, hops[k + 1].link, node, w_out,
                   nd.id + ": " + e.what());
      }
      break;
    }
    }
  }
  return std::nullopt;
}

} // namespace

VerificationReport verify_contention_free(const Topology &topology,
                                          const RouteAssignment &assignment) {
  VerificationReport report;
  std::map<std::pair<int, int>, std::size_t> owner;
  std::set<std::pair<std::size_t, std::size_t>> reported;
  std::map<int, ConversionState> states;
  const int link_count = static_cast<int>(topology.links().size());

  for (std::size_t i = 0; i < assignment.routes.size(); ++i) {
    const auto &rt = assignment.routes[i];
    ++report.calls_checked;
    report.hops_checked += rt.hops.size();
    if (auto v = check_path(topology, rt, i, states))
      report.violations.push_back(std::move(*v));

    for (const auto &h : rt.hops) {
      if (h.link < 0 || h.link >= link_count)
        continue;
      auto [it, fresh] = owner.emplace(std::pair{h.link, h.wavelength}, i);
      if (fresh || it->second == i)
        continue;
      if (!reported.insert({it->second, i}).second)
        continue;
      report.violations.push_back(
          {ViolationKind::ChannelConflict,
           {it->second, i},
           h.link,
           -1,
           h.wavelength,
           "calls " + std::to_string(it->second) + " and " + std::to_string(i) +
               " both use wavelength " + std::to_string(h.wavelength) +
               " on link " + std::to_string(h.link)});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

TwoStageVerdict check_two_stage_blocking(const NetworkSpec &spec,
                                         const Call &first,
                                         const Call &second) {
  if (spec.family != Family::TwoStage)
    throw Error(ErrorCode::InvalidParameter,
                "blocking check applies to the two-stage network");
  const Call pair[] = {first, second};
  require_valid(spec, pair);
  TwoStageVerdict v;
  v.blocked = first.alpha == second.alpha && first.beta == second.beta;
  v.wavelengths = {mod(first.alpha + first.beta, spec.lambda_count()),
                   mod(second.alpha + second.beta, spec.lambda_count())};
  return v;
}

Utilization utilization(const Topology &topology,
                        const RouteAssignment &assignment) {
  Utilization u;
  for (const auto &nd : topology.nodes()) {
    if (nd.kind == NodeKind::Twc)
      u.total_twcs += static_cast<std::size_t>(nd.twc->fan_in());
    if (nd.kind == NodeKind::Awg)
      u.total_awg_channels +=
          static_cast<std::size_t>(nd.in_ports) * static_cast<std::size_t>(nd.out_ports);
  }

  std::set<std::pair<int, int>> twcs;
  std::set<std::tuple<int, int, int>> channels;
  for (const auto &rt : assignment.routes) {
    for (std::size_t k = 0; k + 1 < rt.hops.size(); ++k) {
      const auto &in = topology.link(rt.hops[k].link);
      if (in.dst == kExternal)
        continue;
      const auto &nd = topology.node(in.dst);
      if (nd.kind == NodeKind::Twc)
        twcs.insert({in.dst, rt.hops[k].wavelength});
      if (nd.kind == NodeKind::Awg)
        channels.insert(
            {in.dst, in.dst_port, topology.link(rt.hops[k + 1].link).src_port});
    }
  }
  u.active_twcs = twcs.size();
  u.used_awg_channels = channels.size();
  if (u.total_twcs > 0)
    u.twc = static_cast<double>(u.active_twcs) / static_cast<double>(u.total_twcs);
  if (u.total_awg_channels > 0)
    u.awg_channel = static_cast<double>(u.used_awg_channels) /
                    static_cast<double>(u.total_awg_channels);
  return u;
}

} // namespace awgclos
