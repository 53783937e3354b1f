#include "awgclos/fabric.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>

namespace awgclos {

std::string_view to_string(NodeKind k) {
  switch (k) {
  case NodeKind::Twc:
    return "twc";
  case NodeKind::Awg:
    return "awg";
  case NodeKind::Mux:
    return "mux";
  case NodeKind::Demux:
    return "demux";
  }
  return "?";
}

NodeKind node_kind_from_string(std::string_view s) {
  if (s == "twc")
    return NodeKind::Twc;
  if (s == "awg")
    return NodeKind::Awg;
  if (s == "mux")
    return NodeKind::Mux;
  if (s == "demux")
    return NodeKind::Demux;
  throw Error(ErrorCode::ParseError, "unknown node kind '" + std::string(s) + "'");
}

Topology::Topology(NetworkSpec spec, int universe, std::vector<Node> nodes,
                   std::vector<Link> links)
    : spec_(spec), universe_(universe), nodes_(std::move(nodes)),
      links_(std::move(links)) {
  const auto node_count = static_cast<int>(nodes_.size());
  out_links_.resize(nodes_.size());
  in_links_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto &nd = nodes_[i];
    if (nd.in_ports < 1 || nd.out_ports < 1)
      throw Error(ErrorCode::InvalidParameter, "node " + nd.id + " has no ports");
    if (nd.kind == NodeKind::Twc && !nd.twc)
      throw Error(ErrorCode::InvalidParameter,
                  "TWC-module " + nd.id + " lacks conversion sets");
    if (nd.kind == NodeKind::Awg &&
        nd.lambda_count != std::max(nd.in_ports, nd.out_ports))
      throw Error(ErrorCode::InvalidParameter,
                  "AWG " + nd.id + " has inconsistent wavelength count");
    out_links_[i].assign(static_cast<std::size_t>(nd.out_ports), -1);
    in_links_[i].assign(static_cast<std::size_t>(nd.in_ports), -1);
  }

  for (std::size_t li = 0; li < links_.size(); ++li) {
    const auto &l = links_[li];
    const int id = static_cast<int>(li);
    if (l.carried.universe() > universe_)
      throw Error(ErrorCode::InvalidParameter,
                  "link carries wavelengths beyond the topology universe");
    if (l.src == kExternal && l.dst == kExternal)
      throw Error(ErrorCode::InvalidParameter, "link with no endpoint");
    if (l.src == kExternal) {
      inputs_.push_back(id);
    } else {
      if (l.src < 0 || l.src >= node_count)
        throw Error(ErrorCode::IndexOutOfRange, "link source out of range");
      auto &slot = out_links_[static_cast<std::size_t>(l.src)];
      if (l.src_port < 0 || l.src_port >= static_cast<int>(slot.size()) ||
          slot[static_cast<std::size_t>(l.src_port)] != -1)
        throw Error(ErrorCode::InvalidParameter,
                    "bad or reused output port on " +
                        nodes_[static_cast<std::size_t>(l.src)].id);
      slot[static_cast<std::size_t>(l.src_port)] = id;
    }
    if (l.dst == kExternal) {
      outputs_.push_back(id);
    } else {
      if (l.dst < 0 || l.dst >= node_count)
        throw Error(ErrorCode::IndexOutOfRange, "link destination out of range");
      auto &slot = in_links_[static_cast<std::size_t>(l.dst)];
      if (l.dst_port < 0 || l.dst_port >= static_cast<int>(slot.size()) ||
          slot[static_cast<std::size_t>(l.dst_port)] != -1)
        throw Error(ErrorCode::InvalidParameter,
                    "bad or reused input port on " +
                        nodes_[static_cast<std::size_t>(l.dst)].id);
      slot[static_cast<std::size_t>(l.dst_port)] = id;
    }
  }
  if (static_cast<int>(inputs_.size()) != spec_.input_modules() ||
      static_cast<int>(outputs_.size()) != spec_.output_modules())
    throw Error(ErrorCode::InvalidParameter,
                "external fiber count does not match the network spec");
}

int Topology::input_link(int module) const {
  return inputs_.at(static_cast<std::size_t>(module));
}

int Topology::output_link(int module) const {
  return outputs_.at(static_cast<std::size_t>(module));
}

int Topology::input_module_of(int link) const {
  auto it = std::find(inputs_.begin(), inputs_.end(), link);
  return it == inputs_.end() ? -1 : static_cast<int>(it - inputs_.begin());
}

int Topology::output_module_of(int link) const {
  auto it = std::find(outputs_.begin(), outputs_.end(), link);
  return it == outputs_.end() ? -1 : static_cast<int>(it - outputs_.begin());
}

int Topology::out_link(int node, int port) const {
  const auto &slots = out_links_.at(static_cast<std::size_t>(node));
  if (port < 0 || port >= static_cast<int>(slots.size()))
    return -1;
  return slots[static_cast<std::size_t>(port)];
}

int Topology::in_link(int node, int port) const {
  const auto &slots = in_links_.at(static_cast<std::size_t>(node));
  if (port < 0 || port >= static_cast<int>(slots.size()))
    return -1;
  return slots[static_cast<std::size_t>(port)];
}

std::optional<int> Topology::find_node(std::string_view id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].id == id)
      return static_cast<int>(i);
  return std::nullopt;
}

namespace {

std::vector<int> iota_vec(int first, int count) {
  std::vector<int> v(static_cast<std::size_t>(count));
  std::iota(v.begin(), v.end(), first);
  return v;
}

std::vector<int> shifted_sorted(const WavelengthSet &set, int base) {
  std::vector<int> v;
  v.reserve(set.size());
  for (auto w : set.members())
    v.push_back(w + base);
  std::sort(v.begin(), v.end());
  return v;
}

/// Mutable node/link lists; turned into a Topology once complete.
class Draft {
public:
  Draft(NetworkSpec spec, int universe) : spec_(spec), universe_(universe) {}

  int twc(std::string id, int stage, std::string cell_in, std::string cell_out,
          std::vector<int> domain, std::vector<int> range) {
    Node nd;
    nd.kind = NodeKind::Twc;
    nd.id = std::move(id);
    nd.stage = stage;
    nd.cell = std::move(cell_in);
    nd.cell_out = std::move(cell_out);
    nd.twc.emplace(set(std::move(domain)), set(std::move(range)));
    return push(std::move(nd));
  }

  int awg(std::string id, int stage, std::string cell, int rows, int cols,
          int base) {
    Node nd;
    nd.kind = NodeKind::Awg;
    nd.id = std::move(id);
    nd.stage = stage;
    nd.cell = cell;
    nd.cell_out = std::move(cell);
    nd.in_ports = rows;
    nd.out_ports = cols;
    nd.base = base;
    nd.lambda_count = std::max(rows, cols);
    return push(std::move(nd));
  }

  int mux(std::string id, int stage, std::string cell, int inputs) {
    Node nd;
    nd.kind = NodeKind::Mux;
    nd.id = std::move(id);
    nd.stage = stage;
    nd.cell = cell;
    nd.cell_out = std::move(cell);
    nd.in_ports = inputs;
    return push(std::move(nd));
  }

  int demux(std::string id, int stage, std::string cell, int outputs) {
    Node nd;
    nd.kind = NodeKind::Demux;
    nd.id = std::move(id);
    nd.stage = stage;
    nd.cell = cell;
    nd.cell_out = std::move(cell);
    nd.out_ports = outputs;
    return push(std::move(nd));
  }

  void link(int src, int src_port, int dst, int dst_port,
            std::vector<int> carried) {
    std::sort(carried.begin(), carried.end());
    links_.push_back({src, src_port, dst, dst_port, set(std::move(carried))});
  }

  /// Input set of AWG port a, in absolute wavelengths.
  std::vector<int> awg_in(int awg, int a) const {
    const auto &nd = nodes_[static_cast<std::size_t>(awg)];
    return shifted_sorted(input_wavelength_set(nd.awg_spec(), a), nd.base);
  }
  std::vector<int> awg_out(int awg, int b) const {
    const auto &nd = nodes_[static_cast<std::size_t>(awg)];
    return shifted_sorted(output_wavelength_set(nd.awg_spec(), b), nd.base);
  }

  Node &node(int i) { return nodes_[static_cast<std::size_t>(i)]; }

  Topology finish() && {
    return Topology(spec_, universe_, std::move(nodes_), std::move(links_));
  }

private:
  WavelengthSet set(std::vector<int> v) const {
    return WavelengthSet(universe_, std::move(v));
  }
  int push(Node nd) {
    nodes_.push_back(std::move(nd));
    return static_cast<int>(nodes_.size()) - 1;
  }

  NetworkSpec spec_;
  int universe_;
  std::vector<Node> nodes_;
  std::vector<Link> links_;
};

int universe_for(const NetworkSpec &spec) {
  return std::max({spec.lambda_count(), spec.n, spec.output_channels()});
}

std::string idx(const std::string &prefix, const char *what, int i) {
  return prefix + what + std::to_string(i);
}

struct Ports {
  std::vector<int> in_twc;
  std::vector<int> out_twc;
};

/// Width in stages of a B(n,k) level.
int level_width(int k) { return 4 * k - 3; }

/// S_A(n,r,m) body. When `outermost`, external fibers are attached and the
/// outer cells are named; otherwise the parent wires the edge modules.
Ports sa_core(Draft &g, int n, int r, int m, const std::string &prefix,
              int s0, bool outermost) {
  const std::string left = prefix + "L0";
  const std::string right = prefix + "R0";
  Ports ports;
  for (int a = 0; a < r; ++a)
    ports.in_twc.push_back(-1);

  // Nodes first, in stage order; the range of an input module needs the AWG.
  const AwgSpec first(r, m), second(m, r);
  for (int a = 0; a < r; ++a) {
    auto range = shifted_sorted(input_wavelength_set(first, a), 0);
    ports.in_twc[static_cast<std::size_t>(a)] =
        g.twc(idx(prefix, "in.", a), s0,
              outermost ? idx("", "ext.in.", a) : std::string(), left,
              iota_vec(0, n), std::move(range));
  }
  const int awg_l = g.awg(prefix + "awg.L0", s0 + 1, left, r, m, 0);
  std::vector<int> mids;
  for (int c = 0; c < m; ++c)
    mids.push_back(g.twc(idx(prefix, "mid.", c), s0 + 2, left, right,
                         g.awg_out(awg_l, c),
                         shifted_sorted(input_wavelength_set(second, c), 0)));
  const int awg_r = g.awg(prefix + "awg.R0", s0 + 3, right, m, r, 0);
  for (int b = 0; b < r; ++b)
    ports.out_twc.push_back(
        g.twc(idx(prefix, "out.", b), s0 + 4, right,
              outermost ? idx("", "ext.out.", b) : std::string(),
              g.awg_out(awg_r, b), iota_vec(0, n)));

  if (outermost)
    for (int a = 0; a < r; ++a)
      g.link(kExternal, 0, ports.in_twc[static_cast<std::size_t>(a)], 0,
             iota_vec(0, n));
  for (int a = 0; a < r; ++a)
    g.link(ports.in_twc[static_cast<std::size_t>(a)], 0, awg_l, a,
           g.awg_in(awg_l, a));
  for (int c = 0; c < m; ++c)
    g.link(awg_l, c, mids[static_cast<std::size_t>(c)], 0, g.awg_out(awg_l, c));
  for (int c = 0; c < m; ++c)
    g.link(mids[static_cast<std::size_t>(c)], 0, awg_r, c, g.awg_in(awg_r, c));
  for (int b = 0; b < r; ++b)
    g.link(awg_r, b, ports.out_twc[static_cast<std::size_t>(b)], 0,
           g.awg_out(awg_r, b));
  if (outermost)
    for (int b = 0; b < r; ++b)
      g.link(ports.out_twc[static_cast<std::size_t>(b)], 0, kExternal, 0,
             iota_vec(0, n));
  return ports;
}

/// One level of B(n,k): input TWC column, n^(k-2) input AWGs, n
/// sub-networks B(n,k-1), n^(k-2) output AWGs, output TWC column.
Ports b_level(Draft &g, int n, int k, const std::string &prefix, int s0,
              bool outermost) {
  if (k == 2)
    return sa_core(g, n, n, n, prefix, s0, outermost);

  const int r = ipow(n, k - 1);
  const int groups = r / n;
  Ports ports;

  for (int a = 0; a < r; ++a)
    ports.in_twc.push_back(g.twc(idx(prefix, "in.", a), s0,
                                 outermost ? idx("", "ext.in.", a)
                                           : std::string(),
                                 idx(prefix, "L", a / n), iota_vec(0, n),
                                 iota_vec(0, n)));
  std::vector<int> awg_l;
  for (int A = 0; A < groups; ++A)
    awg_l.push_back(
        g.awg(idx(prefix, "awg.L", A), s0 + 1, idx(prefix, "L", A), n, n, 0));

  if (outermost)
    for (int a = 0; a < r; ++a)
      g.link(kExternal, 0, ports.in_twc[static_cast<std::size_t>(a)], 0,
             iota_vec(0, n));
  for (int a = 0; a < r; ++a) {
    const int A = a / n;
    g.link(ports.in_twc[static_cast<std::size_t>(a)], 0,
           awg_l[static_cast<std::size_t>(A)], a % n,
           g.awg_in(awg_l[static_cast<std::size_t>(A)], a % n));
  }

  std::vector<Ports> children;
  for (int c = 0; c < n; ++c)
    children.push_back(b_level(g, n, k - 1, idx(prefix, "g", c) + ".", s0 + 2,
                               false));

  for (int A = 0; A < groups; ++A) {
    const int awg = awg_l[static_cast<std::size_t>(A)];
    for (int c = 0; c < n; ++c) {
      const int child_in = children[static_cast<std::size_t>(c)]
                               .in_twc[static_cast<std::size_t>(A)];
      g.node(child_in).cell = idx(prefix, "L", A);
      g.link(awg, c, child_in, 0, g.awg_out(awg, c));
    }
  }

  const int s_out = s0 + 2 + level_width(k - 1);
  std::vector<int> awg_r;
  for (int B = 0; B < groups; ++B)
    awg_r.push_back(
        g.awg(idx(prefix, "awg.R", B), s_out, idx(prefix, "R", B), n, n, 0));
  for (int B = 0; B < groups; ++B) {
    const int awg = awg_r[static_cast<std::size_t>(B)];
    for (int c = 0; c < n; ++c) {
      const int child_out = children[static_cast<std::size_t>(c)]
                                .out_twc[static_cast<std::size_t>(B)];
      g.node(child_out).cell_out = idx(prefix, "R", B);
      g.link(child_out, 0, awg, c, g.awg_in(awg, c));
    }
  }

  for (int b = 0; b < r; ++b)
    ports.out_twc.push_back(g.twc(
        idx(prefix, "out.", b), s_out + 1, idx(prefix, "R", b / n),
        outermost ? idx("", "ext.out.", b) : std::string(),
        g.awg_out(awg_r[static_cast<std::size_t>(b / n)], b % n),
        iota_vec(0, n)));
  for (int b = 0; b < r; ++b) {
    const int B = b / n;
    g.link(awg_r[static_cast<std::size_t>(B)], b % n,
           ports.out_twc[static_cast<std::size_t>(b)], 0,
           g.awg_out(awg_r[static_cast<std::size_t>(B)], b % n));
  }
  if (outermost)
    for (int b = 0; b < r; ++b)
      g.link(ports.out_twc[static_cast<std::size_t>(b)], 0, kExternal, 0,
             iota_vec(0, n));
  return ports;
}

} // namespace

Topology build_two_stage(int n, int r, int m) {
  const auto spec = NetworkSpec::two_stage(n, r, m);
  Draft g(spec, universe_for(spec));
  const AwgSpec awg_spec(r, m);

  std::vector<int> ins, outs;
  for (int a = 0; a < r; ++a)
    ins.push_back(g.twc(idx("", "in.", a), 0, idx("", "ext.in.", a), "L0",
                        iota_vec(0, n),
                        shifted_sorted(input_wavelength_set(awg_spec, a), 0)));
  const int awg = g.awg("awg.L0", 1, "L0", r, m, 0);
  for (int b = 0; b < m; ++b)
    outs.push_back(g.twc(idx("", "out.", b), 2, "L0", idx("", "ext.out.", b),
                         g.awg_out(awg, b), iota_vec(0, r)));

  for (int a = 0; a < r; ++a)
    g.link(kExternal, 0, ins[static_cast<std::size_t>(a)], 0, iota_vec(0, n));
  for (int a = 0; a < r; ++a)
    g.link(ins[static_cast<std::size_t>(a)], 0, awg, a, g.awg_in(awg, a));
  for (int b = 0; b < m; ++b)
    g.link(awg, b, outs[static_cast<std::size_t>(b)], 0, g.awg_out(awg, b));
  for (int b = 0; b < m; ++b)
    g.link(outs[static_cast<std::size_t>(b)], 0, kExternal, 0, iota_vec(0, r));
  return std::move(g).finish();
}

Topology build_sa(int n, int r, int m) {
  const auto spec = NetworkSpec::sa(n, r, m);
  Draft g(spec, universe_for(spec));
  sa_core(g, n, r, m, "", 0, true);
  return std::move(g).finish();
}

Topology build_sb(int n, int d) {
  const auto spec = NetworkSpec::sb(n, d);
  Draft g(spec, universe_for(spec));
  const int r = spec.r;
  const int groups = r / n;
  // A single first-stage AWG needs no Mux/DeMux; the network is S_A(n,n,n).
  const bool muxed = groups > 1;
  const int s_mid = muxed ? 3 : 2;
  const int s_awg_r = muxed ? 5 : 3;

  std::vector<int> ins, awg_l, muxes, mids, demuxes, awg_r, outs;
  for (int a = 0; a < r; ++a)
    ins.push_back(g.twc(idx("", "in.", a), 0, idx("", "ext.in.", a), "L0",
                        iota_vec(0, n), iota_vec((a / n) * n, n)));
  for (int A = 0; A < groups; ++A)
    awg_l.push_back(g.awg(idx("", "awg.L", A), 1, "L0", n, n, A * n));
  if (muxed)
    for (int c = 0; c < n; ++c)
      muxes.push_back(g.mux(idx("", "mux.", c), 2, "L0", groups));
  for (int c = 0; c < n; ++c)
    mids.push_back(g.twc(idx("", "mid.", c), s_mid, "L0", "R0", iota_vec(0, r),
                         iota_vec(0, r)));
  if (muxed)
    for (int c = 0; c < n; ++c)
      demuxes.push_back(g.demux(idx("", "demux.", c), 4, "R0", groups));
  for (int B = 0; B < groups; ++B)
    awg_r.push_back(g.awg(idx("", "awg.R", B), s_awg_r, "R0", n, n, B * n));
  for (int b = 0; b < r; ++b)
    outs.push_back(g.twc(idx("", "out.", b), s_awg_r + 1, "R0",
                         idx("", "ext.out.", b), iota_vec((b / n) * n, n),
                         iota_vec(0, n)));

  auto at = [](const std::vector<int> &v, int i) {
    return v[static_cast<std::size_t>(i)];
  };
  for (int a = 0; a < r; ++a)
    g.link(kExternal, 0, at(ins, a), 0, iota_vec(0, n));
  for (int a = 0; a < r; ++a)
    g.link(at(ins, a), 0, at(awg_l, a / n), a % n,
           g.awg_in(at(awg_l, a / n), a % n));
  for (int A = 0; A < groups; ++A)
    for (int c = 0; c < n; ++c) {
      if (muxed)
        g.link(at(awg_l, A), c, at(muxes, c), A, g.awg_out(at(awg_l, A), c));
      else
        g.link(at(awg_l, A), c, at(mids, c), 0, g.awg_out(at(awg_l, A), c));
    }
  if (muxed)
    for (int c = 0; c < n; ++c)
      g.link(at(muxes, c), 0, at(mids, c), 0, iota_vec(0, r));
  if (muxed) {
    for (int c = 0; c < n; ++c)
      g.link(at(mids, c), 0, at(demuxes, c), 0, iota_vec(0, r));
    for (int c = 0; c < n; ++c)
      for (int B = 0; B < groups; ++B)
        g.link(at(demuxes, c), B, at(awg_r, B), c, g.awg_in(at(awg_r, B), c));
  } else {
    for (int c = 0; c < n; ++c)
      g.link(at(mids, c), 0, at(awg_r, 0), c, g.awg_in(at(awg_r, 0), c));
  }
  for (int b = 0; b < r; ++b)
    g.link(at(awg_r, b / n), b % n, at(outs, b), 0,
           g.awg_out(at(awg_r, b / n), b % n));
  for (int b = 0; b < r; ++b)
    g.link(at(outs, b), 0, kExternal, 0, iota_vec(0, n));
  return std::move(g).finish();
}

Topology build_recursive(int n, int d) {
  const auto spec = NetworkSpec::b(n, d);
  Draft g(spec, universe_for(spec));
  b_level(g, n, d, "", 0, true);
  return std::move(g).finish();
}

Topology build_awg_crossbar(int ports) {
  const auto spec = NetworkSpec::crossbar(ports);
  Draft g(spec, universe_for(spec));
  const AwgSpec awg_spec(ports, ports);
  std::vector<int> ins;
  for (int a = 0; a < ports; ++a)
    ins.push_back(g.twc(idx("", "in.", a), 0, idx("", "ext.in.", a), "L0",
                        {0},
                        shifted_sorted(input_wavelength_set(awg_spec, a), 0)));
  const int awg = g.awg("awg.L0", 1, "L0", ports, ports, 0);
  for (int a = 0; a < ports; ++a)
    g.link(kExternal, 0, ins[static_cast<std::size_t>(a)], 0, {0});
  for (int a = 0; a < ports; ++a)
    g.link(ins[static_cast<std::size_t>(a)], 0, awg, a, g.awg_in(awg, a));
  for (int b = 0; b < ports; ++b)
    g.link(awg, b, kExternal, 0, g.awg_out(awg, b));
  return std::move(g).finish();
}

Topology build(const NetworkSpec &spec) {
  switch (spec.family) {
  case Family::TwoStage:
    return build_two_stage(spec.n, spec.r, spec.m);
  case Family::SA:
    return build_sa(spec.n, spec.r, spec.m);
  case Family::SB:
    return build_sb(spec.n, spec.d.value());
  case Family::B:
    return build_recursive(spec.n, spec.d.value());
  case Family::Crossbar:
    return build_awg_crossbar(spec.N);
  }
  throw Error(ErrorCode::InvalidParameter, "unknown family");
}

ComponentCensus census(const Topology &topology) {
  ComponentCensus c;
  c.spec = topology.spec();
  std::set<int> twc_stages, awg_stages;
  std::set<std::pair<int, int>> awg_sizes;
  int max_stage = 0;
  for (const auto &nd : topology.nodes()) {
    max_stage = std::max(max_stage, nd.stage);
    switch (nd.kind) {
    case NodeKind::Twc:
      twc_stages.insert(nd.stage);
      ++c.twc_module_count;
      c.twc_count += nd.twc->fan_in();
      c.max_conversion_range =
          std::max(c.max_conversion_range, nd.twc->conversion_range());
      break;
    case NodeKind::Awg:
      awg_stages.insert(nd.stage);
      ++c.awg_count;
      awg_sizes.insert({nd.in_ports, nd.out_ports});
      break;
    case NodeKind::Mux:
      ++c.mux_count;
      break;
    case NodeKind::Demux:
      ++c.demux_count;
      break;
    }
  }
  c.twc_columns = static_cast<int>(twc_stages.size());
  c.awg_columns = static_cast<int>(awg_stages.size());
  c.stage_count = topology.nodes().empty() ? 0 : max_stage + 1;
  if (awg_sizes.size() == 1)
    c.awg_size = *awg_sizes.begin();

  c.boundary_links.assign(static_cast<std::size_t>(std::max(0, max_stage)), 0);
  std::set<int> wavelengths;
  for (const auto &l : topology.links()) {
    if (l.src == kExternal || l.dst == kExternal)
      continue;
    const int s = topology.node(l.src).stage;
    if (topology.node(l.dst).stage == s + 1)
      ++c.boundary_links[static_cast<std::size_t>(s)];
    wavelengths.insert(l.carried.members().begin(), l.carried.members().end());
  }
  if (!c.boundary_links.empty() &&
      std::all_of(c.boundary_links.begin(), c.boundary_links.end(),
                  [&](int v) { return v == c.boundary_links.front(); }))
    c.links_per_boundary = c.boundary_links.front();
  c.wavelength_granularity = static_cast<int>(wavelengths.size());
  return c;
}

PhysicalEstimate estimate_physical(const ComponentCensus &census,
                                   const PhysicalParams &params) {
  if (census.spec.family != Family::B)
    throw Error(ErrorCode::InvalidParameter,
                "physical estimate is defined for B(n,d) only");
  if (!(params.p >= 0.0) || !(params.insertion_loss_per_awg >= 0.0))
    throw Error(ErrorCode::InvalidParameter,
                "penalty and insertion loss must be non-negative");
  if (census.spec.n < 2)
    throw Error(ErrorCode::InvalidParameter, "log_n N needs n >= 2");
  const auto log_n = exact_log(census.spec.N, census.spec.n);
  if (!log_n)
    throw Error(ErrorCode::NotAPower, "N is not a power of n");

  PhysicalEstimate e;
  e.total_penalty_db = 2.0 * params.p * static_cast<double>(*log_n);
  e.total_insertion_loss_db =
      params.insertion_loss_per_awg * static_cast<double>(census.awg_columns);
  e.stage_count = census.awg_columns;
  return e;
}

namespace {

/// Next (link, wavelength) after `node` for a fixed output wavelength; -1 if
/// the node has no way forward.
int awg_exit_port(const Node &nd, int in_port, WavelengthIndex w) {
  const int local = w - nd.base;
  if (local < 0 || local >= nd.lambda_count)
    return -1;
  const int k = mod(local - in_port, nd.lambda_count);
  return k < nd.out_ports ? k : -1;
}

int demux_exit_port(const Topology &t, int node, WavelengthIndex w) {
  const auto &nd = t.node(node);
  for (int p = 0; p < nd.out_ports; ++p) {
    const int l = t.out_link(node, p);
    if (l >= 0 && t.link(l).carried.contains(w))
      return p;
  }
  return -1;
}

} // namespace

std::vector<Hop> trace(const Topology &topology, int alpha,
                       WavelengthIndex omega,
                       std::span<const WavelengthIndex> conversions) {
  if (alpha < 0 || alpha >= topology.spec().input_modules())
    throw Error(ErrorCode::IndexOutOfRange, "input module out of range");
  std::vector<Hop> hops{{topology.input_link(alpha), omega}};
  std::size_t next_conversion = 0;

  // Every hop advances one stage; the bound only guards malformed graphs.
  for (std::size_t guard = 0; guard <= topology.links().size(); ++guard) {
    const auto &here = topology.link(hops.back().link);
    if (!here.carried.contains(hops.back().wavelength))
      throw Error(ErrorCode::IndexOutOfRange,
                  "wavelength " + std::to_string(hops.back().wavelength) +
                      " not carried by link " +
                      std::to_string(hops.back().link));
    if (here.dst == kExternal) {
      if (next_conversion != conversions.size())
        throw Error(ErrorCode::InvalidParameter,
                    "path ended with unused conversions");
      return hops;
    }
    const auto &nd = topology.node(here.dst);
    WavelengthIndex w = hops.back().wavelength;
    int port = -1;
    switch (nd.kind) {
    case NodeKind::Twc:
      if (next_conversion >= conversions.size())
        throw Error(ErrorCode::InvalidParameter,
                    "no conversion left for " + nd.id);
      w = conversions[next_conversion++];
      port = 0;
      break;
    case NodeKind::Awg:
      port = awg_exit_port(nd, here.dst_port, w);
      break;
    case NodeKind::Mux:
      port = 0;
      break;
    case NodeKind::Demux:
      port = demux_exit_port(topology, here.dst, w);
      break;
    }
    const int next = port < 0 ? -1 : topology.out_link(here.dst, port);
    if (next < 0)
      throw Error(ErrorCode::IndexOutOfRange,
                  "wavelength " + std::to_string(w) + " has no exit at " + nd.id);
    hops.push_back({next, w});
  }
  throw Error(ErrorCode::InvalidParameter, "path does not terminate");
}

std::vector<std::string> check_carried_sets(const Topology &topology) {
  std::vector<std::string> problems;
  auto subset = [](const WavelengthSet &a, const std::vector<int> &b) {
    return std::all_of(a.members().begin(), a.members().end(), [&](int w) {
      return std::find(b.begin(), b.end(), w) != b.end();
    });
  };
  for (std::size_t li = 0; li < topology.links().size(); ++li) {
    const auto &l = topology.links()[li];
    const std::string name = "link " + std::to_string(li);
    if (l.src != kExternal) {
      const auto &nd = topology.node(l.src);
      switch (nd.kind) {
      case NodeKind::Twc:
        if (!subset(l.carried, nd.twc->range().members()))
          problems.push_back(name + " exceeds the range set of " + nd.id);
        break;
      case NodeKind::Awg:
        if (l.carried.members() !=
            shifted_sorted(output_wavelength_set(nd.awg_spec(), l.src_port),
                           nd.base))
          problems.push_back(name + " does not carry the output set of " +
                             nd.id);
        break;
      case NodeKind::Mux: {
        std::vector<int> all;
        for (int p = 0; p < nd.in_ports; ++p)
          if (int in = topology.in_link(l.src, p); in >= 0)
            for (auto w : topology.link(in).carried.members())
              all.push_back(w);
        if (!subset(l.carried, all))
          problems.push_back(name + " carries wavelengths no Mux input has");
        break;
      }
      case NodeKind::Demux: {
        const int in = topology.in_link(l.src, 0);
        if (in < 0 || !subset(l.carried, topology.link(in).carried.members()))
          problems.push_back(name + " carries wavelengths the DeMux never sees");
        break;
      }
      }
    }
    if (l.dst != kExternal) {
      const auto &nd = topology.node(l.dst);
      if (nd.kind == NodeKind::Twc &&
          !subset(l.carried, nd.twc->domain().members()))
        problems.push_back(name + " exceeds the domain set of " + nd.id);
      if (nd.kind == NodeKind::Awg &&
          !subset(l.carried,
                  shifted_sorted(input_wavelength_set(nd.awg_spec(), l.dst_port),
                                 nd.base)))
        problems.push_back(name + " exceeds the input set of " + nd.id);
    }
  }
  return problems;
}

std::vector<std::string> check_cells(const Topology &topology) {
  std::vector<std::string> problems;
  for (std::size_t li = 0; li < topology.links().size(); ++li) {
    const auto &l = topology.links()[li];
    if (l.src == kExternal || l.dst == kExternal)
      continue;
    const auto &a = topology.node(l.src);
    const auto &b = topology.node(l.dst);
    if (a.cell_out.empty() || b.cell.empty() || a.cell_out != b.cell)
      problems.push_back("link " + std::to_string(li) + " joins cell '" +
                         a.cell_out + "' to cell '" + b.cell + "'");
  }
  return problems;
}

namespace {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x)
      x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
  std::vector<std::size_t> parent_;
};

} // namespace

CellIndependenceReport check_cell_independence(const Topology &topology) {
  // Element 2i is the input side of node i, 2i+1 its output side. Only
  // TWC-modules keep the two sides apart.
  const auto &nodes = topology.nodes();
  DisjointSets sets(2 * nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].kind != NodeKind::Twc)
      sets.unite(2 * i, 2 * i + 1);
  for (const auto &l : topology.links())
    if (l.src != kExternal && l.dst != kExternal)
      sets.unite(2 * static_cast<std::size_t>(l.src) + 1,
                 2 * static_cast<std::size_t>(l.dst));

  std::map<int, std::vector<std::size_t>> columns;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].kind == NodeKind::Awg)
      columns[nodes[i].stage].push_back(i);

  for (const auto &[stage, awgs] : columns) {
    for (std::size_t x = 0; x < awgs.size(); ++x) {
      for (std::size_t y = x + 1; y < awgs.size(); ++y) {
        const auto &a = nodes[awgs[x]];
        const auto &b = nodes[awgs[y]];
        if (a.base != b.base || a.lambda_count != b.lambda_count)
          return {false, a.id + " and " + b.id + " in column " +
                             std::to_string(stage) +
                             " use different wavelength sets"};
        if (sets.find(2 * awgs[x]) == sets.find(2 * awgs[y]))
          return {false, a.id + " and " + b.id +
                             " are connected without crossing a TWC boundary"};
      }
    }
  }
  return {};
}

std::set<std::pair<int, int>> reachable_outputs(const Topology &topology,
                                                int alpha,
                                                WavelengthIndex omega) {
  std::set<std::pair<int, int>> found;
  std::set<std::pair<int, int>> seen;
  std::deque<std::pair<int, int>> queue;
  auto push = [&](int link, int w) {
    if (link < 0 || !topology.link(link).carried.contains(w))
      return;
    if (seen.insert({link, w}).second)
      queue.emplace_back(link, w);
  };
  push(topology.input_link(alpha), omega);

  while (!queue.empty()) {
    const auto [li, w] = queue.front();
    queue.pop_front();
    const auto &l = topology.link(li);
    if (l.dst == kExternal) {
      const bool converted =
          l.src != kExternal && topology.node(l.src).kind == NodeKind::Twc;
      found.insert({topology.output_module_of(li), converted ? w : 0});
      continue;
    }
    const auto &nd = topology.node(l.dst);
    switch (nd.kind) {
    case NodeKind::Twc:
      if (nd.twc->domain().contains(w))
        for (auto sigma : nd.twc->range().members())
          push(topology.out_link(l.dst, 0), sigma);
      break;
    case NodeKind::Awg:
      if (int p = awg_exit_port(nd, l.dst_port, w); p >= 0)
        push(topology.out_link(l.dst, p), w);
      break;
    case NodeKind::Mux:
      push(topology.out_link(l.dst, 0), w);
      break;
    case NodeKind::Demux:
      if (int p = demux_exit_port(topology, l.dst, w); p >= 0)
        push(topology.out_link(l.dst, p), w);
      break;
    }
  }
  return found;
}

} // namespace awgclos
