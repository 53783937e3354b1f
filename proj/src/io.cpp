#include "awgclos/io.hpp"

#include <iomanip>
#include <map>
#include <sstream>

namespace awgclos {

namespace {

[[noreturn]] void parse_fail(const std::string &what) {
  throw Error(ErrorCode::ParseError, what);
}

/// Wraps nlohmann's accessors so every schema problem surfaces as ParseError.
template <class T> T field(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    parse_fail(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception &e) {
    parse_fail(std::string("field '") + key + "': " + e.what());
  }
}

const Json &array_field(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
    parse_fail(std::string("field '") + key + "' must be an array");
  return j.at(key);
}

WavelengthSet set_from(const Json &j, int universe) {
  try {
    return WavelengthSet(universe, j.get<std::vector<int>>());
  } catch (const nlohmann::json::exception &e) {
    parse_fail(std::string("wavelength set: ") + e.what());
  } catch (const Error &e) {
    parse_fail(std::string("wavelength set: ") + e.what());
  }
}

} // namespace

Json parse_json(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    parse_fail(e.what());
  }
}

Json to_json(const NetworkSpec &spec) {
  Json j;
  j["family"] = std::string(to_string(spec.family));
  j["n"] = spec.n;
  j["r"] = spec.r;
  j["m"] = spec.m;
  j["d"] = spec.d ? Json(*spec.d) : Json(nullptr);
  j["N"] = spec.N;
  return j;
}

NetworkSpec spec_from_json(const Json &j) {
  Family f;
  try {
    f = family_from_string(field<std::string>(j, "family"));
  } catch (const Error &e) {
    parse_fail(e.what());
  }
  const int n = field<int>(j, "n");
  auto opt = [&](const char *key) -> std::optional<int> {
    if (!j.contains(key) || j.at(key).is_null())
      return std::nullopt;
    return field<int>(j, key);
  };
  auto need = [&](const char *key) {
    auto v = opt(key);
    if (!v)
      parse_fail(std::string("missing field '") + key + "'");
    return *v;
  };

  NetworkSpec spec;
  try {
    switch (f) {
    case Family::TwoStage:
      spec = NetworkSpec::two_stage(n, need("r"), need("m"));
      break;
    case Family::SA:
      spec = NetworkSpec::sa(n, need("r"), need("m"));
      break;
    case Family::SB:
      spec = NetworkSpec::sb(n, need("d"));
      break;
    case Family::B:
      spec = NetworkSpec::b(n, need("d"));
      break;
    case Family::Crossbar:
      spec = NetworkSpec::crossbar(need("N"));
      break;
    }
  } catch (const Error &e) {
    parse_fail(e.what());
  }
  for (const char *key : {"r", "m", "N"}) {
    auto v = opt(key);
    const int want = key[0] == 'r' ? spec.r : key[0] == 'm' ? spec.m : spec.N;
    if (v && *v != want)
      parse_fail(std::string("field '") + key + "' = " + std::to_string(*v) +
                 " disagrees with the family (expected " +
                 std::to_string(want) + ")");
  }
  return spec;
}

Json to_json(const Call &c) {
  return Json{{"alpha", c.alpha},
              {"omega", c.omega},
              {"beta", c.beta},
              {"omega_prime", c.omega_prime}};
}

Call call_from_json(const Json &j) {
  return {field<int>(j, "alpha"), field<int>(j, "omega"), field<int>(j, "beta"),
          field<int>(j, "omega_prime")};
}

Json to_json(const CallFile &f) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < f.calls.size(); ++i) {
    Json c = to_json(f.calls[i]);
    if (f.gammas)
      c["gamma"] = f.gammas->at(i);
    arr.push_back(std::move(c));
  }
  return Json{{"calls", std::move(arr)}};
}

CallFile call_file_from_json(const Json &j) {
  const Json &arr = j.is_array() ? j : array_field(j, "calls");
  CallFile f;
  std::vector<int> gammas;
  for (const auto &c : arr) {
    f.calls.push_back(call_from_json(c));
    if (c.contains("gamma"))
      gammas.push_back(field<int>(c, "gamma"));
  }
  if (!f.calls.empty() && gammas.size() == f.calls.size())
    f.gammas = std::move(gammas);
  else if (!gammas.empty())
    parse_fail("either every call or no call may carry a gamma");
  return f;
}

Json to_json(const RouteAssignment &a) {
  Json routes = Json::array();
  for (const auto &rt : a.routes) {
    Json hops = Json::array();
    for (const auto &h : rt.hops)
      hops.push_back({{"link", h.link}, {"wavelength", h.wavelength}});
    Json subs = Json::array();
    for (const auto &s : rt.subcalls)
      subs.push_back({{"level", s.level},
                      {"cell", s.cell},
                      {"in_module", s.in_module},
                      {"in_wavelength", s.in_wavelength},
                      {"out_module", s.out_module},
                      {"out_wavelength", s.out_wavelength}});
    routes.push_back({{"call", to_json(rt.call)},
                      {"gammas", rt.gammas},
                      {"conversions", rt.conversions},
                      {"hops", std::move(hops)},
                      {"subcalls", std::move(subs)}});
  }
  return Json{{"routes", std::move(routes)}};
}

RouteAssignment assignment_from_json(const Json &j) {
  RouteAssignment a;
  for (const auto &r : array_field(j, "routes")) {
    CallRoute rt;
    rt.call = call_from_json(field<Json>(r, "call"));
    rt.gammas = field<std::vector<int>>(r, "gammas");
    rt.conversions = field<std::vector<int>>(r, "conversions");
    for (const auto &h : array_field(r, "hops"))
      rt.hops.push_back({field<int>(h, "link"), field<int>(h, "wavelength")});
    for (const auto &s : array_field(r, "subcalls"))
      rt.subcalls.push_back({field<int>(s, "level"),
                             field<std::string>(s, "cell"),
                             field<int>(s, "in_module"),
                             field<int>(s, "in_wavelength"),
                             field<int>(s, "out_module"),
                             field<int>(s, "out_wavelength")});
    a.routes.push_back(std::move(rt));
  }
  return a;
}

Json to_json(const Topology &t, const RouteAssignment *assignment) {
  Json nodes = Json::array();
  for (const auto &nd : t.nodes()) {
    Json o{{"id", nd.id},
           {"kind", std::string(to_string(nd.kind))},
           {"stage", nd.stage},
           {"cell", nd.cell},
           {"cell_out", nd.cell_out},
           {"in_ports", nd.in_ports},
           {"out_ports", nd.out_ports}};
    if (nd.kind == NodeKind::Awg) {
      o["base"] = nd.base;
      o["lambda_count"] = nd.lambda_count;
    }
    if (nd.twc) {
      o["domain"] = nd.twc->domain().members();
      o["range"] = nd.twc->range().members();
    }
    nodes.push_back(std::move(o));
  }
  auto endpoint = [&](int i) {
    return i == kExternal ? Json(nullptr) : Json(t.node(i).id);
  };
  Json links = Json::array();
  for (const auto &l : t.links())
    links.push_back({{"src", endpoint(l.src)},
                     {"src_port", l.src_port},
                     {"dst", endpoint(l.dst)},
                     {"dst_port", l.dst_port},
                     {"carried", l.carried.members()}});

  Json j{{"schema_version", kSchemaVersion},
         {"spec", to_json(t.spec())},
         {"universe", t.universe()},
         {"nodes", std::move(nodes)},
         {"links", std::move(links)}};
  if (assignment)
    j["assignment"] = to_json(*assignment);
  return j;
}

Artifact artifact_from_json(const Json &j) {
  const int version = field<int>(j, "schema_version");
  if (version != kSchemaVersion)
    parse_fail("unsupported schema_version " + std::to_string(version));
  const auto spec = spec_from_json(field<Json>(j, "spec"));
  const int universe = field<int>(j, "universe");

  std::vector<Node> nodes;
  std::map<std::string, int> index;
  for (const auto &o : array_field(j, "nodes")) {
    Node nd;
    nd.id = field<std::string>(o, "id");
    try {
      nd.kind = node_kind_from_string(field<std::string>(o, "kind"));
    } catch (const Error &e) {
      parse_fail(e.what());
    }
    nd.stage = field<int>(o, "stage");
    nd.cell = field<std::string>(o, "cell");
    nd.cell_out = field<std::string>(o, "cell_out");
    nd.in_ports = field<int>(o, "in_ports");
    nd.out_ports = field<int>(o, "out_ports");
    if (nd.kind == NodeKind::Awg) {
      nd.base = field<int>(o, "base");
      nd.lambda_count = field<int>(o, "lambda_count");
    }
    if (nd.kind == NodeKind::Twc) {
      try {
        nd.twc.emplace(set_from(field<Json>(o, "domain"), universe),
                       set_from(field<Json>(o, "range"), universe));
      } catch (const Error &e) {
        parse_fail(nd.id + ": " + e.what());
      }
    }
    if (!index.emplace(nd.id, static_cast<int>(nodes.size())).second)
      parse_fail("duplicate node id '" + nd.id + "'");
    nodes.push_back(std::move(nd));
  }

  auto resolve = [&](const Json &o, const char *key) {
    if (!o.contains(key))
      parse_fail(std::string("missing field '") + key + "'");
    if (o.at(key).is_null())
      return kExternal;
    const auto id = field<std::string>(o, key);
    auto it = index.find(id);
    if (it == index.end())
      parse_fail("link refers to unknown node '" + id + "'");
    return it->second;
  };
  std::vector<Link> links;
  for (const auto &o : array_field(j, "links"))
    links.push_back({resolve(o, "src"), field<int>(o, "src_port"),
                     resolve(o, "dst"), field<int>(o, "dst_port"),
                     set_from(field<Json>(o, "carried"), universe)});

  Artifact out{[&] {
                 try {
                   return Topology(spec, universe, std::move(nodes),
                                   std::move(links));
                 } catch (const Error &e) {
                   parse_fail(std::string("topology: ") + e.what());
                 }
               }(),
               std::nullopt};
  if (j.contains("assignment") && !j.at("assignment").is_null())
    out.assignment = assignment_from_json(j.at("assignment"));
  return out;
}

Json to_json(const ComponentCensus &c) {
  Json j{{"spec", to_json(c.spec)},
         {"twc_columns", c.twc_columns},
         {"awg_columns", c.awg_columns},
         {"twc_modules", c.twc_module_count},
         {"awgs", c.awg_count},
         {"muxes", c.mux_count},
         {"demuxes", c.demux_count},
         {"stages", c.stage_count}};
  j["awg_size"] = c.awg_size ? Json::array({c.awg_size->first, c.awg_size->second})
                             : Json(nullptr);
  j["boundary_links"] = c.boundary_links;
  j["links_per_boundary"] =
      c.links_per_boundary ? Json(*c.links_per_boundary) : Json(nullptr);
  j["wavelength_granularity"] = c.wavelength_granularity;
  j["max_conversion_range"] = c.max_conversion_range;
  j["twcs"] = c.twc_count;
  return j;
}

Json to_json(const PhysicalEstimate &e) {
  return Json{{"total_penalty_db", e.total_penalty_db},
              {"total_insertion_loss_db", e.total_insertion_loss_db},
              {"stage_count", e.stage_count}};
}

Json to_json(const VerificationReport &r) {
  Json vs = Json::array();
  for (const auto &v : r.violations)
    vs.push_back({{"kind", std::string(to_string(v.kind))},
                  {"calls", v.calls},
                  {"link", v.link},
                  {"node", v.node},
                  {"wavelength", v.wavelength},
                  {"message", v.message}});
  return Json{{"ok", r.ok},
              {"calls_checked", r.calls_checked},
              {"hops_checked", r.hops_checked},
              {"violations", std::move(vs)}};
}

Json to_json(const Utilization &u) {
  return Json{{"twc", u.twc},
              {"awg_channel", u.awg_channel},
              {"active_twcs", u.active_twcs},
              {"total_twcs", u.total_twcs},
              {"used_awg_channels", u.used_awg_channels},
              {"total_awg_channels", u.total_awg_channels}};
}

Json to_json(const RoutingTable &t) {
  Json rows = Json::array();
  for (int j = 0; j < t.rows(); ++j) {
    Json row = Json::array();
    for (int k = 0; k < t.cols(); ++k)
      row.push_back(t.at(j, k));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", t.rows()},
              {"cols", t.cols()},
              {"lambda_count", t.lambda_count()},
              {"entries", std::move(rows)}};
}

Json to_json(const OnlineEvent &e) {
  Json j{{"event", std::string(to_string(e.kind))}, {"call", e.call}};
  if (e.from >= 0)
    j["from"] = e.from;
  if (e.to >= 0)
    j["to"] = e.to;
  return j;
}

namespace {

std::string dot_quote(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + '"';
}

} // namespace

std::string to_dot(const Topology &t) {
  const auto &nodes = t.nodes();
  // Graph vertices: TWC-modules split into ".L" and ".R" halves.
  auto head = [&](int i) {
    const auto &nd = t.node(i);
    return nd.kind == NodeKind::Twc ? nd.id + ".L" : nd.id;
  };
  auto tail = [&](int i) {
    const auto &nd = t.node(i);
    return nd.kind == NodeKind::Twc ? nd.id + ".R" : nd.id;
  };

  struct Vertex {
    std::string name;
    std::string label;
    std::string shape;
    int stage;
  };
  std::map<std::string, std::vector<Vertex>> clusters;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto &nd = nodes[i];
    const int id = static_cast<int>(i);
    switch (nd.kind) {
    case NodeKind::Twc:
      clusters[nd.cell].push_back({head(id), nd.id + " L", "box", nd.stage});
      clusters[nd.cell_out].push_back({tail(id), nd.id + " R", "box", nd.stage});
      break;
    case NodeKind::Awg:
      clusters[nd.cell].push_back(
          {nd.id,
           nd.id + " " + std::to_string(nd.in_ports) + "x" +
               std::to_string(nd.out_ports),
           "diamond", nd.stage});
      break;
    case NodeKind::Mux:
    case NodeKind::Demux:
      clusters[nd.cell].push_back(
          {nd.id, nd.id, nd.kind == NodeKind::Mux ? "invtrapezium" : "trapezium",
           nd.stage});
      break;
    }
  }

  std::ostringstream os;
  os << "digraph " << dot_quote(std::string(to_string(t.spec().family))) << " {\n"
     << "  rankdir=LR;\n  node [fontsize=10];\n";
  int k = 0;
  for (const auto &[cell, vs] : clusters) {
    os << "  subgraph " << dot_quote("cluster_" + std::to_string(k++)) << " {\n"
       << "    label=" << dot_quote(cell) << ";\n";
    for (const auto &v : vs)
      os << "    " << dot_quote(v.name) << " [label=" << dot_quote(v.label)
         << ", shape=" << v.shape << ", stage=" << v.stage << "];\n";
    os << "  }\n";
  }

  std::map<int, std::vector<std::string>> ranks;
  for (const auto &[cell, vs] : clusters)
    for (const auto &v : vs)
      ranks[v.stage].push_back(v.name);
  for (const auto &[stage, names] : ranks) {
    os << "  { rank=same;";
    for (const auto &n : names)
      os << ' ' << dot_quote(n) << ';';
    os << " }\n";
  }

  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].kind == NodeKind::Twc)
      os << "  " << dot_quote(head(static_cast<int>(i))) << " -> "
         << dot_quote(tail(static_cast<int>(i)))
         << " [style=dashed, label=\"phi\"];\n";

  for (std::size_t li = 0; li < t.links().size(); ++li) {
    const auto &l = t.link(static_cast<int>(li));
    std::string label;
    for (std::size_t w = 0; w < l.carried.size(); ++w)
      label += (w ? "," : "") + std::to_string(l.carried[w]);
    if (l.src == kExternal) {
      const std::string ext = "in" + std::to_string(t.input_module_of(
                                         static_cast<int>(li)));
      os << "  " << dot_quote(ext) << " [shape=point];\n"
         << "  " << dot_quote(ext) << " -> " << dot_quote(head(l.dst));
    } else if (l.dst == kExternal) {
      const std::string ext = "out" + std::to_string(t.output_module_of(
                                          static_cast<int>(li)));
      os << "  " << dot_quote(ext) << " [shape=point];\n"
         << "  " << dot_quote(tail(l.src)) << " -> " << dot_quote(ext);
    } else {
      os << "  " << dot_quote(tail(l.src)) << " -> " << dot_quote(head(l.dst));
    }
    os << " [label=" << dot_quote(label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string format_route_table(const RouteAssignment &a) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "call" << std::setw(12) << "input"
     << std::setw(14) << "central" << std::setw(28) << "conversions"
     << "output\n";
  for (std::size_t i = 0; i < a.routes.size(); ++i) {
    const auto &rt = a.routes[i];
    std::string central;
    for (std::size_t k = 0; k < rt.gammas.size(); ++k)
      central += (k ? "." : "") + std::to_string(rt.gammas[k]);
    if (central.empty())
      central = "-";
    std::string chain;
    for (std::size_t k = 0; k < rt.conversions.size(); ++k)
      chain += (k ? "->" : "") + std::string("L") +
               std::to_string(rt.conversions[k]);
    os << std::setw(6) << ("C" + std::to_string(i))
       << std::setw(12)
       << ("I(" + std::to_string(rt.call.alpha) + ",L" +
           std::to_string(rt.call.omega) + ")")
       << std::setw(14) << central << std::setw(28) << chain << "O("
       << rt.call.beta << ",L" << rt.call.omega_prime << ")\n";
  }
  return os.str();
}

std::string format_census(const ComponentCensus &c) {
  std::ostringstream os;
  os << "family              " << to_string(c.spec.family) << '\n'
     << "N                   " << c.spec.N << '\n'
     << "twc columns         " << c.twc_columns << '\n'
     << "awg columns         " << c.awg_columns << '\n'
     << "twc modules         " << c.twc_module_count << '\n'
     << "awgs                " << c.awg_count << '\n'
     << "muxes / demuxes     " << c.mux_count << " / " << c.demux_count << '\n'
     << "stages              " << c.stage_count << '\n'
     << "awg size            ";
  if (c.awg_size)
    os << c.awg_size->first << 'x' << c.awg_size->second;
  else
    os << "mixed";
  os << "\nlinks per boundary  ";
  if (c.links_per_boundary)
    os << *c.links_per_boundary;
  else
    os << "varies";
  os << "\ngranularity         " << c.wavelength_granularity << '\n'
     << "max conversion      " << c.max_conversion_range << '\n'
     << "twcs                " << c.twc_count << '\n';
  return os.str();
}

} // namespace awgclos
