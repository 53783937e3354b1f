#include "awgclos/cli.hpp"

#include "awgclos/awg.hpp"
#include "awgclos/fabric.hpp"
#include "awgclos/io.hpp"
#include "awgclos/online.hpp"
#include "awgclos/rwa.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace awgclos {

namespace {

struct SpecOptions {
  std::string family;
  std::optional<int> n, r, m, d, N;

  void attach(CLI::App *cmd) {
    cmd->add_option("--family", family, "T, SA, SB, B or XBAR")->required();
    cmd->add_option("--n", n, "channels per input module");
    cmd->add_option("--r", r, "input/output modules (T, SA)");
    cmd->add_option("--m", m, "central modules (T, SA)");
    cmd->add_option("--d", d, "recursion depth (SB, B)");
    cmd->add_option("--N", N, "port count (XBAR)");
  }

  NetworkSpec resolve() const {
    const Family f = family_from_string(family);
    auto need = [](const std::optional<int> &v, const char *flag) {
      if (!v)
        throw Error(ErrorCode::InvalidParameter,
                    std::string(flag) + " is required for this family");
      return *v;
    };
    auto forbid = [&](const std::optional<int> &v, const char *flag) {
      if (v)
        throw Error(ErrorCode::InvalidParameter,
                    std::string(flag) + " does not apply to family " + family);
    };
    switch (f) {
    case Family::TwoStage:
    case Family::SA:
      forbid(d, "--d");
      forbid(N, "--N");
      return f == Family::SA
                 ? NetworkSpec::sa(need(n, "--n"), need(r, "--r"), need(m, "--m"))
                 : NetworkSpec::two_stage(need(n, "--n"), need(r, "--r"),
                                          need(m, "--m"));
    case Family::SB:
    case Family::B:
      forbid(r, "--r");
      forbid(m, "--m");
      forbid(N, "--N");
      return f == Family::SB ? NetworkSpec::sb(need(n, "--n"), need(d, "--d"))
                             : NetworkSpec::b(need(n, "--n"), need(d, "--d"));
    case Family::Crossbar:
      forbid(n, "--n");
      forbid(r, "--r");
      forbid(m, "--m");
      forbid(d, "--d");
      return NetworkSpec::crossbar(need(N, "--N"));
    }
    throw Error(ErrorCode::InvalidParameter, "unknown family");
  }
};

std::string read_source(const std::string &path, std::istream &in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f)
    throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  ss << f.rdbuf();
  return ss.str();
}

CallFile load_calls(const NetworkSpec &spec, const std::string &calls_path,
                    const std::string &load, std::uint64_t seed,
                    std::istream &in) {
  if (!calls_path.empty())
    return call_file_from_json(parse_json(read_source(calls_path, in)));
  if (load == "identity")
    return {full_load_identity(spec), std::nullopt};
  if (load == "random" || load == "full")
    return {random_permutation(spec, seed), std::nullopt};
  if (load == "empty")
    return {};
  throw Error(ErrorCode::InvalidParameter, "unknown load '" + load + "'");
}

/// Central-module count of the top-level conflict graph; 0 when the family
/// has no central stage.
int central_colors(const NetworkSpec &spec) {
  switch (spec.family) {
  case Family::SA:
    return spec.m;
  case Family::SB:
  case Family::B:
    return spec.n;
  default:
    return 0;
  }
}

void emit(std::ostream &out, const Json &j) { out << j.dump(2) << '\n'; }

struct Cli {
  Cli(std::istream &i, std::ostream &o, std::ostream &e)
      : in(i), out(o), err(e) {}

  std::istream &in;
  std::ostream &out;
  std::ostream &err;

  SpecOptions spec_opts;
  std::string format;
  std::string calls_path;
  std::string load;
  std::uint64_t seed = 0;
  int seeds = 10;
  bool diagnostics = true;
  std::string artifact_path = "-";
  double p = 0.0;
  double loss = 6.0;
  std::string what = "routing-table";
  std::optional<int> awg_r, awg_m;

  int build() {
    if (format.empty())
      format = "json";
    const auto topo = awgclos::build(spec_opts.resolve());
    const auto c = census(topo);
    spdlog::info("census:\n{}", format_census(c));
    if (format == "dot")
      out << to_dot(topo);
    else if (format == "table")
      out << format_census(c);
    else
      emit(out, to_json(topo));
    return kExitOk;
  }

  int route() {
    if (format.empty())
      format = "table";
    const auto spec = spec_opts.resolve();
    const auto topo = awgclos::build(spec);
    const auto file =
        load_calls(spec, calls_path, load.empty() ? "identity" : load, seed, in);
    RouteAssignment a;
    try {
      a = route_calls(topo, file.calls, file.gammas);
    } catch (const Error &e) {
      if (e.code() != ErrorCode::Infeasible &&
          e.code() != ErrorCode::CapacityExceeded)
        throw;
      err << "infeasible: " << e.what() << '\n';
      return kExitFailure;
    }
    const auto report = verify_contention_free(topo, a);
    if (format == "json")
      emit(out, to_json(topo, &a));
    else
      out << format_route_table(a);
    if (!report) {
      for (const auto &v : report.violations)
        err << to_string(v.kind) << ": " << v.message << '\n';
      return kExitFailure;
    }
    spdlog::info("{} calls routed and verified", a.routes.size());
    return kExitOk;
  }

  int verify() {
    if (format.empty())
      format = "table";
    const auto art = artifact_from_json(parse_json(read_source(artifact_path, in)));
    if (!art.assignment)
      throw Error(ErrorCode::ParseError, "artifact has no assignment");
    const auto report = verify_contention_free(art.topology, *art.assignment);
    if (format == "json") {
      emit(out, to_json(report));
    } else {
      out << (report.ok ? "PASS" : "FAIL") << ": " << report.calls_checked
          << " calls, " << report.hops_checked << " hops, "
          << report.violations.size() << " violations\n";
      for (const auto &v : report.violations)
        out << "  " << to_string(v.kind) << " link=" << v.link
            << " wavelength=" << v.wavelength << ": " << v.message << '\n';
    }
    return report.ok ? kExitOk : kExitFailure;
  }

  int bench() {
    if (load.empty())
      load = "full";
    if (seeds < 0)
      throw Error(ErrorCode::InvalidParameter, "--seeds must be >= 0");
    if (load != "full" && load != "random" && load != "identity")
      throw Error(ErrorCode::InvalidParameter,
                  "bench load must be full or identity");
    const auto spec = spec_opts.resolve();
    if (format.empty())
      format = "json";
    const auto topo = awgclos::build(spec);
    const int colors = central_colors(spec);

    int succeeded = 0;
    double twc_sum = 0.0, awg_sum = 0.0;
    long inserts = 0, rearranged = 0, rejected = 0;
    double solve_ms = 0.0;
    for (int s = 0; s < seeds; ++s) {
      const auto calls =
          load == "identity"
              ? full_load_identity(spec)
              : random_permutation(spec, seed + static_cast<std::uint64_t>(s));
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const auto a = route_calls(topo, calls);
        solve_ms += std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        if (verify_contention_free(topo, a)) {
          ++succeeded;
          const auto u = utilization(topo, a);
          twc_sum += u.twc;
          awg_sum += u.awg_channel;
        }
      } catch (const Error &e) {
        if (e.code() != ErrorCode::Infeasible &&
            e.code() != ErrorCode::CapacityExceeded)
          throw;
        spdlog::debug("seed {}: {}", seed + static_cast<std::uint64_t>(s),
                      e.what());
      }

      if (colors > 0) {
        EdgeColoring ec(spec.input_modules(), spec.output_modules(), colors);
        for (const auto &c : calls) {
          try {
            rearranged +=
                static_cast<long>(ec.insert(c.alpha, c.beta).recolored.size());
            ++inserts;
          } catch (const Error &e) {
            if (e.code() != ErrorCode::CapacityExceeded)
              throw;
            ++rejected;
          }
        }
      }
    }

    Json j;
    j["spec"] = to_json(spec);
    j["load"] = load == "random" ? "full" : load;
    j["seeds"] = seeds;
    j["first_seed"] = seed;
    j["succeeded"] = succeeded;
    if (seeds == 0) {
      j["success_rate"] = nullptr;
      j["utilization"] = nullptr;
    } else {
      j["success_rate"] = static_cast<double>(succeeded) / seeds;
      j["utilization"] =
          succeeded == 0
              ? Json(nullptr)
              : Json{{"twc", twc_sum / succeeded}, {"awg_channel", awg_sum / succeeded}};
    }
    if (colors > 0 && seeds > 0)
      j["online"] = {{"inserts", inserts},
                     {"rejected", rejected},
                     {"rearrangements", rearranged},
                     {"rearrangements_per_insert",
                      inserts ? static_cast<double>(rearranged) / inserts : 0.0}};
    else
      j["online"] = nullptr;
    if (diagnostics)
      j["diagnostics"] = {{"wall_clock_ms_per_solve",
                           succeeded ? solve_ms / succeeded : 0.0}};

    if (format == "table") {
      out << "success_rate " << j["success_rate"].dump() << '\n'
          << "utilization  " << j["utilization"].dump() << '\n'
          << "online       " << j["online"].dump() << '\n';
      if (diagnostics)
        out << "diagnostics  " << j["diagnostics"].dump() << '\n';
    } else {
      emit(out, j);
    }
    return kExitOk;
  }

  int estimate() {
    if (format.empty())
      format = "json";
    const auto spec = spec_opts.resolve();
    const auto c = census(awgclos::build(spec));
    const auto e = estimate_physical(c, {p, loss});
    if (format == "table")
      out << "penalty_db " << e.total_penalty_db << "\ninsertion_loss_db "
          << e.total_insertion_loss_db << "\nawg_columns " << e.stage_count
          << '\n';
    else
      emit(out, to_json(e));
    return kExitOk;
  }

  int export_() {
    if (format.empty())
      format = "table";
    if (what == "census") {
      if (spec_opts.family.empty())
        throw Error(ErrorCode::InvalidParameter, "--family is required");
      const auto c = census(awgclos::build(spec_opts.resolve()));
      if (format == "table")
        out << format_census(c);
      else
        emit(out, to_json(c));
      return kExitOk;
    }
    if (!awg_r || !awg_m)
      throw Error(ErrorCode::InvalidParameter, "--r and --m are required");
    const auto t = routing_table(AwgSpec(*awg_r, *awg_m));
    if (format == "json")
      emit(out, to_json(t));
    else
      out << format_routing_table(t);
    return kExitOk;
  }
};

int exit_code_for(ErrorCode c) {
  switch (c) {
  case ErrorCode::Infeasible:
  case ErrorCode::CapacityExceeded:
    return kExitFailure;
  default:
    return kExitUsage;
  }
}

/// Routes the default logger into `err` for one run_cli call.
class LogScope {
public:
  explicit LogScope(std::ostream &err) : previous_(spdlog::default_logger()) {
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_st>(err);
    auto logger = std::make_shared<spdlog::logger>("awgclos", sink);
    logger->set_pattern("[%l] %v");
    logger->set_level(spdlog::level::warn);
    if (const char *env = std::getenv("AWGCLOS_LOG"))
      logger->set_level(spdlog::level::from_str(env));
    spdlog::set_default_logger(logger);
  }
  ~LogScope() { spdlog::set_default_logger(previous_); }
  LogScope(const LogScope &) = delete;
  LogScope &operator=(const LogScope &) = delete;

private:
  std::shared_ptr<spdlog::logger> previous_;
};

} // namespace

int run_cli(int argc, const char *const *argv, std::istream &in,
            std::ostream &out, std::ostream &err) {
  LogScope log(err);
  Cli cli(in, out, err);

  CLI::App app{"Build, route and verify AWG-based WDM Clos networks", "awgclos"};
  app.require_subcommand(1);

  auto *build = app.add_subcommand("build", "emit a topology");
  cli.spec_opts.attach(build);
  build->add_option("--format", cli.format, "json, dot or table")
      ->check(CLI::IsMember({"json", "dot", "table"}));

  auto *route = app.add_subcommand("route", "solve route and wavelength assignment");
  SpecOptions &so = cli.spec_opts;
  so.attach(route);
  route->add_option("--calls", cli.calls_path, "call file (JSON), '-' for stdin");
  route->add_option("--load", cli.load, "identity, random, full or empty")
      ->check(CLI::IsMember({"identity", "random", "full", "empty"}));
  route->add_option("--seed", cli.seed, "permutation seed");
  route->add_option("--format", cli.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  auto *verify = app.add_subcommand("verify", "check a routed artifact");
  verify->add_option("artifact", cli.artifact_path, "artifact JSON, '-' for stdin");
  verify->add_option("--format", cli.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  auto *bench = app.add_subcommand("bench", "route seeded full-load call sets");
  so.attach(bench);
  bench->add_option("--seeds", cli.seeds, "number of seeds");
  bench->add_option("--seed", cli.seed, "first seed");
  bench->add_option("--load", cli.load, "full or identity");
  bench->add_flag("!--no-diagnostics", cli.diagnostics, "omit wall-clock fields");
  bench->add_option("--format", cli.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  auto *estimate = app.add_subcommand("estimate", "closed-form physical estimate");
  so.attach(estimate);
  estimate->add_option("--p", cli.p, "crosstalk penalty per AWG stage, dB");
  estimate->add_option("--loss", cli.loss, "insertion loss per AWG, dB");
  estimate->add_option("--format", cli.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  auto *exp = app.add_subcommand("export", "AWG routing table or census");
  exp->add_option("--what", cli.what, "routing-table or census")
      ->check(CLI::IsMember({"routing-table", "census"}));
  exp->add_option("--family", so.family);
  exp->add_option("--n", so.n);
  exp->add_option("--d", so.d);
  exp->add_option("--N", so.N);
  exp->add_option("--r", cli.awg_r, "AWG input ports");
  exp->add_option("--m", cli.awg_m, "AWG output ports");
  exp->add_option("--format", cli.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build)
      return cli.build();
    if (*route)
      return cli.route();
    if (*verify)
      return cli.verify();
    if (*bench)
      return cli.bench();
    if (*estimate)
      return cli.estimate();
    if (*exp) {
      if (cli.what == "census") {
        so.r = cli.awg_r;
        so.m = cli.awg_m;
      }
      return cli.export_();
    }
  } catch (const Error &e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

} // namespace awgclos
