#include "awgclos/core.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>
#include <unordered_map>

namespace awgclos {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::InvalidParameter:
    return "invalid-parameter";
  case ErrorCode::IndexOutOfRange:
    return "index-out-of-range";
  case ErrorCode::DuplicateInputChannel:
    return "duplicate-input-channel";
  case ErrorCode::DuplicateOutputChannel:
    return "duplicate-output-channel";
  case ErrorCode::InvalidCallSet:
    return "invalid-call-set";
  case ErrorCode::Infeasible:
    return "infeasible";
  case ErrorCode::CapacityExceeded:
    return "capacity-exceeded";
  case ErrorCode::NotAPower:
    return "not-a-power";
  case ErrorCode::OutOfDomain:
    return "out-of-domain";
  case ErrorCode::OutOfRange:
    return "out-of-range";
  case ErrorCode::OutputWavelengthCollision:
    return "output-wavelength-collision";
  case ErrorCode::ParseError:
    return "parse-error";
  }
  return "unknown";
}

int ipow(int base, int exp) {
  if (exp < 0)
    throw Error(ErrorCode::InvalidParameter, "negative exponent");
  long long acc = 1;
  for (int i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > std::numeric_limits<int>::max())
      throw Error(ErrorCode::InvalidParameter, "integer power overflow");
  }
  return static_cast<int>(acc);
}

std::optional<int> exact_log(int value, int base) {
  if (value < 1 || base < 1)
    return std::nullopt;
  if (base == 1)
    return value == 1 ? std::optional<int>(0) : std::nullopt;
  int k = 0;
  while (value % base == 0) {
    value /= base;
    ++k;
  }
  if (value != 1)
    return std::nullopt;
  return k;
}

WavelengthSet::WavelengthSet(int universe, std::vector<WavelengthIndex> members)
    : universe_(universe), members_(std::move(members)) {
  if (universe_ < 1)
    throw Error(ErrorCode::InvalidParameter,
                "wavelength universe must be positive");
  std::vector<bool> seen(static_cast<std::size_t>(universe_), false);
  for (auto w : members_) {
    if (w < 0 || w >= universe_)
      throw Error(ErrorCode::IndexOutOfRange,
                  "wavelength " + std::to_string(w) + " outside universe of " +
                      std::to_string(universe_));
    if (seen[static_cast<std::size_t>(w)])
      throw Error(ErrorCode::InvalidParameter,
                  "duplicate wavelength " + std::to_string(w));
    seen[static_cast<std::size_t>(w)] = true;
  }
}

WavelengthSet WavelengthSet::full(int size) { return cyclic(size, 0, size); }

WavelengthSet WavelengthSet::cyclic(int universe, int first, int count) {
  if (count > universe)
    throw Error(ErrorCode::InvalidParameter,
                "cyclic set larger than its universe");
  std::vector<WavelengthIndex> m;
  m.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    m.push_back(mod(first + i, universe));
  return WavelengthSet(universe, std::move(m));
}

bool WavelengthSet::contains(WavelengthIndex w) const {
  return std::find(members_.begin(), members_.end(), w) != members_.end();
}

bool WavelengthSet::same_members(const WavelengthSet &other) const {
  auto a = members_;
  auto b = other.members_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string_view to_string(Family f) {
  switch (f) {
  case Family::TwoStage:
    return "T";
  case Family::SA:
    return "SA";
  case Family::SB:
    return "SB";
  case Family::B:
    return "B";
  case Family::Crossbar:
    return "XBAR";
  }
  return "?";
}

Family family_from_string(std::string_view s) {
  if (s == "T")
    return Family::TwoStage;
  if (s == "SA")
    return Family::SA;
  if (s == "SB")
    return Family::SB;
  if (s == "B")
    return Family::B;
  if (s == "XBAR")
    return Family::Crossbar;
  throw Error(ErrorCode::InvalidParameter,
              "unknown family '" + std::string(s) + "'");
}

namespace {

void require_positive(int v, const char *name) {
  if (v < 1)
    throw Error(ErrorCode::InvalidParameter,
                std::string(name) + " must be >= 1, got " + std::to_string(v));
}

} // namespace

NetworkSpec NetworkSpec::two_stage(int n, int r, int m) {
  require_positive(n, "n");
  require_positive(r, "r");
  require_positive(m, "m");
  return {Family::TwoStage, n, r, m, std::nullopt, r * n};
}

NetworkSpec NetworkSpec::sa(int n, int r, int m) {
  require_positive(n, "n");
  require_positive(r, "r");
  require_positive(m, "m");
  return {Family::SA, n, r, m, std::nullopt, r * n};
}

NetworkSpec NetworkSpec::sb(int n, int d) {
  require_positive(n, "n");
  if (d < 2)
    throw Error(ErrorCode::InvalidParameter, "d must be >= 2");
  const int r = ipow(n, d - 1);
  return {Family::SB, n, r, n, d, r * n};
}

NetworkSpec NetworkSpec::b(int n, int d) {
  auto s = sb(n, d);
  s.family = Family::B;
  return s;
}

NetworkSpec NetworkSpec::crossbar(int ports) {
  require_positive(ports, "N");
  return {Family::Crossbar, 1, ports, ports, std::nullopt, ports};
}

int NetworkSpec::output_modules() const noexcept {
  return family == Family::TwoStage ? m : r;
}

int NetworkSpec::output_channels() const noexcept {
  switch (family) {
  case Family::TwoStage:
    return r;
  case Family::Crossbar:
    return 1;
  default:
    return n;
  }
}

int NetworkSpec::lambda_count() const noexcept {
  switch (family) {
  case Family::B:
    return n;
  case Family::SB:
    return r;
  default:
    return std::max(r, m);
  }
}

ValidationResult validate_call_set(const NetworkSpec &spec,
                                   std::span<const Call> calls) {
  auto fail = [](ErrorCode code, std::vector<std::size_t> idx,
                 std::string msg) {
    ValidationResult v;
    v.ok = false;
    v.error = code;
    v.offending = std::move(idx);
    v.message = std::move(msg);
    return v;
  };

  for (std::size_t i = 0; i < calls.size(); ++i) {
    const auto &c = calls[i];
    if (c.alpha < 0 || c.alpha >= spec.input_modules() || c.omega < 0 ||
        c.omega >= spec.input_channels() || c.beta < 0 ||
        c.beta >= spec.output_modules() || c.omega_prime < 0 ||
        c.omega_prime >= spec.output_channels()) {
      std::ostringstream os;
      os << "call " << i << " (" << c.alpha << "," << c.omega << "," << c.beta
         << "," << c.omega_prime << ") outside network ranges";
      return fail(ErrorCode::IndexOutOfRange, {i}, os.str());
    }
  }

  std::unordered_map<long long, std::size_t> inputs, outputs;
  for (std::size_t i = 0; i < calls.size(); ++i) {
    const auto &c = calls[i];
    const long long in_key =
        static_cast<long long>(c.alpha) * spec.input_channels() + c.omega;
    if (auto [it, fresh] = inputs.emplace(in_key, i); !fresh)
      return fail(ErrorCode::DuplicateInputChannel, {it->second, i},
                  "calls " + std::to_string(it->second) + " and " +
                      std::to_string(i) + " share input channel (" +
                      std::to_string(c.alpha) + "," + std::to_string(c.omega) +
                      ")");
    const long long out_key =
        static_cast<long long>(c.beta) * spec.output_channels() +
        c.omega_prime;
    if (auto [it, fresh] = outputs.emplace(out_key, i); !fresh)
      return fail(ErrorCode::DuplicateOutputChannel, {it->second, i},
                  "calls " + std::to_string(it->second) + " and " +
                      std::to_string(i) + " share output channel (" +
                      std::to_string(c.beta) + "," +
                      std::to_string(c.omega_prime) + ")");
  }
  return {};
}

void require_valid(const NetworkSpec &spec, std::span<const Call> calls) {
  if (auto v = validate_call_set(spec, calls); !v)
    throw Error(ErrorCode::InvalidCallSet,
                std::string(to_string(*v.error)) + ": " + v.message);
}

namespace {

CallSet calls_from_permutation(const NetworkSpec &spec,
                               const std::vector<int> &perm) {
  CallSet calls;
  calls.reserve(perm.size());
  const int in_c = spec.input_channels();
  const int out_c = spec.output_channels();
  for (std::size_t k = 0; k < perm.size(); ++k) {
    const int ik = static_cast<int>(k);
    calls.push_back(
        {ik / in_c, ik % in_c, perm[k] / out_c, perm[k] % out_c});
  }
  return calls;
}

std::size_t full_load_size(const NetworkSpec &spec) {
  const long long in = 1LL * spec.input_modules() * spec.input_channels();
  const long long out = 1LL * spec.output_modules() * spec.output_channels();
  if (in != out)
    throw Error(ErrorCode::InvalidParameter,
                "full load needs equal input and output channel counts");
  return static_cast<std::size_t>(in);
}

} // namespace

CallSet full_load_identity(const NetworkSpec &spec) {
  std::vector<int> perm(full_load_size(spec));
  for (std::size_t i = 0; i < perm.size(); ++i)
    perm[i] = static_cast<int>(i);
  return calls_from_permutation(spec, perm);
}

CallSet random_permutation(const NetworkSpec &spec, std::uint64_t seed) {
  std::vector<int> perm(full_load_size(spec));
  for (std::size_t i = 0; i < perm.size(); ++i)
    perm[i] = static_cast<int>(i);
  std::mt19937_64 rng(seed);
  for (std::size_t i = perm.size(); i-- > 1;) {
    const auto j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(perm[i], perm[j]);
  }
  return calls_from_permutation(spec, perm);
}

} // namespace awgclos
