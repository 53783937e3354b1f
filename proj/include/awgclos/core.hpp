#ifndef AWGCLOS_CORE_HPP_INCLUDED
#define AWGCLOS_CORE_HPP_INCLUDED

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace awgclos {

/// Index of a wavelength inside a wavelength set of known size.
using WavelengthIndex = int;

enum class ErrorCode {
  InvalidParameter,
  IndexOutOfRange,
  DuplicateInputChannel,
  DuplicateOutputChannel,
  InvalidCallSet,
  Infeasible,
  CapacityExceeded,
  NotAPower,
  OutOfDomain,
  OutOfRange,
  OutputWavelengthCollision,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Non-negative modulus, [x]_y.
constexpr int mod(int x, int y) {
  const int r = x % y;
  return r < 0 ? r + y : r;
}

/// base^exp; throws InvalidParameter on overflow past int range.
int ipow(int base, int exp);

/// Returns k with base^k == value, or nullopt.
std::optional<int> exact_log(int value, int base);

/// An ordered list of distinct wavelengths drawn from a universe
/// {0, ..., universe-1}.
class WavelengthSet {
public:
  WavelengthSet() = default;
  WavelengthSet(int universe, std::vector<WavelengthIndex> members);

  /// {0, ..., size-1}
  static WavelengthSet full(int size);
  /// {first, first+1, ..., first+count-1} taken mod universe.
  static WavelengthSet cyclic(int universe, int first, int count);

  int universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<WavelengthIndex> &members() const noexcept {
    return members_;
  }
  bool contains(WavelengthIndex w) const;
  WavelengthIndex operator[](std::size_t i) const { return members_[i]; }

  /// Same members regardless of order.
  bool same_members(const WavelengthSet &other) const;

  friend bool operator==(const WavelengthSet &,
                         const WavelengthSet &) = default;

private:
  int universe_ = 0;
  std::vector<WavelengthIndex> members_;
};

enum class Family {
  TwoStage, ///< T(n,r,m)
  SA,       ///< S_A(n,r,m)
  SB,       ///< S_B(n,n^(d-1),n)
  B,        ///< B(n,d)
  Crossbar, ///< N x N AWG with a TWC on every input
};

std::string_view to_string(Family f);
Family family_from_string(std::string_view s);

/// Network parameters. N is the number of input wavelength channels
/// (r*n for every family here).
struct NetworkSpec {
  Family family = Family::SA;
  int n = 1;
  int r = 1;
  int m = 1;
  std::optional<int> d;
  int N = 1;

  static NetworkSpec two_stage(int n, int r, int m);
  static NetworkSpec sa(int n, int r, int m);
  static NetworkSpec sb(int n, int d);
  static NetworkSpec b(int n, int d);
  static NetworkSpec crossbar(int ports);

  int input_modules() const noexcept { return r; }
  int input_channels() const noexcept { return n; }
  int output_modules() const noexcept;
  int output_channels() const noexcept;
  /// Size of the switch-region wavelength set.
  int lambda_count() const noexcept;

  friend bool operator==(const NetworkSpec &, const NetworkSpec &) = default;
};

/// C(alpha, omega, beta, omega'): input channel I(alpha, omega) to output
/// channel O(beta, omega').
struct Call {
  int alpha = 0;
  WavelengthIndex omega = 0;
  int beta = 0;
  WavelengthIndex omega_prime = 0;

  friend bool operator==(const Call &, const Call &) = default;
};

using CallSet = std::vector<Call>;

struct ValidationResult {
  bool ok = true;
  std::optional<ErrorCode> error;
  std::vector<std::size_t> offending;
  std::string message;

  explicit operator bool() const noexcept { return ok; }
};

ValidationResult validate_call_set(const NetworkSpec &spec,
                                   std::span<const Call> calls);

/// Throws Error(InvalidCallSet) with the validation message on failure.
void require_valid(const NetworkSpec &spec, std::span<const Call> calls);

/// Input channel k = alpha*n + omega goes to output channel k.
CallSet full_load_identity(const NetworkSpec &spec);

/// Full-load permutation call set. The permutation is a Fisher-Yates shuffle
/// of the output channel list driven by std::mt19937_64(seed): for i from
/// N-1 down to 1, swap position i with position rng() % (i+1). Input channel
/// k = alpha*n + omega is connected to output channel p[k] =
/// beta*c + omega' where c is the per-module output channel count.
CallSet random_permutation(const NetworkSpec &spec, std::uint64_t seed);

} // namespace awgclos

#endif // AWGCLOS_CORE_HPP_INCLUDED
