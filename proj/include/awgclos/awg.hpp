#ifndef AWGCLOS_AWG_HPP_INCLUDED
#define AWGCLOS_AWG_HPP_INCLUDED

#include "awgclos/core.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace awgclos {

/// An r x m arrayed-waveguide grating with |Lambda| = max(r, m).
class AwgSpec {
public:
  AwgSpec(int r, int m);

  int r() const noexcept { return r_; }
  int m() const noexcept { return m_; }
  int lambda_count() const noexcept { return lambda_count_; }

  friend bool operator==(const AwgSpec &, const AwgSpec &) = default;

private:
  int r_;
  int m_;
  int lambda_count_;
};

/// Output port reached by `wavelength` entering `input_port`:
/// k = [i - j] mod |Lambda|.
int awg_route(const AwgSpec &spec, int input_port, WavelengthIndex wavelength);

/// Wavelength connecting input j to output k: [j + k] mod |Lambda|.
WavelengthIndex awg_wavelength(const AwgSpec &spec, int input_port,
                               int output_port);

/// Lambda_a = {a, a+1, ..., a+m-1} mod |Lambda|.
WavelengthSet input_wavelength_set(const AwgSpec &spec, int a);

/// Lambda'_b = {b, b+1, ..., b+r-1} mod |Lambda|.
WavelengthSet output_wavelength_set(const AwgSpec &spec, int b);

class RoutingTable {
public:
  RoutingTable(int rows, int cols, int lambda_count);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int lambda_count() const noexcept { return lambda_count_; }

  WavelengthIndex at(int j, int k) const {
    return entries_[static_cast<std::size_t>(j * cols_ + k)];
  }
  WavelengthIndex &at(int j, int k) {
    return entries_[static_cast<std::size_t>(j * cols_ + k)];
  }

  /// No wavelength repeats within any row or column.
  bool rows_and_columns_distinct() const;
  /// Square and every row/column is a permutation of the wavelength set.
  bool is_latin_square() const;

  friend bool operator==(const RoutingTable &, const RoutingTable &) = default;

private:
  int rows_;
  int cols_;
  int lambda_count_;
  std::vector<WavelengthIndex> entries_;
};

RoutingTable routing_table(const AwgSpec &spec);

/// Aligned text grid, one row per input port.
std::string format_routing_table(const RoutingTable &table);

enum class DecompositionSide {
  Input,  ///< N_I: n x n AWGs followed by Muxes
  Output, ///< N_O: DeMuxes followed by n x n AWGs
};

/// Two-stage decomposition of an n^(d-1) x n AWG (or its mirror).
struct DecomposedAwg {
  int module_count = 1;
  int module_size = 1;
  int depth = 2;
  DecompositionSide direction = DecompositionSide::Input;
  /// Lambda_A = {A*n, ..., (A+1)*n - 1} per first-stage module A.
  std::vector<WavelengthSet> per_module_sets;

  int global_ports() const noexcept { return module_count * module_size; }
};

DecomposedAwg decompose(const AwgSpec &spec, int n);

struct DecomposedPath {
  WavelengthIndex wavelength = 0;
  int module = 0;
  int local = 0;

  friend bool operator==(const DecomposedPath &,
                         const DecomposedPath &) = default;
};

/// Path L(A, a, gamma) from global port alpha to Mux (DeMux) gamma. The
/// wavelength is member [a + gamma] mod n of Lambda_A, i.e.
/// x = A*n + [a + gamma] mod n for an unmodified decomposition.
DecomposedPath decomposed_route(const DecomposedAwg &dec, int alpha,
                                int gamma);

struct Lemma1Report {
  enum class Failure { None, SharedInputWavelength, SharedOutputWavelength };

  bool pass = true;
  std::size_t paths_checked = 0;
  Failure failure = Failure::None;
  /// (alpha, gamma) of the two conflicting paths.
  std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>>
      counterexample;
  WavelengthIndex wavelength = -1;
  std::string message;
};

/// Enumerates every path L(A, a, gamma) and checks that no global port and
/// no Mux receives the same wavelength from two distinct paths.
Lemma1Report verify_lemma1(const DecomposedAwg &dec);

} // namespace awgclos

#endif // AWGCLOS_AWG_HPP_INCLUDED
