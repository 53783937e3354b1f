#include "awgclos/awg.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace awgclos {

AwgSpec::AwgSpec(int r, int m) : r_(r), m_(m), lambda_count_(std::max(r, m)) {
  if (r < 1 || m < 1)
    throw Error(ErrorCode::InvalidParameter,
                "AWG dimensions must be >= 1, got " + std::to_string(r) + "x" +
                    std::to_string(m));
}

int awg_route(const AwgSpec &spec, int input_port, WavelengthIndex wavelength) {
  if (input_port < 0 || input_port >= spec.r())
    throw Error(ErrorCode::IndexOutOfRange,
                "AWG input " + std::to_string(input_port) + " out of range");
  if (wavelength < 0 || wavelength >= spec.lambda_count())
    throw Error(ErrorCode::IndexOutOfRange,
                "wavelength " + std::to_string(wavelength) + " out of range");
  return mod(wavelength - input_port, spec.lambda_count());
}

WavelengthIndex awg_wavelength(const AwgSpec &spec, int input_port,
                               int output_port) {
  if (input_port < 0 || input_port >= spec.r() || output_port < 0 ||
      output_port >= spec.m())
    throw Error(ErrorCode::IndexOutOfRange, "AWG port out of range");
  return mod(input_port + output_port, spec.lambda_count());
}

WavelengthSet input_wavelength_set(const AwgSpec &spec, int a) {
  if (a < 0 || a >= spec.r())
    throw Error(ErrorCode::IndexOutOfRange,
                "AWG input " + std::to_string(a) + " out of range");
  return WavelengthSet::cyclic(spec.lambda_count(), a, spec.m());
}

WavelengthSet output_wavelength_set(const AwgSpec &spec, int b) {
  if (b < 0 || b >= spec.m())
    throw Error(ErrorCode::IndexOutOfRange,
                "AWG output " + std::to_string(b) + " out of range");
  return WavelengthSet::cyclic(spec.lambda_count(), b, spec.r());
}

RoutingTable::RoutingTable(int rows, int cols, int lambda_count)
    : rows_(rows), cols_(cols), lambda_count_(lambda_count),
      entries_(static_cast<std::size_t>(rows * cols), 0) {}

bool RoutingTable::rows_and_columns_distinct() const {
  for (int j = 0; j < rows_; ++j) {
    std::vector<bool> seen(static_cast<std::size_t>(lambda_count_), false);
    for (int k = 0; k < cols_; ++k) {
      auto w = static_cast<std::size_t>(at(j, k));
      if (seen[w])
        return false;
      seen[w] = true;
    }
  }
  for (int k = 0; k < cols_; ++k) {
    std::vector<bool> seen(static_cast<std::size_t>(lambda_count_), false);
    for (int j = 0; j < rows_; ++j) {
      auto w = static_cast<std::size_t>(at(j, k));
      if (seen[w])
        return false;
      seen[w] = true;
    }
  }
  return true;
}

bool RoutingTable::is_latin_square() const {
  return rows_ == cols_ && lambda_count_ == rows_ &&
         rows_and_columns_distinct();
}

RoutingTable routing_table(const AwgSpec &spec) {
  RoutingTable t(spec.r(), spec.m(), spec.lambda_count());
  for (int j = 0; j < spec.r(); ++j)
    for (int k = 0; k < spec.m(); ++k)
      t.at(j, k) = mod(j + k, spec.lambda_count());
  return t;
}

std::string format_routing_table(const RoutingTable &table) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "in\\out";
  for (int k = 0; k < table.cols(); ++k)
    os << ' ' << std::setw(5) << ("o" + std::to_string(k));
  os << '\n';
  for (int j = 0; j < table.rows(); ++j) {
    os << std::setw(6) << ("i" + std::to_string(j));
    for (int k = 0; k < table.cols(); ++k)
      os << ' ' << std::setw(5) << ("L" + std::to_string(table.at(j, k)));
    os << '\n';
  }
  return os.str();
}

DecomposedAwg decompose(const AwgSpec &spec, int n) {
  if (n < 1)
    throw Error(ErrorCode::InvalidParameter, "module size must be >= 1");

  DecomposedAwg dec;
  int wide = 0;
  if (spec.m() == n) {
    dec.direction = DecompositionSide::Input;
    wide = spec.r();
  } else if (spec.r() == n) {
    dec.direction = DecompositionSide::Output;
    wide = spec.m();
  } else {
    throw Error(ErrorCode::NotAPower, "AWG " + std::to_string(spec.r()) + "x" +
                                          std::to_string(spec.m()) +
                                          " has no side equal to n = " +
                                          std::to_string(n));
  }

  if (n == 1) {
    if (wide != 1)
      throw Error(ErrorCode::NotAPower, "n = 1 only decomposes a 1x1 AWG");
    dec.depth = 2;
  } else {
    auto k = exact_log(wide, n);
    if (!k || *k < 1)
      throw Error(ErrorCode::NotAPower,
                  std::to_string(wide) + " is not a positive power of " +
                      std::to_string(n));
    dec.depth = *k + 1;
  }

  dec.module_size = n;
  dec.module_count = wide / n;
  dec.per_module_sets.reserve(static_cast<std::size_t>(dec.module_count));
  for (int A = 0; A < dec.module_count; ++A)
    dec.per_module_sets.push_back(
        WavelengthSet::cyclic(spec.lambda_count(), A * n, n));
  return dec;
}

DecomposedPath decomposed_route(const DecomposedAwg &dec, int alpha,
                                int gamma) {
  const int n = dec.module_size;
  if (alpha < 0 || alpha >= dec.global_ports() || gamma < 0 || gamma >= n)
    throw Error(ErrorCode::IndexOutOfRange,
                "path (" + std::to_string(alpha) + "," + std::to_string(gamma) +
                    ") outside decomposition");
  const int A = alpha / n;
  const int a = mod(alpha, n);
  const auto &set = dec.per_module_sets.at(static_cast<std::size_t>(A));
  return {set[static_cast<std::size_t>(mod(a + gamma, n))], A, a};
}

Lemma1Report verify_lemma1(const DecomposedAwg &dec) {
  Lemma1Report report;
  const int n = dec.module_size;

  // (port, wavelength) -> first path seen, for both ends.
  std::map<std::pair<int, int>, std::pair<int, int>> at_input, at_output;
  for (int alpha = 0; alpha < dec.global_ports(); ++alpha) {
    for (int gamma = 0; gamma < n; ++gamma) {
      const auto path = decomposed_route(dec, alpha, gamma);
      ++report.paths_checked;
      const std::pair<int, int> self{alpha, gamma};

      if (auto [it, fresh] = at_input.emplace(
              std::pair{alpha, path.wavelength}, self);
          !fresh) {
        report.pass = false;
        report.failure = Lemma1Report::Failure::SharedInputWavelength;
        report.counterexample = {it->second, self};
        report.wavelength = path.wavelength;
        report.message = "port " + std::to_string(alpha) +
                         " sends wavelength " +
                         std::to_string(path.wavelength) + " on two paths";
        return report;
      }
      if (auto [it, fresh] = at_output.emplace(
              std::pair{gamma, path.wavelength}, self);
          !fresh) {
        report.pass = false;
        report.failure = Lemma1Report::Failure::SharedOutputWavelength;
        report.counterexample = {it->second, self};
        report.wavelength = path.wavelength;
        report.message = "Mux " + std::to_string(gamma) +
                         " receives wavelength " +
                         std::to_string(path.wavelength) + " from ports " +
                         std::to_string(it->second.first) + " and " +
                         std::to_string(alpha);
        return report;
      }
    }
  }
  return report;
}

} // namespace awgclos
