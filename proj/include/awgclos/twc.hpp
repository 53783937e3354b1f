#ifndef AWGCLOS_TWC_HPP_INCLUDED
#define AWGCLOS_TWC_HPP_INCLUDED

#include "awgclos/core.hpp"

#include <map>
#include <optional>
#include <utility>

namespace awgclos {

/// An n x s TWC-module: DeMux, n converters, s x 1 combiner. Converts
/// wavelengths of the domain set Pi into the range set Sigma.
class TwcModuleSpec {
public:
  TwcModuleSpec(WavelengthSet domain, WavelengthSet range);

  int fan_in() const noexcept { return static_cast<int>(domain_.size()); }
  int conversion_range() const noexcept {
    return static_cast<int>(range_.size());
  }
  const WavelengthSet &domain() const noexcept { return domain_; }
  const WavelengthSet &range() const noexcept { return range_; }

  friend bool operator==(const TwcModuleSpec &,
                         const TwcModuleSpec &) = default;

private:
  WavelengthSet domain_;
  WavelengthSet range_;
};

/// Partial conversion mapping phi: Pi -> Sigma. Unset entries are idle
/// converters. Active entries stay injective.
class ConversionState {
public:
  explicit ConversionState(TwcModuleSpec spec) : spec_(std::move(spec)) {}

  const TwcModuleSpec &spec() const noexcept { return spec_; }

  /// Records phi(pi) = sigma. Re-tuning an active pi is allowed.
  void set(WavelengthIndex pi, WavelengthIndex sigma);
  void clear(WavelengthIndex pi);
  std::optional<WavelengthIndex> get(WavelengthIndex pi) const;

  std::size_t active_count() const noexcept { return phi_.size(); }
  const std::map<WavelengthIndex, WavelengthIndex> &mapping() const noexcept {
    return phi_;
  }
  bool injective() const;

private:
  TwcModuleSpec spec_;
  std::map<WavelengthIndex, WavelengthIndex> phi_;
};

ConversionState set_conversion(ConversionState state, WavelengthIndex pi,
                               WavelengthIndex sigma);

/// One side of the fictitious boundary inside a TWC-module.
struct TwcHalf {
  enum class Side { Left, Right };

  Side side = Side::Left;
  WavelengthSet wavelengths;

  friend bool operator==(const TwcHalf &, const TwcHalf &) = default;
};

/// L-half owns Pi, R-half owns Sigma; phi sits on the boundary.
std::pair<TwcHalf, TwcHalf> boundary_split(const TwcModuleSpec &spec);

TwcModuleSpec recombine(const TwcHalf &left, const TwcHalf &right);

} // namespace awgclos

#endif // AWGCLOS_TWC_HPP_INCLUDED
