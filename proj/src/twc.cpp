#include "awgclos/twc.hpp"

#include <set>

namespace awgclos {

TwcModuleSpec::TwcModuleSpec(WavelengthSet domain, WavelengthSet range)
    : domain_(std::move(domain)), range_(std::move(range)) {
  if (domain_.size() == 0 || range_.size() == 0)
    throw Error(ErrorCode::InvalidParameter,
                "TWC-module needs non-empty domain and range sets");
}

void ConversionState::set(WavelengthIndex pi, WavelengthIndex sigma) {
  if (!spec_.domain().contains(pi))
    throw Error(ErrorCode::OutOfDomain,
                "wavelength " + std::to_string(pi) + " not in domain set");
  if (!spec_.range().contains(sigma))
    throw Error(ErrorCode::OutOfRange,
                "wavelength " + std::to_string(sigma) + " not in range set");
  for (const auto &[other, target] : phi_) {
    if (other != pi && target == sigma)
      throw Error(ErrorCode::OutputWavelengthCollision,
                  "wavelengths " + std::to_string(other) + " and " +
                      std::to_string(pi) + " both convert to " +
                      std::to_string(sigma));
  }
  phi_[pi] = sigma;
}

void ConversionState::clear(WavelengthIndex pi) { phi_.erase(pi); }

std::optional<WavelengthIndex> ConversionState::get(WavelengthIndex pi) const {
  if (auto it = phi_.find(pi); it != phi_.end())
    return it->second;
  return std::nullopt;
}

bool ConversionState::injective() const {
  std::set<WavelengthIndex> targets;
  for (const auto &[pi, sigma] : phi_)
    if (!targets.insert(sigma).second)
      return false;
  return true;
}

ConversionState set_conversion(ConversionState state, WavelengthIndex pi,
                               WavelengthIndex sigma) {
  state.set(pi, sigma);
  return state;
}

std::pair<TwcHalf, TwcHalf> boundary_split(const TwcModuleSpec &spec) {
  return {TwcHalf{TwcHalf::Side::Left, spec.domain()},
          TwcHalf{TwcHalf::Side::Right, spec.range()}};
}

TwcModuleSpec recombine(const TwcHalf &left, const TwcHalf &right) {
  if (left.side != TwcHalf::Side::Left || right.side != TwcHalf::Side::Right)
    throw Error(ErrorCode::InvalidParameter,
                "recombine expects an L-half and an R-half");
  return TwcModuleSpec(left.wavelengths, right.wavelengths);
}

} // namespace awgclos
