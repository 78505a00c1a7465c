#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lcpa/cavity.hpp"

namespace lcpa {

struct BistableRegion {
  double i_in_lower;  // local minimum of I_in along the curve
  double i_in_upper;  // local maximum of I_in
  double i_c_lower;   // I_c at the lower turning point
  double i_c_upper;   // I_c at the upper turning point
  bool degenerate = false;  // cusp: both folds coincide within tolerance

  double width() const { return i_in_upper - i_in_lower; }
};

struct Fold {
  double i_c;
  double i_in;
  bool is_max;
};

struct TurningPoints {
  std::vector<BistableRegion> regions;
  std::vector<Fold> folds;  // ascending i_c
  std::optional<std::string> warning;
};

/// Relative tolerance for treating two folds as a cusp.
inline constexpr double kCuspTolerance = 1e-6;

/// Finds sign changes of the slope of a sampled I_in(I_c), refines each
/// extremum on `input_of`, and pairs (max, min) folds into regions.
TurningPoints find_turning_points(std::span<const double> i_c, std::span<const double> i_in,
                                  const std::function<double(double)>& input_of);

TurningPoints find_turning_points(const TransferCurve& curve);

}  // namespace lcpa
