#pragma once

#include <complex>
#include <map>

#include "qarith/digits.hpp"

namespace qarith {

using Amplitude = std::complex<double>;

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kAmplitudeFloor = 1e-12;

/// Sparse normalized amplitude vector over basis indices of a shape.
/// All values are immutable after construction.
class StateVector {
 public:
  StateVector(RegisterShape shape, std::map<Index, Amplitude> amplitudes);

  static StateVector basis(const BasisState& b);
  static StateVector basis(Index index, const RegisterShape& shape);

  const RegisterShape& shape() const { return shape_; }
  const std::map<Index, Amplitude>& amplitudes() const { return amplitudes_; }

  Amplitude amplitude(Index index) const;
  double norm() const;
  /// |<this|other>|
  double overlap(const StateVector& other) const;
  bool approx_equal(const StateVector& other, double tol = kNormTolerance) const;

 private:
  RegisterShape shape_;
  std::map<Index, Amplitude> amplitudes_;
};

}  // namespace qarith
