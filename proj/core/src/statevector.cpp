#include "qarith/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace qarith {

StateVector::StateVector(RegisterShape shape, std::map<Index, Amplitude> amplitudes)
    : shape_(std::move(shape)), amplitudes_(std::move(amplitudes)) {
  for (auto it = amplitudes_.begin(); it != amplitudes_.end();) {
    if (it->first >= shape_.dimension())
      throw std::out_of_range("amplitude index outside shape dimension");
    if (std::abs(it->second) < kAmplitudeFloor)
      it = amplitudes_.erase(it);
    else
      ++it;
  }
  if (std::abs(norm() - 1.0) > kNormTolerance)
    throw std::invalid_argument("statevector is not normalized");
}

StateVector StateVector::basis(const BasisState& b) {
  return basis(b.index(), b.shape());
}

StateVector StateVector::basis(Index index, const RegisterShape& shape) {
  return StateVector(shape, {{index, Amplitude{1.0, 0.0}}});
}

Amplitude StateVector::amplitude(Index index) const {
  auto it = amplitudes_.find(index);
  return it == amplitudes_.end() ? Amplitude{} : it->second;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& [i, a] : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

double StateVector::overlap(const StateVector& other) const {
  Amplitude inner{};
  for (const auto& [i, a] : amplitudes_)
    inner += std::conj(a) * other.amplitude(i);
  return std::abs(inner);
}

bool StateVector::approx_equal(const StateVector& other, double tol) const {
  for (const auto& [i, a] : amplitudes_)
    if (std::abs(a - other.amplitude(i)) > tol) return false;
  for (const auto& [i, a] : other.amplitudes_)
    if (std::abs(a - amplitude(i)) > tol) return false;
  return true;
}

}  // namespace qarith
