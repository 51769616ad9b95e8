#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "qarith/physical.hpp"

namespace qarith {

using DenseState = std::vector<std::complex<double>>;

/// W = tensor product of single-qubit (sigma_x + sigma_z)/sqrt(2) over
/// `qubits` sites, applied in place. Involution: W W = 1.
void apply_walsh_hadamard(DenseState& state, std::uint32_t qubits);

/// Exact DFT with kernel e^(-2 pi i w s / D) applied to the first register
/// (dimension D) of a state laid out as index = s + y * D.
void apply_fourier_first_register(DenseState& state, Index D);

struct GroverRun {
  std::uint32_t L;
  Index target;
  /// success_probability[r] = |<target|state>|^2 after r iterations.
  std::vector<double> success_probability;
};

/// Grover iterations -W I_up W I_target on the 2^L-dimensional physical
/// space, starting from the uniform state W|up..up>. The iteration operator
/// is built from the physical target alone; no label model enters.
GroverRun grover_iterate(std::uint32_t L, Index target, std::uint32_t iterations);

/// Closed form sin^2((2r+1) arcsin(2^(-L/2))).
double grover_success_closed_form(std::uint32_t L, std::uint32_t r);

/// |s>|i> -> |s>|(i + m^s mod M) mod R> on a two-register space with first
/// register dimension D and output register dimension R (a bijection for
/// any R; the intended input has a zeroed output register).
struct ModexpMap {
  Index D;        // first-register dimension
  Index R;        // output-register dimension, R >= M
  std::uint64_t m, M;

  Index apply(Index idx) const;
  Index f(Index s) const;  // m^s mod M
};

ModexpMap modexp_map(std::uint64_t m, std::uint64_t M, Index D);

struct PeriodCandidate {
  std::uint64_t period = 0;
  bool verified = false;  // m^period = 1 mod M
};

/// Continued-fraction extraction of the period from measurement outcome w
/// of a D-dimensional Fourier register. A convergent c/r is accepted only
/// when r >= 2, r <= M and |w/D - c/r| <= 1/(2D); small multiples of an
/// accepted denominator are tried when r itself fails verification.
PeriodCandidate extract_period(Index w, Index D, std::uint64_t m, std::uint64_t M);

struct ShorOutcome {
  Index measured;        // abstract outcome w under the run model
  Index decoded;         // outcome after decoding with the decode model
  PeriodCandidate candidate;
  std::vector<std::uint64_t> factors;  // nontrivial factors when found
};

struct ShorRun {
  std::uint64_t M, m;
  std::uint32_t n;       // first-register qubit count, M^2 <= 2^n <= 2M^2
  Index D;               // 2^n
  std::vector<double> distribution;  // exact P(w) over the first register
  std::vector<ShorOutcome> trials;
  std::uint64_t verified_trials = 0;
  /// Exact success probability: sum of P(w) over outcomes whose decoded
  /// value yields a verified period.
  double exact_success_probability = 0.0;
};

/// Smallest n with 2^n >= M^2 (then 2^n <= 2 M^2 automatically).
std::uint32_t shor_register_size(std::uint64_t M);

/// Desk-scale period-finding pipeline. The dynamics runs conjugated into
/// the physical space of `model`; measured physical outcomes are decoded
/// through `decode_model` before classical post-processing. Matching models
/// decode faithfully; mismatched ones generally break period extraction.
ShorRun shor_pipeline(std::uint64_t m, std::uint64_t M, const LabelModel& model,
                      const LabelModel& decode_model, std::uint64_t seed,
                      std::uint32_t trials);

}  // namespace qarith
