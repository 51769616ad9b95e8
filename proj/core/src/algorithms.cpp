#include "qarith/algorithms.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

namespace qarith {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1, b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace

void apply_walsh_hadamard(DenseState& state, std::uint32_t qubits) {
  if (state.size() != (std::size_t{1} << qubits))
    throw std::invalid_argument("state size does not match qubit count");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::uint32_t q = 0; q < qubits; ++q) {
    std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < state.size(); base += 2 * stride)
      for (std::size_t i = base; i < base + stride; ++i) {
        auto a = state[i];
        auto b = state[i + stride];
        state[i] = (a + b) * inv_sqrt2;
        state[i + stride] = (a - b) * inv_sqrt2;
      }
  }
}

void apply_fourier_first_register(DenseState& state, Index D) {
  if (D == 0 || state.size() % D != 0)
    throw std::invalid_argument("first-register dimension must divide state size");
  const Index blocks = state.size() / D;
  const double norm = 1.0 / std::sqrt(static_cast<double>(D));
  DenseState column(D);
  for (Index y = 0; y < blocks; ++y) {
    bool nonzero = false;
    for (Index s = 0; s < D; ++s) {
      column[s] = state[s + y * D];
      if (column[s] != std::complex<double>{}) nonzero = true;
    }
    if (!nonzero) continue;
    for (Index w = 0; w < D; ++w) {
      std::complex<double> sum{};
      for (Index s = 0; s < D; ++s) {
        double phase = -2.0 * kPi * static_cast<double>(w) *
                       static_cast<double>(s) / static_cast<double>(D);
        sum += column[s] * std::polar(1.0, phase);
      }
      state[w + y * D] = sum * norm;
    }
  }
}

GroverRun grover_iterate(std::uint32_t L, Index target, std::uint32_t iterations) {
  if (L < 1 || L > 24) throw std::invalid_argument("L out of supported range");
  const std::size_t dim = std::size_t{1} << L;
  if (target >= dim) throw std::out_of_range("target outside physical basis");

  // psi = W |up..up>; the all-up state is index 0.
  DenseState state(dim, std::complex<double>{});
  state[0] = 1.0;
  apply_walsh_hadamard(state, L);

  GroverRun run{L, target, {}};
  run.success_probability.push_back(std::norm(state[target]));
  for (std::uint32_t r = 0; r < iterations; ++r) {
    // I_target
    state[target] = -state[target];
    // W I_up W
    apply_walsh_hadamard(state, L);
    state[0] = -state[0];
    apply_walsh_hadamard(state, L);
    // global minus sign of the iteration operator
    for (auto& a : state) a = -a;
    run.success_probability.push_back(std::norm(state[target]));
    double norm_sq = 0.0;
    for (const auto& a : state) norm_sq += std::norm(a);
    if (std::abs(norm_sq - 1.0) > kNormTolerance)
      throw std::runtime_error("norm drift in Grover iteration");
  }
  return run;
}

double grover_success_closed_form(std::uint32_t L, std::uint32_t r) {
  double theta = std::asin(std::pow(2.0, -static_cast<double>(L) / 2.0));
  double s = std::sin((2.0 * r + 1.0) * theta);
  return s * s;
}

Index ModexpMap::f(Index s) const { return pow_mod(m, s, M); }

Index ModexpMap::apply(Index idx) const {
  Index s = idx % D;
  Index i = idx / D;
  return s + ((i + f(s)) % R) * D;
}

ModexpMap modexp_map(std::uint64_t m, std::uint64_t M, Index D) {
  if (std::gcd(m, M) != 1)
    throw std::invalid_argument("base and modulus must be coprime");
  Index R = 1;
  while (R < M) R <<= 1;
  return {D, R, m, M};
}

std::uint32_t shor_register_size(std::uint64_t M) {
  std::uint32_t n = 0;
  while ((Index{1} << n) < M * M) ++n;
  return n;
}

PeriodCandidate extract_period(Index w, Index D, std::uint64_t m, std::uint64_t M) {
  // Continued-fraction expansion of w/D; convergents by the standard
  // recurrence. A denominator is taken seriously only if its convergent is
  // within 1/(2D) of w/D, which the exact Fourier peaks satisfy.
  std::vector<std::uint64_t> quotients;
  {
    Index num = w, den = D;
    while (den != 0) {
      quotients.push_back(num / den);
      Index rem = num % den;
      num = den;
      den = rem;
    }
  }
  const double x = static_cast<double>(w) / static_cast<double>(D);
  std::uint64_t p_prev = 1, p_curr = quotients.empty() ? 0 : quotients[0];
  std::uint64_t q_prev = 0, q_curr = 1;
  PeriodCandidate best;
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    if (i > 0) {
      std::uint64_t p_next = quotients[i] * p_curr + p_prev;
      std::uint64_t q_next = quotients[i] * q_curr + q_prev;
      p_prev = p_curr;
      p_curr = p_next;
      q_prev = q_curr;
      q_curr = q_next;
    }
    if (q_curr > M) break;
    if (q_curr < 2) continue;
    double approx = static_cast<double>(p_curr) / static_cast<double>(q_curr);
    if (std::abs(x - approx) > 1.0 / (2.0 * static_cast<double>(D))) continue;
    // Verify the denominator, then small multiples of it.
    for (std::uint64_t mult = 1; mult * q_curr <= M; ++mult) {
      std::uint64_t candidate = mult * q_curr;
      if (pow_mod(m, candidate, M) == 1) return {candidate, true};
    }
    if (!best.period) best = {q_curr, false};
  }
  return best;
}

namespace {

std::vector<std::uint64_t> factors_from_period(std::uint64_t m, std::uint64_t M,
                                               std::uint64_t period) {
  if (period == 0 || period % 2 != 0) return {};
  std::uint64_t half = pow_mod(m, period / 2, M);
  if (half == M - 1) return {};  // m^(p/2) = -1 mod M: retry outcome
  std::uint64_t f1 = std::gcd(half - 1, M);
  std::uint64_t f2 = std::gcd(half + 1, M);
  std::vector<std::uint64_t> out;
  if (f1 > 1 && f1 < M) out.push_back(f1);
  if (f2 > 1 && f2 < M && f2 != f1) out.push_back(f2);
  return out;
}

}  // namespace

ShorRun shor_pipeline(std::uint64_t m, std::uint64_t M, const LabelModel& model,
                      const LabelModel& decode_model, std::uint64_t seed,
                      std::uint32_t trials) {
  if (std::gcd(m, M) != 1)
    throw std::invalid_argument("base and modulus must be coprime");
  ShorRun run;
  run.M = M;
  run.m = m;
  run.n = shor_register_size(M);
  run.D = Index{1} << run.n;
  if (M * M > run.D || run.D > 2 * M * M)
    throw std::logic_error("register size bound violated");
  if (model.L() != run.n || decode_model.L() != run.n || model.k() != 2 ||
      decode_model.k() != 2)
    throw std::invalid_argument("label models must cover n qubit sites, k=2");

  ModexpMap f = modexp_map(m, M, run.D);

  // Uniform first register, zeroed output register; then the reversible
  // modular-exponentiation permutation; then the Fourier transform on the
  // first register. All stages preserve the norm.
  DenseState state(run.D * f.R, std::complex<double>{});
  const double amp = 1.0 / std::sqrt(static_cast<double>(run.D));
  for (Index s = 0; s < run.D; ++s) state[f.apply(s)] = amp;
  apply_fourier_first_register(state, run.D);

  double norm_sq = 0.0;
  for (const auto& a : state) norm_sq += std::norm(a);
  if (std::abs(norm_sq - 1.0) > kNormTolerance)
    throw std::runtime_error("norm drift in period-finding pipeline");

  // Marginal distribution over the first register. Conjugating the whole
  // pipeline by W_g,d permutes basis labels only, so the physical-outcome
  // distribution is this one transported through the run model's w_map.
  run.distribution.assign(run.D, 0.0);
  for (Index idx = 0; idx < state.size(); ++idx)
    run.distribution[idx % run.D] += std::norm(state[idx]);

  RegisterShape first_register(2, run.n, 1);
  auto decode_outcome = [&](Index w) {
    Index physical = w_map_index(model, w, first_register);
    return w_inverse_index(decode_model, physical, first_register);
  };

  // Exact mode: success probability without sampling noise.
  for (Index w = 0; w < run.D; ++w) {
    if (run.distribution[w] <= kAmplitudeFloor) continue;
    PeriodCandidate c = extract_period(decode_outcome(w), run.D, m, M);
    if (c.verified && !factors_from_period(m, M, c.period).empty())
      run.exact_success_probability += run.distribution[w];
  }

  std::mt19937_64 rng(seed);
  std::discrete_distribution<Index> sample(run.distribution.begin(),
                                           run.distribution.end());
  run.trials.reserve(trials);
  for (std::uint32_t t = 0; t < trials; ++t) {
    ShorOutcome outcome;
    outcome.measured = sample(rng);
    outcome.decoded = decode_outcome(outcome.measured);
    outcome.candidate = extract_period(outcome.decoded, run.D, m, M);
    if (outcome.candidate.verified) {
      outcome.factors = factors_from_period(m, M, outcome.candidate.period);
      if (!outcome.factors.empty()) ++run.verified_trials;
    }
    run.trials.push_back(std::move(outcome));
  }
  return run;
}

}  // namespace qarith
