#pragma once

#include "qarith/successor.hpp"

namespace qarith {

/// Source/destination registers of a targeted addition +_{m,n}.
struct RegisterTarget {
  std::uint32_t source;       // m, left unchanged
  std::uint32_t destination;  // n, receives source's value mod k^L
};

/// +_{m,n}: adds register m's value into register n mod k^L, realized as
/// s_j iterations of the successor at each digit position j with the
/// exponents read from register m's basis state.
PermutationOperator targeted_plus(const RegisterShape& shape, RegisterTarget target);

/// + on the two-register space: |s>|w> -> |s>|s+w mod k^L>.
PermutationOperator plus_op(const RegisterShape& shape);

/// Adjoint of +: |s>|s+w> -> |s>|w> (subtraction mod k^L).
PermutationOperator plus_adjoint(const RegisterShape& shape);

/// Q_j(2,3) on the four-register space: cyclically shifts the third
/// register's digits up one site and writes y_L (-) w_{L-j+1} (digit
/// subtraction mod k) into the opened first site. On y = w*k^(j-1) this
/// multiplies the third register by k.
PermutationOperator q_shift(const RegisterShape& shape, std::uint32_t j);

/// x on the four-register space: |s,w,0,0> -> |s,w,0,s*w mod k^L> via the
/// sequence Q_L (+_{3,4})^(s_L) ... Q_1 (+_{3,4})^(s_1) +_{2,3}. Total as a
/// permutation; the arithmetic contract holds on zeroed work registers.
PermutationOperator times_op(const RegisterShape& shape);

}  // namespace qarith
