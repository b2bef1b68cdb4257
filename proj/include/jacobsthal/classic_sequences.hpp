#pragma once

// The k = 2 specialisations: classic third-order Jacobsthal numbers J_n, the
// modified third-order Jacobsthal-Lucas numbers K_n, and the 3-periodic
// residues Z_n, Y_n carrying the cube-root-of-unity part of their Binet forms.

#include "jacobsthal/rational.hpp"

namespace jacobsthal {

/// 2, -3, 1 for n = 0, 1, 2 (mod 3); negative n uses the true residue.
int residue_z(long n);
/// 2 when 3 | n, else -1.
int residue_y(long n);

/// (2^{n+1} - Z_n) / 7. Requires n >= 0.
Integer jac3_classic(long n);

/// 2^n + Y_n. Requires n >= 0.
Integer modified_lucas_classic(long n);

/// K_n by the recurrence K_{n+3} = K_{n+2} + K_{n+1} + 2K_n from 3, 1, 3.
Integer modified_lucas_recurrence(long n);

/// j_n^(3)(2): the classic third-order Jacobsthal-Lucas numbers 2, 1, 5, 10, ...
Integer lucas3_classic(long n);

/**
 * J_{rn} computed inside the stride-r subsequence:
 *   J_{r(n+3)} = K_r J_{r(n+2)} - (2^r Y_r + 1) J_{r(n+1)} + 2^r J_{rn}
 * seeded with J_0, J_r, J_{2r}. Requires r >= 1 (stride 0 is degenerate)
 * and n >= 0.
 */
Integer jac3_multi_index(long r, long n);

}  // namespace jacobsthal
