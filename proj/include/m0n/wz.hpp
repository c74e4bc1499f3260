#pragma once

#include "m0n/exact.hpp"

namespace m0n {

/// C_k = C(2k, k) / (k + 1). Throws std::invalid_argument for k < 0.
BigInt catalan(long k);

/// Summand F(p,k) = (-2)^{p-k} C(p,k) C(p+k+2,k+1) / (p+2); zero outside
/// 0 <= k <= p.
Rational wz_summand(long p, long k);

/// Certificate G(p,k) = R(p,k) F(p,k) with
///   R(p,k) = -8(p+1)(2p+5)k(k+1) / ((p+3)(p-k+1)(p-k+2)),
/// evaluated after cancelling (p-k+1)(p-k+2) against the factorials in F,
/// so it stays finite (and generally nonzero) at k = p+1, p+2. Zero for
/// k < 0 or k > p+2.
Rational wz_certificate(long p, long k);

/// f(p) = sum_k F(p,k).
Rational wz_lhs(long p);

/// (-1)^{p/2} C_{p/2} for even p, 0 for odd p.
Rational wz_rhs(long p);

/// (p+4) F(p+2,k) + 4(p+1) F(p,k) == G(p,k+1) - G(p,k), exactly.
bool certificate_check(long p, long k);

/// (p+4) f(p+2) + 4(p+1) f(p) == 0, exactly.
bool recurrence_check(long p);

/// sum over all faces of K_{n-1} of (-2)^{dim}, by enumerating the faces.
BigInt cf_face_sum(int n);

/// The same sum from the closed-form face counts.
BigInt cf_face_sum_closed(int n);

}  // namespace m0n
