#pragma once

#include "genocchi/dellac.hpp"
#include "genocchi/permutations.hpp"

namespace genocchi {

/// y = (3, 2, 5, 4, ..., 2n+1, 2n): y_k = k+2 for odd k, k for even k.
int y_value(int k);
/// Inverse of y_value on its image.
int y_index(int value);

/// DC(n) -> normalized Dumont permutations of order 2n+2.
///
/// Reads the columns left to right, writing the upper dot's label then the
/// lower dot's label, framed by 2 and 2n+1; the result is the inverse of
/// that word.
Perm phi(const DellacConfig& c);

/// tau_C as defined through phi: phi(C)(e_i) = y_{tau_C(i)}.
Perm tau(const DellacConfig& c);

/// tau_C computed from the refined inversion counts alone:
/// tau_C(i) = i + l(e_i) - r(e_i).
Perm tau_from_stats(const DellacConfig& c);

/// phi computed through tau_from_stats; agrees with phi().
Perm phi_via_tau(const DellacConfig& c);

/// D_{n+1} -> DC(n): column j receives the dots labelled sigma^{-1}(2j) and
/// sigma^{-1}(2j+1). Throws std::invalid_argument if sigma is not Dumont
/// (or has order < 4).
DellacConfig varphi(const Perm& sigma);

/// The unique normalized Dumont permutation in the orbit of sigma under left
/// multiplication by (2,3), (4,5), ..., (2n,2n+1).
Perm orbit_canonical(const Perm& sigma);

} // namespace genocchi
