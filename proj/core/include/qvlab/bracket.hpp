#pragma once

#include "qvlab/laurent.hpp"
#include "qvlab/planar_diagram.hpp"

namespace qvl {

// Conventions, fixed once so that the right-handed trefoil (writhe +3) has
// J = q^{-1/2} + q^{-3/2} + q^{-5/2} - q^{-9/2}:
//   * at X[a,b,c,d] the A-smoothing joins (a,b) and (c,d); the B-smoothing
//     joins (a,d) and (b,c);
//   * every closed loop carries d = -A^2 - A^{-2};
//   * the Jones polynomial is (-1)^{components} (-A^3)^{-w} <D> with s = A^{kBracketToS}.
inline constexpr int kBracketToS = 2;

/// Unnormalized Kauffman bracket <D>, returned as a Laurent polynomial in the
/// bracket variable A (the stored exponent is the power of A, not of s).
/// Crossingless loops contribute d each, so <unknot> = -A^2 - A^{-2}.
LaurentHalf kauffman_bracket(const PlanarDiagram& d);

/// Applies the writhe and sign normalization to a bracket in A and converts
/// it to s = q^{1/2}.
LaurentHalf normalize_bracket(const LaurentHalf& bracket_in_a, int writhe, int components);

/// Writhe-normalized Jones polynomial with J(unknot) = q^{1/2} + q^{-1/2}.
LaurentHalf jones(const PlanarDiagram& d);

}  // namespace qvl
