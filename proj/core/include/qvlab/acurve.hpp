#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qvlab/bigcomplex.hpp"
#include "qvlab/bivar_poly.hpp"

namespace qvl {

/// A point (l, m = e^u) on an A-polynomial curve together with a continuous
/// logarithm v of l. `slope` is dv/du, needed only when the point is a node
/// of the curve and the branch cannot be read off from l alone.
struct BranchPoint {
  BigComplex u;
  BigComplex l;
  BigComplex v;
  BigComplex slope;
  bool has_slope = false;
  std::string branch_id;

  /// Continuous log(-l): zero at the complete structure of the geometric branch.
  /// The one-form on the curve is theta = -(w + i pi) du in this variable.
  BigComplex w() const { return v - BigComplex::i_pi(); }
  /// Integer k with v = Log(l) + 2 pi i k.
  long winding() const;
};

/// Complete hyperbolic structure of the figure-eight knot: u = i pi, l = -1
/// (a node of the curve), v = i pi, leaving along dv/du = 2 sqrt(3) i.
BranchPoint geometric_seed_41();

/// The abelian factor l = 1 at u.
BranchPoint abelian_seed(const BigComplex& u);

/// Root of A(l, e^u) = 0 continued from `seed` along the straight path
/// seed.u -> u. Throws RamificationError when two roots come too close to
/// tell apart, at the fraction of the path where that happened.
BranchPoint solve_branch(const BivarPoly& a, const BigComplex& u, const BranchPoint& seed, int min_steps = 32);

/// The same continuation sampled at `intervals` + 1 equally spaced points.
std::vector<BranchPoint> track_path(const BivarPoly& a, const BigComplex& u_end, const BranchPoint& seed,
                                    int intervals);

/// p = log x for the root x of m^3 x^2 + (1 - m^2 - m^4) x + m^3 = 0 that
/// starts at e^{-2 pi i/3} when u = i pi, continued along a straight path.
BigComplex p_branch_41(const BigComplex& u);

/// I_CS for the figure-eight knot:
///   2 Li_2(e^{-p-u}) - 2 Li_2(e^{p-u}) + 8 p (u - i pi).
/// This is the form whose u-derivative is -4(w + i pi) on the geometric branch.
BigComplex ics_closed_41(const BigComplex& u);

/// The closed form with the last term written as 8 (p - i pi)(u - i pi).
/// It differs from ics_closed_41 by exactly 8 pi i (u - i pi) and is kept for
/// comparison only.
BigComplex ics_closed_41_printed(const BigComplex& u);

/// I_CS(u_end) = I_CS(i pi) + 4 * integral of theta along the straight path
/// from the seed, by Romberg refinement of the trapezoid rule starting from
/// `steps` intervals. The anchor I_CS(i pi) comes from ics_closed_41.
/// The error field is the difference of the last two Romberg estimates.
Certified ics_path(const BivarPoly& a, const BigComplex& u_end, int steps = 8,
                   const BranchPoint& seed = geometric_seed_41(), double tolerance = 1e-14);

struct CSVolume {
  BigComplex u;
  BigComplex ics;
  Real vol;
  Real cs;
};

/// Vol + i CS = (i/2) I_CS + 2 i v Re(u) - 2 pi u + 2 pi^2 i, with v the
/// longitude log on the tracked branch.
CSVolume cs_volume(const BigComplex& u, const BigComplex& ics, const BigComplex& v);

/// Ray-Singer torsion 4 pi^2 / sqrt(-m^-4 + 2m^-2 + 1 + 2m^2 - m^4), with the
/// square root continued from its positive value at u = i pi.
BigComplex torsion_41(const BigComplex& u);
BigComplex s2_41(const BigComplex& u);
/// Includes the trailing -1/6 exactly as the formula is printed.
BigComplex s3_41(const BigComplex& u);

/// Exact coefficient of hbar^n in log(sinh(hbar)/hbar) (zero for odd n).
mpq_class log_sinhc_coefficient(int n);

/// Converts S_n(i pi) for n = 2.. into the coefficients S~_n of the V_N
/// expansion: sum S~_n hbar^{n-1} = sum S_n(i pi) hbar^{n-1} - log(sinh hbar/hbar).
std::vector<BigComplex> tilde_s_from_s(const std::vector<BigComplex>& s_at_ipi);

}  // namespace qvl
