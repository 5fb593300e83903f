#include "qvlab/acurve.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

#include "qvlab/dilog.hpp"
#include "qvlab/errors.hpp"

namespace qvl {

namespace bmp = boost::multiprecision;

namespace {

using Coeffs = std::vector<BigComplex>;  // c[k] multiplies x^k

BigComplex horner(const Coeffs& c, const BigComplex& x) {
  BigComplex acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Coeffs derivative(const Coeffs& c) {
  Coeffs d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * BigComplex(static_cast<int>(k)));
  return d;
}

// Drops leading coefficients that vanish relative to the largest one.
Coeffs trimmed(Coeffs c) {
  Real scale = 0;
  for (const auto& x : c) scale = bmp::max(scale, x.abs());
  const Real tiny = scale * ten_to_minus(current_digits() - 5);
  while (c.size() > 1 && c.back().abs() <= tiny) c.pop_back();
  return c;
}

// Aberth-Ehrlich iteration for all roots.
std::vector<BigComplex> all_roots(const Coeffs& raw) {
  Coeffs c = trimmed(raw);
  const std::size_t n = c.size() - 1;
  if (n == 0) return {};
  Coeffs d = derivative(c);
  Real radius = 0;
  for (std::size_t k = 0; k < n; ++k) radius = bmp::max(radius, Real((c[k] / c[n]).abs()));
  radius = 1 + radius;
  std::vector<BigComplex> z(n);
  BigComplex seed = BigComplex(Real(0.4), Real(0.9));
  BigComplex cur = seed;
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = cur * BigComplex(radius / 2);
    cur *= seed;
  }
  const Real eps = ten_to_minus(current_digits() - 4);
  for (int iter = 0; iter < 500; ++iter) {
    Real change = 0;
    for (std::size_t k = 0; k < n; ++k) {
      BigComplex ratio = horner(c, z[k]) / horner(d, z[k]);
      BigComplex repulse;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) repulse += BigComplex(1) / (z[k] - z[j]);
      }
      BigComplex step = ratio / (BigComplex(1) - ratio * repulse);
      z[k] -= step;
      change = bmp::max(change, Real(step.abs() / (1 + z[k].abs())));
    }
    if (change < eps) break;
  }
  return z;
}

struct Tracked {
  BigComplex u;
  BigComplex root;
  BigComplex log_root;
};

using CoeffFn = std::function<Coeffs(const BigComplex&)>;

// Continues one root along u0 -> u1 with adaptive steps. The first prediction
// uses `dlog_du` when supplied (needed at a node), later ones extrapolate
// from the last two accepted points.
std::vector<Tracked> continue_root(const CoeffFn& coeffs, const Tracked& start, std::optional<BigComplex> dlog_du,
                                   const BigComplex& u1, int intervals) {
  std::vector<Tracked> out{start};
  if (intervals < 1) throw InputError("path needs at least one interval");
  const BigComplex du_total = u1 - start.u;
  Tracked prev = start;
  std::optional<Tracked> before;
  for (int i = 1; i <= intervals; ++i) {
    // Sub-steps between sample points; refined when root separation is poor.
    int sub = 1;
    bool done = false;
    while (!done) {
      Tracked a = prev;
      std::optional<Tracked> b = before;
      bool ok = true;
      for (int s = 1; s <= sub && ok; ++s) {
        Real frac = (Real(i - 1) + Real(s) / sub) / intervals;
        BigComplex u = start.u + du_total * BigComplex(frac);
        BigComplex predicted;
        if (b) {
          predicted = a.root + (a.root - b->root) * ((u - a.u) / (a.u - b->u));
        } else if (dlog_du) {
          predicted = a.root * (BigComplex(1) + *dlog_du * (u - a.u));
        } else {
          predicted = a.root;
        }
        auto roots = all_roots(coeffs(u));
        std::sort(roots.begin(), roots.end(), [&](const BigComplex& x, const BigComplex& y) {
          return (x - predicted).abs() < (y - predicted).abs();
        });
        Real d1 = (roots[0] - predicted).abs();
        Real d2 = roots.size() > 1 ? Real((roots[1] - predicted).abs()) : Real(1e30);
        if (d1 * 4 >= d2) {
          ok = false;
          break;
        }
        Tracked next{u, roots[0], a.log_root + log(roots[0] / a.root)};
        b = a;
        a = next;
      }
      if (ok) {
        before = b;
        prev = a;
        out.push_back(a);
        done = true;
      } else {
        sub *= 2;
        if (sub > 4096) {
          throw RamificationError("roots merge along the path near u = " +
                                      to_decimal(start.u + du_total * BigComplex(Real(i) / intervals), 12),
                                  static_cast<double>(i) / intervals);
        }
      }
    }
  }
  return out;
}

CoeffFn curve_coeffs(const BivarPoly& a) {
  return [a](const BigComplex& u) { return a.coefficients_in_l(exp(u)); };
}

Tracked as_tracked(const BranchPoint& p) { return {p.u, p.l, p.v}; }

BranchPoint as_branch(const Tracked& t, const std::string& id) {
  BranchPoint p;
  p.u = t.u;
  p.l = t.root;
  p.v = t.log_root;
  p.branch_id = id;
  return p;
}

}  // namespace

long BranchPoint::winding() const {
  BigComplex diff = v - log(l);
  Real k = diff.im() / (2 * pi_real());
  return bmp::lround(k);
}

BranchPoint geometric_seed_41() {
  BranchPoint p;
  p.u = BigComplex::i_pi();
  p.l = BigComplex(-1);
  p.v = BigComplex::i_pi();
  p.slope = BigComplex(Real(0), 2 * bmp::sqrt(Real(3)));
  p.has_slope = true;
  p.branch_id = "geometric";
  return p;
}

BranchPoint abelian_seed(const BigComplex& u) {
  BranchPoint p;
  p.u = u;
  p.l = BigComplex(1);
  p.v = BigComplex();
  p.branch_id = "abelian";
  return p;
}

std::vector<BranchPoint> track_path(const BivarPoly& a, const BigComplex& u_end, const BranchPoint& seed,
                                    int intervals) {
  if (a.evaluate(seed.l, exp(seed.u)).abs() > ten_to_minus(current_digits() / 2)) {
    throw InputError("seed is not on the curve");
  }
  std::optional<BigComplex> slope;
  if (seed.has_slope) slope = seed.slope;
  auto path = continue_root(curve_coeffs(a), as_tracked(seed), slope, u_end, intervals);
  std::vector<BranchPoint> out;
  out.reserve(path.size());
  for (const auto& t : path) out.push_back(as_branch(t, seed.branch_id));
  return out;
}

BranchPoint solve_branch(const BivarPoly& a, const BigComplex& u, const BranchPoint& seed, int min_steps) {
  if ((u - seed.u).is_zero()) return seed;
  return track_path(a, u, seed, min_steps).back();
}

BigComplex p_branch_41(const BigComplex& u) {
  const BigComplex start_u = BigComplex::i_pi();
  const BigComplex x0 = BigComplex::polar(Real(1), -2 * pi_real() / 3);
  Tracked start{start_u, x0, log(x0)};
  if ((u - start_u).is_zero()) return start.log_root;
  CoeffFn quad = [](const BigComplex& uu) {
    BigComplex m = exp(uu);
    BigComplex m2 = m * m;
    BigComplex m3 = m2 * m;
    Coeffs c{m3, BigComplex(1) - m2 - m2 * m2, m3};
    if (c[2].abs() < ten_to_minus(current_digits() / 2)) throw NumericError("degenerate p-quadratic");
    return c;
  };
  return continue_root(quad, start, std::nullopt, u, 32).back().log_root;
}

namespace {

BigComplex dilog_part(const BigComplex& u, const BigComplex& p) {
  const unsigned digits = current_digits();
  return BigComplex(2) * dilog(exp(-p - u), digits).value - BigComplex(2) * dilog(exp(p - u), digits).value;
}

}  // namespace

BigComplex ics_closed_41(const BigComplex& u) {
  BigComplex p = p_branch_41(u);
  return dilog_part(u, p) + BigComplex(8) * p * (u - BigComplex::i_pi());
}

BigComplex ics_closed_41_printed(const BigComplex& u) {
  BigComplex p = p_branch_41(u);
  const BigComplex ipi = BigComplex::i_pi();
  return dilog_part(u, p) + BigComplex(8) * (p - ipi) * (u - ipi);
}

Certified ics_path(const BivarPoly& a, const BigComplex& u_end, int steps, const BranchPoint& seed,
                   double tolerance) {
  const BigComplex anchor = ics_closed_41(seed.u);
  const BigComplex du = u_end - seed.u;
  if (du.is_zero()) return {anchor, Real(0)};
  if (steps < 1) throw InputError("ics_path needs at least one step");
  // theta = -(w + i pi) du = -v du along the tracked branch.
  auto trapezoid = [&](int n) {
    auto path = track_path(a, u_end, seed, n);
    BigComplex sum = (path.front().v + path.back().v) / BigComplex(2);
    for (int k = 1; k < n; ++k) sum += path[static_cast<std::size_t>(k)].v;
    return -sum * du / BigComplex(n);
  };
  std::vector<std::vector<BigComplex>> table;
  int n = steps;
  for (int level = 0; level < 14; ++level, n *= 2) {
    std::vector<BigComplex> row{trapezoid(n)};
    Real factor = 4;
    for (std::size_t j = 1; j <= table.size(); ++j) {
      const BigComplex& coarse = table.back()[j - 1];
      row.push_back(row[j - 1] + (row[j - 1] - coarse) / BigComplex(factor - 1));
      factor *= 4;
    }
    if (!table.empty()) {
      Real err = (row.back() - table.back().back()).abs();
      if (err < tolerance) return {anchor + BigComplex(4) * row.back(), 4 * err};
    }
    table.push_back(std::move(row));
  }
  throw NumericError("path integral did not converge to tolerance");
}

CSVolume cs_volume(const BigComplex& u, const BigComplex& ics, const BigComplex& v) {
  const Real pi = pi_real();
  BigComplex i = BigComplex::i();
  BigComplex z = i * ics / BigComplex(2) + BigComplex(2) * i * v * BigComplex(u.re()) - BigComplex(2 * pi) * u +
                 BigComplex(Real(0), 2 * pi * pi);
  return {u, ics, z.re(), z.im()};
}

namespace {

BigComplex torsion_radicand(const BigComplex& u) {
  BigComplex m2 = exp(u * BigComplex(2));
  BigComplex m4 = m2 * m2;
  BigComplex im2 = BigComplex(1) / m2;
  BigComplex im4 = im2 * im2;
  return -im4 + BigComplex(2) * im2 + BigComplex(1) + BigComplex(2) * m2 - m4;
}

// sqrt of the radicand continued from sqrt(3) at u = i pi.
BigComplex continued_sqrt_radicand(const BigComplex& u) {
  const BigComplex start = BigComplex::i_pi();
  BigComplex root = sqrt(torsion_radicand(start));
  const int steps = 64;
  for (int k = 1; k <= steps; ++k) {
    BigComplex uk = start + (u - start) * BigComplex(Real(k) / steps);
    BigComplex r = torsion_radicand(uk);
    if (r.abs() < ten_to_minus(current_digits() / 2)) {
      throw RamificationError("torsion radicand vanishes on the path", static_cast<double>(k) / steps);
    }
    BigComplex cand = sqrt(r);
    root = (cand - root).abs() <= (cand + root).abs() ? cand : -cand;
  }
  return root;
}

BigComplex four_pi_sq() {
  Real pi = pi_real();
  return BigComplex(4 * pi * pi);
}

BigComplex m_poly(const BigComplex& m, long c6) {
  // 1 - m^2 - 2m^4 + c6 m^6 - 2m^8 - m^10 + m^12
  static const long coeffs[] = {1, -1, -2, 0, -2, -1, 1};
  BigComplex m2 = m * m;
  BigComplex acc;
  for (int k = 6; k >= 0; --k) acc = acc * m2 + BigComplex(static_cast<int>(k == 3 ? c6 : coeffs[k]));
  return acc;
}

}  // namespace

BigComplex torsion_41(const BigComplex& u) { return four_pi_sq() / continued_sqrt_radicand(u); }

BigComplex s2_41(const BigComplex& u) {
  BigComplex m = exp(u);
  BigComplex ratio = torsion_41(u) / four_pi_sq();
  BigComplex m6 = pow(m, 6);
  return BigComplex(Real(0), Real(-1)) * pow(ratio, 3) * m_poly(m, 15) / (BigComplex(12) * m6);
}

BigComplex s3_41(const BigComplex& u) {
  BigComplex m = exp(u);
  BigComplex ratio = torsion_41(u) / four_pi_sq();
  BigComplex m6 = pow(m, 6);
  return BigComplex(-2) * pow(ratio, 6) * m_poly(m, 5) / m6 - BigComplex(Real(1) / 6);
}

mpq_class log_sinhc_coefficient(int n) {
  if (n <= 0 || n % 2 != 0) return 0;
  // log(sinh x / x) = sum_{k>=1} 2^{2k} B_{2k} x^{2k} / (2k (2k)!)
  mpz_class pow2 = 1;
  mpz_class fact = 1;
  for (int j = 1; j <= n; ++j) {
    pow2 *= 2;
    fact *= j;
  }
  mpq_class c = bernoulli(n) * mpq_class(pow2) / (mpq_class(fact) * n);
  c.canonicalize();
  return c;
}

std::vector<BigComplex> tilde_s_from_s(const std::vector<BigComplex>& s_at_ipi) {
  std::vector<BigComplex> out;
  for (std::size_t j = 0; j < s_at_ipi.size(); ++j) {
    mpq_class c = log_sinhc_coefficient(static_cast<int>(j) + 1);
    Real cr = Real(c.get_num().get_str()) / Real(c.get_den().get_str());
    out.push_back(s_at_ipi[j] - BigComplex(cr));
  }
  return out;
}

}  // namespace qvl
