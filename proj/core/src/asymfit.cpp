#include "qvlab/asymfit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qvlab/acurve.hpp"
#include "qvlab/cjones.hpp"
#include "qvlab/errors.hpp"

namespace qvl {

namespace bmp = boost::multiprecision;

bool is_complete_point(const BigComplex& u) {
  return (u - BigComplex::i_pi()).abs() < ten_to_minus(current_digits() - 5);
}

std::vector<SequenceSample> build_sequence(const BigComplex& u, const std::vector<int>& Ns, unsigned digits) {
  if (!std::is_sorted(Ns.begin(), Ns.end())) throw InputError("sample indices must be increasing");
  const bool complete = is_complete_point(u);
  std::vector<SequenceSample> out;
  const Real two_pi = 2 * pi_real();
  for (int N : Ns) {
    SequenceSample s;
    s.N = N;
    Certified c = complete ? kashaev_41(N, digits) : jn_numeric(u, N, digits).value;
    s.value = c.value;
    s.error = c.error;
    BigComplex principal = log(s.value);
    if (out.empty()) {
      s.log_value = principal;
    } else {
      Real predicted = out.back().log_value.im();
      if (out.size() >= 2) {
        const auto& p1 = out[out.size() - 1];
        const auto& p0 = out[out.size() - 2];
        predicted += (p1.log_value.im() - p0.log_value.im()) * (N - p1.N) / (p1.N - p0.N);
      }
      Real k = bmp::round((predicted - principal.im()) / two_pi);
      s.log_value = {principal.re(), principal.im() + k * two_pi};
    }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

using Matrix = std::vector<std::vector<Real>>;

Real one_norm(const Matrix& m) {
  Real best = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    Real col = 0;
    for (const auto& row : m) col += bmp::abs(row[j]);
    best = bmp::max(best, col);
  }
  return best;
}

// Gauss-Jordan inverse with partial pivoting; throws on an exactly singular matrix.
Matrix inverse(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<Real>(n, Real(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (bmp::abs(a[r][col]) > bmp::abs(a[piv][col])) piv = r;
    }
    if (a[piv][col] == 0) throw IllConditioned("singular normal matrix", HUGE_VAL);
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    Real p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Real f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

struct LsqResult {
  std::vector<Real> x;
  Real condition;
};

// min ||X beta - y||; columns of X scaled to unit norm first.
LsqResult least_squares(const Matrix& x, const std::vector<Real>& y) {
  const std::size_t rows = x.size();
  const std::size_t cols = x.front().size();
  std::vector<Real> scale(cols, Real(0));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) scale[j] += x[i][j] * x[i][j];
    scale[j] = bmp::sqrt(scale[j]);
    if (scale[j] == 0) throw IllConditioned("zero column in fit design", HUGE_VAL);
  }
  Matrix gram(cols, std::vector<Real>(cols, Real(0)));
  std::vector<Real> rhs(cols, Real(0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      Real xj = x[i][j] / scale[j];
      rhs[j] += xj * y[i];
      for (std::size_t k = 0; k < cols; ++k) gram[j][k] += xj * x[i][k] / scale[k];
    }
  }
  Matrix inv = inverse(gram);
  LsqResult out;
  out.condition = one_norm(gram) * one_norm(inv);
  out.x.assign(cols, Real(0));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t k = 0; k < cols; ++k) out.x[j] += inv[j][k] * rhs[k];
    out.x[j] /= scale[j];
  }
  return out;
}

}  // namespace

FitReport fit_expansion(const std::vector<SequenceSample>& samples, const FitOptions& options) {
  const int order = options.model_order;
  if (order < 0) throw InputError("model order must be nonnegative");
  if (options.holdout_stride < 2) throw InputError("holdout stride must be at least 2");
  std::vector<const SequenceSample*> fit;
  std::vector<const SequenceSample*> held;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    (i % static_cast<std::size_t>(options.holdout_stride) == 1 ? held : fit).push_back(&samples[i]);
  }
  const std::size_t re_cols = static_cast<std::size_t>(3 + order) - (options.constrain_log ? 1 : 0);
  if (held.size() < 3) throw InputError("need at least 3 held-out samples");
  if (fit.size() < re_cols + 3) throw InputError("need at least model_order + 3 samples in the fit window");

  auto row = [&](int N, bool with_log) {
    std::vector<Real> r;
    Real n(N);
    r.push_back(n);
    if (with_log) r.push_back(bmp::log(n));
    r.push_back(Real(1));
    Real inv = 1 / n;
    Real p = inv;
    for (int i = 0; i < order; ++i, p *= inv) r.push_back(p);
    return r;
  };

  Matrix xre;
  Matrix xim;
  std::vector<Real> yre;
  std::vector<Real> yim;
  for (const auto* s : fit) {
    xre.push_back(row(s->N, !options.constrain_log));
    xim.push_back(row(s->N, false));
    Real target = s->log_value.re();
    if (options.constrain_log) target -= options.fixed_b * bmp::log(Real(s->N));
    yre.push_back(target);
    yim.push_back(s->log_value.im());
  }
  LsqResult re = least_squares(xre, yre);
  LsqResult im = least_squares(xim, yim);

  FitReport rep;
  rep.log_constrained = options.constrain_log;
  rep.condition = bmp::max(re.condition, im.condition);
  const unsigned digits = current_digits();
  if (digits > options.condition_margin &&
      rep.condition > bmp::pow(Real(10), static_cast<int>(digits - options.condition_margin))) {
    throw IllConditioned("fit normal equations are ill-conditioned; widen the N range or raise --digits",
                         rep.condition.convert_to<double>());
  }
  std::size_t k = 0;
  rep.a = {re.x[k++], im.x[0]};
  rep.b = options.constrain_log ? options.fixed_b : re.x[k++];
  rep.c = {re.x[k++], im.x[1]};
  for (int i = 0; i < order; ++i) rep.d.push_back({re.x[k++], im.x[static_cast<std::size_t>(2 + i)]});

  rep.residual = 0;
  for (const auto* s : held) {
    Real n(s->N);
    BigComplex model = rep.a * BigComplex(n) + BigComplex(rep.b * bmp::log(n)) + rep.c;
    Real p = 1 / n;
    for (const auto& d : rep.d) {
      model += d * BigComplex(p);
      p /= n;
    }
    rep.residual = bmp::max(rep.residual, Real((model - s->log_value).abs()));
  }
  for (const auto* s : fit) rep.fit_N.push_back(s->N);
  for (const auto* s : held) rep.holdout_N.push_back(s->N);
  return rep;
}

namespace {

Real rel_real(const BigComplex& fitted, const BigComplex& predicted) {
  Real den = bmp::abs(predicted.re());
  Real diff = bmp::abs(fitted.re() - predicted.re());
  return den == 0 ? diff : Real(diff / den);
}

Real rel_complex(const BigComplex& fitted, const BigComplex& predicted) {
  Real den = predicted.abs();
  Real diff = (fitted - predicted).abs();
  return den == 0 ? diff : Real(diff / den);
}

}  // namespace

std::vector<Discrepancy> compare_quantum_vc(const FitReport& report, const BigComplex& u) {
  std::vector<Discrepancy> out;
  const BigComplex ipi = BigComplex::i_pi();
  const bool complete = is_complete_point(u);
  const BigComplex a_pred = -ics_closed_41(u) / (BigComplex(4) * u);
  out.push_back({"growth_rate", report.a, a_pred, rel_real(report.a, a_pred), true});
  const BigComplex b_pred(Real(3) / 2);
  out.push_back({"log_coeff", BigComplex(report.b), b_pred, rel_real(BigComplex(report.b), b_pred), true});
  const BigComplex t = torsion_41(u);
  const Real four_pi = 4 * pi_real();
  BigComplex c_pred;
  BigComplex d1_pred;
  if (complete) {
    c_pred = log(-ipi * t / BigComplex(4)) / BigComplex(2) - BigComplex(Real(3) / 2) * log(ipi);
    d1_pred = ipi * tilde_s_from_s({s2_41(u)})[0];
  } else {
    c_pred = log(BigComplex::i() * t / BigComplex(four_pi)) / BigComplex(2) - BigComplex(Real(3) / 2) * log(u);
    d1_pred = u * s2_41(u);
  }
  out.push_back({"constant", report.c, c_pred, rel_real(report.c, c_pred), true});
  if (!report.d.empty()) {
    out.push_back({"d1", report.d[0], d1_pred, rel_complex(report.d[0], d1_pred), false});
  }
  return out;
}

}  // namespace qvl
