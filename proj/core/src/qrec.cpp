#include "qvlab/qrec.hpp"

#include <gmp.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>

#include "qvlab/cjones.hpp"

namespace qvl {

const LaurentHalf& JSequence::at(int N) const {
  if (N < 1 || N > max_N()) {
    throw IndexOutOfRange("sequence index " + std::to_string(N) + " outside 1.." + std::to_string(max_N()));
  }
  return values[static_cast<std::size_t>(N - 1)];
}

JSequence JSequence::figure_eight(int max_N) {
  JSequence s{"4_1", {}};
  for (int N = 1; N <= max_N; ++N) s.values.push_back(habiro_41(N));
  return s;
}

JSequence JSequence::unknot(int max_N) {
  JSequence s{"unknot", {}};
  for (int N = 1; N <= max_N; ++N) s.values.push_back(colored_jones_unknot(N));
  return s;
}

JSequence JSequence::zero(int max_N) {
  JSequence s{"zero", {}};
  s.values.assign(static_cast<std::size_t>(max_N), LaurentHalf());
  return s;
}

LaurentHalf apply(const QWeylOp& op, const JSequence& seq, int N) {
  if (N < 1 || N + op.order() > seq.max_N()) {
    throw IndexOutOfRange("operator of order " + std::to_string(op.order()) + " at N=" + std::to_string(N) +
                          " needs J up to " + std::to_string(N + op.order()) + ", have " +
                          std::to_string(seq.max_N()));
  }
  LaurentHalf out;
  for (const auto& [k, c] : op.terms()) {
    if (!c.is_laurent()) throw InputError("apply needs Laurent-polynomial coefficients");
    out += (c.num() * seq.at(N + k.first)).shifted(k.second * N);
  }
  return out;
}

LaurentHalf residual(const Recursion& rec, const JSequence& seq, int N) {
  LaurentHalf out = apply(rec.op, seq, N);
  for (const auto& [k, c] : rec.rhs.terms()) out -= c.num().shifted(k.second * N);
  return out;
}

namespace {

using u64 = std::uint64_t;

struct Unknown {
  int a;  // power of l; -1 marks the right-hand side (constant sequence)
  int b;
  int t;
};

// Sparse equations: one per (N, exponent of s), integer coefficients.
using SparseRow = std::vector<std::pair<std::size_t, mpz_class>>;

std::vector<SparseRow> build_rows(const JSequence& seq, const std::vector<Unknown>& unknowns,
                                  const std::vector<int>& Ns) {
  std::vector<SparseRow> rows;
  for (int N : Ns) {
    std::map<int, std::map<std::size_t, mpz_class>> eq;
    for (std::size_t i = 0; i < unknowns.size(); ++i) {
      const auto& u = unknowns[i];
      if (u.a < 0) {
        eq[u.t + u.b * N][i] -= 1;
        continue;
      }
      for (const auto& [e, c] : seq.at(N + u.a).terms()) eq[e + u.t + u.b * N][i] += c;
    }
    for (auto& [e, entries] : eq) {
      SparseRow r;
      for (auto& [i, c] : entries) {
        if (c != 0) r.emplace_back(i, c);
      }
      if (!r.empty()) rows.push_back(std::move(r));
    }
  }
  return rows;
}

// Echelon basis mod p kept in insertion order: every pivot row has zeros in
// the pivot columns of all rows inserted before it.
class ModularEchelon {
 public:
  ModularEchelon(std::size_t cols, u64 p) : cols_(cols), p_(p) {}

  std::size_t rank() const { return pivots_.size(); }

  // Reduces and inserts; returns true when the rank grew.
  bool insert(std::vector<u64> row) {
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      u64 f = row[pivot_col_[k]];
      if (f == 0) continue;
      const auto& pr = pivots_[k];
      u64 neg = p_ - f;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (pr[j] != 0) row[j] = (row[j] + neg * pr[j]) % p_;
      }
    }
    std::size_t lead = cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (row[j] != 0) {
        lead = j;
        break;
      }
    }
    if (lead == cols_) return false;
    u64 inv = mod_inverse(row[lead]);
    for (auto& x : row) x = x * inv % p_;
    pivots_.push_back(std::move(row));
    pivot_col_.push_back(lead);
    return true;
  }

  std::vector<std::size_t> free_columns() const {
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivot_col_) is_pivot[c] = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!is_pivot[j]) out.push_back(j);
    }
    return out;
  }

  // Null vector with x_free = 1 and the other free variables 0.
  std::vector<u64> null_vector(std::size_t free) const {
    std::vector<u64> x(cols_, 0);
    x[free] = 1;
    for (std::size_t k = pivots_.size(); k-- > 0;) {
      const auto& pr = pivots_[k];
      u64 acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j != pivot_col_[k] && pr[j] != 0 && x[j] != 0) acc = (acc + pr[j] * x[j]) % p_;
      }
      x[pivot_col_[k]] = (p_ - acc) % p_;
    }
    return x;
  }

 private:
  u64 mod_inverse(u64 a) const {
    u64 result = 1;
    u64 base = a % p_;
    u64 e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return result;
  }

  std::size_t cols_;
  u64 p_;
  std::vector<std::vector<u64>> pivots_;
  std::vector<std::size_t> pivot_col_;
};

using ModRow = std::vector<std::pair<std::size_t, u64>>;

std::vector<ModRow> reduce_rows(const std::vector<SparseRow>& rows, u64 p) {
  mpz_class pz(static_cast<unsigned long>(p));
  std::vector<ModRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    ModRow m;
    for (const auto& [i, c] : r) {
      mpz_class x = c % pz;
      if (x < 0) x += pz;
      if (x != 0) m.emplace_back(i, x.get_ui());
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<u64> densify(const ModRow& r, std::size_t cols) {
  std::vector<u64> row(cols, 0);
  for (const auto& [i, c] : r) row[i] = c;
  return row;
}

u64 dot(const ModRow& r, const std::vector<u64>& x, u64 p) {
  u64 acc = 0;
  for (const auto& [i, c] : r) acc = (acc + c * x[i]) % p;
  return acc;
}

struct ModularSolution {
  std::size_t nullity = 0;
  std::vector<std::size_t> free;
  std::vector<u64> vector;  // null vector for the last free column
};

// Rows are taken in a fixed shuffled order. Once the rank stops growing the
// candidate null space is tested against the remaining rows, so only rows
// that actually raise the rank are eliminated.
ModularSolution solve_mod(const std::vector<SparseRow>& exact_rows, const std::vector<std::size_t>& order,
                          std::size_t cols, u64 p) {
  const std::vector<ModRow> rows = reduce_rows(exact_rows, p);
  ModularEchelon ech(cols, p);
  std::size_t since_growth = 0;
  std::vector<std::vector<u64>> basis;
  std::vector<std::size_t> free;
  bool have_basis = false;
  for (std::size_t idx : order) {
    if (ech.rank() == cols) break;
    if (have_basis) {
      bool annihilated = true;
      for (const auto& v : basis) {
        if (dot(rows[idx], v, p) != 0) {
          annihilated = false;
          break;
        }
      }
      if (annihilated) continue;
      have_basis = false;
    }
    if (ech.insert(densify(rows[idx], cols))) {
      since_growth = 0;
    } else if (++since_growth >= 48) {
      free = ech.free_columns();
      basis.clear();
      for (auto f : free) basis.push_back(ech.null_vector(f));
      have_basis = true;
    }
  }
  ModularSolution sol;
  sol.free = ech.free_columns();
  sol.nullity = sol.free.size();
  if (sol.nullity > 0) sol.vector = ech.null_vector(sol.free.back());
  return sol;
}

// Wang's rational reconstruction: r/t = a mod m with |r|, |t| <= sqrt(m/2).
bool rational_reconstruct(const mpz_class& a, const mpz_class& m, mpq_class& out) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = a;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  if (gcd(r1, t1) != 1) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

std::vector<u64> word_primes(int count) {
  std::vector<u64> out;
  mpz_class c = (mpz_class(1) << 31) - 1;
  while (static_cast<int>(out.size()) < count) {
    if (mpz_probab_prime_p(c.get_mpz_t(), 30) > 0) out.push_back(c.get_ui());
    c -= 2;
  }
  return out;
}

Recursion assemble(const std::vector<Unknown>& unknowns, const std::vector<mpz_class>& coeffs) {
  std::map<std::pair<int, int>, LaurentHalf> op_c;
  std::map<int, LaurentHalf> rhs_c;
  for (std::size_t i = 0; i < unknowns.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const auto& u = unknowns[i];
    LaurentHalf mono = LaurentHalf::monomial(coeffs[i], u.t);
    if (u.a < 0) {
      rhs_c[u.b] += mono;
    } else {
      op_c[{u.a, u.b}] += mono;
    }
  }
  // Strip the common power of s so the operator is normalized.
  int shift = 0;
  bool first = true;
  for (const auto& [k, c] : op_c) {
    shift = first ? c.min_exponent() : std::min(shift, c.min_exponent());
    first = false;
  }
  for (const auto& [k, c] : rhs_c) shift = std::min(shift, c.min_exponent());
  Recursion rec;
  for (const auto& [k, c] : op_c) rec.op += QWeylOp::monomial(RationalFunction(c.shifted(-shift)), k.first, k.second);
  for (const auto& [b, c] : rhs_c) rec.rhs += QWeylOp::monomial(RationalFunction(c.shifted(-shift)), 0, b);
  return rec;
}

std::optional<Recursion> try_s_degree(const JSequence& seq, const DiscoveryOptions& opt, int s_degree,
                                      const std::vector<int>& fit, const std::vector<int>& holdout,
                                      std::size_t& nullity_out) {
  std::vector<Unknown> unknowns;
  for (int a = 0; a <= opt.order; ++a) {
    for (int b = 0; b <= opt.m_degree; ++b) {
      for (int t = 0; t <= s_degree; ++t) unknowns.push_back({a, b, t});
    }
  }
  if (opt.inhomogeneous) {
    for (int b = 0; b <= opt.m_degree; ++b) {
      for (int t = 0; t <= s_degree; ++t) unknowns.push_back({-1, b, t});
    }
  }
  const std::size_t cols = unknowns.size();
  auto rows = build_rows(seq, unknowns, fit);
  if (rows.size() < cols) {
    throw InputError("recursion system is underdetermined: " + std::to_string(rows.size()) + " equations for " +
                     std::to_string(cols) + " unknowns; supply more sequence terms");
  }
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(0x5eed);
  std::shuffle(order.begin(), order.end(), rng);

  auto primes = word_primes(8);
  mpz_class modulus = 1;
  std::vector<mpz_class> residues(cols, 0);
  std::vector<std::size_t> free_ref;
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    const u64 p = primes[pi];
    ModularSolution sol = solve_mod(rows, order, cols, p);
    nullity_out = sol.nullity;
    if (sol.nullity == 0) return std::nullopt;
    if (pi == 0) {
      free_ref = sol.free;
    } else if (sol.free != free_ref) {
      continue;  // unlucky prime
    }
    // CRT: combine residues mod modulus with sol.vector mod p.
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class inv;
    mpz_class mod_p = modulus % pz;
    mpz_invert(inv.get_mpz_t(), mod_p.get_mpz_t(), pz.get_mpz_t());
    for (std::size_t i = 0; i < cols; ++i) {
      mpz_class diff = (mpz_class(static_cast<unsigned long>(sol.vector[i])) - residues[i]) % pz;
      if (diff < 0) diff += pz;
      mpz_class k = diff * inv % pz;
      residues[i] += modulus * k;
    }
    modulus *= pz;

    std::vector<mpq_class> q(cols);
    bool ok = true;
    for (std::size_t i = 0; i < cols && ok; ++i) ok = rational_reconstruct(residues[i], modulus, q[i]);
    if (!ok) continue;
    mpz_class lcm = 1;
    for (const auto& x : q) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> ints(cols);
    mpz_class g = 0;
    for (std::size_t i = 0; i < cols; ++i) {
      mpq_class scaled = q[i] * lcm;
      ints[i] = scaled.get_num();
      g = gcd(g, ints[i]);
    }
    if (g == 0) continue;
    for (auto& x : ints) x /= g;
    Recursion rec = assemble(unknowns, ints);
    bool exact = true;
    for (int N : fit) {
      if (!residual(rec, seq, N).is_zero()) {
        exact = false;
        break;
      }
    }
    if (!exact) continue;  // reconstruction not yet stable; add a prime
    for (int N : holdout) {
      if (!residual(rec, seq, N).is_zero()) {
        throw RecursionCounterexample("recursion found on the fit window fails at held-out N=" + std::to_string(N),
                                      N);
      }
    }
    rec.inhomogeneous = opt.inhomogeneous;
    rec.s_degree = s_degree;
    rec.fit_N = fit;
    rec.holdout_N = holdout;
    return rec;
  }
  throw NumericError("rational reconstruction did not stabilize over " + std::to_string(primes.size()) + " primes");
}

// Makes the coefficient of the largest (a, b) key have a positive top coefficient.
void normalize_sign(Recursion& rec) {
  if (rec.op.is_zero()) return;
  const auto& top = rec.op.terms().rbegin()->second.num();
  if (top.coeff(top.max_exponent()) < 0) {
    rec.op = QWeylOp() - rec.op;
    rec.rhs = QWeylOp() - rec.rhs;
  }
}

}  // namespace

std::optional<Recursion> discover_recursion(const JSequence& seq, const DiscoveryOptions& opt) {
  if (opt.order < 0 || opt.m_degree < 0) throw InputError("order and degree must be nonnegative");
  if (opt.holdout < 1) throw InputError("at least one held-out index is required");
  const int last = seq.max_N() - opt.order;
  const int fit_end = last - opt.holdout;
  if (fit_end < 1) {
    throw InputError("sequence too short: need more than order + holdout = " +
                     std::to_string(opt.order + opt.holdout) + " terms");
  }
  std::vector<int> fit;
  std::vector<int> holdout;
  for (int N = 1; N <= fit_end; ++N) fit.push_back(N);
  for (int N = fit_end + 1; N <= last; ++N) holdout.push_back(N);

  bool all_zero = std::all_of(seq.values.begin(), seq.values.end(), [](const LaurentHalf& v) { return v.is_zero(); });
  if (all_zero) {
    Recursion rec;
    rec.op = QWeylOp::scalar(1);
    rec.fit_N = fit;
    rec.holdout_N = holdout;
    return rec;
  }

  for (int ds = 0; ds <= opt.max_s_degree; ds += 4) {
    std::size_t nullity = 0;
    auto rec = try_s_degree(seq, opt, ds, fit, holdout, nullity);
    if (!rec) continue;
    // Several s-shifts of one operator fit at once; step back to the degree
    // where the solution space is one-dimensional.
    if (nullity > 1 && ds > 0) {
      int lower = std::max(0, ds - static_cast<int>(nullity) + 1);
      std::size_t n2 = 0;
      auto tighter = try_s_degree(seq, opt, lower, fit, holdout, n2);
      if (tighter) rec = std::move(tighter);
    }
    normalize_sign(*rec);
    return rec;
  }
  return std::nullopt;
}

BivarPoly classical_limit(const QWeylOp& op) {
  // Clear denominators: multiply every coefficient by the product of distinct denominators.
  LaurentHalf common(1);
  std::vector<LaurentHalf> seen;
  for (const auto& [k, c] : op.terms()) {
    if (c.is_laurent()) continue;
    if (std::find(seen.begin(), seen.end(), c.den()) != seen.end()) continue;
    if (c.den().evaluate_at_one() == 0) {
      throw InputError("coefficient " + c.to_string() + " has a pole at s = 1");
    }
    seen.push_back(c.den());
    common *= c.den();
  }
  std::map<std::pair<int, int>, LaurentHalf> coeffs;
  for (const auto& [k, c] : op.terms()) coeffs[k] = (c * RationalFunction(common)).num();
  const LaurentHalf s_minus_1 = LaurentHalf::monomial(1, 1) - LaurentHalf(1);
  for (int guard = 0; guard < 256; ++guard) {
    bool all_vanish = !coeffs.empty();
    for (const auto& [k, c] : coeffs) {
      if (c.evaluate_at_one() != 0) {
        all_vanish = false;
        break;
      }
    }
    if (!all_vanish) break;
    for (auto& [k, c] : coeffs) c = c.divide_exact(s_minus_1);
  }
  std::vector<BivarPoly::Term> terms;
  for (const auto& [k, c] : coeffs) terms.push_back({c.evaluate_at_one(), k.first, k.second});
  return BivarPoly(terms).primitive_part();
}

}  // namespace qvl
