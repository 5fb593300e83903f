#include "qvlab/bracket.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "qvlab/errors.hpp"

namespace qvl {

namespace {

// counts[(nA - nB + c) * stride + loops] over a contiguous block of states.
using Histogram = std::vector<std::int64_t>;

struct StateSumInput {
  std::vector<std::array<int, 4>> crossings;  // arcs remapped to 0..n-1
  int n_arcs;
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    auto xu = static_cast<std::size_t>(x);
    parent[xu] = parent[static_cast<std::size_t>(parent[xu])];
    x = parent[xu];
  }
  return x;
}

Histogram enumerate_block(const StateSumInput& in, std::uint64_t begin, std::uint64_t end) {
  const std::size_t c = in.crossings.size();
  const std::size_t stride = static_cast<std::size_t>(in.n_arcs) + 1;
  Histogram hist((2 * c + 1) * stride, 0);
  std::vector<int> parent(static_cast<std::size_t>(in.n_arcs));
  for (std::uint64_t state = begin; state < end; ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    int loops = in.n_arcs;
    int a_count = 0;
    for (std::size_t k = 0; k < c; ++k) {
      const auto& x = in.crossings[k];
      const bool a_smoothing = ((state >> k) & 1U) == 0;
      a_count += a_smoothing ? 1 : 0;
      // A joins (a,b),(c,d); B joins (a,d),(b,c).
      const int p1 = x[0];
      const int q1 = a_smoothing ? x[1] : x[3];
      const int p2 = x[2];
      const int q2 = a_smoothing ? x[3] : x[1];
      for (auto [p, q] : {std::pair{p1, q1}, std::pair{p2, q2}}) {
        int rp = find_root(parent, p);
        int rq = find_root(parent, q);
        if (rp != rq) {
          parent[static_cast<std::size_t>(rp)] = rq;
          --loops;
        }
      }
    }
    const int b_count = static_cast<int>(c) - a_count;
    hist[static_cast<std::size_t>(a_count - b_count + static_cast<int>(c)) * stride +
         static_cast<std::size_t>(loops)] += 1;
  }
  return hist;
}

}  // namespace

LaurentHalf kauffman_bracket(const PlanarDiagram& d) {
  const std::size_t c = d.crossing_count();
  if (c > kMaxCrossings) {
    throw CrossingBudgetExceeded("state sum limited to " + std::to_string(kMaxCrossings) + " crossings, got " +
                                 std::to_string(c));
  }
  const LaurentHalf loop_value = LaurentHalf::monomial(-1, 2) + LaurentHalf::monomial(-1, -2);
  if (c == 0) return loop_value.pow(static_cast<unsigned>(d.free_loops()));

  StateSumInput in;
  std::map<int, int> index;
  for (const auto& x : d.crossings()) {
    std::array<int, 4> mapped{};
    for (int p = 0; p < 4; ++p) {
      auto [it, inserted] = index.try_emplace(x.arcs[static_cast<std::size_t>(p)], static_cast<int>(index.size()));
      mapped[static_cast<std::size_t>(p)] = it->second;
    }
    in.crossings.push_back(mapped);
  }
  in.n_arcs = static_cast<int>(index.size());

  // Blocks of state prefixes, reduced in block order so the sum is deterministic.
  const std::uint64_t states = std::uint64_t{1} << c;
  const unsigned workers = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), 16U));
  const std::uint64_t blocks = std::min<std::uint64_t>(workers, states);
  std::vector<std::future<Histogram>> parts;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    std::uint64_t lo = states * b / blocks;
    std::uint64_t hi = states * (b + 1) / blocks;
    parts.push_back(std::async(blocks > 1 ? std::launch::async : std::launch::deferred, enumerate_block,
                               std::cref(in), lo, hi));
  }
  Histogram total;
  for (auto& f : parts) {
    Histogram h = f.get();
    if (total.empty()) {
      total = std::move(h);
    } else {
      for (std::size_t i = 0; i < h.size(); ++i) total[i] += h[i];
    }
  }

  const std::size_t stride = static_cast<std::size_t>(in.n_arcs) + 1;
  std::vector<LaurentHalf> loop_powers(stride);
  loop_powers[0] = LaurentHalf(1);
  for (std::size_t l = 1; l < stride; ++l) loop_powers[l] = loop_powers[l - 1] * loop_value;

  LaurentHalf bracket;
  for (std::size_t i = 0; i <= 2 * c; ++i) {
    for (std::size_t l = 0; l < stride; ++l) {
      std::int64_t count = total[i * stride + l];
      if (count == 0) continue;
      int a_power = static_cast<int>(i) - static_cast<int>(c);
      bracket += (loop_powers[l] * LaurentHalf::monomial(mpz_class(static_cast<long>(count)), a_power));
    }
  }
  if (d.free_loops() > 0) bracket *= loop_value.pow(static_cast<unsigned>(d.free_loops()));
  return bracket;
}

LaurentHalf normalize_bracket(const LaurentHalf& bracket_in_a, int writhe, int components) {
  // (-A^3)^{-w} = (-1)^w A^{-3w}
  const long framing_sign = (writhe % 2 == 0) ? 1 : -1;
  const long component_sign = (components % 2 == 0) ? 1 : -1;
  LaurentHalf in_a = bracket_in_a.shifted(-3 * writhe) * LaurentHalf(framing_sign * component_sign);
  LaurentHalf out;
  for (const auto& [e, coeff] : in_a.terms()) {
    if (e % kBracketToS != 0) {
      throw std::logic_error("normalized bracket has an A-exponent incompatible with s = A^" +
                             std::to_string(kBracketToS));
    }
    out += LaurentHalf::monomial(coeff, e / kBracketToS);
  }
  return out;
}

LaurentHalf jones(const PlanarDiagram& d) {
  return normalize_bracket(kauffman_bracket(d), writhe(d), d.component_count());
}

}  // namespace qvl
