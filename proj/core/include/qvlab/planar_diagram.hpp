#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace qvl {

/// Maximum crossing count accepted by state-sum evaluation and cabling.
inline constexpr std::size_t kMaxCrossings = 24;

/// One PD crossing X[a,b,c,d]: arcs listed counterclockwise starting from the
/// incoming under-strand, so the under-strand runs a -> c.
struct Crossing {
  std::array<int, 4> arcs{};
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Oriented planar diagram given by a PD code plus any crossingless circles.
///
/// Construction validates the code (each arc label exactly twice), infers the
/// direction of every over-strand by propagating from the under-strands, and
/// counts components. Diagrams whose orientation cannot be inferred are
/// rejected with MalformedDiagram rather than guessed.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  PlanarDiagram(std::vector<Crossing> crossings, int free_loops = 0, bool is_link = false);

  static PlanarDiagram unknot() { return PlanarDiagram({}, 1, false); }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  int n_arcs() const { return n_arcs_; }
  int free_loops() const { return free_loops_; }
  int component_count() const { return components_; }
  bool is_link() const { return is_link_; }

  /// True when the over-strand at crossing k enters at slot d and leaves at slot b.
  bool over_enters_at_d(std::size_t k) const { return over_from_d_[k]; }
  /// +1 or -1; positive when the over-strand runs d -> b.
  int crossing_sign(std::size_t k) const { return over_from_d_[k] ? 1 : -1; }

  /// Same diagram with every crossing switched.
  PlanarDiagram mirrored() const;

  /// Disjoint union; the result is flagged as a link.
  friend PlanarDiagram disjoint_union(const PlanarDiagram& a, const PlanarDiagram& b);

 private:
  void orient();
  void count_components();

  std::vector<Crossing> crossings_;
  std::vector<bool> over_from_d_;
  int n_arcs_ = 0;
  int free_loops_ = 0;
  int components_ = 0;
  bool is_link_ = false;
};

int writhe(const PlanarDiagram& d);

/// n-parallel cable (n = 2, or 3 within the crossing budget) in blackboard
/// framing, with compensating full twists inserted so that every pair of
/// copies has linking number zero. Rejects link input.
PlanarDiagram cable(const PlanarDiagram& d, int n);

}  // namespace qvl
