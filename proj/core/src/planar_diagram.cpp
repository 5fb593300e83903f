#include "qvlab/planar_diagram.hpp"

#include <cstdlib>
#include <deque>
#include <map>
#include <string>
#include <utility>

#include "qvlab/errors.hpp"

namespace qvl {

namespace {

struct Slot {
  std::size_t crossing;
  int position;  // 0..3 within the PD tuple
};

}  // namespace

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings, int free_loops, bool is_link)
    : crossings_(std::move(crossings)), free_loops_(free_loops), is_link_(is_link) {
  if (free_loops_ < 0) throw MalformedDiagram("negative free loop count");
  std::map<int, int> seen;
  for (const auto& x : crossings_) {
    for (int a : x.arcs) ++seen[a];
  }
  for (const auto& [label, count] : seen) {
    if (count != 2) {
      throw MalformedDiagram("arc " + std::to_string(label) + " appears " + std::to_string(count) +
                             " times (expected 2)");
    }
  }
  n_arcs_ = static_cast<int>(seen.size());
  orient();
  count_components();
  if (!is_link_ && components_ != 1) {
    throw MalformedDiagram("diagram has " + std::to_string(components_) +
                           " components but is not flagged as a link");
  }
}

void PlanarDiagram::orient() {
  // incoming[k][p]: +1 incoming, -1 outgoing, 0 unknown.
  std::vector<std::array<int, 4>> incoming(crossings_.size(), {1, 0, -1, 0});
  std::map<int, std::vector<Slot>> occurrences;
  for (std::size_t k = 0; k < crossings_.size(); ++k) {
    for (int p = 0; p < 4; ++p) occurrences[crossings_[k].arcs[p]].push_back({k, p});
  }
  auto partner_of_arc = [&](const Slot& s) {
    const auto& occ = occurrences[crossings_[s.crossing].arcs[s.position]];
    return (occ[0].crossing == s.crossing && occ[0].position == s.position) ? occ[1] : occ[0];
  };

  std::deque<Slot> queue;
  auto assign = [&](const Slot& s, int value) {
    int& cur = incoming[s.crossing][s.position];
    if (cur == 0) {
      cur = value;
      queue.push_back(s);
    } else if (cur != value) {
      throw MalformedDiagram("inconsistent strand orientation at crossing " + std::to_string(s.crossing));
    }
  };
  for (std::size_t k = 0; k < crossings_.size(); ++k) {
    queue.push_back({k, 0});
    queue.push_back({k, 2});
  }
  while (!queue.empty()) {
    Slot s = queue.front();
    queue.pop_front();
    int value = incoming[s.crossing][s.position];
    // The other end of the same arc has the opposite role.
    assign(partner_of_arc(s), -value);
    // The two over-slots of one crossing have opposite roles.
    if (s.position == 1 || s.position == 3) assign({s.crossing, 4 - s.position}, -value);
  }
  over_from_d_.assign(crossings_.size(), false);
  for (std::size_t k = 0; k < crossings_.size(); ++k) {
    if (incoming[k][1] == 0 || incoming[k][3] == 0) {
      throw MalformedDiagram("orientation of crossing " + std::to_string(k) +
                             " is ambiguous (component never passes under)");
    }
    over_from_d_[k] = incoming[k][3] == 1;
  }
}

void PlanarDiagram::count_components() {
  // Walk strands: entering a crossing at slot p, the strand leaves at slot p+2.
  std::map<int, std::pair<std::size_t, int>> head;  // arc -> slot where it enters
  for (std::size_t k = 0; k < crossings_.size(); ++k) {
    const auto& a = crossings_[k].arcs;
    head[a[0]] = {k, 0};
    head[a[over_from_d_[k] ? 3 : 1]] = {k, over_from_d_[k] ? 3 : 1};
  }
  if (static_cast<int>(head.size()) != n_arcs_) {
    throw MalformedDiagram("arc enters two crossings; orientation inconsistent");
  }
  std::map<int, bool> visited;
  int components = 0;
  for (const auto& [start, unused] : head) {
    if (visited[start]) continue;
    ++components;
    int arc = start;
    while (!visited[arc]) {
      visited[arc] = true;
      auto [k, p] = head.at(arc);
      arc = crossings_[k].arcs[(p + 2) % 4];
    }
  }
  components_ = components + free_loops_;
}

PlanarDiagram PlanarDiagram::mirrored() const {
  std::vector<Crossing> out;
  out.reserve(crossings_.size());
  for (std::size_t k = 0; k < crossings_.size(); ++k) {
    const auto& [a, b, c, d] = crossings_[k].arcs;
    // The old over-strand becomes the under-strand; start from its incoming slot.
    out.push_back(over_from_d_[k] ? Crossing{{d, a, b, c}} : Crossing{{b, c, d, a}});
  }
  return PlanarDiagram(std::move(out), free_loops_, is_link_);
}

PlanarDiagram disjoint_union(const PlanarDiagram& a, const PlanarDiagram& b) {
  int offset = 0;
  for (const auto& x : a.crossings_) {
    for (int label : x.arcs) offset = std::max(offset, label);
  }
  std::vector<Crossing> all = a.crossings_;
  for (const auto& x : b.crossings_) {
    Crossing shifted = x;
    for (int& label : shifted.arcs) label += offset;
    all.push_back(shifted);
  }
  return PlanarDiagram(std::move(all), a.free_loops_ + b.free_loops_, true);
}

int writhe(const PlanarDiagram& d) {
  int w = 0;
  for (std::size_t k = 0; k < d.crossing_count(); ++k) w += d.crossing_sign(k);
  return w;
}

namespace {

// Allocates integer labels for cable segments keyed by an opaque tuple.
class LabelPool {
 public:
  int get(int kind, int a, int b, int c) {
    auto key = std::array<int, 4>{kind, a, b, c};
    auto [it, inserted] = labels_.try_emplace(key, next_);
    if (inserted) ++next_;
    return it->second;
  }
  void alias(int kind, int a, int b, int c, int label) { labels_[std::array<int, 4>{kind, a, b, c}] = label; }
  int fresh() { return next_++; }

 private:
  std::map<std::array<int, 4>, int> labels_;
  int next_ = 1;
};

enum SegmentKind { kArcCopy = 0, kHeadCopy = 1, kUnderMid = 2, kOverMid = 3 };

}  // namespace

PlanarDiagram cable(const PlanarDiagram& d, int n) {
  if (n < 1) throw InputError("cable multiplicity must be positive");
  if (d.is_link()) throw InputError("cabling is only defined here for knot diagrams");
  const int w = writhe(d);
  const std::size_t c = d.crossing_count();
  const std::size_t twist_crossings = static_cast<std::size_t>(n * (n - 1) * std::abs(w));
  const std::size_t total = static_cast<std::size_t>(n * n) * c + twist_crossings;
  if (total > kMaxCrossings) {
    throw CrossingBudgetExceeded("cable would have " + std::to_string(total) + " crossings (limit " +
                                 std::to_string(kMaxCrossings) + ")");
  }
  if (c == 0) return PlanarDiagram({}, d.free_loops() * n, n > 1);

  LabelPool pool;
  std::vector<Crossing> out;
  out.reserve(total);

  // Compensating twists sit on the arc entering crossing 0 as its under-strand,
  // just before that crossing. Copies are numbered left to right relative to
  // the direction of travel.
  const int twisted_arc = d.crossings()[0].arcs[0];
  std::vector<int> current(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) current[static_cast<std::size_t>(i)] = pool.get(kArcCopy, twisted_arc, i, 0);
  const bool negative = w > 0;
  for (int t = 0; t < std::abs(w); ++t) {
    for (int rep = 0; rep < n; ++rep) {
      for (int k = 0; k + 1 < n; ++k) {
        auto ku = static_cast<std::size_t>(k);
        int sw = current[ku];
        int se = current[ku + 1];
        int ne = pool.fresh();
        int nw = pool.fresh();
        // Negative: the strand SW -> NE passes under. Positive: SE -> NW passes under.
        out.push_back(negative ? Crossing{{sw, se, ne, nw}} : Crossing{{se, ne, nw, sw}});
        // The strand from position k moves to k+1 and vice versa.
        current[ku] = nw;
        current[ku + 1] = ne;
      }
    }
  }
  for (int i = 0; i < n; ++i) pool.alias(kHeadCopy, twisted_arc, i, 0, current[static_cast<std::size_t>(i)]);

  for (std::size_t k = 0; k < c; ++k) {
    const auto& [a, b, cc, dd] = d.crossings()[k].arcs;
    const bool east = d.over_enters_at_d(k);
    const int kk = static_cast<int>(k);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        const int under_copy = x;
        const int over_copy = east ? n - 1 - y : y;
        int south = y == 0 ? (k == 0 ? pool.get(kHeadCopy, a, under_copy, 0) : pool.get(kArcCopy, a, under_copy, 0))
                           : pool.get(kUnderMid, kk, under_copy, y - 1);
        int north = y == n - 1 ? pool.get(kArcCopy, cc, under_copy, 0) : pool.get(kUnderMid, kk, under_copy, y);
        int west = x == 0 ? pool.get(kArcCopy, dd, over_copy, 0) : pool.get(kOverMid, kk, over_copy, x - 1);
        int east_seg = x == n - 1 ? pool.get(kArcCopy, b, over_copy, 0) : pool.get(kOverMid, kk, over_copy, x);
        out.push_back(Crossing{{south, east_seg, north, west}});
      }
    }
  }

  // Compact relabelling in order of first appearance.
  std::map<int, int> compact;
  for (auto& x : out) {
    for (int& label : x.arcs) {
      auto [it, inserted] = compact.try_emplace(label, static_cast<int>(compact.size()) + 1);
      label = it->second;
    }
  }
  return PlanarDiagram(std::move(out), 0, n > 1);
}

}  // namespace qvl
