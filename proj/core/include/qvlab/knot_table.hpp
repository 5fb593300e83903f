#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qvlab/bivar_poly.hpp"
#include "qvlab/planar_diagram.hpp"

namespace qvl {

struct KnotRecord {
  std::string name;
  PlanarDiagram diagram;
  /// Empty when the table gives no A-polynomial.
  BivarPoly a_poly;
  /// Decimal string, kept verbatim.
  std::optional<std::string> vol;
};

/// JSON knot table:
///   {"knots": [{"name": "4_1", "pd": [[4,2,5,1], ...], "a_poly": [[coeff, degL, degM], ...],
///               "vol": "2.0298832128", "link": false, "free_loops": 0}, ...]}
/// Only "name" and "pd" are required. An empty "pd" without "free_loops"
/// means one crossingless circle.
class KnotTable {
 public:
  /// Throws InputError on unreadable files, schema violations and duplicate names.
  static KnotTable load(const std::string& path);
  static KnotTable parse(const std::string& json_text);

  const KnotRecord& get(const std::string& name) const;  // InputError for unknown names
  bool contains(const std::string& name) const;
  std::vector<std::string> names() const;
  const std::vector<KnotRecord>& records() const { return records_; }

 private:
  std::vector<KnotRecord> records_;
};

}  // namespace qvl
