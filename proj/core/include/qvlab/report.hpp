#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "qvlab/bigcomplex.hpp"
#include "qvlab/bivar_poly.hpp"
#include "qvlab/laurent.hpp"
#include "qvlab/qweyl.hpp"

namespace qvl {

enum class Format { Json, Csv };

/// Parses "json" or "csv"; InputError otherwise.
Format parse_format(const std::string& name);

/// {"5/2":1,"-5/2":1}: q-exponent labels in decreasing order.
std::string laurent_json(const LaurentHalf& p);
/// [{"l":a,"m":b,"num":{...},"den":{...}}, ...] in normal-ordered key order.
std::string operator_json(const QWeylOp& op);
/// [[coeff, degL, degM], ...] sorted by (degL, degM).
std::string bivar_json(const BivarPoly& p);

/// Tabular report. Every numeric value is written with a sibling "<key>_err"
/// error bound (0 for exact values). Reals use fixed scientific notation
/// with a set number of significant digits, so equal inputs give
/// byte-identical output.
class Report {
 public:
  class Row {
   public:
    Row& text(const std::string& key, const std::string& value);
    Row& exact(const std::string& key, const mpz_class& value);
    Row& real(const std::string& key, const Real& value, const Real& error);
    /// Writes <key>_re, <key>_im and one shared <key>_err.
    Row& complex(const std::string& key, const BigComplex& value, const Real& error);
    Row& laurent(const std::string& key, const LaurentHalf& value);
    Row& op(const std::string& key, const QWeylOp& value);
    Row& bivar(const std::string& key, const BivarPoly& value);
    Row& flag(const std::string& key, bool value);

   private:
    friend class Report;
    struct Cell {
      std::string key;
      std::string json;  // raw JSON token
      std::string csv;   // unquoted CSV text
    };
    explicit Row(unsigned digits) : digits_(digits) {}
    Row& put(const std::string& key, std::string json, std::string csv);
    unsigned digits_;
    std::vector<Cell> cells_;
  };

  explicit Report(std::string command, unsigned digits = 20);

  Report& meta(const std::string& key, const std::string& value);
  Row& row();

  std::string json() const;
  /// RFC 4180: CRLF line ends, header from the union of keys in first-seen order.
  std::string csv() const;
  std::string render(Format f) const { return f == Format::Json ? json() : csv(); }

 private:
  std::string command_;
  unsigned digits_;
  std::vector<std::pair<std::string, std::string>> meta_;
  std::vector<Row> rows_;
};

}  // namespace qvl
