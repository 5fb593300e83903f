#include "qvlab/report.hpp"

#include <algorithm>

#include "json.hpp"
#include "qvlab/errors.hpp"

namespace qvl {

namespace {

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

std::string integer_token(const mpz_class& z) { return z.get_str(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw InputError("unknown output format '" + name + "' (expected json or csv)");
}

std::string laurent_json(const LaurentHalf& p) {
  std::string out = "{";
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!first) out += ",";
    first = false;
    out += quote(LaurentHalf::q_exponent_label(it->first)) + ":" + integer_token(it->second);
  }
  return out + "}";
}

std::string operator_json(const QWeylOp& op) {
  std::string out = "[";
  bool first = true;
  for (const auto& [k, c] : op.terms()) {
    if (!first) out += ",";
    first = false;
    out += "{\"l\":" + std::to_string(k.first) + ",\"m\":" + std::to_string(k.second) +
           ",\"num\":" + laurent_json(c.num()) + ",\"den\":" + laurent_json(c.den()) + "}";
  }
  return out + "]";
}

std::string bivar_json(const BivarPoly& p) {
  std::string out = "[";
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    if (!first) out += ",";
    first = false;
    out += "[" + integer_token(c) + "," + std::to_string(k.first) + "," + std::to_string(k.second) + "]";
  }
  return out + "]";
}

Report::Row& Report::Row::put(const std::string& key, std::string json, std::string csv) {
  for (const auto& c : cells_) {
    if (c.key == key) throw std::logic_error("duplicate report key " + key);
  }
  cells_.push_back({key, std::move(json), std::move(csv)});
  return *this;
}

Report::Row& Report::Row::text(const std::string& key, const std::string& value) {
  return put(key, quote(value), value);
}

Report::Row& Report::Row::exact(const std::string& key, const mpz_class& value) {
  put(key, integer_token(value), integer_token(value));
  return put(key + "_err", "0", "0");
}

Report::Row& Report::Row::real(const std::string& key, const Real& value, const Real& error) {
  const std::string v = to_decimal(value, digits_);
  const std::string e = to_decimal(abs(error), 3);
  put(key, v, v);
  return put(key + "_err", e, e);
}

Report::Row& Report::Row::complex(const std::string& key, const BigComplex& value, const Real& error) {
  const std::string re = to_decimal(value.re(), digits_);
  const std::string im = to_decimal(value.im(), digits_);
  const std::string e = to_decimal(abs(error), 3);
  put(key + "_re", re, re);
  put(key + "_im", im, im);
  return put(key + "_err", e, e);
}

Report::Row& Report::Row::laurent(const std::string& key, const LaurentHalf& value) {
  const std::string j = laurent_json(value);
  put(key, j, j);
  return put(key + "_err", "0", "0");
}

Report::Row& Report::Row::op(const std::string& key, const QWeylOp& value) {
  put(key, operator_json(value), value.to_string());
  return put(key + "_err", "0", "0");
}

Report::Row& Report::Row::bivar(const std::string& key, const BivarPoly& value) {
  const std::string j = bivar_json(value);
  put(key, j, j);
  return put(key + "_err", "0", "0");
}

Report::Row& Report::Row::flag(const std::string& key, bool value) {
  return put(key, value ? "true" : "false", value ? "true" : "false");
}

Report::Report(std::string command, unsigned digits) : command_(std::move(command)), digits_(digits) {}

Report& Report::meta(const std::string& key, const std::string& value) {
  meta_.emplace_back(key, value);
  return *this;
}

Report::Row& Report::row() {
  rows_.push_back(Row(digits_));
  return rows_.back();
}

std::string Report::json() const {
  std::string out = "{\n  \"command\": " + quote(command_) + ",\n  \"meta\": {";
  for (std::size_t k = 0; k < meta_.size(); ++k) {
    out += (k ? ", " : "") + quote(meta_[k].first) + ": " + quote(meta_[k].second);
  }
  out += "},\n  \"rows\": [";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    out += r ? ",\n    {" : "\n    {";
    const auto& cells = rows_[r].cells_;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      out += (k ? ", " : "") + quote(cells[k].key) + ": " + cells[k].json;
    }
    out += "}";
  }
  out += rows_.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string Report::csv() const {
  std::vector<std::string> header;
  for (const auto& r : rows_) {
    for (const auto& c : r.cells_) {
      if (std::find(header.begin(), header.end(), c.key) == header.end()) header.push_back(c.key);
    }
  }
  std::string out;
  for (std::size_t k = 0; k < header.size(); ++k) out += (k ? "," : "") + csv_field(header[k]);
  out += "\r\n";
  for (const auto& r : rows_) {
    for (std::size_t k = 0; k < header.size(); ++k) {
      if (k) out += ",";
      for (const auto& c : r.cells_) {
        if (c.key == header[k]) {
          out += csv_field(c.csv);
          break;
        }
      }
    }
    out += "\r\n";
  }
  return out;
}

}  // namespace qvl
