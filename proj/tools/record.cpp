// SPDX-License-Identifier: Apache-2.0
#include "record.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tauplus::cli {

std::string to_json(const std::vector<std::pair<std::string, Int>>& fields) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << nlohmann::json(fields[i].first).dump() << ':' << to_string(fields[i].second);
  }
  out << '}';
  return out.str();
}

std::string residue_json(const ResidueVector& rv) {
  return to_json({{"q", Int(rv.q)}, {"x1", rv.x1}, {"x2", rv.x2}, {"x3", rv.x3}});
}

namespace {

// Collects the integer members of a flat object, keeping large literals exact.
class FlatIntegers : public nlohmann::json_sax<nlohmann::json> {
 public:
  std::map<std::string, Int> values;
  std::string error;

  bool null() override { return fail("null value"); }
  bool boolean(bool) override { return fail("boolean value"); }
  bool number_integer(number_integer_t v) override {
    if (v < 0) return fail("negative value for " + key_);
    return put(Int(std::to_string(v)));
  }
  bool number_unsigned(number_unsigned_t v) override { return put(Int(std::to_string(v))); }
  bool number_float(number_float_t, const string_t& raw) override {
    try {
      return put(parse_int(raw));
    } catch (const std::invalid_argument&) {
      return fail("non-integer value for " + key_);
    }
  }
  bool string(string_t& s) override {
    try {
      return put(parse_int(s));
    } catch (const std::invalid_argument&) {
      return fail("non-integer string for " + key_);
    }
  }
  bool binary(binary_t&) override { return fail("binary value"); }
  bool start_object(std::size_t) override { return ++depth_ == 1 || fail("nested object"); }
  bool key(string_t& k) override {
    key_ = k;
    return true;
  }
  bool end_object() override {
    --depth_;
    return true;
  }
  bool start_array(std::size_t) override { return fail("array value"); }
  bool end_array() override { return false; }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& e) override {
    return fail(e.what());
  }

 private:
  bool put(Int v) {
    if (depth_ != 1) return fail("expected an object");
    values[key_] = std::move(v);
    return true;
  }
  bool fail(const std::string& why) {
    if (error.empty()) error = why;
    return false;
  }

  int depth_ = 0;
  std::string key_;
};

}  // namespace

ResidueVector parse_residue_json(const std::string& text) {
  FlatIntegers sax;
  if (!nlohmann::json::sax_parse(text, &sax) || !sax.error.empty())
    throw std::invalid_argument("bad residue record: " + (sax.error.empty() ? "parse error" : sax.error));
  for (const char* k : {"q", "x1", "x2", "x3"})
    if (!sax.values.count(k)) throw std::invalid_argument(std::string("residue record lacks \"") + k + "\"");
  const Int& q = sax.values["q"];
  if (!q.fits_uint_p()) throw std::invalid_argument("q out of range");
  return {static_cast<unsigned>(q.get_ui()), sax.values["x1"], sax.values["x2"], sax.values["x3"]};
}

}  // namespace tauplus::cli
