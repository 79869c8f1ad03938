// Minimal ordered JSON value builder with deterministic double formatting
// (17 significant digits, exact round trip).  Parsing uses the vendored
// nlohmann/json; this writer exists so serialized reports are byte-stable.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace entkit::jsonio {

class Value {
 public:
  static Value object() { return Value(Kind::Object); }
  static Value array() { return Value(Kind::Array); }
  static Value string(std::string s) {
    Value v(Kind::String);
    v.str_ = std::move(s);
    return v;
  }
  static Value number(double d) {
    Value v(Kind::Number);
    v.num_ = d;
    return v;
  }
  static Value integer(std::int64_t i) {
    Value v(Kind::Integer);
    v.int_ = i;
    return v;
  }
  static Value boolean(bool b) {
    Value v(Kind::Bool);
    v.bool_ = b;
    return v;
  }
  static Value null() { return Value(Kind::Null); }

  Value& set(const std::string& key, Value v);  // object insert (ordered)
  Value& push(Value v);                         // array append

  std::string dump(int indent = 0) const;

 private:
  enum class Kind { Object, Array, String, Number, Integer, Bool, Null };
  explicit Value(Kind k) : kind_(k) {}

  void write(std::string& out, int indent, int depth) const;

  Kind kind_;
  double num_ = 0.0;
  std::int64_t int_ = 0;
  bool bool_ = false;
  std::string str_;
  std::vector<std::pair<std::string, Value>> members_;
  std::vector<Value> items_;
};

std::string format_double(double d);
std::string escape(const std::string& s);

}  // namespace entkit::jsonio
