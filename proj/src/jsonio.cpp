#include "entkit/jsonio.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace entkit::jsonio {

std::string format_double(double d) {
  if (!std::isfinite(d)) throw std::runtime_error("jsonio: non-finite number in output");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", d);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

Value& Value::set(const std::string& key, Value v) {
  if (kind_ != Kind::Object) throw std::logic_error("jsonio: set on non-object");
  members_.emplace_back(key, std::move(v));
  return *this;
}

Value& Value::push(Value v) {
  if (kind_ != Kind::Array) throw std::logic_error("jsonio: push on non-array");
  items_.push_back(std::move(v));
  return *this;
}

void Value::write(std::string& out, int indent, int depth) const {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent) * (depth + 1), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent) * depth, ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (kind_) {
    case Kind::Object: {
      if (members_.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      for (std::size_t i = 0; i < members_.size(); ++i) {
        out += pad;
        out += '"';
        out += escape(members_[i].first);
        out += "\":";
        if (indent > 0) out += ' ';
        members_[i].second.write(out, indent, depth + 1);
        if (i + 1 < members_.size()) out += ',';
        out += nl;
      }
      out += close_pad;
      out += "}";
      return;
    }
    case Kind::Array: {
      if (items_.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      out += nl;
      for (std::size_t i = 0; i < items_.size(); ++i) {
        out += pad;
        items_[i].write(out, indent, depth + 1);
        if (i + 1 < items_.size()) out += ',';
        out += nl;
      }
      out += close_pad;
      out += "]";
      return;
    }
    case Kind::String:
      out += '"';
      out += escape(str_);
      out += '"';
      return;
    case Kind::Number:
      out += format_double(num_);
      return;
    case Kind::Integer:
      out += std::to_string(int_);
      return;
    case Kind::Bool:
      out += bool_ ? "true" : "false";
      return;
    case Kind::Null:
      out += "null";
      return;
  }
}

std::string Value::dump(int indent) const {
  std::string out;
  write(out, indent, 0);
  if (indent > 0) out += '\n';
  return out;
}

}  // namespace entkit::jsonio
