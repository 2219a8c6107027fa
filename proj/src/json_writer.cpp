#include "rmtorus/json_writer.hpp"

#include <cstdio>

namespace rmt::json {

Value Value::string(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
  return Value(std::move(out));
}

Value Value::array(const std::vector<Value>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += items[i].text_;
  }
  out += ']';
  return Value(std::move(out));
}

Value int_array(const std::vector<Int>& items) {
  std::vector<Value> values;
  values.reserve(items.size());
  for (const Int& v : items) values.push_back(Value::integer(v));
  return Value::array(values);
}

Object& Object::add(std::string_view key, Value value) {
  fields_.emplace_back(std::string(key), std::move(value));
  return *this;
}

Value Object::value() const {
  std::string out = "{";
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    if (i) out += ',';
    out += Value::string(fields_[i].first).text_ + ':' + fields_[i].second.text_;
  }
  out += '}';
  return Value(std::move(out));
}

}  // namespace rmt::json
