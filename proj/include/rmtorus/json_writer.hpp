#pragma once

// Compact JSON emission with integers written as exact decimal tokens of any
// size. Insertion order of object keys is preserved.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rmtorus/bigint.hpp"

namespace rmt::json {

/// A serialized JSON value.
class Value {
 public:
  static Value integer(const Int& v) { return Value(v.str()); }
  static Value integer(long long v) { return Value(std::to_string(v)); }
  static Value string(std::string_view s);
  static Value boolean(bool b) { return Value(b ? "true" : "false"); }
  static Value null() { return Value("null"); }
  static Value array(const std::vector<Value>& items);

  const std::string& text() const { return text_; }

 private:
  explicit Value(std::string text) : text_(std::move(text)) {}
  friend class Object;
  std::string text_;
};

Value int_array(const std::vector<Int>& items);

class Object {
 public:
  Object& add(std::string_view key, Value value);
  Value value() const;
  std::string str() const { return value().text(); }

 private:
  std::vector<std::pair<std::string, Value>> fields_;
};

}  // namespace rmt::json
