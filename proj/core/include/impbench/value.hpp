/*
 * Copyright 2026 The impbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef IMPBENCH_VALUE_HPP_
#define IMPBENCH_VALUE_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace impbench {

using Integer = boost::multiprecision::cpp_int;

enum class Type { Int, Bool };

class Value {
 public:
  Value() : v_(Integer(0)) {}
  Value(Integer i) : v_(std::move(i)) {}  // NOLINT
  Value(bool b) : v_(b) {}                 // NOLINT
  Value(int i) : v_(Integer(i)) {}         // NOLINT

  static Value default_for(Type t) {
    return t == Type::Int ? Value(Integer(0)) : Value(false);
  }

  bool is_int() const { return std::holds_alternative<Integer>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  Type type() const { return is_int() ? Type::Int : Type::Bool; }
  const Integer& as_int() const { return std::get<Integer>(v_); }
  bool as_bool() const { return std::get<bool>(v_); }

  std::string to_string() const;

  friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }

 private:
  std::variant<Integer, bool> v_;
};

// Parses "true", "false" or a decimal integer with optional sign.
bool parse_value(std::string_view text, Value& out);

// Variable bindings kept in declaration order.
class Store {
 public:
  using Entry = std::pair<std::string, Value>;

  const Value* find(std::string_view name) const;
  Value* find(std::string_view name);
  bool contains(std::string_view name) const { return find(name) != nullptr; }

  // Returns false if the name is already bound.
  bool declare(std::string name, Value v);
  // Binds or rebinds; new names are appended.
  void set(std::string_view name, Value v);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  // "{a: 1, b: true}"
  std::string to_string() const;

  // Order-insensitive comparison of bindings.
  friend bool operator==(const Store& a, const Store& b);

 private:
  std::vector<Entry> entries_;
};

}  // namespace impbench

#endif  // IMPBENCH_VALUE_HPP_
