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

#include "impbench/value.hpp"

#include <algorithm>
#include <cctype>

namespace impbench {

std::string Value::to_string() const {
  if (is_bool()) return as_bool() ? "true" : "false";
  return as_int().str();
}

bool parse_value(std::string_view text, Value& out) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text == "true") {
    out = Value(true);
    return true;
  }
  if (text == "false") {
    out = Value(false);
    return true;
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  if (!std::all_of(text.begin(), text.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
      })) {
    return false;
  }
  Integer v{std::string(text)};
  out = Value(negative ? Integer(-v) : v);
  return true;
}

const Value* Store::find(std::string_view name) const {
  for (const Entry& e : entries_) {
    if (e.first == name) return &e.second;
  }
  return nullptr;
}

Value* Store::find(std::string_view name) {
  for (Entry& e : entries_) {
    if (e.first == name) return &e.second;
  }
  return nullptr;
}

bool Store::declare(std::string name, Value v) {
  if (contains(name)) return false;
  entries_.emplace_back(std::move(name), std::move(v));
  return true;
}

void Store::set(std::string_view name, Value v) {
  if (Value* slot = find(name)) {
    *slot = std::move(v);
    return;
  }
  entries_.emplace_back(std::string(name), std::move(v));
}

std::string Store::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const Entry& e : entries_) {
    if (!first) out += ", ";
    first = false;
    out += e.first;
    out += ": ";
    out += e.second.to_string();
  }
  out += "}";
  return out;
}

bool operator==(const Store& a, const Store& b) {
  if (a.size() != b.size()) return false;
  for (const Store::Entry& e : a.entries_) {
    const Value* other = b.find(e.first);
    if (other == nullptr || !(*other == e.second)) return false;
  }
  return true;
}

}  // namespace impbench
