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

#ifndef IMPBENCH_SRC_UTF8_HPP_
#define IMPBENCH_SRC_UTF8_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace impbench::utf8 {

inline std::string encode(char32_t c) {
  std::string out;
  if (c < 0x80) {
    out += static_cast<char>(c);
  } else if (c < 0x800) {
    out += static_cast<char>(0xC0 | (c >> 6));
    out += static_cast<char>(0x80 | (c & 0x3F));
  } else if (c < 0x10000) {
    out += static_cast<char>(0xE0 | (c >> 12));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (c >> 18));
    out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  }
  return out;
}

// Decodes s into code points; returns nullopt and sets bad_offset on
// malformed input.
inline std::optional<std::u32string> decode(std::string_view s,
                                            std::size_t* bad_offset = nullptr) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    int len = 0;
    char32_t c = 0;
    if (b0 < 0x80) {
      len = 1;
      c = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      c = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      c = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      c = b0 & 0x07;
    } else {
      if (bad_offset) *bad_offset = i;
      return std::nullopt;
    }
    if (i + len > s.size()) {
      if (bad_offset) *bad_offset = i;
      return std::nullopt;
    }
    for (int k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) {
        if (bad_offset) *bad_offset = i;
        return std::nullopt;
      }
      c = (c << 6) | (b & 0x3F);
    }
    out += c;
    i += len;
  }
  return out;
}

inline bool valid(std::string_view s) { return decode(s).has_value(); }

inline std::string encode(std::u32string_view s) {
  std::string out;
  for (char32_t c : s) out += encode(c);
  return out;
}

}  // namespace impbench::utf8

#endif  // IMPBENCH_SRC_UTF8_HPP_
