// Copyright 2026 The gasched Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GASCHED_SRC_TOKENS_HPP
#define GASCHED_SRC_TOKENS_HPP

#include <string>
#include <string_view>

#include "gasched/domain.hpp"

namespace gasched::detail {

// Identifier atoms for the Prolog-facts grammar and the audit listings.
// Inputs are lowercased; anything left outside [a-z0-9_-] is a hard error
// rather than something to mangle silently.

inline std::string lower_atom(std::string_view raw, std::string_view what) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
    if (!ok) {
      throw Error(std::string(what) + " identifier \"" + std::string(raw) +
                  "\" contains characters outside [a-z0-9_-]");
    }
    out.push_back(c);
  }
  if (out.empty()) {
    throw Error(std::string(what) + " identifier is empty");
  }
  return out;
}

/// "053-0201" -> "room_053_0201".
inline std::string room_atom(std::string_view room) {
  std::string out = "room_" + lower_atom(room, "room");
  for (char& c : out) {
    if (c == '-') c = '_';
  }
  return out;
}

}  // namespace gasched::detail

#endif  // GASCHED_SRC_TOKENS_HPP
