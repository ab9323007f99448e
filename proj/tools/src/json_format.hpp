#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace qf2::cli {

using Json = nlohmann::ordered_json;

// Two-space indentation, except that containers holding only scalars stay on
// one line. Matrices therefore print one row per line.
inline void format_json(const Json& j, std::string& out, int indent) {
  auto flat = [](const Json& c) {
    for (const auto& x : c)
      if (x.is_structured()) return false;
    return true;
  };
  if (!j.is_structured() || j.empty() || flat(j)) {
    if (j.is_object() && !j.empty()) {
      // nlohmann has no single-line object mode with spaces; build it here.
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out += first ? "" : ", ";
        first = false;
        out += Json(it.key()).dump() + ": " + it.value().dump();
      }
      out += '}';
      return;
    }
    if (j.is_array() && !j.empty()) {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += ']';
      return;
    }
    out += j.dump();
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    out += first ? "" : ",\n";
    first = false;
    out += pad;
    if (obj) out += Json(it.key()).dump() + ": ";
    format_json(it.value(), out, indent + 2);
  }
  out += '\n' + std::string(static_cast<std::size_t>(indent), ' ') + (obj ? '}' : ']');
}

inline std::string format_json(const Json& j) {
  std::string s;
  format_json(j, s, 0);
  s += '\n';
  return s;
}

}  // namespace qf2::cli
