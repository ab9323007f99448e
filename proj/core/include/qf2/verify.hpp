#pragma once

// Property and oracle checks behind the `verify` subcommand and the
// acceptance binary. Linked from qf2_oracle, never from qf2_core.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qf2::verify {

enum class Scale { small, full };

/// "small" or "full"; anything else is nullopt.
std::optional<Scale> parse_scale(const std::string& s);
std::string to_string(Scale s);

struct Check {
  std::string name;
  bool pass = false;
  std::size_t checked = 0;  // number of cases compared
  std::string detail;
  double seconds = 0;
};

constexpr int kCriteria = 12;

/// Criterion 1..12. Never throws: an exception becomes a failing entry.
Check criterion(int id, Scale scale);

/// All criteria, in order. Independent checks run concurrently.
std::vector<Check> acceptance(Scale scale);

struct TagResult {
  std::string tag;
  bool pass = false;
  std::size_t checked = 0;
  std::string detail;
};

/// All criteria plus pass/fail per result tag (T1.1, T1.5, T5.3, T5.4, T5.6,
/// T6.1, T7.1, T7.3, C7.4, L8).
struct Report {
  Scale scale = Scale::small;
  std::vector<Check> criteria;
  std::vector<TagResult> tags;
  bool pass = false;
};

Report run_suite(Scale scale);

}  // namespace qf2::verify
