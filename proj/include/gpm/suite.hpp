#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpm/pattern.hpp"

namespace gpm {

struct NamedPattern {
  std::string name;
  std::string spec;
  std::string description;

  Pattern pattern() const { return parse_pattern(spec); }
};

/// The built-in benchmark patterns, smallest first.
const std::vector<NamedPattern>& pattern_suite();

std::optional<NamedPattern> find_suite_pattern(std::string_view name);

/// A suite name or a literal pattern spec.
Pattern resolve_pattern(std::string_view name_or_spec);

}  // namespace gpm
