#include "gpm/suite.hpp"

#include <algorithm>

namespace gpm {

const std::vector<NamedPattern>& pattern_suite() {
  static const std::vector<NamedPattern> suite = {
      {"path3", "3:0-1,1-2", "path on 3 vertices"},
      {"triangle", "3:0-1,1-2,0-2", "3-clique"},
      {"rectangle", "4:0-1,1-2,2-3,3-0", "4-cycle"},
      {"k4", "4:0-1,0-2,0-3,1-2,1-3,2-3", "4-clique"},
      {"house", "5:0-1,0-2,0-4,1-3,1-4,2-3", "square A-C-D-B with roof E on A,B"},
      {"cycle5", "5:0-1,1-2,2-3,3-4,4-0", "5-cycle"},
      {"k5", "5:0-1,0-2,0-3,0-4,1-2,1-3,1-4,2-3,2-4,3-4", "5-clique"},
      {"cycle6", "6:0-1,1-2,2-3,3-4,4-5,5-0", "6-cycle"},
      {"cycle6-tri", "6:0-1,1-2,2-3,3-4,4-5,5-0,0-2,2-4,0-4", "6-cycle with chords forming an inner triangle"},
      {"house-tail", "6:0-1,0-2,0-4,1-3,1-4,2-3,2-5", "house with a pendant vertex on C"},
      {"prism", "6:0-1,1-2,0-2,3-4,4-5,3-5,0-3,1-4,2-5", "triangular prism"},
      {"k4-ears", "6:0-1,0-2,0-3,1-2,1-3,2-3,0-4,1-4,2-5,3-5", "4-clique with two degree-2 ears"},
  };
  return suite;
}

std::optional<NamedPattern> find_suite_pattern(std::string_view name) {
  const auto& suite = pattern_suite();
  auto it = std::find_if(suite.begin(), suite.end(), [&](const NamedPattern& np) { return np.name == name; });
  if (it == suite.end()) return std::nullopt;
  return *it;
}

Pattern resolve_pattern(std::string_view name_or_spec) {
  if (auto named = find_suite_pattern(name_or_spec)) return named->pattern();
  return parse_pattern(name_or_spec);
}

}  // namespace gpm
