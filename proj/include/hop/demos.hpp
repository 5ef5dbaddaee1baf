#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hop {

struct DemoProgram {
  std::string name;
  std::string summary;
  std::string text;
};

/// Bundled programs: nonext (well-founded model that is not extensional),
/// positive (positive higher-order program), stratified and unstratified (the
/// stratification pair), subset, winnow.
const std::vector<DemoProgram> &demo_programs();

/// Throws Usage for an unknown name.
const DemoProgram &demo_program(std::string_view name);

} // namespace hop
