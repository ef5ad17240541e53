#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace artin::props {

struct Outcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

struct Property {
  std::string name;
  std::function<Outcome(std::uint64_t seed, std::size_t cases)> run;
};

const std::vector<Property> &all_properties();

constexpr std::uint64_t kDefaultSeed = 20240611;
constexpr std::size_t kDefaultCases = 1000;

} // namespace artin::props
