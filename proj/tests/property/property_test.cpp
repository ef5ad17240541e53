#include "properties.hpp"

#include <gtest/gtest.h>

using namespace artin::props;

class PropertySuite : public ::testing::TestWithParam<std::size_t> {};

TEST_P(PropertySuite, HoldsOnSeededCases) {
  const auto &p = all_properties()[GetParam()];
  auto out = p.run(kDefaultSeed, kDefaultCases);
  EXPECT_GE(out.cases, kDefaultCases);
  EXPECT_EQ(out.failures, 0u) << out.name << ": first failure " << out.first_failure;
}

INSTANTIATE_TEST_SUITE_P(All, PropertySuite, ::testing::Range<std::size_t>(0, all_properties().size()),
                         [](const ::testing::TestParamInfo<std::size_t> &info) {
                           return all_properties()[info.param].name;
                         });
