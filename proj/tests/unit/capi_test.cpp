#include "artin/artin.h"

#include <gtest/gtest.h>

#include <cstring>
#include <string>

namespace {

struct Algebra {
  artin_algebra *ptr = nullptr;
  ~Algebra() { artin_algebra_free(ptr); }
};

const char *kExample = "vars: X Y\ngens: X^3*Y; X^5; X*Y^3 + 2*X^3; 3*X^2*Y^2 + 5*Y^4\n";

} // namespace

TEST(CApi, ParseAndInspect) {
  Algebra a;
  ASSERT_EQ(artin_algebra_parse(kExample, &a.ptr), ARTIN_OK);
  EXPECT_EQ(artin_algebra_dim(a.ptr), 12u);
  EXPECT_EQ(artin_algebra_nvars(a.ptr), 2u);
  EXPECT_STREQ(artin_algebra_basis_monomial(a.ptr, 0), "1");
  EXPECT_STREQ(artin_algebra_basis_monomial(a.ptr, 11), "X^2*Y^2");
  EXPECT_EQ(artin_algebra_basis_monomial(a.ptr, 12), nullptr);

  char *nf = nullptr;
  ASSERT_EQ(artin_normal_form(a.ptr, "X^4 + X^2*Y^3 + Y^5", &nf), ARTIN_OK);
  EXPECT_STREQ(nf, "1/5*X^4");
  artin_string_free(nf);

  int flag = -1;
  ASSERT_EQ(artin_ideal_contains(a.ptr, "X^5 + X^3*Y", &flag), ARTIN_OK);
  EXPECT_EQ(flag, 1);
  ASSERT_EQ(artin_differential_is_zero(a.ptr, "X^4", &flag), ARTIN_OK);
  EXPECT_EQ(flag, 1);
  ASSERT_EQ(artin_differential_is_zero(a.ptr, "X^2*Y^2", &flag), ARTIN_OK);
  EXPECT_EQ(flag, 0);

  size_t n = 0;
  ASSERT_EQ(artin_socle_dim(a.ptr, &n), ARTIN_OK);
  EXPECT_EQ(n, 1u);
  ASSERT_EQ(artin_kahler_dim(a.ptr, &n), ARTIN_OK);
  EXPECT_GT(n, 0u);
}

TEST(CApi, CreateFromParts) {
  Algebra a;
  ASSERT_EQ(artin_algebra_create("X Y", "X^2 - Y^2; X*Y", &a.ptr), ARTIN_OK);
  EXPECT_EQ(artin_algebra_dim(a.ptr), 4u);
}

TEST(CApi, ErrorCodesAndMessages) {
  artin_algebra *a = nullptr;
  EXPECT_EQ(artin_algebra_parse("vars: X\ngens: X^\n", &a), ARTIN_E_PARSE);
  EXPECT_EQ(a, nullptr);
  EXPECT_NE(std::string(artin_last_error()).find("line 2"), std::string::npos);
  EXPECT_EQ(artin_algebra_parse("vars: X Y\ngens: X*Y\n", &a), ARTIN_E_NOT_ZERO_DIMENSIONAL);
  EXPECT_EQ(artin_algebra_parse("vars: X\ngens: 1\n", &a), ARTIN_E_TRIVIAL_ALGEBRA);
  EXPECT_EQ(artin_algebra_parse(nullptr, &a), ARTIN_E_INVALID_ARGUMENT);
  EXPECT_STREQ(artin_status_string(ARTIN_E_NOT_LOCAL), "NotLocalOverQ");

  Algebra split;
  ASSERT_EQ(artin_algebra_parse("vars: X\ngens: X^2 - X\n", &split.ptr), ARTIN_OK);
  size_t n = 0;
  EXPECT_EQ(artin_socle_dim(split.ptr, &n), ARTIN_E_NOT_LOCAL);
  char *out = nullptr;
  EXPECT_EQ(artin_normal_form(split.ptr, "Z", &out), ARTIN_E_PARSE);
  EXPECT_EQ(out, nullptr);
}

TEST(CApi, RunProducesReports) {
  Algebra a;
  ASSERT_EQ(artin_algebra_parse("vars: X Y\ngens: X^3; X^2*Y; Y^2\n", &a.ptr), ARTIN_OK);
  artin_run_options opts;
  artin_run_options_init(&opts);
  EXPECT_EQ(opts.nmax, 12u);
  opts.budget = 40;
  artin_report *r = nullptr;
  ASSERT_EQ(artin_run(a.ptr, "critdeg", &opts, &r), ARTIN_OK);
  EXPECT_EQ(artin_report_exit_code(r), 0);
  EXPECT_NE(std::strstr(artin_report_json(r), "\"lower_bound\": 2"), nullptr);
  EXPECT_NE(std::strstr(artin_report_text(r), "critical degree"), nullptr);
  artin_report_free(r);

  // failures inside the computation still yield a report
  ASSERT_EQ(artin_run(a.ptr, "socle-kill", &opts, &r), ARTIN_OK);
  EXPECT_EQ(artin_report_exit_code(r), 2);
  EXPECT_NE(std::strstr(artin_report_json(r), "NotGorenstein"), nullptr);
  artin_report_free(r);

  opts.strategy = "monomial,bogus";
  EXPECT_EQ(artin_run(a.ptr, "homs", &opts, &r), ARTIN_E_INVALID_ARGUMENT);
  EXPECT_EQ(r, nullptr);
}

TEST(CApi, NullHandlesAreTolerated) {
  artin_algebra_free(nullptr);
  artin_report_free(nullptr);
  artin_string_free(nullptr);
  EXPECT_EQ(artin_algebra_dim(nullptr), 0u);
  EXPECT_STREQ(artin_report_json(nullptr), "");
  EXPECT_NE(std::string(artin_version()), "");
}
