#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qho/bargmann.hpp"
#include "qho/error.hpp"

namespace qho {
namespace {

TEST(SegalBargmann, Examples) {
  EXPECT_NEAR(sb_transform(0, 0.7), 1.0, 1e-9);
  EXPECT_NEAR(sb_transform(2, 1.0), 1.0 / std::sqrt(2.0), 1e-8);
  EXPECT_NEAR(sb_transform(1, 1.0, KernelSign::minus), -sb_transform(1, 1.0, KernelSign::plus),
              1e-12);
}

TEST(SegalBargmann, ClosedForm) {
  EXPECT_DOUBLE_EQ(sb_closed_form(3, 2.0), 8.0 / std::sqrt(6.0));
  EXPECT_DOUBLE_EQ(sb_closed_form(3, 2.0, KernelSign::minus), -8.0 / std::sqrt(6.0));
  EXPECT_DOUBLE_EQ(sb_closed_form(4, -1.0, KernelSign::minus), 1.0 / std::sqrt(24.0));
}

TEST(SegalBargmann, QuadratureOrderTooLow) {
  try {
    sb_transform(8, 1.0, KernelSign::plus, 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::quadrature_order_too_low);
  }
}

TEST(SegalBargmann, LevelBound) {
  EXPECT_THROW(sb_transform(kMaxTransformLevel + 1, 0.5), Error);
  EXPECT_THROW(sb_transform(-1, 0.5), Error);
}

TEST(ConjugateTransform, Examples) {
  EXPECT_NEAR(conjugate_transform(0, 2.0, PrefactorMode::table), 0.5, 1e-10);
  EXPECT_NEAR(conjugate_transform(3, 1.0, PrefactorMode::table), std::sqrt(6.0), 1e-8);
  EXPECT_NEAR(conjugate_transform(0, 2.0, PrefactorMode::paper),
              0.5 * std::pow(std::numbers::pi, -0.25), 1e-10);
}

TEST(ConjugateTransform, RejectsNonPositiveB) {
  for (double b : {0.0, -1.0}) {
    try {
      conjugate_transform(1, b);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::domain_error);
    }
  }
}

TEST(ModeParsing, RoundTrip) {
  EXPECT_EQ(parse_kernel_sign("plus"), KernelSign::plus);
  EXPECT_EQ(parse_kernel_sign("minus"), KernelSign::minus);
  EXPECT_FALSE(parse_kernel_sign("sideways").has_value());
  EXPECT_EQ(parse_prefactor_mode("paper"), PrefactorMode::paper);
  EXPECT_EQ(to_string(PrefactorMode::table), "table");
}

TEST(Table1, LadderExamples) {
  EXPECT_TRUE(table1_ladder_check(Table1Space::bargmann, 3, LadderDirection::raise).passed);
  EXPECT_TRUE(table1_ladder_check(Table1Space::conjugate, 0, LadderDirection::raise).passed);
  EXPECT_TRUE(table1_ladder_check(Table1Space::conformal, 1, LadderDirection::lower).passed);
}

TEST(Table1, ConjugateVacuumIsNotAnnihilatedByB) {
  // b * (1/b) = 1: multiplication by b cannot send the conjugate vacuum to 0.
  const CheckReport r = table1_ladder_check(Table1Space::conjugate, 0, LadderDirection::lower);
  EXPECT_FALSE(r.passed);
  const auto result = table1_apply(Table1Space::conjugate, LadderDirection::lower,
                                   table1_eigenfunction(Table1Space::conjugate, 0));
  EXPECT_DOUBLE_EQ(result.evaluate(3.0), 1.0);
}

TEST(Table1, VacuumAnnihilatedInBargmannAndConformal) {
  EXPECT_TRUE(table1_ladder_check(Table1Space::bargmann, 0, LadderDirection::lower).passed);
  EXPECT_TRUE(table1_ladder_check(Table1Space::conformal, 0, LadderDirection::lower).passed);
}

TEST(Table1, EigenfunctionsMatchNumericForms) {
  for (int l = 0; l <= 6; ++l) {
    EXPECT_NEAR(table1_eigenfunction(Table1Space::bargmann, l).evaluate(1.5),
                sb_closed_form(l, 1.5), 1e-13);
    EXPECT_NEAR(table1_eigenfunction(Table1Space::conjugate, l).evaluate(2.0),
                conjugate_closed_form(l, 2.0), 1e-13);
  }
}

TEST(Table1, SchrodingerEigenvalues) {
  const struct {
    Table1Space space;
    StateLabel state;
    const char* eigenvalue;
  } cases[] = {{Table1Space::bargmann, StateLabel(0, 0, 0), "3/2"},
               {Table1Space::conjugate, StateLabel(2, 0, 0), "7/2"},
               {Table1Space::conformal, StateLabel(1, 1, 1), "9/2"}};
  for (const auto& c : cases) {
    const CheckReport r = table1_schrodinger_check(c.space, c.state);
    EXPECT_TRUE(r.passed) << to_string(c.space);
    const DetailValue* v = r.find_detail("eigenvalue");
    ASSERT_NE(v, nullptr);
    EXPECT_EQ(std::get<std::string>(*v), c.eigenvalue);
  }
}

TEST(Table1, CommutatorIsIdentityEverywhere) {
  for (auto space : {Table1Space::bargmann, Table1Space::conjugate, Table1Space::conformal}) {
    for (int l = 0; l <= 6; ++l) EXPECT_TRUE(table1_commutator_check(space, l).passed);
  }
}

TEST(Table1, Rows) {
  EXPECT_EQ(table1_row(Table1Space::conjugate).variable, "b");
  EXPECT_FALSE(table1_row(Table1Space::conformal).raise_op.empty());
}

}  // namespace
}  // namespace qho
