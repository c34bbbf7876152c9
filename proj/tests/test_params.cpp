#include <gtest/gtest.h>

#include <cmath>

#include "qho/error.hpp"
#include "qho/params.hpp"

namespace qho {
namespace {

TEST(Energy, GroundStateNaturalUnits) {
  const Energy e = energy_of(StateLabel(0, 0, 0), OscillatorParams::natural());
  EXPECT_DOUBLE_EQ(e.value, 1.5);
  EXPECT_EQ(e.n, 0);
}

TEST(Energy, CountsQuantaAndAddsThreeHalves) {
  const Energy e = energy_of(StateLabel(1, 2, 3), OscillatorParams::natural());
  EXPECT_DOUBLE_EQ(e.value, 7.5);
  EXPECT_EQ(e.n, 6);
}

TEST(Energy, VanishesWithoutOscillator) {
  OscillatorParams p;
  p.omega = 0.0;
  EXPECT_EQ(energy_of(StateLabel(0, 0, 0), p).value, 0.0);
}

TEST(Energy, ScalesWithHbarOmega) {
  const OscillatorParams p{2.0, 1.0, 3.0};
  EXPECT_DOUBLE_EQ(energy_of(StateLabel(1, 0, 0), p).value, 2.0 * 3.0 * 2.5);
}

TEST(StateLabel, RejectsNegativeQuanta) {
  try {
    StateLabel(0, -1, 0);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::domain_error);
  }
}

TEST(StateLabel, FormatsAsTuple) { EXPECT_EQ(StateLabel(1, 2, 3).to_string(), "(1,2,3)"); }

TEST(XiCoordinate, Examples) {
  const auto natural = OscillatorParams::natural();
  EXPECT_EQ(xi_coordinate(0.0, natural), 0.0);
  EXPECT_EQ(xi_coordinate(2.0, natural), 2.0);
  EXPECT_DOUBLE_EQ(xi_coordinate(1.0, OscillatorParams{1.0, 2.0, 8.0}), 4.0);
}

TEST(OscillatorParams, ValidateRejectsNonPhysical) {
  for (const OscillatorParams& bad :
       {OscillatorParams{0.0, 1.0, 1.0}, OscillatorParams{1.0, -1.0, 1.0},
        OscillatorParams{1.0, 1.0, -0.5}, OscillatorParams{NAN, 1.0, 1.0}}) {
    try {
      bad.validate();
      FAIL() << "expected config_invalid";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::config_invalid);
    }
  }
  EXPECT_NO_THROW((OscillatorParams{1.0, 1.0, 0.0}.validate()));
}

TEST(Potential, CountsEveryEvaluation) {
  const auto before = potential_evaluations();
  EXPECT_DOUBLE_EQ(potential_energy({1.0, 2.0, 2.0}, OscillatorParams::natural()), 4.5);
  EXPECT_EQ(potential_evaluations(), before + 1);
}

TEST(ErrorCode, NamesAreStable) {
  EXPECT_EQ(to_string(ErrorCode::off_manifold), "OffManifold");
  EXPECT_EQ(to_string(ErrorCode::degree_too_large), "DegreeTooLarge");
  EXPECT_EQ(to_string(ErrorCode::unknown_identity), "UnknownIdentity");
}

}  // namespace
}  // namespace qho
