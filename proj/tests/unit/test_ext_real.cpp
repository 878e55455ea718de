#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include <plc/errors.hpp>
#include <plc/ext_real.hpp>

using plc::ExtReal;
using plc::kInf;
using plc::kNegInf;

TEST(ExtReal, ReciprocalConventions) {
    EXPECT_EQ(ExtReal(0.0).reciprocal(), kInf);
    EXPECT_EQ(kInf.reciprocal(), ExtReal(0.0));
    EXPECT_EQ(ExtReal(4.0).reciprocal(), ExtReal(0.25));
    EXPECT_THROW((void)ExtReal(-1.0).reciprocal(), plc::ContractError);
}

TEST(ExtReal, TotalOrder) {
    EXPECT_LT(kNegInf, ExtReal(-1e308));
    EXPECT_LT(ExtReal(1e308), kInf);
    EXPECT_LT(kNegInf, kInf);
    EXPECT_EQ(plc::max(kNegInf, ExtReal(3.0)), ExtReal(3.0));
    EXPECT_EQ(plc::min(kInf, ExtReal(3.0)), ExtReal(3.0));
}

TEST(ExtReal, NanRejected) {
    EXPECT_THROW(ExtReal(std::numeric_limits<double>::quiet_NaN()), plc::ContractError);
}

TEST(ExtReal, UndefinedArithmetic) {
    EXPECT_THROW(kInf - kInf, plc::ContractError);
    EXPECT_THROW(kInf + kNegInf, plc::ContractError);
    EXPECT_THROW(ExtReal(0.0) * kInf, plc::ContractError);
    EXPECT_EQ(kInf + ExtReal(1.0), kInf);
    EXPECT_EQ(ExtReal(2.0) * kNegInf, kNegInf);
    EXPECT_EQ(-kInf, kNegInf);
}

TEST(ExtReal, ToString) {
    EXPECT_EQ(kInf.to_string(), "inf");
    EXPECT_EQ(kNegInf.to_string(), "-inf");
    EXPECT_EQ(ExtReal(0.1).to_string(), "0.1");
}

TEST(ExtReal, CoordinatewiseMaxTreatsNegInfAsNeutral) {
    const plc::Point a{1.0, kNegInf}, b{kNegInf, 2.0};
    EXPECT_EQ(plc::coord_max(a, b), (plc::Point{1.0, 2.0}));
    EXPECT_EQ(plc::coord_max(a, a), a);
}
