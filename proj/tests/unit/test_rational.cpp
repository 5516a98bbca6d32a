#include <gtest/gtest.h>

#include "spinmod/error.hpp"
#include "spinmod/rational.hpp"

using spinmod::ExtRational;

TEST(Rational, Reduces) {
  EXPECT_EQ(ExtRational(6, 4), ExtRational(3, 2));
  EXPECT_EQ(ExtRational(3, -6), ExtRational(-1, 2));
  EXPECT_EQ(ExtRational(3, 6).den(), 2);
  EXPECT_THROW(ExtRational(1, 0), spinmod::InputError);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(ExtRational(1, 2) + ExtRational(1, 3), ExtRational(5, 6));
  EXPECT_EQ(ExtRational(3) * ExtRational(2), ExtRational(6));
  EXPECT_EQ(ExtRational(3) / ExtRational(2), ExtRational(3, 2));
  EXPECT_EQ(ExtRational(3, 2) * ExtRational(2), ExtRational(3));
}

TEST(Rational, Infinity) {
  const auto inf = ExtRational::infinity();
  EXPECT_EQ(inf * ExtRational(2), inf);
  EXPECT_EQ(inf / ExtRational(2), inf);
  EXPECT_EQ(inf + ExtRational(1), inf);
  EXPECT_LT(ExtRational(1000000), inf);
  EXPECT_THROW(inf * ExtRational(0), spinmod::InputError);
  EXPECT_THROW(ExtRational(1) / inf, spinmod::InputError);
}

TEST(Rational, Overflow) {
  const ExtRational big(std::int64_t{1} << 62);
  EXPECT_THROW(big * big, spinmod::ResourceError);
}

TEST(Rational, Text) {
  EXPECT_EQ(ExtRational::parse("3/6"), ExtRational(1, 2));
  EXPECT_EQ(ExtRational::parse("inf"), ExtRational::infinity());
  EXPECT_EQ(ExtRational(7, 3).to_string(), "7/3");
  EXPECT_EQ(ExtRational(4).to_string(), "4");
  EXPECT_THROW(ExtRational::parse("x/2"), spinmod::InputError);
}

TEST(Rational, HalveDoubleRoundTrip) {
  for (int p = 1; p < 30; ++p) {
    for (int q = 1; q < 8; ++q) {
      const ExtRational x(p, q);
      EXPECT_EQ((x / ExtRational(2)) * ExtRational(2), x);
    }
  }
}
