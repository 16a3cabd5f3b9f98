#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <random>
#include <set>

#include "cxrep/errors.hpp"
#include "cxrep/float_bits.hpp"
#include "cxrep/metrics.hpp"
#include "cxrep/representation.hpp"
#include "oracles.hpp"

using namespace cxrep;

namespace {

const Complex64 kTableInput{6.7771673222051697E18, 3.6003875414142131E18};

Nat128 dec(const char* s) { return parse_nat128(s); }

bool same_bits(const Complex64& a, const Complex64& b) {
  return to_bits(a.re) == to_bits(b.re) && to_bits(a.im) == to_bits(b.im);
}

}  // namespace

TEST(Method, Names) {
  for (const Method m : kAllMethods) EXPECT_EQ(parse_method(method_name(m)), m);
  EXPECT_EQ(method_name(Method::PolarCantor), "polar-cantor");
  EXPECT_FALSE(parse_method("cantor").has_value());
  EXPECT_FALSE(parse_method("Polar-Cantor").has_value());
}

TEST(Encode, TableOne) {
  EXPECT_EQ(encode(kTableInput, Method::CartesianInterleave).value,
            dec("63885745057879574985027357472836160973"));
  EXPECT_EQ(encode(kTableInput, Method::PolarInterleave).value,
            dec("49679650227602418166657328428407275253"));
  EXPECT_EQ(encode(kTableInput, Method::PolarCantor).value,
            dec("45047750540491773913433549502792707777"));
  EXPECT_EQ(encode(kTableInput, Method::PolarSzudzik).value,
            dec("23906196144089240399724999666785929979"));
}

TEST(Encode, OriginIsZeroForEveryMethod) {
  for (const Method m : kAllMethods) {
    EXPECT_EQ(encode({0.0, 0.0}, m).value, 0U);
    EXPECT_EQ(decode({m, 0}), (Complex64{0.0, 0.0}));
  }
}

TEST(Encode, RejectsNonFinite) {
  const double inf = std::numeric_limits<double>::infinity();
  for (const Method m : kAllMethods) {
    EXPECT_THROW(encode({inf, 1.0}, m), DomainError);
    EXPECT_THROW(encode({1.0, std::nan("")}, m), DomainError);
  }
}

TEST(Decode, TableOne) {
  const Complex64 cart = decode({Method::CartesianInterleave, dec("63885745057879574985027357472836160973")});
  EXPECT_TRUE(same_bits(cart, kTableInput));
  EXPECT_EQ(roundtrip_error(kTableInput, cart), 0.0);

  const Complex64 polar = decode({Method::PolarCantor, dec("45047750540491773913433549502792707777")});
  EXPECT_LE(cxrep::testing::ulp_distance(polar.re, 6.7771673222051697E18), 1U);
  EXPECT_LE(cxrep::testing::ulp_distance(polar.im, 3.6003875414142126E18), 1U);
}

TEST(Decode, MalformedCantor) {
  const Nat128 diagonal_start = (Nat128{1} << 127) + (Nat128{1} << 63);
  EXPECT_THROW(decode({Method::PolarCantor, diagonal_start}), MalformedCode);
}

TEST(Representation, LosslessCartesian) {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 1'000'000; ++i) {
    // Arbitrary finite bit patterns, including subnormals and negative zero.
    double re, im;
    do re = from_bits(rng()); while (!std::isfinite(re));
    do im = from_bits(rng()); while (!std::isfinite(im));
    const Complex64 c{re, im};
    ASSERT_TRUE(same_bits(decode(encode(c, Method::CartesianInterleave)), c));
  }
  const Complex64 neg_zero{-0.0, -0.0};
  EXPECT_TRUE(same_bits(decode(encode(neg_zero, Method::CartesianInterleave)), neg_zero));
}

TEST(Representation, PolarMethodsDecodeIdentically) {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> dist(-9.2e18, 9.2e18);
  for (int i = 0; i < 100'000; ++i) {
    const Complex64 c{dist(rng), dist(rng)};
    const Complex64 a = decode(encode(c, Method::PolarInterleave));
    const Complex64 b = decode(encode(c, Method::PolarCantor));
    const Complex64 s = decode(encode(c, Method::PolarSzudzik));
    ASSERT_TRUE(same_bits(a, b));
    ASSERT_TRUE(same_bits(a, s));
  }
}

TEST(Representation, InjectiveAndBounded) {
  std::mt19937_64 rng(8080);
  std::uniform_real_distribution<double> dist(-9.2e18, 9.2e18);
  std::set<Complex64, decltype([](const Complex64& a, const Complex64& b) {
             return std::pair(to_bits(a.re), to_bits(a.im)) < std::pair(to_bits(b.re), to_bits(b.im));
           })>
      inputs;
  while (inputs.size() < 100'000) inputs.insert({dist(rng), dist(rng)});
  for (const Method m : kAllMethods) {
    std::set<Nat128> codes;
    for (const Complex64& c : inputs) {
      const Nat128 v = encode(c, m).value;
      if (m == Method::PolarCantor || m == Method::PolarSzudzik) ASSERT_LT(v, Nat128{1} << 127);
      codes.insert(v);
    }
    EXPECT_EQ(codes.size(), inputs.size()) << method_name(m);
  }
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(Nat128{0}), 0.0);
  EXPECT_EQ(normalize(dec("10000000000000000000000000000000000000")), 1.0);
  // Expected values frozen from exact rational rounding of value / 10^37.
  EXPECT_EQ(normalize(dec("63885745057879574985027357472836160973")), 0x1.98de679a9acb0p+2);
  EXPECT_EQ(normalize(dec("63885745057879574985027357472836160973")), 6.3885745057879575);
  EXPECT_EQ(normalize(dec("49679650227602418166657328428407275253")), 0x1.3df323911b563p+2);
  EXPECT_EQ(normalize(dec("45047750540491773913433549502792707777")), 0x1.204e3c073e951p+2);
  EXPECT_EQ(normalize(dec("23906196144089240399724999666785929979")), 0x1.31ffd2d287febp+1);
  EXPECT_EQ(normalize(~Nat128{0}), 0x1.1039d428a8b8fp+5);
  EXPECT_EQ(normalize(Nat128{1}), 0x1.1039d428a8b8fp-123);
  EXPECT_EQ(normalize(Representation{Method::PolarCantor, dec("15000000000000000000000000000000000000")}), 1.5);
}

TEST(Normalize, MatchesCorrectlyRoundedDecimalParse) {
  // strtod rounds decimal text correctly, which gives an independent route
  // to value / 10^37.
  std::mt19937_64 rng(77);
  for (int i = 0; i < 100'000; ++i) {
    const Nat128 v = make_nat128(rng() >> (rng() % 64), rng());
    const std::string text = to_decimal(v) + "e-37";
    ASSERT_EQ(normalize(v), std::strtod(text.c_str(), nullptr)) << text;
  }
}
