#include <doctest.h>

#include "qlie/scalar.hpp"
#include "support.hpp"

using namespace qlie;
using namespace qlie::test;

TEST_CASE("parse_scalar reads the grammar") {
  CHECK(parse_scalar("1") == S(1));
  CHECK(parse_scalar("3/2-1/3i") == Scalar(Rational(3, 2), Rational(-1, 3)));
  CHECK(parse_scalar("-i") == Si(0, -1));
  CHECK(parse_scalar("i") == Si(0, 1));
  CHECK(parse_scalar("0") == S(0));
  CHECK(parse_scalar("-5/10") == Scalar(Rational(-1, 2)));
  CHECK(parse_scalar("2+i") == Si(2, 1));
  CHECK(parse_scalar("2-3i") == Si(2, -3));
  CHECK(parse_scalar("7/2i") == Scalar(Rational(0), Rational(7, 2)));
  CHECK(parse_scalar("-2/7i") == Scalar(Rational(0), Rational(-2, 7)));
}

TEST_CASE("parse_scalar rejects deviations") {
  for (const char* bad : {"", "+", "-", "1/", "/2", "1/0", "1i2", "2+", "i3", "1+2", "1 + i",
                          "2.5", "--1", "1+-2i", "ii", "3/2-1/3j"}) {
    CHECK_THROWS_AS(parse_scalar(bad), error);
    try {
      parse_scalar(bad);
    } catch (const error& e) {
      CHECK(e.code() == errc::parse_error);
    }
  }
}

TEST_CASE("emission is canonical and parse round-trips") {
  CHECK(to_string(S(0)) == "0");
  CHECK(to_string(S(2)) == "2");
  CHECK(to_string(Scalar(Rational(3, 2), Rational(-1, 3))) == "3/2-1/3i");
  CHECK(to_string(Si(0, 1)) == "i");
  CHECK(to_string(Si(0, -1)) == "-i");
  CHECK(to_string(Si(1, 1)) == "1+i");
  CHECK(to_string(Si(1, -1)) == "1-i");
  CHECK(to_string(Scalar(Rational(0), Rational(-2, 7))) == "-2/7i");

  SplitMix64 rng(11);
  for (int k = 0; k < 500; ++k) {
    Scalar s = random_scalar(rng);
    CHECK(parse_scalar(to_string(s)) == s);
  }
}

TEST_CASE("arithmetic matches the worked examples") {
  CHECK(Si(1, 1) * Si(1, -1) == S(2));
  CHECK(S(1) / Si(0, 2) == Scalar(Rational(0), Rational(-1, 2)));
  CHECK(Scalar(Rational(1, 2), Rational(1, 3)) + Scalar(Rational(1, 2), Rational(-1, 3)) == S(1));
  CHECK(Si(0, 1) * Si(0, 1) == S(-1));
  CHECK_THROWS_AS(S(1) / S(0), error);
  CHECK(Si(2, 3).conj() == Si(2, -3));
  CHECK(Si(3, 4).norm() == Rational(25));
}

TEST_CASE("field axioms hold on random samples") {
  SplitMix64 rng(7);
  for (int k = 0; k < 1000; ++k) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == S(0));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == S(1));
      CHECK(a / a == S(1));
    }
  }
}

TEST_CASE("exact square roots") {
  CHECK(*sqrt_exact(S(4)) == S(2));
  CHECK(*sqrt_exact(S(-1)) == Si(0, 1));
  CHECK(*sqrt_exact(Si(0, 2)) == Si(1, 1));  // (1+i)^2 = 2i
  CHECK(*sqrt_exact(Scalar(Rational(9, 4))) == Scalar(Rational(3, 2)));
  CHECK(!sqrt_exact(Scalar(Rational(-1, 2))).has_value()); // fails in Q(i)
  CHECK(!sqrt_exact(S(2)).has_value());
  CHECK(!sqrt_exact(S(3)).has_value());
  CHECK(!sqrt_exact(Si(1, 1)).has_value()); // norm 2 is not a square

  SplitMix64 rng(23);
  for (int k = 0; k < 300; ++k) {
    Scalar s = random_scalar(rng);
    Scalar sq = s * s;
    auto root = sqrt_exact(sq);
    REQUIRE(root.has_value());
    CHECK(*root * *root == sq);
    // canonical representative: positive real part, or on the imaginary axis
    // the non-negative half
    CHECK((root->re > 0 || (root->re == 0 && root->im >= 0)));
  }
}

TEST_CASE("rational_sqrt recognizes perfect squares only") {
  CHECK(*rational_sqrt(Rational(16, 9)) == Rational(4, 3));
  CHECK(!rational_sqrt(Rational(1, 2)).has_value());
  CHECK(!rational_sqrt(Rational(-4)).has_value());
  CHECK(*rational_sqrt(Rational(0)) == Rational(0));
}

TEST_CASE("scalar_less is a strict total order on samples") {
  CHECK(scalar_less(S(-2), S(2)));
  CHECK(scalar_less(Si(1, -1), Si(1, 1)));
  CHECK(!scalar_less(S(1), S(1)));
  SplitMix64 rng(5);
  for (int k = 0; k < 200; ++k) {
    Scalar a = random_scalar(rng), b = random_scalar(rng);
    if (a == b) {
      CHECK(!scalar_less(a, b));
      CHECK(!scalar_less(b, a));
    } else {
      CHECK(scalar_less(a, b) != scalar_less(b, a));
    }
  }
}
