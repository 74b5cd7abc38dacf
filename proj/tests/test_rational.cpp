#include <doctest.h>

#include <random>
#include <sstream>

#include "sympencil/rational.hpp"

using sympencil::GaussianRational;
using sympencil::parse_error;

namespace {

GaussianRational q(long num, long den = 1) { return GaussianRational(mpq_class(num, den)); }

GaussianRational qi(long rn, long rd, long in, long id) {
  return GaussianRational(mpq_class(rn, rd), mpq_class(in, id));
}

}  // namespace

TEST_CASE("construction keeps parts canonical") {
  GaussianRational v(mpq_class(2, 4), mpq_class(-3, 6));
  CHECK(v.re() == mpq_class(1, 2));
  CHECK(v.im() == mpq_class(-1, 2));
  CHECK(sgn(v.re().get_den()) > 0);
  CHECK_THROWS_AS(GaussianRational(mpq_class(mpz_class(1), mpz_class(0))), sympencil::input_error);
}

TEST_CASE("field arithmetic") {
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == q(-1));
  CHECK((q(1) + i) * (q(1) - i) == q(2));
  CHECK(qi(1, 2, 1, 3).conj() == qi(1, 2, -1, 3));
  CHECK(qi(3, 1, 4, 1).norm() == mpq_class(25));

  GaussianRational z = qi(2, 3, -5, 7);
  CHECK(z * z.inverse() == q(1));
  CHECK(z / z == q(1));
  CHECK(z + (-z) == q(0));
  CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
  CHECK_THROWS_AS(q(0).inverse(), std::domain_error);
}

TEST_CASE("addition round trip on random values") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto draw = [&] {
      long a = static_cast<long>(rng() % 2001) - 1000;
      long b = 1 + static_cast<long>(rng() % 40);
      long c = static_cast<long>(rng() % 2001) - 1000;
      long d = 1 + static_cast<long>(rng() % 40);
      return qi(a, b, c, d);
    };
    GaussianRational x = draw(), y = draw();
    CHECK((x + y) - y == x);
    CHECK(x * y == y * x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("parse accepts the documented forms") {
  CHECK(GaussianRational::parse("3") == q(3));
  CHECK(GaussianRational::parse("-1/2") == q(-1, 2));
  CHECK(GaussianRational::parse("2i") == qi(0, 1, 2, 1));
  CHECK(GaussianRational::parse("1+1i") == qi(1, 1, 1, 1));
  CHECK(GaussianRational::parse("1/2-3/4i") == qi(1, 2, -3, 4));
  CHECK(GaussianRational::parse("i") == GaussianRational::i());
  CHECK(GaussianRational::parse("-i") == -GaussianRational::i());
  CHECK(GaussianRational::parse("0") == q(0));
  CHECK(GaussianRational::parse("4/6") == q(2, 3));
  CHECK(GaussianRational::parse("123456789012345678901234567890") ==
        GaussianRational(mpq_class("123456789012345678901234567890")));
}

TEST_CASE("parse rejects malformed literals with a position") {
  auto pos_of = [](const char* text) {
    try {
      GaussianRational::parse(text);
    } catch (const parse_error& e) {
      return e.pos();
    }
    FAIL("expected parse_error for ", text);
    return std::size_t(0);
  };
  CHECK(pos_of("") == 0);
  CHECK(pos_of("+") == 1);
  CHECK(pos_of("3/") == 2);
  CHECK(pos_of("3/0") == 2);
  CHECK(pos_of("1+") == 2);
  CHECK(pos_of("1+2") == 1);     // second term must be imaginary
  CHECK(pos_of("i+1") == 1);     // imaginary part must come last
  CHECK(pos_of("1 + 2i") == 1);  // whitespace is not allowed
  CHECK(pos_of("1+2i+3i") == 4);
  CHECK(pos_of("x") == 0);
  CHECK(pos_of("1/2/3") == 3);
}

TEST_CASE("printing is canonical and round trips") {
  CHECK(q(3).str() == "3");
  CHECK(q(-1, 2).str() == "-1/2");
  CHECK(qi(0, 1, 2, 1).str() == "2i");
  CHECK(qi(1, 1, 1, 1).str() == "1+1i");
  CHECK(qi(1, 2, -3, 4).str() == "1/2-3/4i");
  CHECK(qi(0, 1, -1, 1).str() == "-1i");
  CHECK(GaussianRational::i().str() == "1i");

  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    long a = static_cast<long>(rng() % 201) - 100;
    long b = 1 + static_cast<long>(rng() % 12);
    long c = static_cast<long>(rng() % 201) - 100;
    long d = 1 + static_cast<long>(rng() % 12);
    GaussianRational v = qi(a, b, c, d);
    CHECK(GaussianRational::parse(v.str()) == v);
  }

  std::ostringstream os;
  os << qi(1, 1, 1, 1);
  CHECK(os.str() == "1+1i");
}
