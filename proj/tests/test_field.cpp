#include <doctest.h>

#include "semicanon/field.hpp"

using namespace semicanon;

TEST_CASE("rational arithmetic is exact") {
    Field q = Field::rationals();
    Fe a = q.from_ratio(1, 3);
    Fe b = q.from_ratio(1, 6);
    CHECK(a + b == q.from_ratio(1, 2));
    CHECK(a - b == q.from_ratio(1, 6));
    CHECK(a * b == q.from_ratio(1, 18));
    CHECK(a / b == q.from_int(2));
    CHECK((-a).str() == "-1/3");
    CHECK(a.inverse() == q.from_int(3));
    CHECK(q.from_ratio(2, 4) == q.from_ratio(1, 2));
}

TEST_CASE("prime field arithmetic") {
    Field f = Field::prime(101);
    Fe a = f.from_int(45);
    Fe b = f.from_int(77);
    CHECK(a + b == f.from_int(21));
    CHECK(a - b == f.from_int(-32));
    CHECK(a * b == f.from_int(45 * 77));
    CHECK((a / b) * b == a);
    CHECK(a * a.inverse() == f.one());
    CHECK(f.from_int(-1) == f.from_int(100));
}

TEST_CASE("default modulus survives products near the top of the range") {
    Field f = Field::prime();
    Fe big = f.from_int(-2);  // q - 2
    CHECK(big * big == f.from_int(4));
    CHECK(big.pow(2) == f.from_int(4));
    CHECK(big.pow(0) == f.one());
    CHECK(big.pow(-1) * big == f.one());
}

TEST_CASE("pow matches repeated multiplication") {
    Field f = Field::prime(10007);
    Fe x = f.from_int(123);
    Fe acc = f.one();
    for (int i = 0; i < 9; ++i) acc *= x;
    CHECK(x.pow(9) == acc);

    Field q = Field::rationals();
    CHECK(q.from_ratio(2, 3).pow(3) == q.from_ratio(8, 27));
    CHECK(q.from_ratio(2, 3).pow(-2) == q.from_ratio(9, 4));
}

TEST_CASE("parse round-trips through str") {
    Field q = Field::rationals();
    for (const char* s : {"0", "5", "-7", "3/4", "-11/13"}) {
        Fe v = q.parse(s);
        CHECK(v.str() == s);
        CHECK(q.parse(v.str()) == v);
    }
    CHECK(q.parse("6/4") == q.from_ratio(3, 2));

    Field f = Field::prime(97);
    CHECK(f.parse("3/4") == f.from_int(3) / f.from_int(4));
    CHECK(f.parse("-1") == f.from_int(96));
    CHECK(f.parse(f.parse("42").str()) == f.from_int(42));
}

TEST_CASE("parse rejects malformed input") {
    Field q = Field::rationals();
    for (const char* s : {"", "x", "1/", "/2", "1/2/3", "1.5", "2/0"})
        CHECK_THROWS_AS(q.parse(s), Error);
}

TEST_CASE("division by zero throws") {
    Field q = Field::rationals();
    Field f = Field::prime(101);
    CHECK_THROWS_AS(q.one() / q.zero(), Error);
    CHECK_THROWS_AS(f.zero().inverse(), Error);
    CHECK_THROWS_AS(q.from_ratio(1, 0), Error);
}

TEST_CASE("mixing fields throws FieldMismatch") {
    Fe a = Field::rationals().one();
    Fe b = Field::prime(101).one();
    CHECK_THROWS_AS(a + b, Error);
    try {
        a* b;
    } catch (const Error& e) {
        CHECK(e.code() == errc::FieldMismatch);
    }
}

TEST_CASE("from_rational reduces mod q") {
    Field f = Field::prime(101);
    Fe v = f.from_rational(mpq_class(1, 3));
    CHECK(v * f.from_int(3) == f.one());
    // Denominator divisible by q is rejected.
    CHECK_THROWS_AS(f.from_rational(mpq_class(1, 101)), Error);
}
