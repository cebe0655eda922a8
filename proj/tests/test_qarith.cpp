#include <doctest.h>

#include "oracles.hpp"
#include "wittforge/errors.hpp"
#include "wittforge/qarith.hpp"

#include <random>
#include <set>

using namespace wittforge;

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(18) == SquareClass::of(2));
    CHECK(squarefree_part(Rational(-12, 5)) == SquareClass::of(-15));
    CHECK(squarefree_part(Rational(1, 4)).is_trivial());
    CHECK(squarefree_part(-1).value() == -1);
    CHECK_THROWS_AS(squarefree_part(0), DomainError);
    for (long n = -300; n <= 300; ++n) {
        if (n == 0) continue;
        CHECK(squarefree_part(n).value() == oracle::squarefree_core(n));
    }
}

TEST_CASE("square class multiplication") {
    CHECK(SquareClass::of(6) * SquareClass::of(10) == SquareClass::of(15));
    CHECK(SquareClass::of(-3) * SquareClass::of(-3) == SquareClass());
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> dist(-2000, 2000);
    for (int k = 0; k < 200; ++k) {
        long a = dist(rng), b = dist(rng);
        if (a == 0 || b == 0) continue;
        CHECK(SquareClass::of(a) * SquareClass::of(b) == SquareClass::of(Rational(a) * b));
    }
}

TEST_CASE("factor") {
    auto f = factor(Integer(360));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<Integer, unsigned>(2, 3));
    CHECK(f[1] == std::pair<Integer, unsigned>(3, 2));
    CHECK(f[2] == std::pair<Integer, unsigned>(5, 1));
    CHECK(factor(Integer(-1)).empty());
    CHECK_THROWS_AS(factor(Integer(0)), DomainError);

    Integer p("1000000007"), q("1000000009"), r("998244353");
    auto g = factor(p * q * q * r);
    REQUIRE(g.size() == 3);
    CHECK(g[0].first == r);
    CHECK(g[1] == std::pair<Integer, unsigned>(p, 1));
    CHECK(g[2] == std::pair<Integer, unsigned>(q, 2));

    for (long n = 2; n < 3000; ++n) {
        Integer prod = 1;
        for (auto& [pr, e] : factor(Integer(n))) {
            CHECK(oracle::small_prime(pr.get_si()));
            for (unsigned i = 0; i < e; ++i) prod *= pr;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("legendre") {
    CHECK(legendre(2, 7) == 1);
    CHECK(legendre(3, 7) == -1);
    CHECK(legendre(14, 7) == 0);
    CHECK_THROWS_AS(legendre(2, 2), DomainError);
    CHECK_THROWS_AS(legendre(2, 9), DomainError);
    for (long p : {3L, 5L, 7L, 11L, 13L, 31L, 97L}) {
        std::set<long> squares;
        for (long x = 1; x < p; ++x) squares.insert(x * x % p);
        for (long a = -2 * p; a <= 2 * p; ++a) {
            int expect = oracle::mod(a, p) == 0 ? 0 : (squares.count(oracle::mod(a, p)) ? 1 : -1);
            CHECK(legendre(a, p) == expect);
        }
    }
}

TEST_CASE("hilbert symbol examples") {
    CHECK(hilbert_symbol(-1, -1, Place::real()) == -1);
    CHECK(hilbert_symbol(-1, -1, Place::prime(2)) == -1);
    CHECK(hilbert_symbol(-1, -1, Place::prime(3)) == 1);
    CHECK(hilbert_symbol(2, 3, Place::prime(3)) == -1);
    CHECK(hilbert_symbol(5, 2, Place::prime(5)) == -1);
    CHECK(hilbert_symbol(Rational(1, 4), -7, Place::prime(7)) == 1);
    CHECK_THROWS_AS(hilbert_symbol(Rational(0), Rational(3), Place::real()), DomainError);
}

TEST_CASE("hilbert symbol against local solvability search") {
    std::vector<long> sf;
    for (long n = -30; n <= 30; ++n)
        if (n != 0 && oracle::squarefree_core(n) == n) sf.push_back(n);
    for (long p : {2L, 3L, 5L, 7L}) {
        for (long a : sf)
            for (long b : sf) {
                if (b < a) continue;
                INFO("a=" << a << " b=" << b << " p=" << p);
                CHECK(hilbert_symbol(a, b, Place::prime(p)) == oracle::hilbert_local(a, b, p));
            }
    }
    for (long a : sf)
        for (long b : sf) CHECK(hilbert_symbol(a, b, Place::real()) == oracle::hilbert_real(a, b));
}

TEST_CASE("hilbert symbol identities") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-500, 500);
    auto draw = [&] {
        long x = 0;
        while (x == 0) x = dist(rng);
        return SquareClass::of(x);
    };
    for (int k = 0; k < 100; ++k) {
        SquareClass a = draw(), b = draw(), c = draw();
        std::set<Place> places;
        for (auto& v : candidate_places(a, b * c)) places.insert(v);
        for (auto& v : candidate_places(a, b)) places.insert(v);
        for (auto& v : candidate_places(a, c)) places.insert(v);
        int prod = 1;
        for (auto& v : candidate_places(a, b)) prod *= hilbert_symbol(a, b, v);
        CHECK(prod == 1);
        for (auto& v : places) {
            CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
            CHECK(hilbert_symbol(a, b * c, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v));
            CHECK(hilbert_symbol(a, SquareClass::of(-1) * a, v) == 1);
        }
    }
}

TEST_CASE("local squares") {
    CHECK(is_local_square(SquareClass::of(17), Place::prime(2)));
    CHECK_FALSE(is_local_square(SquareClass::of(5), Place::prime(2)));
    CHECK(is_local_square(SquareClass::of(2), Place::prime(7)));
    CHECK_FALSE(is_local_square(SquareClass::of(7), Place::prime(7)));
    CHECK_FALSE(is_local_square(SquareClass::of(-1), Place::real()));
    CHECK(is_local_square(SquareClass::of(3), Place::real()));
}

TEST_CASE("places") {
    CHECK(Place::parse("real") == Place::real());
    CHECK(Place::parse("inf") == Place::real());
    CHECK(Place::parse("13") == Place::prime(13));
    CHECK_THROWS_AS(Place::prime(15), DomainError);
    CHECK(Place::real() < Place::prime(2));
    auto c = candidate_places(SquareClass::of(-15), SquareClass::of(7));
    std::vector<Place> expect{Place::real(), Place::prime(2), Place::prime(3), Place::prime(5), Place::prime(7)};
    CHECK(c == expect);
}

TEST_CASE("parse rational") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-5/7") == Rational(-5, 7));
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("squarefree enumeration order") {
    std::vector<long> seen;
    for_each_squarefree(6, [&](const SquareClass& s) {
        seen.push_back(s.value().get_si());
        return false;
    });
    std::vector<long> expect{1, -1, 2, -2, 3, -3, 5, -5, 6, -6};
    CHECK(seen == expect);
}
