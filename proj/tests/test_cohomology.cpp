#include <doctest.h>

#include "oracles.hpp"
#include "wittforge/cohomology.hpp"
#include "wittforge/errors.hpp"

#include <random>

using namespace wittforge;

namespace {

std::set<Place> places_of(const std::vector<long>& ram) {
    std::set<Place> out;
    for (long p : ram) out.insert(p == 0 ? Place::real() : Place::prime(p));
    return out;
}

}  // namespace

TEST_CASE("brauer classes of symbols") {
    CHECK(brauer_from_symbol(-1, -1).ramification() == places_of({0, 2}));
    CHECK(brauer_from_symbol(2, 5).ramification() == places_of({2, 5}));
    CHECK(brauer_from_symbol(1, 7).is_zero());
    CHECK(brauer_from_symbol(3, -3).is_zero());
    CHECK(brauer_from_symbol(-1, -3).ramification() == places_of({0, 3}));
    CHECK(brauer_from_symbol(-1, -1).str() == "{real,2}");
}

TEST_CASE("ramification matches the local solvability search") {
    std::vector<long> sf;
    for (long n = -15; n <= 15; ++n)
        if (n != 0 && oracle::squarefree_core(n) == n) sf.push_back(n);
    for (long a : sf)
        for (long b : sf) {
            INFO("(" << a << "," << b << ")");
            CHECK(brauer_from_symbol(a, b).ramification() == places_of(oracle::ramification(a, b)));
        }
}

TEST_CASE("group law") {
    BrauerClass x = brauer_from_symbol(-1, -1), y = brauer_from_symbol(2, 5);
    CHECK((x + x).is_zero());
    CHECK((x + y).ramification() == places_of({0, 5}));
    CHECK(x + BrauerClass::zero() == x);
    CHECK(BrauerClass::from_ramification(places_of({3, 7})).ramified_at(Place::prime(7)));
    CHECK(x.local_invariant(Place::real()) == -1);
    CHECK(x.local_invariant(Place::prime(3)) == 1);
    CHECK_THROWS_AS(BrauerClass::from_ramification(places_of({0})), DomainError);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> dist(-400, 400);
    auto draw = [&] {
        long v = 0;
        while (v == 0) v = dist(rng);
        return SquareClass::of(v);
    };
    for (int k = 0; k < 150; ++k) {
        SquareClass a = draw(), b = draw(), c = draw();
        CHECK(brauer_from_symbol(a, b * c) == brauer_from_symbol(a, b) + brauer_from_symbol(a, c));
        CHECK(brauer_from_symbol(a, b) == brauer_from_symbol(b, a));
        CHECK(brauer_from_symbol(a, SquareClass::of(-1) * a).is_zero());
        CHECK(brauer_from_symbol(a, SquareClass()).is_zero());
    }
}

TEST_CASE("quaternion symbol of a class") {
    std::vector<std::vector<long>> sets{{}, {0, 2}, {2, 3}, {3, 5}, {0, 7}, {2, 3, 5, 7}, {0, 3, 11, 13}};
    for (auto& s : sets) {
        BrauerClass x = BrauerClass::from_ramification(places_of(s));
        auto [a, b] = quaternion_symbol(x);
        CHECK(brauer_from_symbol(a, b) == x);
    }
}

TEST_CASE("cup products into H3") {
    BrauerClass h = brauer_from_symbol(-1, -1);
    CHECK(cup_h3(SquareClass::of(-1), h).bit == 1);
    CHECK(cup_h3(SquareClass::of(2), h).bit == 0);
    CHECK(cup_h3(SquareClass::of(-3), brauer_from_symbol(2, 5)).bit == 0);
    CHECK(cup_h3(SquareClass::of(-1), BrauerClass::zero()).bit == 0);
    BrauerClass g = brauer_from_symbol(-1, 3);
    for (long a : {-1L, -2L, 3L, -7L}) {
        for (long c : {-1L, 2L, -5L}) {
            SquareClass sa = SquareClass::of(a), sc = SquareClass::of(c);
            CHECK(cup_h3(sa * sc, h) == cup_h3(sa, h) + cup_h3(sc, h));
            CHECK(cup_h3(sa, h + g) == cup_h3(sa, h) + cup_h3(sa, g));
        }
    }
}
