#include <doctest.h>

#include "oracles.hpp"
#include "wittforge/errors.hpp"
#include "wittforge/quadform.hpp"

#include <random>

using namespace wittforge;

namespace {

SquareClass sc(long v) { return SquareClass::of(v); }

std::vector<long> as_longs(const QuadForm& q) {
    std::vector<long> out;
    for (auto& x : q.diag()) out.push_back(x.get_num().get_si());
    return out;
}

QuadForm random_form(std::mt19937_64& rng, std::size_t n, long max_abs) {
    std::uniform_int_distribution<long> dist(-max_abs, max_abs);
    std::vector<Rational> d;
    while (d.size() < n) {
        long v = dist(rng);
        if (v != 0) d.emplace_back(v);
    }
    return QuadForm(d);
}

}  // namespace

TEST_CASE("constructors") {
    QuadForm q{1, -2, 3};
    CHECK(q.dim() == 3);
    CHECK(direct_sum(q, QuadForm{5}) == QuadForm{1, -2, 3, 5});
    CHECK(scale(q, -2) == QuadForm{-2, 4, -6});
    CHECK(tensor(QuadForm{1, 2}, QuadForm{3, 5}) == QuadForm{3, 5, 6, 10});
    CHECK(hyperbolic(2) == QuadForm{1, -1, 1, -1});
    CHECK(QuadForm{8, 12}.reduced() == QuadForm{2, 3});
    CHECK(q.evaluate({1, 1, 1}) == 2);
    CHECK_THROWS_AS(QuadForm({1, 0}), DomainError);
    CHECK_THROWS_AS(scale(q, 0), DomainError);
    CHECK_THROWS_AS(q.evaluate({1, 1}), DomainError);
}

TEST_CASE("pfister forms") {
    CHECK(pfister({sc(2)}) == QuadForm{1, -2});
    CHECK(pfister({sc(2), sc(3)}) == QuadForm{1, -3, -2, 6});
    CHECK(pfister({sc(-1), sc(-1), sc(-1)}).dim() == 8);
    CHECK(pfister({}) == QuadForm{1});
}

TEST_CASE("discriminant and hasse") {
    CHECK(e1(QuadForm{1, -1}).is_trivial());
    CHECK(e1(QuadForm{1, 1}) == sc(-1));
    CHECK(e1(QuadForm{2, 3, 5}) == sc(-30));
    CHECK(determinant(QuadForm{2, 3, 5}) == sc(30));
    CHECK(hasse_class(QuadForm{-1, -1}) == brauer_from_symbol(-1, -1));
    CHECK(hasse_at(QuadForm{-1, -1, 1}, Place::prime(2)) == -1);
    CHECK(signature(QuadForm{1, 1, -3, 2}) == 2);
}

TEST_CASE("clifford invariant") {
    CHECK(e2(pfister({sc(-1), sc(-1)})) == brauer_from_symbol(-1, -1));
    CHECK(e2(hyperbolic(3)).is_zero());
    CHECK_THROWS_AS(e2(QuadForm{1, 1}), DomainError);
    CHECK_THROWS_AS(e2(QuadForm{1, 1, 1}), DomainError);

    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> dist(-60, 60);
    auto draw = [&] {
        long v = 0;
        while (v == 0) v = dist(rng);
        return sc(v);
    };
    for (int k = 0; k < 60; ++k) {
        SquareClass a = draw(), b = draw(), c = draw(), d = draw();
        QuadForm p1 = pfister({a, b}), p2 = scale(pfister({c, d}), Rational(d.value()));
        CHECK(e2(p1) == brauer_from_symbol(a, b));
        CHECK(e2(direct_sum(p1, p2)) == e2(p1) + e2(p2));
        CHECK(e2(pfister({a, b, c})).is_zero());
    }
}

TEST_CASE("isotropy against a bounded search") {
    std::mt19937_64 rng(21);
    for (std::size_t n : {2u, 3u, 4u}) {
        long h = n == 4 ? 5 : 14;
        for (int k = 0; k < 80; ++k) {
            QuadForm q = random_form(rng, n, 12);
            INFO(q.str());
            bool iso = is_isotropic(q);
            auto found = oracle::small_zero(as_longs(q), h);
            if (found) CHECK(iso);
            auto v = isotropic_vector(q);
            CHECK(v.has_value() == iso);
            if (v) {
                CHECK(q.evaluate(*v) == 0);
                bool nonzero = false;
                for (auto& x : *v) nonzero = nonzero || x != 0;
                CHECK(nonzero);
            }
        }
    }
    CHECK_FALSE(is_isotropic(QuadForm{1, 1, 1, 1}));
    CHECK(is_isotropic(QuadForm{1, 1, 1, -7, 3}));
    CHECK_FALSE(is_isotropic(QuadForm{1, 1, 1, 1, 1}));
    CHECK(is_isotropic(QuadForm{1, 1, 1, 1, -1}));
}

TEST_CASE("two- and three-dimensional anisotropy is exact on small cases") {
    // Anisotropic binary and ternary forms have no small zeros, and for
    // |entries| <= 6 Legendre's bound keeps any zero inside the box.
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b)
            for (long c = 1; c <= 6; ++c) {
                if (a == 0 || b == 0) continue;
                QuadForm q{c, a, b};
                bool box = oracle::small_zero({c, a, b}, 7).has_value();
                INFO(q.str());
                CHECK(is_isotropic(q) == box);
            }
}

TEST_CASE("representations") {
    CHECK(represents(QuadForm{1, 1}, 5));
    CHECK_FALSE(represents(QuadForm{1, 1}, 3));
    CHECK_FALSE(represents(QuadForm{1, 5}, 2));
    CHECK(represents(QuadForm{1, 1, 1}, 6));
    CHECK_FALSE(represents(QuadForm{1, 1, 1}, 7));
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> dist(-20, 20);
    for (int k = 0; k < 60; ++k) {
        QuadForm q = random_form(rng, 2, 9);
        long t = 0;
        while (t == 0) t = dist(rng);
        bool rep = represents(q, t);
        if (oracle::small_representation(as_longs(q), t, 8)) CHECK(rep);
        auto x = representation_vector(q, t);
        CHECK(x.has_value() == rep);
        if (x) CHECK(q.evaluate(*x) == t);
    }
}

TEST_CASE("witt decomposition") {
    WittClass w = witt_decompose(QuadForm{1, 1, -2});
    CHECK(w.witt_index == 1);
    CHECK(w.kernel == QuadForm{2});
    CHECK(witt_decompose(hyperbolic(3)).kernel.dim() == 0);
    CHECK(witt_decompose(QuadForm{1, 1, 1, 1}).witt_index == 0);
    std::mt19937_64 rng(9);
    for (int k = 0; k < 40; ++k) {
        QuadForm q = random_form(rng, 6, 30);
        WittClass wq = witt_decompose(q);
        CHECK(2 * wq.witt_index + wq.kernel.dim() == 6);
        CHECK_FALSE(is_isotropic(wq.kernel));
        CHECK(isometric(q, direct_sum(wq.kernel, hyperbolic(wq.witt_index))));
    }
}

TEST_CASE("isometry and witt equivalence") {
    CHECK(isometric(QuadForm{1, 1}, QuadForm{2, 2}));
    CHECK(isometric(QuadForm{1, 1}, QuadForm{5, 5}));
    CHECK_FALSE(isometric(QuadForm{1, 5}, QuadForm{2, 10}));
    CHECK_FALSE(isometric(QuadForm{1, 1}, QuadForm{1, 1, 1}));
    CHECK(witt_equivalent(QuadForm{3}, QuadForm{3, 1, -1}));
    CHECK(witt_equivalent(QuadForm{1, 1, 1, 1}, QuadForm{2, 2, 5, 5}));
    CHECK_FALSE(witt_equivalent(QuadForm{1}, QuadForm{2}));
    CHECK_FALSE(witt_equivalent(QuadForm{1, 1, 1, 1}, QuadForm{1, 1, 7, 7}));
    CHECK(witt_class_equal(witt_decompose(QuadForm{1, -1, 3}), witt_decompose(QuadForm{3})));
}

TEST_CASE("hyperbolic over quadratic extensions") {
    CHECK(is_hyperbolic_over(QuadForm{1, -2}, sc(2)));
    CHECK_FALSE(is_hyperbolic_over(QuadForm{1, -2}, sc(3)));
    CHECK(is_hyperbolic_over(tensor(QuadForm{1, 3, -5}, pfister({sc(-7)})), sc(-7)));
    CHECK_THROWS_AS(is_hyperbolic_over(QuadForm{1, -2}, sc(1)), DomainError);
    QuadForm sum = direct_sum(pfister({sc(-1), sc(-1), sc(-1)}), pfister({sc(2), sc(17)}));
    CHECK_FALSE(is_hyperbolic_over(sum, sc(2)));

    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> dist(-40, 40);
    for (int k = 0; k < 30; ++k) {
        long d = 0;
        while (d == 0 || oracle::squarefree_core(d) == 1) d = dist(rng);
        QuadForm tau = random_form(rng, 3, 25);
        QuadForm q = tensor(tau, pfister({sc(d)}));
        REQUIRE(is_hyperbolic_over(q, sc(d)));
        QuadForm t2 = divide_by_binary(q, sc(d));
        CHECK(t2.dim() == 3);
        CHECK(isometric(tensor(t2, pfister({sc(d)})), q));
    }
}

TEST_CASE("arason invariant") {
    CHECK(e3(pfister({sc(-1), sc(-1), sc(-1)})).bit == 1);
    CHECK(e3(pfister({sc(2), sc(-1), sc(-1)})).bit == 0);
    CHECK(e3(hyperbolic(4)).bit == 0);
    CHECK_THROWS_AS(e3(pfister({sc(-1), sc(-1)})), DomainError);
    CHECK_THROWS_AS(e3(QuadForm{1, 1}), DomainError);
    QuadForm p = pfister({sc(-1), sc(-1), sc(-1)});
    CHECK(e3(direct_sum(p, p)).bit == 0);
    CHECK(e3(direct_sum(p, scale(pfister({sc(-3), sc(-5), sc(7)}), -1))).bit == 1);
}
