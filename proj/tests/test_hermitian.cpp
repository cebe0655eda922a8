#include <doctest.h>

#include "wittforge/errors.hpp"
#include "wittforge/hermitian.hpp"

#include <algorithm>
#include <random>

using namespace wittforge;

namespace {

using M2 = std::array<Rational, 4>;

M2 mat_mul(const M2& x, const M2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

long nonzero(std::mt19937_64& rng, long m) {
    std::uniform_int_distribution<long> dist(-m, m);
    long v = 0;
    while (v == 0) v = dist(rng);
    return v;
}

QuatElem random_pure(std::mt19937_64& rng, const QuaternionAlgebra& h, long m) {
    std::uniform_int_distribution<long> dist(-m, m);
    while (true) {
        QuatElem q = QuatElem::pure(h, dist(rng), dist(rng), dist(rng));
        if (nrd(q) != 0) return q;
    }
}

QuaternionAlgebra random_split(std::mt19937_64& rng) {
    long a = nonzero(rng, 20);
    std::uniform_int_distribution<long> dist(-6, 6);
    while (true) {
        long x = dist(rng), y = dist(rng);
        Rational b = Rational(x * x) - a * Rational(y * y);
        if (b != 0) return QuaternionAlgebra(Rational(a), b);
    }
}

}  // namespace

TEST_CASE("discriminant of the adjoint involution") {
    QuaternionAlgebra h(2, 5);
    QuatElem i(h, {0, 1, 0, 0}), j(h, {0, 0, 1, 0}), k(h, {0, 0, 0, 1});
    CHECK(disc_adjoint(SkewHermForm(h, {i})) == SquareClass::of(2));
    CHECK(disc_adjoint(SkewHermForm(h, {j})) == SquareClass::of(5));
    // (-1)^3 nrd(i) nrd(j) nrd(k) = -(-2)(-5)(10)
    CHECK(disc_adjoint(SkewHermForm(h, {i, j, k})) == SquareClass::of(-1));
    CHECK(disc_adjoint(SkewHermForm(h, {i, i})) == SquareClass::of(1));
    CHECK_THROWS_AS(SkewHermForm(h, {QuatElem::scalar(h, 1)}), DomainError);
    CHECK_THROWS_AS(SkewHermForm(h, {QuatElem(QuaternionAlgebra(-1, -1), {0, 1, 0, 0})}), DomainError);
}

TEST_CASE("rescaling and twisting") {
    QuaternionAlgebra h(-1, -3);
    QuatElem i(h, {0, 1, 0, 0});
    auto form = SkewHermForm::scalar_multiples(i, {1, 2, 5});
    REQUIRE(form.shape());
    CHECK(form.entries()[1] == scale(i, 2));
    auto r = rescale_entry(form, 2);
    CHECK(disc_adjoint(r) == disc_adjoint(form));
    CHECK(r.entries()[0] == form.entries()[0]);
    auto t = twist_last_entry(form, SquareClass::of(7));
    CHECK(t.entries()[2] == scale(i, 35));
    CHECK(disc_adjoint(t) == disc_adjoint(form) * SquareClass::of(49));
    SkewHermForm plain(h, {i, QuatElem(h, {0, 0, 1, 0})});
    CHECK_THROWS_AS(twist_last_entry(plain, SquareClass::of(7)), DomainError);
    CHECK_THROWS_AS(rescale_entry(form, 3), DomainError);
}

TEST_CASE("split embeddings") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 40; ++k) {
        QuaternionAlgebra h = random_split(rng);
        SplitEmbedding e = split_embedding(h);
        auto& mi = e.images[0];
        auto& mj = e.images[1];
        CHECK(mat_mul(mi, mi) == M2{h.a(), 0, 0, h.a()});
        CHECK(mat_mul(mj, mj) == M2{h.b(), 0, 0, h.b()});
        M2 ij = mat_mul(mi, mj), ji = mat_mul(mj, mi);
        for (int t = 0; t < 4; ++t) CHECK(ij[t] == -ji[t]);
        QuatElem q(h, {1, 2, -1, 3});
        CHECK(e.image(q)[0] * e.image(q)[3] - e.image(q)[1] * e.image(q)[2] == nrd(q));
    }
    CHECK_THROWS_AS(split_embedding(QuaternionAlgebra(-1, -1)), DomainError);
}

TEST_CASE("transport to quadratic forms agrees with the discriminant") {
    std::mt19937_64 rng(18);
    for (int k = 0; k < 40; ++k) {
        QuaternionAlgebra h = random_split(rng);
        std::vector<QuatElem> entries;
        std::uniform_int_distribution<int> nd(1, 3);
        for (int t = nd(rng); t > 0; --t) entries.push_back(random_pure(rng, h, 4));
        SkewHermForm f(h, entries);
        QuadForm q = split_transport(f);
        CHECK(q.dim() == 2 * f.rank());
        CHECK(e1(q) == disc_adjoint(f));
        // Isometric skew-hermitian forms transport to isometric quadratic forms.
        CHECK(isometric(q, split_transport(rescale_entry(f, 0))));
    }
}

TEST_CASE("discriminant is invariant under permutation") {
    QuaternionAlgebra h(3, -7);
    std::vector<QuatElem> e{QuatElem::pure(h, 1, 0, 0), QuatElem::pure(h, 0, 1, 1), QuatElem::pure(h, 2, 0, 1)};
    SquareClass d0 = disc_adjoint(SkewHermForm(h, e));
    std::sort(e.begin(), e.end(), [](const QuatElem& x, const QuatElem& y) { return x.str() < y.str(); });
    do {
        CHECK(disc_adjoint(SkewHermForm(h, e)) == d0);
    } while (std::next_permutation(e.begin(), e.end(),
                                   [](const QuatElem& x, const QuatElem& y) { return x.str() < y.str(); }));
}
