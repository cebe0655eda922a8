#include <doctest.h>

#include "wittforge/errors.hpp"
#include "wittforge/ramlattice.hpp"

#include <random>
#include <set>

using namespace wittforge;

namespace {

const RamSymbol kH1{ValueVec{1, 0, 0, 0}, ValueVec{0, 1, 0, 0}};
const RamSymbol kH2{ValueVec{0, 0, 1, 0}, ValueVec{0, 0, 0, 1}};

Integer index_of(const ValueLattice& l) {
    Integer det = 1;
    for (std::size_t i = 0; i < 4; ++i) det *= l.hnf()[i][i];
    return abs(det);
}

ValueLattice random_lattice(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-3, 3);
    std::vector<ValueVec> gens;
    for (int i = 0; i < 4; ++i) {
        ValueVec e{0, 0, 0, 0};
        e[i] = 2;
        gens.push_back(e);
    }
    for (int k = 0; k < 2; ++k) gens.push_back({dist(rng), dist(rng), dist(rng), dist(rng)});
    return ValueLattice::span(gens);
}

std::set<unsigned> subgroup(unsigned a, unsigned b) { return {0u, a, b, a ^ b}; }

}  // namespace

TEST_CASE("value groups of symbols") {
    ValueLattice g = value_group_of_symbol(kH1);
    linalg::IMat expect{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}};
    CHECK(g.hnf() == expect);
    CHECK(value_group_of_symbol({ValueVec{0, 0, 0, 0}, ValueVec{0, 0, 0, 0}}) == ValueLattice::scaled_identity(2));
    ValueLattice m = value_group_of_symbol({ValueVec{1, 0, 1, 0}, ValueVec{0, 1, 0, 0}});
    CHECK(m.contains({1, 0, 1, 0}));
    CHECK(m.contains({0, 1, 0, 0}));
    CHECK_FALSE(m.contains({1, 0, 0, 0}));
    CHECK(index_of(m) == 4);
    CHECK_THROWS_AS(ValueLattice::span({ValueVec{1, 0, 0, 0}}), DomainError);
}

TEST_CASE("hnf is canonical") {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 50; ++k) {
        ValueLattice l = random_lattice(rng);
        std::vector<ValueVec> rows;
        for (auto& r : l.hnf()) rows.push_back({r[0].get_si(), r[1].get_si(), r[2].get_si(), r[3].get_si()});
        CHECK(ValueLattice::span(rows) == l);
        // Same lattice from shuffled and recombined generators.
        std::vector<ValueVec> mixed = rows;
        for (int t = 0; t < 4; ++t) mixed[0][t] += 3 * rows[1][t] - rows[2][t];
        std::swap(mixed[0], mixed[3]);
        CHECK(ValueLattice::span(mixed) == l);
    }
}

TEST_CASE("sum and intersection against membership in a box") {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 25; ++k) {
        ValueLattice x = random_lattice(rng), y = random_lattice(rng);
        ValueLattice cap = lattice_intersection(x, y), sum = lattice_sum(x, y);
        CHECK(cap == lattice_intersection(y, x));
        CHECK(sum == lattice_sum(y, x));
        CHECK(index_of(cap) * index_of(sum) == index_of(x) * index_of(y));
        for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b)
                for (long c = -2; c <= 2; ++c)
                    for (long d = -2; d <= 2; ++d) {
                        ValueVec v{a, b, c, d};
                        CHECK(cap.contains(v) == (x.contains(v) && y.contains(v)));
                        if (x.contains(v) || y.contains(v)) CHECK(sum.contains(v));
                    }
        // Monotone: x cap y cap z is inside x cap y.
        ValueLattice z = random_lattice(rng);
        ValueLattice xyz = lattice_intersection(cap, z);
        CHECK(lattice_sum(xyz, cap) == cap);
        CHECK(lattice_intersection(cap, ValueLattice::scaled_identity(2)) == ValueLattice::scaled_identity(2));
    }
}

TEST_CASE("valuation order and armature values") {
    CHECK(valuation_less({5, 0, 0, 0}, {0, 1, 0, 0}));
    CHECK(valuation_less({0, 0, 0, -1}, {9, 9, 9, 0}));
    CHECK_FALSE(valuation_less({1, 1, 1, 1}, {1, 1, 1, 1}));
    std::array<ValueVec, 4> basis{ValueVec{0, 0, 0, 0}, ValueVec{1, 0, 0, 0}, ValueVec{0, 1, 0, 0},
                                  ValueVec{1, 1, 0, 0}};
    ValueVec zero{0, 0, 0, 0};
    ValueVec pure = armature_valuation({std::nullopt, zero, zero, zero}, basis);
    CHECK(pure == ValueVec{1, 0, 0, 0});
    CHECK_FALSE(ValueLattice::scaled_identity(2).contains(pure));
    CHECK(armature_valuation({std::nullopt, std::nullopt, ValueVec{2, 0, 0, 0}, std::nullopt}, basis) ==
          ValueVec{2, 1, 0, 0});
    CHECK(armature_valuation({zero, zero, std::nullopt, std::nullopt}, basis) == zero);
    CHECK(armature_valuation({ValueVec{2, 0, 0, 0}, ValueVec{0, 0, 0, 0}, std::nullopt, std::nullopt}, basis) ==
          ValueVec{1, 0, 0, 0});
    std::array<ValueVec, 4> bad = basis;
    bad[3] = {1, 0, 0, 0};
    CHECK_THROWS_AS(armature_valuation({zero, zero, zero, zero}, bad), DomainError);
    CHECK_THROWS_AS(armature_valuation({ValueVec{1, 0, 0, 0}, std::nullopt, std::nullopt, std::nullopt}, basis),
                    DomainError);
    CHECK_THROWS_AS(armature_valuation({std::nullopt, std::nullopt, std::nullopt, std::nullopt}, basis), DomainError);
}

TEST_CASE("rank-2 splittings match a brute-force count") {
    std::set<std::set<unsigned>> groups;
    for (unsigned a = 1; a < 16; ++a)
        for (unsigned b = 1; b < 16; ++b)
            if (a != b) groups.insert(subgroup(a, b));
    REQUIRE(groups.size() == 35);
    std::set<std::pair<std::set<unsigned>, std::set<unsigned>>> brute;
    for (auto& s : groups)
        for (auto& t : groups) {
            std::size_t common = 0;
            for (unsigned x : s) common += t.count(x);
            if (common == 1) brute.insert({s, t});
        }
    CHECK(brute.size() == 560);

    auto splits = rank2_splittings();
    CHECK(splits.size() == 560);
    std::set<std::pair<std::set<unsigned>, std::set<unsigned>>> seen;
    for (auto& [s, t] : splits) seen.insert({subgroup(s[0], s[1]), subgroup(t[0], t[1])});
    CHECK(seen == brute);
}

TEST_CASE("obstruction for a biquaternion algebra") {
    ObstructionReport r = obstruction_check({kH1, kH2});
    CHECK(r.obstructed);
    CHECK_FALSE(r.degenerate);
    CHECK(r.rows.size() == 560);
    for (auto& row : r.rows) {
        CHECK(row.intersection_trivial);
        CHECK(row.pure_norms_avoid_f);
        CHECK(row.h_prime_norms_even);
    }
    // Mixed slots still give a totally ramified D.
    ObstructionReport m = obstruction_check({RamSymbol{ValueVec{1, 0, 1, 0}, ValueVec{0, 1, 0, 0}},
                                             RamSymbol{ValueVec{0, 0, 1, 0}, ValueVec{1, 1, 0, 1}}});
    CHECK(m.obstructed);
    CHECK(m.rows.size() == 560);

    ObstructionReport split = obstruction_check({kH1, RamSymbol{ValueVec{0, 0, 1, 0}, ValueVec{0, 0, 0, 2}}});
    CHECK(split.degenerate);
    CHECK_FALSE(split.obstructed);
    CHECK_THROWS_AS(obstruction_check({kH1, RamSymbol{ValueVec{1, 0, 0, 0}, ValueVec{0, 0, 0, 1}}}), DomainError);
}

TEST_CASE("intersection for single splittings") {
    ValueLattice gf2 = ValueLattice::scaled_identity(4);
    ValueLattice a = value_group_of_symbol(kH1).scaled(2), b = value_group_of_symbol(kH2).scaled(2);
    CHECK(lattice_intersection(a, b) == gf2);
    CHECK(lattice_sum(a, b) == ValueLattice::scaled_identity(2));
    // Non-complementary pair: S = T shares everything.
    CHECK_FALSE(lattice_intersection(a, a) == gf2);
}
