#pragma once

// Value groups of totally ramified quaternion and biquaternion algebras over
// F = F0((x1))((y1))((x2))((y2)).
//
// Coordinates are doubled: a vector v in Z^4 stands for v/2 in (1/2 Z)^4,
// so Gamma_F = Z^4 is stored as 2Z^4 and Gamma_D = (1/2 Z)^4 as Z^4. An
// exponent vector (n1, n2, n3, n4) of the monomial x1^n1 y1^n2 x2^n3 y2^n4
// is therefore also the doubled value of a square root of that monomial.

#include "wittforge/linalg.hpp"
#include "wittforge/qarith.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace wittforge {

using ValueVec = std::array<long, 4>;

/// Full-rank sublattice of Z^4 in Hermite normal form.
class ValueLattice {
public:
    /// Lattice spanned by the rows. Throws DomainError unless of rank 4.
    static ValueLattice span(const std::vector<ValueVec>& generators);
    /// k Z^4
    static ValueLattice scaled_identity(long k);

    const linalg::IMat& hnf() const { return hnf_; }
    bool contains(const ValueVec& v) const;
    ValueLattice scaled(long k) const;
    std::string str() const;

    friend ValueLattice lattice_sum(const ValueLattice& x, const ValueLattice& y);
    friend ValueLattice lattice_intersection(const ValueLattice& x, const ValueLattice& y);
    friend bool operator==(const ValueLattice& x, const ValueLattice& y) { return x.hnf_ == y.hnf_; }

private:
    static ValueLattice from_rows(linalg::IMat rows);
    linalg::IMat hnf_;
};

ValueLattice lattice_sum(const ValueLattice& x, const ValueLattice& y);
ValueLattice lattice_intersection(const ValueLattice& x, const ValueLattice& y);

/// Value group of the symbol algebra (m1, m2) for monomials with exponent
/// vectors `slots`: Gamma_F + 1/2 v(m1) Z + 1/2 v(m2) Z.
ValueLattice value_group_of_symbol(const std::array<ValueVec, 2>& slots);

/// The valuation order: lexicographic starting from the outermost variable
/// (last coordinate).
bool valuation_less(const ValueVec& x, const ValueVec& y);

/// Armature-gauge value of l0 + l1 i + l2 j + l3 k: the minimum of
/// v(l_t) + v(basis_t) over present coefficients. Basis values must lie in
/// distinct cosets modulo Gamma_F.
ValueVec armature_valuation(const std::array<std::optional<ValueVec>, 4>& coeff_values,
                            const std::array<ValueVec, 4>& basis_values);

/// A totally ramified symbol algebra, given by its slot exponent vectors.
using RamSymbol = std::array<ValueVec, 2>;

/// One splitting Gamma_D / Gamma_F = S (+) T, S for H' and T for H, each
/// recorded by two generators in the slot basis (bit t = slot t).
struct SplittingRow {
    std::array<unsigned, 2> s_gens;
    std::array<unsigned, 2> t_gens;
    bool intersection_trivial = false;   // 2 Gamma_H' cap 2 Gamma_H = 2 Gamma_F
    bool pure_norms_avoid_f = false;     // v(n_H(y)) not in 2 Gamma_F for pure y
    bool h_prime_norms_even = false;     // v(n_H'(x)) in 2 Gamma_H'
    bool obstructed() const { return intersection_trivial && pure_norms_avoid_f && h_prime_norms_even; }
};

struct ObstructionReport {
    bool obstructed = false;
    bool degenerate = false;  // a factor is split; no obstruction
    std::vector<SplittingRow> rows;
};

/// Whether no decomposition D = H' (x) H admits a common value of n_H' and
/// the pure part of n_H, i.e. M_3(D) carries no orthogonal involution with
/// trivial e1 and e2.
ObstructionReport obstruction_check(const std::array<RamSymbol, 2>& d);

/// All ordered pairs (S, T) of order-4 subgroups of (Z/2)^4 with
/// S (+) T = (Z/2)^4, as bitmask pairs (one generator pair each).
std::vector<std::pair<std::array<unsigned, 2>, std::array<unsigned, 2>>> rank2_splittings();

}  // namespace wittforge
