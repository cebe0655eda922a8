#pragma once

// Degree-12 algebras with orthogonal involution, represented by product
// presentations (A0, s0) (x) (H, rho), and the invariants and decompositions
// computed from them.

#include "wittforge/cohomology.hpp"
#include "wittforge/hermitian.hpp"
#include "wittforge/quadform.hpp"
#include "wittforge/quat.hpp"

#include <array>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace wittforge {

/// Degree-6 algebra with orthogonal involution: Ad_phi for a 6-dimensional
/// form, or M_3(H') with the adjoint of a rank-3 skew-hermitian form.
class Deg6Invol {
public:
    struct Split6 {
        QuadForm form;
    };
    struct M3H {
        SkewHermForm h;
    };

    /// Throws DomainError unless dim 6 / rank 3.
    static Deg6Invol split(QuadForm form);
    static Deg6Invol m3h(SkewHermForm h);

    bool is_split_presented() const { return std::holds_alternative<Split6>(v_); }
    const QuadForm& form() const { return std::get<Split6>(v_).form; }
    const SkewHermForm& herm() const { return std::get<M3H>(v_).h; }

    /// e1 of the involution.
    SquareClass d0() const;
    /// [A0]
    BrauerClass brauer() const;
    /// A quaternion algebra H' Brauer-equivalent to A0 ((1,1) when split).
    QuaternionAlgebra quaternion() const;

private:
    explicit Deg6Invol(std::variant<Split6, M3H> v) : v_(std::move(v)) {}
    std::variant<Split6, M3H> v_;
};

/// (H, rho) with rho = Int(i) o conj for a pure invertible i.
struct QuatInvol {
    QuaternionAlgebra h;
    QuatElem i;

    /// Throws DomainError unless i is pure, invertible and in h.
    QuatInvol(QuaternionAlgebra h, QuatElem i);
    /// e1(rho) = square class of i^2.
    SquareClass d() const { return SquareClass::of(pure_square(i)); }
};

struct ProductPresentation {
    Deg6Invol a0;
    QuatInvol hrho;

    SquareClass d() const { return hrho.d(); }
    SquareClass d0() const { return a0.d0(); }
    BrauerClass brauer_h() const { return hrho.h.brauer(); }
    /// [A] = [A0] + [H]
    BrauerClass brauer_a() const { return a0.brauer() + brauer_h(); }
};

/// Tao's two Clifford components ([H] + (d,d0), [A0] + (d,d0)).
std::pair<BrauerClass, BrauerClass> tao_e2_coset(const ProductPresentation& p);

/// e1 = 0 always holds for a product; e2 = 0 iff one Clifford component
/// vanishes, i.e. (d,d0) is [H] or [A0].
bool has_trivial_invariants(const ProductPresentation& p);

/// For (d,d0) = [A0] = 0 with A0 split-presented: twists the last diagonal
/// slot by c = u^2 (u anticommuting with i) so that (e1(phi'), d) = [H].
ProductPresentation repair_decomposition(const ProductPresentation& p);

/// psi = (<a1><<b1>> _|_ <a2><<b2>> _|_ <a3><<b3>>) (x) <<d>>, b1 b2 b3 = 1.
struct PfisterDecomposition {
    SquareClass d;
    std::array<Rational, 3> alphas;
    std::array<SquareClass, 3> betas;

    QuadForm six_dim() const;
    QuadForm reconstruction() const;
};

/// Candidate square classes for d: +-prod S over subsets S of the primes
/// dividing 2 and the numerators and denominators of psi, excluding 1.
std::vector<SquareClass> decomposition_candidates(const QuadForm& psi);

PfisterDecomposition decompose_split12(const QuadForm& psi, long bound = default_search_bound());

struct AdditiveDecomposition {
    std::array<SquareClass, 3> a;  // squares of the diagonal entries
    std::array<SquareClass, 3> b;  // complementary slots in H'
    std::array<BrauerClass, 3> h_blocks;  // (a_i d0, d)
    std::array<BrauerClass, 3> q_blocks;  // (a_i, b_i d)
    BrauerClass q;  // [A]

    /// {0, [Q], [Q1], [H1], [Q2], [H2], [Q3], [H3]}
    std::vector<BrauerClass> group() const;
};

/// Requires a0 presented as M_3(H') with <q1, q2, q3>.
AdditiveDecomposition additive_decomposition(const ProductPresentation& p, long bound = default_search_bound());

/// Brings p into the H = (d, d0) form required by the f3 formulas,
/// repairing a split-presented A0 if needed. Throws DomainError when the
/// invariants are not trivial.
ProductPresentation f3_normal_form(const ProductPresentation& p);

/// Virtual form n_Q - n_H - <d> n_H' (in I^3) for a normalized presentation.
QuadForm f3_virtual_form(const ProductPresentation& p, long bound = default_search_bound());

/// f3 = e3(n_Q - n_H - <d> n_H').
H3Class f3_via_norms(const ProductPresentation& p, long bound = default_search_bound());

struct F3SymbolRoute {
    H3Class value;
    SquareClass c;  // Q(sqrt c) splits H, H', Q
    SquareClass e;  // H = (c, e)
};

/// f3 = (de) . [Q], checked against (de) . [H'].
F3SymbolRoute f3_via_symbol(const ProductPresentation& p, long bound = default_search_bound());

struct ExistenceResult {
    SearchOutcome outcome = SearchOutcome::unknown;
    std::optional<ProductPresentation> presentation;
    std::optional<CommonValueWitness> witness;
};

/// Orthogonal involution with trivial invariants on M_3(H1 (x) H2), via a
/// common value of n_{H1} and the pure norm form of H2.
ExistenceResult exists_involution(const QuaternionAlgebra& h1, const QuaternionAlgebra& h2,
                                  long bound = default_search_bound());

/// For split-presented A0 and split H: phi (x) (binary form of rho).
QuadForm split_tensor_form(const ProductPresentation& p, long bound = default_search_bound());

}  // namespace wittforge
