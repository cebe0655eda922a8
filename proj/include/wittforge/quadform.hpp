#pragma once

// Diagonal quadratic forms over Q.

#include "wittforge/cohomology.hpp"
#include "wittforge/qarith.hpp"

#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace wittforge {

/// <l_1, ..., l_n> = sum l_i x_i^2, all l_i nonzero.
class QuadForm {
public:
    QuadForm() = default;
    explicit QuadForm(std::vector<Rational> diag);
    QuadForm(std::initializer_list<long> diag);

    std::size_t dim() const { return diag_.size(); }
    const std::vector<Rational>& diag() const { return diag_; }
    const Rational& operator[](std::size_t i) const { return diag_[i]; }
    Rational evaluate(const std::vector<Rational>& x) const;
    std::string str() const;

    /// Same form with every entry replaced by its squarefree representative.
    QuadForm reduced() const;

    friend bool operator==(const QuadForm&, const QuadForm&) = default;

private:
    std::vector<Rational> diag_;
};

QuadForm direct_sum(const QuadForm& q1, const QuadForm& q2);
QuadForm scale(const QuadForm& q, const Rational& c);
/// All pairwise products, row-major in (q1 index, q2 index).
QuadForm tensor(const QuadForm& q1, const QuadForm& q2);
/// <<a_1,...,a_n>> = tensor of <1,-a_i>.
QuadForm pfister(const std::vector<SquareClass>& slots);
/// m copies of <1,-1>.
QuadForm hyperbolic(std::size_t m);

/// Unsigned determinant class.
SquareClass determinant(const QuadForm& q);
/// Signed discriminant (-1)^{n(n-1)/2} det.
SquareClass e1(const QuadForm& q);
/// Hasse invariant sum_{i<j} (l_i, l_j) as a Brauer class.
BrauerClass hasse_class(const QuadForm& q);
int hasse_at(const QuadForm& q, const Place& v);
/// Clifford invariant of a form in I^2 (even dim, trivial e1).
BrauerClass e2(const QuadForm& q);
int signature(const QuadForm& q);

/// Places where local invariants of q can be nontrivial: real, 2, and every
/// prime dividing an entry.
std::set<Place> bad_places(const QuadForm& q);

bool is_locally_isotropic(const QuadForm& q, const Place& v);
/// Hasse-Minkowski.
bool is_isotropic(const QuadForm& q);
bool represents(const QuadForm& q, const Rational& c);

/// Explicit nontrivial zero; nullopt when q is anisotropic. Throws
/// BoundExceeded if the bounded search fails on an isotropic form.
std::optional<std::vector<Rational>> isotropic_vector(const QuadForm& q,
                                                      long bound = default_search_bound());
/// x with q(x) = c; nullopt when c is not represented.
std::optional<std::vector<Rational>> representation_vector(const QuadForm& q, const Rational& c,
                                                           long bound = default_search_bound());
/// Diagonalized restriction of q to the orthogonal complement of `vectors`
/// (which must span a nondegenerate subspace).
QuadForm orthogonal_complement(const QuadForm& q, const std::vector<std::vector<Rational>>& vectors);
/// Complement of a hyperbolic plane containing the isotropic vector v.
QuadForm hyperbolic_complement(const QuadForm& q, const std::vector<Rational>& v);

struct WittClass {
    QuadForm kernel;           // anisotropic, reduced entries
    std::size_t witt_index = 0;
};

WittClass witt_decompose(const QuadForm& q, long bound = default_search_bound());
/// Classification over Q: dim, det, signature and local Hasse invariants.
bool isometric(const QuadForm& q1, const QuadForm& q2);
/// q1 - q2 hyperbolic.
bool witt_equivalent(const QuadForm& q1, const QuadForm& q2);
bool witt_class_equal(const WittClass& x, const WittClass& y);

/// Whether q becomes hyperbolic over Q(sqrt d). d must be nontrivial.
bool is_hyperbolic_over(const QuadForm& q, const SquareClass& d);
/// tau with tau (x) <1,-d> isometric to q.
QuadForm divide_by_binary(const QuadForm& q, const SquareClass& d, long bound = default_search_bound());

/// Arason invariant of a form in I^3: (signature / 8) mod 2.
H3Class e3(const QuadForm& q);

}  // namespace wittforge
