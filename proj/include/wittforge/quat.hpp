#pragma once

// Quaternion algebras (a,b) over Q: element arithmetic, norm forms and the
// constructive searches behind the existence criterion.

#include "wittforge/cohomology.hpp"
#include "wittforge/quadform.hpp"

#include <array>
#include <optional>
#include <string>
#include <tuple>

namespace wittforge {

/// Basis 1, i, j, k with i^2 = a, j^2 = b, k = ij = -ji.
class QuaternionAlgebra {
public:
    QuaternionAlgebra() : a_(1), b_(1) {}
    /// Throws DomainError if a or b is zero.
    QuaternionAlgebra(const Rational& a, const Rational& b);
    QuaternionAlgebra(long a, long b) : QuaternionAlgebra(Rational(a), Rational(b)) {}

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    BrauerClass brauer() const;
    /// <1, -a, -b, ab>
    QuadForm norm_form() const;
    /// <-a, -b, ab>
    QuadForm pure_norm_form() const;
    std::string str() const { return "(" + a_.get_str() + "," + b_.get_str() + ")"; }

    friend bool operator==(const QuaternionAlgebra&, const QuaternionAlgebra&) = default;

private:
    Rational a_, b_;
};

class QuatElem {
public:
    QuatElem() = default;
    QuatElem(QuaternionAlgebra alg, std::array<Rational, 4> coords)
        : alg_(std::move(alg)), c_(std::move(coords)) {}

    static QuatElem scalar(const QuaternionAlgebra& alg, const Rational& t) { return {alg, {t, 0, 0, 0}}; }
    static QuatElem pure(const QuaternionAlgebra& alg, const Rational& x, const Rational& y,
                         const Rational& z) {
        return {alg, {0, x, y, z}};
    }

    const QuaternionAlgebra& algebra() const { return alg_; }
    const std::array<Rational, 4>& coords() const { return c_; }
    const Rational& t() const { return c_[0]; }
    const Rational& x() const { return c_[1]; }
    const Rational& y() const { return c_[2]; }
    const Rational& z() const { return c_[3]; }
    bool is_pure() const { return c_[0] == 0; }
    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    std::string str() const;

    friend bool operator==(const QuatElem&, const QuatElem&) = default;

private:
    QuaternionAlgebra alg_;
    std::array<Rational, 4> c_{0, 0, 0, 0};
};

QuatElem mul(const QuatElem& p, const QuatElem& q);
QuatElem add(const QuatElem& p, const QuatElem& q);
QuatElem scale(const QuatElem& p, const Rational& c);
QuatElem conj(const QuatElem& q);
/// t^2 - a x^2 - b y^2 + ab z^2
Rational nrd(const QuatElem& q);
Rational trd(const QuatElem& q);
/// Throws DomainError if nrd(q) = 0.
QuatElem inverse(const QuatElem& q);
/// Scalar value of the square of a pure element.
Rational pure_square(const QuatElem& q);

bool is_split(const QuaternionAlgebra& h);

/// Pure j with j^2 = d0 exactly; nullopt when none exists. Throws
/// BoundExceeded when the search fails.
std::optional<QuatElem> pure_with_square(const QuaternionAlgebra& h, const SquareClass& d0,
                                         long bound = default_search_bound());

/// Pure invertible u with uj = -ju.
QuatElem anticommutant(const QuaternionAlgebra& h, const QuatElem& j);

struct CommonValueWitness {
    QuatElem q;  // in h1
    QuatElem j;  // pure, in h2
};

enum class SearchOutcome { witness, provably_none, unknown };

struct CommonValueResult {
    SearchOutcome outcome = SearchOutcome::unknown;
    std::optional<CommonValueWitness> witness;
};

/// q in h1 and pure j in h2 with nrd(q) = nrd(j) != 0.
CommonValueResult common_value_witness(const QuaternionAlgebra& h1, const QuaternionAlgebra& h2,
                                       long bound = default_search_bound());

/// q = q1 q2 q3 with each factor pure and invertible.
std::array<QuatElem, 3> three_pure_product(const QuaternionAlgebra& h, const QuatElem& q);

/// b' with (a, b') Brauer-equivalent to h, for a a pure square in h.
SquareClass complement_slot(const QuaternionAlgebra& h, const SquareClass& a,
                            long bound = default_search_bound());

}  // namespace wittforge
