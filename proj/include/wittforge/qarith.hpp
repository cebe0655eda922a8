#pragma once

// Exact arithmetic over Q: factorization, square classes, residue and
// Hilbert symbols, places.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wittforge {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr unsigned long kDefaultFactorBound = 1'000'000;

/// Height bound for the bounded searches (isotropic vectors, witness and
/// candidate searches). Defaults to 10^4; WITTFORGE_SEARCH_BOUND overrides.
long default_search_bound();

/// Prime factorization of |n| (n != 0), sorted by prime: trial division
/// over small primes (up to min(bound, 4096)), then Pollard rho on the
/// cofactor. Primality of large factors is a strong probable-prime test.
/// Throws BoundExceeded when rho exhausts its step budget.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n,
                                                 unsigned long bound = kDefaultFactorBound);

bool is_prime(const Integer& p);
bool is_squarefree(const Integer& n);

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

/// Element of Q^x / Q^x2, stored as its signed squarefree representative.
class SquareClass {
public:
    SquareClass() : value_(1) {}

    /// Square class of a nonzero rational. Throws DomainError on zero.
    static SquareClass of(const Rational& r);
    static SquareClass of(long r) { return of(Rational(r)); }

    const Integer& value() const { return value_; }
    bool is_trivial() const { return value_ == 1; }
    int sign() const { return sgn(value_); }
    std::string str() const { return value_.get_str(); }

    /// Odd-exponent primes of the representative, ascending.
    std::vector<Integer> primes() const;

    friend SquareClass operator*(const SquareClass& x, const SquareClass& y);
    SquareClass& operator*=(const SquareClass& y) { return *this = *this * y; }

    friend bool operator==(const SquareClass& x, const SquareClass& y) {
        return x.value_ == y.value_;
    }
    friend bool operator<(const SquareClass& x, const SquareClass& y) {
        return x.value_ < y.value_;
    }

private:
    explicit SquareClass(Integer v) : value_(std::move(v)) {}
    Integer value_;
};

/// The unique squarefree s with r = s * (rational square).
SquareClass squarefree_part(const Rational& r);

/// A place of Q: the real place, or a finite prime.
class Place {
public:
    static Place real() { return Place(Integer(0)); }
    /// Throws DomainError if p is not a prime.
    static Place prime(const Integer& p);
    static Place prime(long p) { return prime(Integer(p)); }

    bool is_real() const { return p_ == 0; }
    const Integer& p() const { return p_; }
    std::string str() const { return is_real() ? std::string("real") : p_.get_str(); }

    /// Inverse of str(): "real" / "inf" or a prime.
    static Place parse(const std::string& text);

    friend bool operator==(const Place& x, const Place& y) { return x.p_ == y.p_; }
    friend bool operator<(const Place& x, const Place& y) { return x.p_ < y.p_; }

private:
    explicit Place(Integer p) : p_(std::move(p)) {}
    Integer p_;  // 0 encodes the real place
};

/// Legendre symbol (a/p) for an odd prime p.
int legendre(const Integer& a, const Integer& p);

/// Hilbert symbol (a,b)_v in {-1,+1}.
int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v);
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// Whether the square class is a square in the completion Q_v.
bool is_local_square(const SquareClass& s, const Place& v);

/// Places where (a,b)_v can be -1: the real place, 2, and primes of a, b.
std::vector<Place> candidate_places(const SquareClass& a, const SquareClass& b);

/// Visits squarefree integers in the order 1, -1, 2, -2, 3, -3, 5, ...
/// until the callback returns true or `max_abs` is passed. Returns whether
/// the callback accepted a value.
template <class F>
bool for_each_squarefree(long max_abs, F&& visit) {
    for (long n = 1; n <= max_abs; ++n) {
        if (!is_squarefree(Integer(n))) continue;
        if (visit(SquareClass::of(n))) return true;
        if (visit(SquareClass::of(-n))) return true;
    }
    return false;
}

}  // namespace wittforge
