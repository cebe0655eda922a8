#pragma once

// 2-torsion of Br(Q) and H^3(Q, mu_2).

#include "wittforge/qarith.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace wittforge {

using Symbol = std::pair<SquareClass, SquareClass>;

/// A 2-torsion Brauer class of Q. The ramification set is canonical;
/// the symbol list only records how the class was built.
class BrauerClass {
public:
    BrauerClass() = default;

    static BrauerClass zero() { return {}; }
    /// Class with a prescribed ramification set. Throws DomainError if the
    /// set has odd cardinality.
    static BrauerClass from_ramification(std::set<Place> places);

    const std::set<Place>& ramification() const { return ram_; }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    bool is_zero() const { return ram_.empty(); }
    bool ramified_at(const Place& v) const { return ram_.count(v) != 0; }
    /// Local invariant in {-1,+1}.
    int local_invariant(const Place& v) const { return ramified_at(v) ? -1 : 1; }
    std::string str() const;

    friend BrauerClass operator+(const BrauerClass& x, const BrauerClass& y);
    BrauerClass& operator+=(const BrauerClass& y) { return *this = *this + y; }
    friend bool operator==(const BrauerClass& x, const BrauerClass& y) { return x.ram_ == y.ram_; }

private:
    friend BrauerClass brauer_from_symbol(const SquareClass&, const SquareClass&);
    std::set<Place> ram_;
    std::vector<Symbol> symbols_;
};

/// Class of the quaternion algebra (a,b).
BrauerClass brauer_from_symbol(const SquareClass& a, const SquareClass& b);
inline BrauerClass brauer_from_symbol(long a, long b) {
    return brauer_from_symbol(SquareClass::of(a), SquareClass::of(b));
}

/// A symbol (a,b) representing the class. Over Q every 2-torsion class is a
/// single quaternion class. Throws BoundExceeded if the search for b fails.
Symbol quaternion_symbol(const BrauerClass& x, long bound = default_search_bound());

/// Element of H^3(Q, mu_2) = Z/2, detected at the real place.
struct H3Class {
    int bit = 0;
    friend bool operator==(const H3Class&, const H3Class&) = default;
    friend H3Class operator+(H3Class x, H3Class y) { return {x.bit ^ y.bit}; }
};

/// Cup product (a) . [q].
H3Class cup_h3(const SquareClass& a, const BrauerClass& q);

}  // namespace wittforge
