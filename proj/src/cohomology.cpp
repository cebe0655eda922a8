#include "wittforge/cohomology.hpp"

#include "wittforge/errors.hpp"

#include <algorithm>
#include <iterator>

namespace wittforge {

BrauerClass BrauerClass::from_ramification(std::set<Place> places) {
    if (places.size() % 2 != 0) {
        throw DomainError("ramification set of a Brauer class has even cardinality");
    }
    BrauerClass out;
    out.ram_ = std::move(places);
    return out;
}

std::string BrauerClass::str() const {
    std::string s = "{";
    bool first = true;
    for (auto& v : ram_) {
        if (!first) s += ",";
        s += v.str();
        first = false;
    }
    return s + "}";
}

BrauerClass operator+(const BrauerClass& x, const BrauerClass& y) {
    BrauerClass out;
    std::set_symmetric_difference(x.ram_.begin(), x.ram_.end(), y.ram_.begin(), y.ram_.end(),
                                  std::inserter(out.ram_, out.ram_.end()));
    out.symbols_ = x.symbols_;
    out.symbols_.insert(out.symbols_.end(), y.symbols_.begin(), y.symbols_.end());
    return out;
}

BrauerClass brauer_from_symbol(const SquareClass& a, const SquareClass& b) {
    BrauerClass out;
    out.symbols_.emplace_back(a, b);
    if (a.is_trivial() || b.is_trivial()) return out;
    for (auto& v : candidate_places(a, b)) {
        if (hilbert_symbol(a, b, v) == -1) out.ram_.insert(v);
    }
    return out;
}

Symbol quaternion_symbol(const BrauerClass& x, long bound) {
    if (x.is_zero()) return {SquareClass(), SquareClass()};
    // a = -(product of ramified finite primes) if the real place ramifies,
    // else the product itself; then search b by height.
    Rational prod = 1;
    for (auto& v : x.ramification()) {
        if (!v.is_real()) prod *= v.p();
    }
    if (x.ramified_at(Place::real())) prod = -prod;
    std::vector<SquareClass> firsts{SquareClass::of(prod)};
    if (!firsts[0].is_trivial()) firsts.push_back(SquareClass::of(-prod));
    firsts.push_back(SquareClass::of(-1));
    for (auto& a : firsts) {
        if (a.is_trivial()) continue;
        Symbol found;
        bool ok = for_each_squarefree(bound, [&](const SquareClass& b) {
            if (brauer_from_symbol(a, b) == x) {
                found = {a, b};
                return true;
            }
            return false;
        });
        if (ok) return found;
    }
    throw BoundExceeded("quaternion_symbol: no symbol found for class " + x.str());
}

H3Class cup_h3(const SquareClass& a, const BrauerClass& q) {
    return {(a.sign() < 0 && q.ramified_at(Place::real())) ? 1 : 0};
}

}  // namespace wittforge
