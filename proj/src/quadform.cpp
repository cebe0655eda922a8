#include "wittforge/quadform.hpp"

#include "wittforge/errors.hpp"

namespace wittforge {

namespace {

std::vector<SquareClass> classes(const QuadForm& q) {
    std::vector<SquareClass> out;
    out.reserve(q.dim());
    for (auto& x : q.diag()) out.push_back(SquareClass::of(x));
    return out;
}

}  // namespace

QuadForm::QuadForm(std::vector<Rational> diag) : diag_(std::move(diag)) {
    for (auto& x : diag_) {
        if (x == 0) throw DomainError("quadratic form entries must be nonzero");
        x.canonicalize();
    }
}

QuadForm::QuadForm(std::initializer_list<long> diag) {
    for (long x : diag) diag_.emplace_back(x);
    for (auto& x : diag_) {
        if (x == 0) throw DomainError("quadratic form entries must be nonzero");
    }
}

Rational QuadForm::evaluate(const std::vector<Rational>& x) const {
    if (x.size() != diag_.size()) throw DomainError("evaluate: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += diag_[i] * x[i] * x[i];
    return s;
}

std::string QuadForm::str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < diag_.size(); ++i) {
        if (i) s += ",";
        s += diag_[i].get_str();
    }
    return s + ">";
}

QuadForm QuadForm::reduced() const {
    std::vector<Rational> out;
    out.reserve(diag_.size());
    for (auto& x : diag_) out.emplace_back(SquareClass::of(x).value());
    return QuadForm(std::move(out));
}

QuadForm direct_sum(const QuadForm& q1, const QuadForm& q2) {
    auto d = q1.diag();
    d.insert(d.end(), q2.diag().begin(), q2.diag().end());
    return QuadForm(std::move(d));
}

QuadForm scale(const QuadForm& q, const Rational& c) {
    if (c == 0) throw DomainError("scale: scalar must be nonzero");
    auto d = q.diag();
    for (auto& x : d) x *= c;
    return QuadForm(std::move(d));
}

QuadForm tensor(const QuadForm& q1, const QuadForm& q2) {
    std::vector<Rational> d;
    d.reserve(q1.dim() * q2.dim());
    for (auto& x : q1.diag()) {
        for (auto& y : q2.diag()) d.push_back(x * y);
    }
    return QuadForm(std::move(d));
}

QuadForm pfister(const std::vector<SquareClass>& slots) {
    QuadForm out{1};
    for (auto& a : slots) out = tensor(out, QuadForm({Rational(1), Rational(-a.value())}));
    return out;
}

QuadForm hyperbolic(std::size_t m) {
    std::vector<Rational> d;
    for (std::size_t i = 0; i < m; ++i) {
        d.emplace_back(1);
        d.emplace_back(-1);
    }
    return QuadForm(std::move(d));
}

SquareClass determinant(const QuadForm& q) {
    SquareClass s;
    for (auto& c : classes(q)) s *= c;
    return s;
}

SquareClass e1(const QuadForm& q) {
    const std::size_t n = q.dim();
    SquareClass d = determinant(q);
    if ((n * (n - (n > 0 ? 1 : 0)) / 2) % 2 == 1) d *= SquareClass::of(-1);
    return d;
}

BrauerClass hasse_class(const QuadForm& q) {
    BrauerClass out;
    SquareClass prefix;
    for (auto& c : classes(q)) {
        out += brauer_from_symbol(prefix, c);
        prefix *= c;
    }
    return out;
}

int hasse_at(const QuadForm& q, const Place& v) {
    int s = 1;
    SquareClass prefix;
    for (auto& c : classes(q)) {
        s *= hilbert_symbol(prefix, c, v);
        prefix *= c;
    }
    return s;
}

BrauerClass e2(const QuadForm& q) {
    const std::size_t n = q.dim();
    if (n % 2 != 0) throw DomainError("e2: form must have even dimension");
    if (!e1(q).is_trivial()) throw DomainError("e2: form must have trivial discriminant (e1)");
    const SquareClass det = determinant(q);
    const SquareClass m1 = SquareClass::of(-1);
    BrauerClass c = hasse_class(q);
    switch (n % 8) {
        case 1:
        case 2: break;
        case 3:
        case 4: c += brauer_from_symbol(m1, m1 * det); break;
        case 5:
        case 6: c += brauer_from_symbol(m1, m1); break;
        default: c += brauer_from_symbol(m1, det); break;
    }
    return c;
}

int signature(const QuadForm& q) {
    int s = 0;
    for (auto& x : q.diag()) s += sgn(x) > 0 ? 1 : -1;
    return s;
}

std::set<Place> bad_places(const QuadForm& q) {
    std::set<Place> out{Place::real(), Place::prime(2)};
    for (auto& c : classes(q)) {
        for (auto& p : c.primes()) out.insert(Place::prime(p));
    }
    return out;
}

bool is_locally_isotropic(const QuadForm& q, const Place& v) {
    const std::size_t n = q.dim();
    if (n < 2) return false;
    if (v.is_real()) {
        int s = signature(q);
        return s != static_cast<int>(n) && s != -static_cast<int>(n);
    }
    if (n >= 5) return true;
    const SquareClass det = determinant(q);
    const SquareClass m1 = SquareClass::of(-1);
    if (n == 2) return is_local_square(m1 * det, v);
    const int eps = hasse_at(q, v);
    if (n == 3) return eps == hilbert_symbol(m1, m1 * det, v);
    // n == 4
    if (!is_local_square(det, v)) return true;
    return eps == hilbert_symbol(m1, m1, v);
}

bool is_isotropic(const QuadForm& q) {
    if (q.dim() < 2) return false;
    for (auto& v : bad_places(q)) {
        if (!is_locally_isotropic(q, v)) return false;
    }
    return true;
}

bool represents(const QuadForm& q, const Rational& c) {
    if (c == 0) throw DomainError("represents: value must be nonzero");
    return is_isotropic(direct_sum(q, QuadForm({Rational(-c)})));
}

bool isometric(const QuadForm& q1, const QuadForm& q2) {
    if (q1.dim() != q2.dim()) return false;
    if (q1.dim() == 0) return true;
    if (!(determinant(q1) == determinant(q2))) return false;
    if (signature(q1) != signature(q2)) return false;
    std::set<Place> places = bad_places(q1);
    for (auto& v : bad_places(q2)) places.insert(v);
    for (auto& v : places) {
        if (v.is_real()) continue;
        if (hasse_at(q1, v) != hasse_at(q2, v)) return false;
    }
    return true;
}

bool witt_equivalent(const QuadForm& q1, const QuadForm& q2) {
    QuadForm diff = direct_sum(q1, scale(q2, -1));
    if (diff.dim() % 2 != 0) return false;
    return isometric(diff, hyperbolic(diff.dim() / 2));
}

bool witt_class_equal(const WittClass& x, const WittClass& y) {
    return isometric(x.kernel, y.kernel);
}

bool is_hyperbolic_over(const QuadForm& q, const SquareClass& d) {
    if (d.is_trivial()) throw DomainError("is_hyperbolic_over: d must not be a square");
    if (q.dim() % 2 != 0) return false;
    const SquareClass disc = e1(q);
    if (!disc.is_trivial() && !(disc == d)) return false;
    if (d.sign() > 0 && signature(q) != 0) return false;
    // q and m<1,-1> share dimension and determinant over K; they are
    // isometric at a place w of K iff their Hasse invariants agree there.
    // Restriction kills a local invariant exactly when d is not a square
    // in Q_v.
    const BrauerClass diff = hasse_class(q) + hasse_class(hyperbolic(q.dim() / 2));
    for (auto& v : diff.ramification()) {
        if (is_local_square(d, v)) return false;
    }
    return true;
}

H3Class e3(const QuadForm& q) {
    if (q.dim() % 2 != 0) throw DomainError("e3: form must have even dimension");
    if (!e1(q).is_trivial()) throw DomainError("e3: form must have trivial discriminant (e1)");
    if (!e2(q).is_zero()) throw DomainError("e3: form must have trivial Clifford invariant (e2)");
    const int s = signature(q);
    if (s % 8 != 0) throw ConsistencyError("e3: signature of an I^3 form must be divisible by 8");
    return {((s / 8) % 2 + 2) % 2};
}

}  // namespace wittforge
