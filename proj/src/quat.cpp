#include "wittforge/quat.hpp"

#include "wittforge/errors.hpp"
#include "wittforge/linalg.hpp"

#include <algorithm>

namespace wittforge {

QuaternionAlgebra::QuaternionAlgebra(const Rational& a, const Rational& b) : a_(a), b_(b) {
    if (a_ == 0 || b_ == 0) throw DomainError("quaternion algebra slots must be nonzero");
    a_.canonicalize();
    b_.canonicalize();
}

BrauerClass QuaternionAlgebra::brauer() const {
    return brauer_from_symbol(SquareClass::of(a_), SquareClass::of(b_));
}

QuadForm QuaternionAlgebra::norm_form() const { return QuadForm({Rational(1), -a_, -b_, a_ * b_}); }

QuadForm QuaternionAlgebra::pure_norm_form() const { return QuadForm({-a_, -b_, a_ * b_}); }

std::string QuatElem::str() const {
    return c_[0].get_str() + " + " + c_[1].get_str() + "i + " + c_[2].get_str() + "j + " +
           c_[3].get_str() + "k";
}

namespace {

void same_algebra(const QuatElem& p, const QuatElem& q) {
    if (!(p.algebra() == q.algebra())) {
        throw DomainError("quaternion operands belong to different algebras " + p.algebra().str() +
                          " and " + q.algebra().str());
    }
}

}  // namespace

QuatElem mul(const QuatElem& p, const QuatElem& q) {
    same_algebra(p, q);
    const Rational& a = p.algebra().a();
    const Rational& b = p.algebra().b();
    const auto& [t1, x1, y1, z1] = p.coords();
    const auto& [t2, x2, y2, z2] = q.coords();
    // i^2 = a, j^2 = b, k^2 = -ab, jk = -b i, kj = b i, ik = a j, ki = -a j
    return QuatElem(p.algebra(), {t1 * t2 + a * x1 * x2 + b * y1 * y2 - a * b * z1 * z2,
                                  t1 * x2 + x1 * t2 - b * y1 * z2 + b * z1 * y2,
                                  t1 * y2 + y1 * t2 + a * x1 * z2 - a * z1 * x2,
                                  t1 * z2 + z1 * t2 + x1 * y2 - y1 * x2});
}

QuatElem add(const QuatElem& p, const QuatElem& q) {
    same_algebra(p, q);
    std::array<Rational, 4> c;
    for (int i = 0; i < 4; ++i) c[i] = p.coords()[i] + q.coords()[i];
    return QuatElem(p.algebra(), c);
}

QuatElem scale(const QuatElem& p, const Rational& s) {
    std::array<Rational, 4> c;
    for (int i = 0; i < 4; ++i) c[i] = p.coords()[i] * s;
    return QuatElem(p.algebra(), c);
}

QuatElem conj(const QuatElem& q) { return QuatElem(q.algebra(), {q.t(), -q.x(), -q.y(), -q.z()}); }

Rational nrd(const QuatElem& q) {
    const Rational& a = q.algebra().a();
    const Rational& b = q.algebra().b();
    return q.t() * q.t() - a * q.x() * q.x() - b * q.y() * q.y() + a * b * q.z() * q.z();
}

Rational trd(const QuatElem& q) { return 2 * q.t(); }

QuatElem inverse(const QuatElem& q) {
    Rational n = nrd(q);
    if (n == 0) throw DomainError("quaternion " + q.str() + " is not invertible");
    return scale(conj(q), 1 / n);
}

Rational pure_square(const QuatElem& q) {
    if (!q.is_pure()) throw DomainError("pure_square: element is not pure");
    return -nrd(q);
}

bool is_split(const QuaternionAlgebra& h) { return h.brauer().is_zero(); }

std::optional<QuatElem> pure_with_square(const QuaternionAlgebra& h, const SquareClass& d0, long bound) {
    // Squares of pure elements are the values of <a, b, -ab>.
    QuadForm squares({h.a(), h.b(), -h.a() * h.b()});
    const Rational target(d0.value());
    auto v = representation_vector(squares, target, bound);
    if (!v) return std::nullopt;
    QuatElem j = QuatElem::pure(h, (*v)[0], (*v)[1], (*v)[2]);
    if (pure_square(j) != target) throw ConsistencyError("pure_with_square: wrong square");
    return j;
}

QuatElem anticommutant(const QuaternionAlgebra& h, const QuatElem& j) {
    if (!j.is_pure()) throw DomainError("anticommutant: element must be pure");
    if (nrd(j) == 0) throw DomainError("anticommutant: element must be invertible");
    const Rational& a = h.a();
    const Rational& b = h.b();
    // Orthogonality for the polar form of nrd on pure quaternions.
    linalg::Mat row{{-a * j.x(), -b * j.y(), a * b * j.z()}};
    linalg::Mat basis = linalg::nullspace(row, 3);
    std::stable_sort(basis.begin(), basis.end(), [](const linalg::Vec& u, const linalg::Vec& v) {
        auto nnz = [](const linalg::Vec& w) { return std::count_if(w.begin(), w.end(), [](auto& x) { return x != 0; }); };
        return nnz(u) < nnz(v);
    });
    basis.push_back({basis[0][0] + basis[1][0], basis[0][1] + basis[1][1], basis[0][2] + basis[1][2]});
    for (auto& v : basis) {
        QuatElem u = QuatElem::pure(h, v[0], v[1], v[2]);
        if (nrd(u) == 0) continue;
        if (!(add(mul(u, j), mul(j, u)).is_zero())) throw ConsistencyError("anticommutant: check failed");
        return u;
    }
    throw ConsistencyError("anticommutant: complement of an anisotropic vector is degenerate");
}

CommonValueResult common_value_witness(const QuaternionAlgebra& h1, const QuaternionAlgebra& h2, long bound) {
    const QuadForm n1 = h1.norm_form();
    const QuadForm n0 = h2.pure_norm_form();
    CommonValueResult result;
    SquareClass value;
    bool found = for_each_squarefree(bound, [&](const SquareClass& t) {
        Rational tv(t.value());
        if (represents(n1, tv) && represents(n0, tv)) {
            value = t;
            return true;
        }
        return false;
    });
    if (!found) return result;
    const Rational tv(value.value());
    auto qv = representation_vector(n1, tv, bound);
    auto jv = representation_vector(n0, tv, bound);
    CommonValueWitness w{QuatElem(h1, {(*qv)[0], (*qv)[1], (*qv)[2], (*qv)[3]}),
                         QuatElem::pure(h2, (*jv)[0], (*jv)[1], (*jv)[2])};
    if (nrd(w.q) != nrd(w.j) || nrd(w.q) == 0) throw ConsistencyError("common_value_witness: unsound witness");
    result.outcome = SearchOutcome::witness;
    result.witness = w;
    return result;
}

namespace {

// Pure elements in a fixed order: i, j, k, i+j, i+k, j+k, i+j+k, i-j, ...
std::vector<std::array<int, 3>> pure_sequence() {
    std::vector<std::array<int, 3>> out{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1},
                                        {0, 1, 1}, {1, 1, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}};
    const int vals[] = {-2, -1, 0, 1, 2};
    for (int x : vals) {
        for (int y : vals) {
            for (int z : vals) {
                if (x != 0 || y != 0 || z != 0) out.push_back({x, y, z});
            }
        }
    }
    return out;
}

}  // namespace

std::array<QuatElem, 3> three_pure_product(const QuaternionAlgebra& h, const QuatElem& q) {
    if (nrd(q) == 0) throw DomainError("three_pure_product: element must be invertible");
    const QuatElem basis[3] = {QuatElem::pure(h, 1, 0, 0), QuatElem::pure(h, 0, 1, 0), QuatElem::pure(h, 0, 0, 1)};
    for (auto& c : pure_sequence()) {
        QuatElem q3 = QuatElem::pure(h, c[0], c[1], c[2]);
        if (nrd(q3) == 0) continue;
        QuatElem m = mul(q, inverse(q3));
        // y pure with m y pure: the scalar part of m y vanishes.
        linalg::Mat row{{mul(m, basis[0]).t(), mul(m, basis[1]).t(), mul(m, basis[2]).t()}};
        linalg::Mat ker = linalg::nullspace(row, 3);
        if (ker.size() >= 2) ker.push_back({ker[0][0] + ker[1][0], ker[0][1] + ker[1][1], ker[0][2] + ker[1][2]});
        for (auto& v : ker) {
            QuatElem y = QuatElem::pure(h, v[0], v[1], v[2]);
            if (nrd(y) == 0) continue;
            QuatElem q1 = mul(m, y);
            QuatElem q2 = inverse(y);
            if (!q1.is_pure() || nrd(q1) == 0) continue;
            if (!(mul(q1, mul(q2, q3)) == q)) throw ConsistencyError("three_pure_product: product mismatch");
            return {q1, q2, q3};
        }
    }
    throw BoundExceeded("three_pure_product: deterministic sequence exhausted");
}

SquareClass complement_slot(const QuaternionAlgebra& h, const SquareClass& a, long bound) {
    auto j = pure_with_square(h, a, bound);
    if (!j) throw DomainError("complement_slot: " + a.str() + " is not a pure square in " + h.str());
    QuatElem u = anticommutant(h, *j);
    return SquareClass::of(pure_square(u));
}

}  // namespace wittforge
