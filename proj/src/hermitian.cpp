#include "wittforge/hermitian.hpp"

#include "wittforge/errors.hpp"
#include "wittforge/linalg.hpp"

namespace wittforge {

SkewHermForm::SkewHermForm(QuaternionAlgebra algebra, std::vector<QuatElem> entries)
    : alg_(std::move(algebra)), entries_(std::move(entries)) {
    for (auto& q : entries_) {
        if (!(q.algebra() == alg_)) throw DomainError("skew-hermitian entry lies in another algebra");
        if (!q.is_pure()) throw DomainError("skew-hermitian entries must be pure quaternions");
        if (nrd(q) == 0) throw DomainError("skew-hermitian entries must be invertible");
    }
}

SkewHermForm SkewHermForm::scalar_multiples(const QuatElem& q, const std::vector<Rational>& multipliers) {
    std::vector<QuatElem> entries;
    for (auto& l : multipliers) {
        if (l == 0) throw DomainError("multipliers must be nonzero");
        entries.push_back(scale(q, l));
    }
    SkewHermForm h(q.algebra(), std::move(entries));
    h.shape_ = Shape{q, multipliers};
    return h;
}

SquareClass disc_adjoint(const SkewHermForm& h) {
    Rational p = h.rank() % 2 == 0 ? 1 : -1;
    for (auto& q : h.entries()) p *= nrd(q);
    return SquareClass::of(p);
}

SkewHermForm rescale_entry(const SkewHermForm& h, std::size_t index) {
    if (index >= h.rank()) throw DomainError("rescale_entry: index out of range");
    const QuatElem& q = h.entries()[index];
    QuatElem u = anticommutant(h.algebra(), q);
    const Rational c(SquareClass::of(pure_square(u)).value());
    std::vector<QuatElem> entries = h.entries();
    entries[index] = scale(q, c);
    return SkewHermForm(h.algebra(), std::move(entries));
}

SkewHermForm twist_last_entry(const SkewHermForm& h, const SquareClass& c) {
    if (!h.shape()) throw DomainError("twist_last_entry: form carries no scalar-multiple shape");
    if (h.rank() == 0) throw DomainError("twist_last_entry: empty form");
    auto mult = h.shape()->multipliers;
    mult.back() *= Rational(c.value());
    return SkewHermForm::scalar_multiples(h.shape()->common, mult);
}

namespace {

using M2 = std::array<Rational, 4>;

M2 mat_mul(const M2& x, const M2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

}  // namespace

std::array<Rational, 4> SplitEmbedding::image(const QuatElem& q) const {
    const M2& i = images[0];
    const M2& j = images[1];
    M2 k = mat_mul(i, j);
    return {q.t() + q.x() * i[0] + q.y() * j[0] + q.z() * k[0], q.x() * i[1] + q.y() * j[1] + q.z() * k[1],
            q.x() * i[2] + q.y() * j[2] + q.z() * k[2], q.t() + q.x() * i[3] + q.y() * j[3] + q.z() * k[3]};
}

SplitEmbedding split_embedding(const QuaternionAlgebra& h, long bound) {
    if (!is_split(h)) throw DomainError("split_embedding: algebra " + h.str() + " is not split");
    const Rational& a = h.a();
    const Rational& b = h.b();
    SplitEmbedding e;
    // X^2 - a Y^2 = b from a zero of the ternary subform <1, -a, -b> of the norm form.
    if (auto s = representation_vector(QuadForm({Rational(1)}), a, bound)) {
        const Rational& r = (*s)[0];
        e.images = {M2{r, 0, 0, -r}, M2{0, b, 1, 0}};
    } else {
        auto xy = representation_vector(QuadForm({Rational(1), -a}), b, bound);
        if (!xy) throw ConsistencyError("split_embedding: b is not a norm from Q(sqrt a)");
        const Rational& x = (*xy)[0];
        const Rational& y = (*xy)[1];
        e.images = {M2{0, a, 1, 0}, M2{x, a * y, -y, -x}};
    }
    const M2 i2 = mat_mul(e.images[0], e.images[0]);
    const M2 j2 = mat_mul(e.images[1], e.images[1]);
    const M2 ij = mat_mul(e.images[0], e.images[1]);
    const M2 ji = mat_mul(e.images[1], e.images[0]);
    bool ok = i2 == M2{a, 0, 0, a} && j2 == M2{b, 0, 0, b};
    for (int t = 0; t < 4; ++t) ok = ok && ij[t] == -ji[t];
    if (!ok) throw ConsistencyError("split_embedding: relations fail");
    return e;
}

QuadForm split_transport(const SkewHermForm& h, long bound) {
    SplitEmbedding e = split_embedding(h.algebra(), bound);
    const std::size_t n = h.rank();
    linalg::Mat g(2 * n, linalg::Vec(2 * n, Rational(0)));
    for (std::size_t r = 0; r < n; ++r) {
        M2 m = e.image(h.entries()[r]);
        // [[0,1],[-1,0]] * m is symmetric for trace-zero m.
        M2 s{m[2], m[3], -m[0], -m[1]};
        if (s[1] != s[2]) throw ConsistencyError("split_transport: block is not symmetric");
        g[2 * r][2 * r] = s[0];
        g[2 * r][2 * r + 1] = s[1];
        g[2 * r + 1][2 * r] = s[2];
        g[2 * r + 1][2 * r + 1] = s[3];
    }
    return QuadForm(linalg::diagonalize_symmetric(g));
}

}  // namespace wittforge
