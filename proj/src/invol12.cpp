#include "wittforge/invol12.hpp"

#include "wittforge/errors.hpp"

#include <algorithm>
#include <set>

namespace wittforge {

Deg6Invol Deg6Invol::split(QuadForm form) {
    if (form.dim() != 6) throw DomainError("split degree-6 presentation needs a 6-dimensional form");
    return Deg6Invol(Split6{std::move(form)});
}

Deg6Invol Deg6Invol::m3h(SkewHermForm h) {
    if (h.rank() != 3) throw DomainError("M_3(H') presentation needs a rank-3 skew-hermitian form");
    return Deg6Invol(M3H{std::move(h)});
}

SquareClass Deg6Invol::d0() const {
    return is_split_presented() ? e1(form()) : disc_adjoint(herm());
}

BrauerClass Deg6Invol::brauer() const {
    return is_split_presented() ? BrauerClass::zero() : herm().algebra().brauer();
}

QuaternionAlgebra Deg6Invol::quaternion() const {
    return is_split_presented() ? QuaternionAlgebra(1, 1) : herm().algebra();
}

QuatInvol::QuatInvol(QuaternionAlgebra h_, QuatElem i_) : h(std::move(h_)), i(std::move(i_)) {
    if (!(i.algebra() == h)) throw DomainError("involution element lies in another algebra");
    if (!i.is_pure() || nrd(i) == 0) throw DomainError("involution element must be pure and invertible");
}

std::pair<BrauerClass, BrauerClass> tao_e2_coset(const ProductPresentation& p) {
    const BrauerClass dd0 = brauer_from_symbol(p.d(), p.d0());
    return {p.brauer_h() + dd0, p.a0.brauer() + dd0};
}

bool has_trivial_invariants(const ProductPresentation& p) {
    auto [x, y] = tao_e2_coset(p);
    return x.is_zero() || y.is_zero();
}

ProductPresentation repair_decomposition(const ProductPresentation& p) {
    if (!p.a0.is_split_presented()) {
        throw DomainError("repair_decomposition: A0 must be presented as Ad_phi");
    }
    if (!brauer_from_symbol(p.d(), p.d0()).is_zero()) {
        throw DomainError("repair_decomposition: requires (d, d0) = [A0] = 0");
    }
    const QuatElem& q = p.hrho.i;
    const QuatElem u = anticommutant(p.hrho.h, q);
    const SquareClass c = SquareClass::of(pure_square(u));
    SkewHermForm h = SkewHermForm::scalar_multiples(q, p.a0.form().diag());
    SkewHermForm twisted = twist_last_entry(h, c);
    ProductPresentation out{Deg6Invol::split(QuadForm(twisted.shape()->multipliers)), p.hrho};
    if (!(brauer_from_symbol(e1(out.a0.form()), p.d()) == p.brauer_h())) {
        throw ConsistencyError("repair_decomposition: (e1(phi'), d) differs from [H]");
    }
    return out;
}

QuadForm PfisterDecomposition::six_dim() const {
    std::vector<Rational> diag;
    for (int i = 0; i < 3; ++i) {
        diag.push_back(alphas[i]);
        diag.push_back(-alphas[i] * Rational(betas[i].value()));
    }
    return QuadForm(std::move(diag));
}

QuadForm PfisterDecomposition::reconstruction() const { return tensor(six_dim(), pfister({d})); }

std::vector<SquareClass> decomposition_candidates(const QuadForm& psi) {
    std::set<Integer> primes{Integer(2)};
    for (auto& x : psi.diag()) {
        for (const Integer* part : {&x.get_num(), &x.get_den()}) {
            for (auto& [p, e] : factor(*part)) primes.insert(p);
        }
    }
    std::vector<Integer> ps(primes.begin(), primes.end());
    if (ps.size() > 20) throw BoundExceeded("decompose_split12: too many primes for the candidate set");
    std::vector<SquareClass> out;
    for (unsigned long mask = 0; mask < (1UL << ps.size()); ++mask) {
        Integer v = 1;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            if (mask & (1UL << i)) v *= ps[i];
        }
        if (v != 1) out.push_back(SquareClass::of(Rational(v)));
        out.push_back(SquareClass::of(Rational(-v)));
    }
    std::stable_sort(out.begin(), out.end(), [](const SquareClass& x, const SquareClass& y) {
        if (abs(x.value()) != abs(y.value())) return abs(x.value()) < abs(y.value());
        return x.value() > y.value();
    });
    return out;
}

PfisterDecomposition decompose_split12(const QuadForm& psi, long bound) {
    if (psi.dim() != 12) throw DomainError("decompose_split12: form must be 12-dimensional");
    if (!e1(psi).is_trivial()) throw DomainError("decompose_split12: e1 must be trivial");
    if (!e2(psi).is_zero()) throw DomainError("decompose_split12: e2 must be zero");
    for (auto& d : decomposition_candidates(psi)) {
        if (!is_hyperbolic_over(psi, d)) continue;
        QuadForm phi = divide_by_binary(psi, d, bound);
        std::vector<Rational> entries = phi.diag();
        std::stable_sort(entries.begin(), entries.end(), [](const Rational& x, const Rational& y) {
            auto h = [](const Rational& r) { return std::max(Integer(abs(r.get_num())), r.get_den()); };
            return h(x) < h(y);
        });
        PfisterDecomposition out;
        out.d = d;
        for (int i = 0; i < 3; ++i) {
            out.alphas[i] = entries[2 * i];
            out.betas[i] = SquareClass::of(-entries[2 * i] * entries[2 * i + 1]);
        }
        // (b1 b2 b3, d) = e2(psi) = 0, so <<b3, d>> = <<b3 b1 b2 b3, d>>.
        const SquareClass prod = out.betas[0] * out.betas[1] * out.betas[2];
        out.betas[2] *= prod;
        if (!isometric(out.reconstruction(), psi)) {
            throw ConsistencyError("decompose_split12: reconstruction is not isometric to the input");
        }
        return out;
    }
    throw BoundExceeded("decompose_split12: decomposition not found within search space");
}

std::vector<BrauerClass> AdditiveDecomposition::group() const {
    return {BrauerClass::zero(), q, q_blocks[0], h_blocks[0], q_blocks[1], h_blocks[1], q_blocks[2], h_blocks[2]};
}

AdditiveDecomposition additive_decomposition(const ProductPresentation& p, long bound) {
    if (p.a0.is_split_presented()) {
        throw DomainError("additive_decomposition: A0 must be presented as M_3(H')");
    }
    const SkewHermForm& h = p.a0.herm();
    const SquareClass d = p.d();
    const SquareClass d0 = p.d0();
    AdditiveDecomposition out;
    for (int i = 0; i < 3; ++i) {
        out.a[i] = SquareClass::of(pure_square(h.entries()[i]));
        out.b[i] = complement_slot(h.algebra(), out.a[i], bound);
        out.h_blocks[i] = brauer_from_symbol(out.a[i] * d0, d);
        out.q_blocks[i] = brauer_from_symbol(out.a[i], out.b[i] * d);
    }
    out.q = p.brauer_a();
    return out;
}

ProductPresentation f3_normal_form(const ProductPresentation& p) {
    const BrauerClass dd0 = brauer_from_symbol(p.d(), p.d0());
    if (dd0 == p.brauer_h()) return p;
    if (dd0 == p.a0.brauer()) {
        if (p.a0.is_split_presented()) return repair_decomposition(p);
        throw DomainError("f3: (d, d0) = [A0] != [H] with A0 non-split; no H = (d, d0) decomposition at hand");
    }
    throw DomainError("f3: presentation does not have trivial invariants");
}

QuadForm f3_virtual_form(const ProductPresentation& p, long bound) {
    // Every 2-torsion class over Q is a quaternion class: index <= 2 always.
    const auto [qa, qb] = quaternion_symbol(p.brauer_a(), bound);
    const QuaternionAlgebra Q(Rational(qa.value()), Rational(qb.value()));
    const QuadForm nq = Q.norm_form();
    const QuadForm nh = p.hrho.h.norm_form();
    const QuadForm nhp = p.a0.quaternion().norm_form();
    return direct_sum(direct_sum(nq, scale(nh, -1)), scale(nhp, -Rational(p.d().value())));
}

H3Class f3_via_norms(const ProductPresentation& p, long bound) {
    const ProductPresentation np = f3_normal_form(p);
    const QuadForm v = f3_virtual_form(np, bound);
    if (!e1(v).is_trivial() || !e2(v).is_zero()) {
        throw ConsistencyError("f3_via_norms: n_Q - n_H - <d> n_H' is not in I^3");
    }
    return e3(v);
}

F3SymbolRoute f3_via_symbol(const ProductPresentation& p, long bound) {
    const ProductPresentation np = f3_normal_form(p);
    const BrauerClass h = np.brauer_h();
    const BrauerClass hp = np.a0.brauer();
    const BrauerClass q = np.brauer_a();
    std::set<Place> ram = h.ramification();
    ram.insert(hp.ramification().begin(), hp.ramification().end());
    ram.insert(q.ramification().begin(), q.ramification().end());
    F3SymbolRoute out;
    bool found_c = for_each_squarefree(bound, [&](const SquareClass& c) {
        if (c.is_trivial()) return false;
        for (auto& v : ram) {
            if (is_local_square(c, v)) return false;
        }
        out.c = c;
        return true;
    });
    if (!found_c) throw BoundExceeded("f3_via_symbol: no common splitting field found within bound");
    // Q(sqrt c) splits H, so c is a pure square in H and e is the
    // complementary slot; e = 1 when H is split.
    out.e = h.is_zero() ? SquareClass() : complement_slot(np.hrho.h, out.c, bound);
    if (!(brauer_from_symbol(out.c, out.e) == h)) throw ConsistencyError("f3_via_symbol: H != (c, e)");
    const SquareClass de = np.d() * out.e;
    out.value = cup_h3(de, q);
    if (!(cup_h3(de, hp) == out.value)) {
        throw ConsistencyError("f3_via_symbol: (de).[Q] and (de).[H'] disagree");
    }
    return out;
}

ExistenceResult exists_involution(const QuaternionAlgebra& h1, const QuaternionAlgebra& h2, long bound) {
    ExistenceResult out;
    CommonValueResult cv = common_value_witness(h1, h2, bound);
    out.outcome = cv.outcome;
    if (cv.outcome != SearchOutcome::witness) return out;
    const QuatElem& q = cv.witness->q;
    const QuatElem& j = cv.witness->j;
    auto factors = three_pure_product(h1, q);
    SkewHermForm h(h1, {factors[0], factors[1], factors[2]});
    QuatElem i = anticommutant(h2, j);
    ProductPresentation p{Deg6Invol::m3h(h), QuatInvol(h2, i)};
    if (!(p.d0() == SquareClass::of(-nrd(q)))) throw ConsistencyError("exists_involution: d0 mismatch");
    if (!(brauer_from_symbol(p.d(), p.d0()) == h2.brauer())) {
        throw ConsistencyError("exists_involution: H2 differs from (d, d0)");
    }
    if (!has_trivial_invariants(p)) throw ConsistencyError("exists_involution: invariants not trivial");
    out.presentation = p;
    out.witness = cv.witness;
    return out;
}

QuadForm split_tensor_form(const ProductPresentation& p, long bound) {
    if (!p.a0.is_split_presented()) throw DomainError("split_tensor_form: A0 must be split-presented");
    if (!is_split(p.hrho.h)) throw DomainError("split_tensor_form: H must be split");
    QuadForm binary = split_transport(SkewHermForm(p.hrho.h, {p.hrho.i}), bound);
    return tensor(p.a0.form(), binary);
}

}  // namespace wittforge
