#include "wittforge/selftest.hpp"

#include "wittforge/errors.hpp"

#include <chrono>
#include <functional>

namespace wittforge::selftest {

namespace {

constexpr std::size_t kMaxFailures = 5;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

QuaternionAlgebra algebra_of(const SquareClass& a, const SquareClass& b) {
    return QuaternionAlgebra(Rational(a.value()), Rational(b.value()));
}

// Runs body, turning library exceptions into a recorded failure.
void guarded(SuiteResult& r, const std::string& label, const std::function<bool()>& body) {
    try {
        r.record(body(), label);
    } catch (const std::exception& e) {
        r.record(false, label + ": " + e.what());
    }
}

std::optional<ProductPresentation> witness_presentation(Rng& rng, long max_abs, int attempts = 50) {
    for (int t = 0; t < attempts; ++t) {
        ExistenceResult r = exists_involution(random_algebra(rng, max_abs), random_algebra(rng, max_abs));
        if (r.presentation) return r.presentation;
    }
    return std::nullopt;
}

}  // namespace

void SuiteResult::record(bool pass, const std::string& what) {
    ++cases;
    if (pass) {
        ++passed;
    } else if (failures.size() < kMaxFailures) {
        failures.push_back(what);
    }
}

long random_nonzero(Rng& rng, long max_abs) {
    long v = uniform(rng, 1, max_abs);
    return uniform(rng, 0, 1) ? v : -v;
}

SquareClass random_class(Rng& rng, long max_abs) {
    for (;;) {
        SquareClass c = SquareClass::of(random_nonzero(rng, max_abs));
        if (!c.is_trivial()) return c;
    }
}

Rational random_rational(Rng& rng, long max_num, long max_den) {
    Rational q(random_nonzero(rng, max_num), uniform(rng, 1, max_den));
    q.canonicalize();
    return q;
}

QuaternionAlgebra random_algebra(Rng& rng, long max_abs) {
    return QuaternionAlgebra(random_nonzero(rng, max_abs), random_nonzero(rng, max_abs));
}

QuaternionAlgebra random_split_algebra(Rng& rng, long max_abs) {
    const long a = random_nonzero(rng, max_abs);
    for (;;) {
        const long x = uniform(rng, -4, 4);
        const long y = uniform(rng, -4, 4);
        const long b = x * x - a * y * y;
        if (b != 0) return QuaternionAlgebra(Rational(a), Rational(squarefree_part(Rational(b)).value()));
    }
}

QuatElem random_pure(Rng& rng, const QuaternionAlgebra& h, long max_coord) {
    for (;;) {
        QuatElem q = QuatElem::pure(h, uniform(rng, -max_coord, max_coord), uniform(rng, -max_coord, max_coord),
                                    uniform(rng, -max_coord, max_coord));
        if (nrd(q) != 0) return q;
    }
}

QuadForm random_form(Rng& rng, std::size_t dim, long max_abs) {
    std::vector<Rational> d;
    for (std::size_t i = 0; i < dim; ++i) d.emplace_back(random_nonzero(rng, max_abs));
    return QuadForm(std::move(d));
}

QuadForm random_split12(Rng& rng, long max_abs) {
    for (;;) {
        const SquareClass d = random_class(rng, 30);
        const long x = uniform(rng, -5, 5);
        const long y = uniform(rng, -5, 5);
        const long n = x * x - static_cast<long>(d.value().get_si()) * y * y;
        if (n == 0) continue;
        const SquareClass d0 = SquareClass::of(n);
        std::vector<Rational> phi;
        Rational prod = 1;
        for (int i = 0; i < 5; ++i) {
            phi.emplace_back(random_nonzero(rng, 12));
            prod *= phi.back();
        }
        // dim 6: e1 = -det, so the last entry is -d0 times the others' product.
        const SquareClass last = SquareClass::of(-Rational(d0.value()) * prod);
        if (abs(last.value()) > max_abs) continue;
        phi.emplace_back(last.value());
        return tensor(pfister({d}), QuadForm(std::move(phi)));
    }
}

ProductPresentation random_split_presentation(Rng& rng, long max_abs) {
    const QuaternionAlgebra h = random_split_algebra(rng, max_abs);
    return ProductPresentation{Deg6Invol::split(random_form(rng, 6, max_abs)), QuatInvol(h, random_pure(rng, h, 3))};
}

ProductPresentation random_split_h_presentation(Rng& rng, long max_abs) {
    const QuaternionAlgebra hp = random_algebra(rng, max_abs);
    const SkewHermForm herm = random_skewherm(rng, hp, 3, 2);
    const SquareClass d0 = disc_adjoint(herm);
    for (;;) {
        const long x = uniform(rng, -5, 5);
        const long y = uniform(rng, -5, 5);
        const Rational n = Rational(x * x) - Rational(d0.value()) * Rational(y * y);
        if (n == 0) continue;
        const SquareClass d = SquareClass::of(n);
        const QuaternionAlgebra h(Rational(d.value()), 1);
        return ProductPresentation{Deg6Invol::m3h(herm), QuatInvol(h, QuatElem::pure(h, 1, 0, 0))};
    }
}

SkewHermForm random_skewherm(Rng& rng, const QuaternionAlgebra& h, std::size_t rank, long max_coord) {
    std::vector<QuatElem> entries;
    for (std::size_t i = 0; i < rank; ++i) entries.push_back(random_pure(rng, h, max_coord));
    return SkewHermForm(h, std::move(entries));
}

SuiteResult reciprocity(Rng& rng, std::size_t count, long max_abs) {
    SuiteResult r{"hilbert_reciprocity"};
    for (std::size_t n = 0; n < count; ++n) {
        const long a = random_nonzero(rng, max_abs);
        const long b = random_nonzero(rng, max_abs);
        guarded(r, "(" + std::to_string(a) + "," + std::to_string(b) + ")", [&] {
            int minus = 0;
            for (auto& v : candidate_places(SquareClass::of(a), SquareClass::of(b))) {
                if (hilbert_symbol(Rational(a), Rational(b), v) == -1) ++minus;
            }
            return minus % 2 == 0;
        });
    }
    return r;
}

SuiteResult steinberg(Rng& rng, std::size_t count) {
    SuiteResult r{"steinberg"};
    for (std::size_t n = 0; n < count; ++n) {
        const Rational a = random_rational(rng, 200, 50);
        if (a == 1) continue;
        guarded(r, a.get_str(), [&] {
            const SquareClass sa = SquareClass::of(a);
            return brauer_from_symbol(sa, SquareClass::of(1 - a)).is_zero() &&
                   brauer_from_symbol(sa, SquareClass::of(-a)).is_zero();
        });
    }
    return r;
}

SuiteResult witt_identity(Rng& rng, std::size_t count) {
    SuiteResult r{"witt_identity"};
    for (std::size_t n = 0; n < count; ++n) {
        const SquareClass l = random_class(rng, 60), m = random_class(rng, 60), v = random_class(rng, 60);
        guarded(r, l.str() + "," + m.str() + "," + v.str(), [&] {
            const QuadForm lhs = pfister({l, m * v});
            const QuadForm rhs = direct_sum(pfister({l, m}), scale(pfister({l, v}), Rational(m.value())));
            return witt_equivalent(lhs, rhs);
        });
    }
    return r;
}

SuiteResult pfister_roundtrip(Rng& rng, std::size_t count) {
    SuiteResult r{"pfister_roundtrip"};
    for (std::size_t n = 0; n < count; ++n) {
        const QuadForm psi = random_split12(rng, 50);
        guarded(r, psi.str(), [&] {
            const PfisterDecomposition dec = decompose_split12(psi);
            return (dec.betas[0] * dec.betas[1] * dec.betas[2]).is_trivial() && isometric(dec.reconstruction(), psi);
        });
    }
    return r;
}

SuiteResult f3_agreement(Rng& rng, std::size_t count) {
    SuiteResult r{"f3_agreement"};
    for (std::size_t n = 0; n < count; ++n) {
        std::optional<ProductPresentation> p;
        if (n % 2 == 0) p = witness_presentation(rng, 30);
        if (!p) p = random_split_h_presentation(rng, 30);
        guarded(r, "case " + std::to_string(n), [&] {
            const H3Class a = f3_via_norms(*p);
            const H3Class b = f3_via_symbol(*p).value;
            if (a.bit) ++r.nonzero;
            return a == b;
        });
    }
    return r;
}

SuiteResult f3_vanishing(Rng& rng, std::size_t count) {
    SuiteResult r{"f3_vanishing"};
    auto both_zero = [](const ProductPresentation& p) {
        return f3_via_norms(p).bit == 0 && f3_via_symbol(p).value.bit == 0;
    };
    for (std::size_t n = 0; n < count; ++n) {
        // A split: D = H1 (x) H1.
        const QuaternionAlgebra h1 = random_algebra(rng, 30);
        ExistenceResult e = exists_involution(h1, h1);
        if (e.presentation) guarded(r, "A split " + h1.str(), [&] { return both_zero(*e.presentation); });

        // A0 split: Ad_phi (x) (H, i) with H = (d, d0).
        const QuadForm phi = random_form(rng, 6, 30);
        const SquareClass d = random_class(rng, 30);
        const QuaternionAlgebra h(Rational(d.value()), Rational(e1(phi).value()));
        guarded(r, "A0 split " + phi.str(), [&] {
            return both_zero(ProductPresentation{Deg6Invol::split(phi), QuatInvol(h, QuatElem::pure(h, 1, 0, 0))});
        });

        // A0 = M_3((a, b)) with <l1 i, l2 i, l3 i>, so d0 = a and Q(sqrt d0) splits A0.
        const QuaternionAlgebra hp = random_algebra(rng, 30);
        std::vector<QuatElem> entries;
        for (int k = 0; k < 3; ++k) entries.push_back(QuatElem::pure(hp, random_nonzero(rng, 5), 0, 0));
        const SkewHermForm herm(hp, entries);
        const SquareClass dd = random_class(rng, 30);
        const QuaternionAlgebra hh(Rational(dd.value()), hp.a());
        guarded(r, "A0 split by d0 " + hp.str(), [&] {
            return both_zero(ProductPresentation{Deg6Invol::m3h(herm), QuatInvol(hh, QuatElem::pure(hh, 1, 0, 0))});
        });
    }
    return r;
}

SuiteResult additive_identity(Rng& rng, std::size_t count) {
    SuiteResult r{"additive_identity"};
    for (std::size_t n = 0; n < count; ++n) {
        auto p = witness_presentation(rng, 30);
        if (!p) continue;
        guarded(r, "case " + std::to_string(n), [&] {
            const AdditiveDecomposition a = additive_decomposition(*p);
            const SquareClass d = p->d();
            const QuadForm nh = p->hrho.h.norm_form();
            const QuadForm nhp = p->a0.quaternion().norm_form();
            QuadForm lhs, rhs;
            bool first = true;
            for (int i = 0; i < 3; ++i) {
                const QuadForm blocks = direct_sum(algebra_of(a.a[i] * p->d0(), d).norm_form(),
                                                   algebra_of(a.a[i], a.b[i] * d).norm_form());
                const QuadForm terms = direct_sum(
                    direct_sum(scale(nh, Rational(a.a[i].value())), scale(nhp, Rational(d.value()))),
                    pfister({SquareClass::of(-1), a.a[i], d}));
                lhs = first ? blocks : direct_sum(lhs, blocks);
                rhs = first ? terms : direct_sum(rhs, terms);
                first = false;
            }
            // The block classes must also sum to [H'] + [H] pairwise.
            for (int i = 0; i < 3; ++i) {
                if (!(a.h_blocks[i] + a.q_blocks[i] == p->a0.brauer() + p->brauer_h())) return false;
            }
            return witt_equivalent(lhs, rhs);
        });
    }
    return r;
}

SuiteResult chain_identity(Rng& rng, std::size_t count) {
    SuiteResult r{"chain_identity"};
    for (std::size_t n = 0; n < count; ++n) {
        const SquareClass c = random_class(rng, 40), e = random_class(rng, 40), ep = random_class(rng, 40),
                          d = random_class(rng, 40);
        guarded(r, c.str() + "," + e.str() + "," + ep.str() + "," + d.str(), [&] {
            const QuadForm nq = algebra_of(c, e * ep).norm_form();
            const QuadForm lhs = direct_sum(direct_sum(nq, scale(algebra_of(c, e).norm_form(), -1)),
                                            scale(algebra_of(c, ep).norm_form(), -Rational(d.value())));
            const QuadForm rhs = scale(pfister({c, ep, d * e}), Rational(e.value()));
            return witt_equivalent(lhs, rhs);
        });
    }
    return r;
}

SuiteResult tao_split_oracle(Rng& rng, std::size_t count) {
    SuiteResult r{"tao_split_oracle"};
    for (std::size_t n = 0; n < count; ++n) {
        const ProductPresentation p = random_split_presentation(rng, 30);
        guarded(r, "case " + std::to_string(n), [&] {
            const auto [x, y] = tao_e2_coset(p);
            const BrauerClass c = e2(split_tensor_form(p));
            return x == c && y == c;
        });
    }
    return r;
}

SuiteResult existence_soundness(Rng& rng, std::size_t count) {
    SuiteResult r{"existence_soundness"};
    for (std::size_t attempt = 0; r.cases < count && attempt < 50 * count; ++attempt) {
        const QuaternionAlgebra h1 = random_algebra(rng, 30), h2 = random_algebra(rng, 30);
        ExistenceResult e = exists_involution(h1, h2);
        if (e.outcome != SearchOutcome::witness) continue;
        guarded(r, h1.str() + "(x)" + h2.str(), [&] { return has_trivial_invariants(*e.presentation); });
    }
    return r;
}

SuiteResult hermitian_disc_oracle(Rng& rng, std::size_t count) {
    SuiteResult r{"hermitian_disc_oracle"};
    for (std::size_t n = 0; n < count; ++n) {
        const QuaternionAlgebra h = random_split_algebra(rng, 30);
        const SkewHermForm herm = random_skewherm(rng, h, static_cast<std::size_t>(uniform(rng, 1, 3)), 4);
        guarded(r, h.str(), [&] { return disc_adjoint(herm) == e1(split_transport(herm)); });
    }
    return r;
}

nlohmann::json to_json(const SuiteResult& r) {
    return {{"name", r.name},     {"cases", r.cases},       {"passed", r.passed},
            {"ok", r.ok()},       {"counter", r.nonzero},   {"failures", r.failures}};
}

nlohmann::json run_selftest(std::uint64_t seed, std::size_t count, bool timing) {
    using Suite = std::function<SuiteResult(Rng&, std::size_t)>;
    const std::vector<Suite> suites{
        [](Rng& g, std::size_t c) { return reciprocity(g, c); },
        steinberg, witt_identity, pfister_roundtrip, f3_agreement, f3_vanishing, additive_identity,
        chain_identity, tao_split_oracle, existence_soundness, hermitian_disc_oracle};
    nlohmann::json results = nlohmann::json::array();
    bool all = true;
    for (std::size_t k = 0; k < suites.size(); ++k) {
        Rng rng(seed + k);
        const auto start = std::chrono::steady_clock::now();
        SuiteResult r = suites[k](rng, count);
        all = all && r.ok();
        results.push_back(to_json(r));
        if (timing) {
            results.back()["timing_ms"] =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
    }
    return {{"seed", seed}, {"count", count}, {"suites", results}, {"all_passed", all}};
}

}  // namespace wittforge::selftest
