#include "wittforge/ramlattice.hpp"

#include "wittforge/errors.hpp"

#include <set>

namespace wittforge {

namespace {

linalg::IMat to_rows(const std::vector<ValueVec>& gens) {
    linalg::IMat rows;
    for (auto& g : gens) rows.push_back({Integer(g[0]), Integer(g[1]), Integer(g[2]), Integer(g[3])});
    return rows;
}

// Rows of the dual basis (B^{-1})^T.
linalg::Mat dual_rows(const linalg::IMat& b) {
    linalg::Mat m(4, linalg::Vec(4));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) m[i][j] = Rational(b[i][j]);
    }
    linalg::Mat inv = linalg::inverse(m);
    linalg::Mat out(4, linalg::Vec(4));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) out[i][j] = inv[j][i];
    }
    return out;
}

Integer common_denominator(const linalg::Mat& rows) {
    Integer l = 1;
    for (auto& r : rows) {
        for (auto& x : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    }
    return l;
}

unsigned mod2_mask(const ValueVec& v) {
    unsigned m = 0;
    for (int i = 0; i < 4; ++i) {
        if (v[i] % 2 != 0) m |= 1u << i;
    }
    return m;
}

// Rank of a set of vectors over F_2 (bitmasks).
int f2_rank(std::vector<unsigned> v) {
    int rank = 0;
    for (unsigned bit = 0; bit < 32; ++bit) {
        auto it = v.begin();
        for (; it != v.end(); ++it) {
            if (*it & (1u << bit)) break;
        }
        if (it == v.end()) continue;
        unsigned pivot = *it;
        v.erase(it);
        for (auto& x : v) {
            if (x & (1u << bit)) x ^= pivot;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

ValueLattice ValueLattice::from_rows(linalg::IMat rows) {
    ValueLattice out;
    out.hnf_ = linalg::hermite_normal_form(std::move(rows));
    if (out.hnf_.size() != 4) throw DomainError("value lattice must have rank 4");
    return out;
}

ValueLattice ValueLattice::span(const std::vector<ValueVec>& generators) { return from_rows(to_rows(generators)); }

ValueLattice ValueLattice::scaled_identity(long k) {
    return span({ValueVec{k, 0, 0, 0}, ValueVec{0, k, 0, 0}, ValueVec{0, 0, k, 0}, ValueVec{0, 0, 0, k}});
}

bool ValueLattice::contains(const ValueVec& v) const {
    // Back-substitution against the echelon basis.
    std::array<Integer, 4> r{Integer(v[0]), Integer(v[1]), Integer(v[2]), Integer(v[3])};
    for (int i = 0; i < 4; ++i) {
        const Integer& piv = hnf_[i][i];
        if (!mpz_divisible_p(r[i].get_mpz_t(), piv.get_mpz_t())) return false;
        Integer q = r[i] / piv;
        for (int k = i; k < 4; ++k) r[k] -= q * hnf_[i][k];
    }
    return true;
}

ValueLattice ValueLattice::scaled(long k) const {
    linalg::IMat rows = hnf_;
    for (auto& r : rows) {
        for (auto& x : r) x *= k;
    }
    return from_rows(std::move(rows));
}

std::string ValueLattice::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < hnf_.size(); ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < 4; ++j) {
            if (j) s += ",";
            s += hnf_[i][j].get_str();
        }
        s += "]";
    }
    return s + "]";
}

ValueLattice lattice_sum(const ValueLattice& x, const ValueLattice& y) {
    linalg::IMat rows = x.hnf_;
    rows.insert(rows.end(), y.hnf_.begin(), y.hnf_.end());
    return ValueLattice::from_rows(std::move(rows));
}

ValueLattice lattice_intersection(const ValueLattice& x, const ValueLattice& y) {
    // (X cap Y)* = X* + Y*.
    linalg::Mat duals = dual_rows(x.hnf_);
    linalg::Mat dy = dual_rows(y.hnf_);
    duals.insert(duals.end(), dy.begin(), dy.end());
    const Integer m = common_denominator(duals);
    linalg::IMat scaled;
    for (auto& r : duals) {
        linalg::IVec row;
        for (auto& v : r) {
            Rational s = v * Rational(m);
            row.push_back(s.get_num());
        }
        scaled.push_back(std::move(row));
    }
    linalg::IMat sum = linalg::hermite_normal_form(std::move(scaled));
    // (sum / m)* = m * dual(sum)
    linalg::Mat back = dual_rows(sum);
    linalg::IMat rows;
    for (auto& r : back) {
        linalg::IVec row;
        for (auto& v : r) {
            Rational s = v * Rational(m);
            if (s.get_den() != 1) throw ConsistencyError("lattice_intersection: non-integral result");
            row.push_back(s.get_num());
        }
        rows.push_back(std::move(row));
    }
    return ValueLattice::from_rows(std::move(rows));
}

ValueLattice value_group_of_symbol(const std::array<ValueVec, 2>& slots) {
    return ValueLattice::span({ValueVec{2, 0, 0, 0}, ValueVec{0, 2, 0, 0}, ValueVec{0, 0, 2, 0},
                               ValueVec{0, 0, 0, 2}, slots[0], slots[1]});
}

bool valuation_less(const ValueVec& x, const ValueVec& y) {
    for (int i = 3; i >= 0; --i) {
        if (x[i] != y[i]) return x[i] < y[i];
    }
    return false;
}

ValueVec armature_valuation(const std::array<std::optional<ValueVec>, 4>& coeff_values,
                            const std::array<ValueVec, 4>& basis_values) {
    std::set<unsigned> cosets;
    for (auto& b : basis_values) cosets.insert(mod2_mask(b));
    if (cosets.size() != 4) {
        throw DomainError("armature_valuation: basis values must lie in distinct cosets modulo Gamma_F");
    }
    std::optional<ValueVec> best;
    for (int t = 0; t < 4; ++t) {
        if (!coeff_values[t]) continue;
        if (mod2_mask(*coeff_values[t]) != 0) {
            throw DomainError("armature_valuation: coefficient values must lie in Gamma_F");
        }
        ValueVec v;
        for (int c = 0; c < 4; ++c) v[c] = (*coeff_values[t])[c] + basis_values[t][c];
        if (!best || valuation_less(v, *best)) best = v;
    }
    if (!best) throw DomainError("armature_valuation: the zero element has no value");
    return *best;
}

std::vector<std::pair<std::array<unsigned, 2>, std::array<unsigned, 2>>> rank2_splittings() {
    std::vector<std::pair<std::array<unsigned, 2>, std::array<unsigned, 2>>> out;
    std::set<std::set<unsigned>> seen;
    for (unsigned u = 1; u < 16; ++u) {
        for (unsigned w = u + 1; w < 16; ++w) {
            std::set<unsigned> s{0u, u, w, u ^ w};
            if (s.size() != 4 || !seen.insert(s).second) continue;
            // A complement C0 spanned by two unit vectors, then every graph
            // {c + f(c)} of a linear map f : C0 -> S.
            std::array<unsigned, 2> c0{};
            bool have = false;
            for (unsigned a = 0; a < 4 && !have; ++a) {
                for (unsigned b = a + 1; b < 4 && !have; ++b) {
                    if (f2_rank({u, w, 1u << a, 1u << b}) == 4) {
                        c0 = {1u << a, 1u << b};
                        have = true;
                    }
                }
            }
            const std::array<unsigned, 4> elems{0u, u, w, u ^ w};
            for (unsigned fa : elems) {
                for (unsigned fb : elems) {
                    out.push_back({{u, w}, {c0[0] ^ fa, c0[1] ^ fb}});
                }
            }
        }
    }
    return out;
}

ObstructionReport obstruction_check(const std::array<RamSymbol, 2>& d) {
    ObstructionReport report;
    std::vector<ValueVec> slots{d[0][0], d[0][1], d[1][0], d[1][1]};
    std::vector<unsigned> masks;
    for (auto& s : slots) masks.push_back(mod2_mask(s));
    // A slot that is a square monomial (or unit) splits its factor.
    for (auto m : masks) {
        if (m == 0) {
            report.degenerate = true;
            return report;
        }
    }
    if (f2_rank(masks) != 4) {
        throw DomainError("obstruction_check: D is not totally ramified (Gamma_D / Gamma_F is not (Z/2)^4)");
    }
    auto lift = [&](unsigned combo) {
        ValueVec v{0, 0, 0, 0};
        for (int t = 0; t < 4; ++t) {
            if (combo & (1u << t)) {
                for (int c = 0; c < 4; ++c) v[c] += slots[t][c];
            }
        }
        return v;
    };
    const ValueVec twos[4] = {{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}};
    auto group_of = [&](const std::array<unsigned, 2>& gens) {
        return ValueLattice::span({twos[0], twos[1], twos[2], twos[3], lift(gens[0]), lift(gens[1])});
    };
    const ValueLattice two_gamma_f = ValueLattice::scaled_identity(4);
    report.obstructed = true;
    for (auto& [s, t] : rank2_splittings()) {
        SplittingRow row;
        row.s_gens = s;
        row.t_gens = t;
        const ValueLattice gh_prime = group_of(s);
        const ValueLattice gh = group_of(t);
        row.intersection_trivial = lattice_intersection(gh_prime.scaled(2), gh.scaled(2)) == two_gamma_f;
        // H: basis 1, i, j, k with values 0, t1, t2, t1 + t2 (mod Gamma_F).
        const std::array<ValueVec, 4> basis{ValueVec{0, 0, 0, 0}, lift(t[0]), lift(t[1]), lift(t[0] ^ t[1])};
        row.pure_norms_avoid_f = true;
        for (unsigned support = 1; support < 8; ++support) {
            std::array<std::optional<ValueVec>, 4> coeffs;
            for (int b = 0; b < 3; ++b) {
                if (support & (1u << b)) coeffs[b + 1] = ValueVec{0, 0, 0, 0};
            }
            ValueVec v = armature_valuation(coeffs, basis);
            ValueVec twice{2 * v[0], 2 * v[1], 2 * v[2], 2 * v[3]};
            if (!gh.scaled(2).contains(twice) || two_gamma_f.contains(twice)) row.pure_norms_avoid_f = false;
        }
        const std::array<ValueVec, 4> basis_prime{ValueVec{0, 0, 0, 0}, lift(s[0]), lift(s[1]), lift(s[0] ^ s[1])};
        row.h_prime_norms_even = true;
        for (unsigned support = 1; support < 16; ++support) {
            std::array<std::optional<ValueVec>, 4> coeffs;
            for (int b = 0; b < 4; ++b) {
                if (support & (1u << b)) coeffs[b] = ValueVec{0, 0, 0, 0};
            }
            ValueVec v = armature_valuation(coeffs, basis_prime);
            ValueVec twice{2 * v[0], 2 * v[1], 2 * v[2], 2 * v[3]};
            if (!gh_prime.scaled(2).contains(twice)) row.h_prime_norms_even = false;
        }
        report.obstructed = report.obstructed && row.obstructed();
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace wittforge
