#include "wittforge/errors.hpp"
#include "wittforge/linalg.hpp"
#include "wittforge/quadform.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>

namespace wittforge {

namespace {

using Vec = std::vector<Rational>;

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    if (!mpz_perfect_square_p(r.get_num().get_mpz_t()) || !mpz_perfect_square_p(r.get_den().get_mpz_t())) {
        return std::nullopt;
    }
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den().get_mpz_t());
    return Rational(n, d);
}

// Zero of <a,b> or nullopt.
std::optional<Vec> binary_zero(const Rational& a, const Rational& b) {
    auto r = rational_sqrt(-b / a);
    if (!r) return std::nullopt;
    return Vec{*r, Rational(1)};
}

Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool fits_small(const Integer& x) { return abs(x) < Integer(1L << 20); }

// Zero of A x^2 + B y^2 + C z^2 for nonzero pairwise coprime squarefree
// integers. Search over x <= X, y <= Y with z solved for.
std::optional<std::array<Integer, 3>> ternary_search(const Integer& A, const Integer& B, const Integer& C,
                                                     const Integer& X, const Integer& Y) {
    if (fits_small(A) && fits_small(B) && fits_small(C) && X < Integer(1L << 20) && Y < Integer(1L << 20)) {
        const long a = A.get_si(), b = B.get_si(), c = C.get_si();
        const long xm = X.get_si(), ym = Y.get_si();
        for (long x = 0; x <= xm; ++x) {
            for (long y = 0; y <= ym; ++y) {
                if (x == 0 && y == 0) continue;
                __int128 n = static_cast<__int128>(a) * x * x + static_cast<__int128>(b) * y * y;
                if (n % c != 0) continue;
                __int128 w = -n / c;
                if (w < 0) continue;
                long double approx = std::sqrt(static_cast<long double>(w));
                __int128 z = static_cast<__int128>(approx);
                while (z * z > w) --z;
                while ((z + 1) * (z + 1) <= w) ++z;
                if (z * z == w) {
                    return std::array<Integer, 3>{Integer(x), Integer(y), Integer(static_cast<long>(z))};
                }
            }
        }
        return std::nullopt;
    }
    for (Integer x = 0; x <= X; ++x) {
        for (Integer y = 0; y <= Y; ++y) {
            if (x == 0 && y == 0) continue;
            Integer n = A * x * x + B * y * y;
            if (!mpz_divisible_p(n.get_mpz_t(), C.get_mpz_t())) continue;
            Integer w = -n / C;
            if (w < 0 || !mpz_perfect_square_p(w.get_mpz_t())) continue;
            return std::array<Integer, 3>{x, y, isqrt(w)};
        }
    }
    return std::nullopt;
}

// sqrt of a modulo the odd prime p, or nullopt.
std::optional<Integer> sqrt_mod_prime(const Integer& a, const Integer& p) {
    Integer r = a % p;
    if (r < 0) r += p;
    if (r == 0) return Integer(0);
    if (p == 2) return r;
    if (legendre(r, p) != 1) return std::nullopt;
    // Tonelli-Shanks.
    Integer q = p - 1;
    unsigned s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    Integer z = 2;
    while (legendre(z, p) != -1) ++z;
    auto powm = [&](const Integer& b, const Integer& e) {
        Integer out;
        mpz_powm(out.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return out;
    };
    Integer c = powm(z, q);
    Integer x = powm(r, (q + 1) / 2);
    Integer t = powm(r, q);
    unsigned m = s;
    while (t != 1) {
        unsigned i = 0;
        Integer tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Integer b = c;
        for (unsigned k = 0; k + i + 1 < m; ++k) b = b * b % p;
        x = x * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return x;
}

// t with t^2 = a mod |b| (b squarefree), reduced to |t| <= |b|/2.
Integer sqrt_mod_squarefree(const Integer& a, const Integer& b) {
    const Integer m = abs(b);
    Integer t = 0, mod = 1;
    for (auto& [p, e] : factor(m)) {
        auto r = sqrt_mod_prime(a, p);
        if (!r) throw ConsistencyError("ternary descent: form is not locally solvable");
        // CRT: t = t (mod mod), t = r (mod p).
        Integer inv;
        mpz_invert(inv.get_mpz_t(), mod.get_mpz_t(), p.get_mpz_t());
        Integer k = ((*r - t) % p) * inv % p;
        if (k < 0) k += p;
        t += k * mod;
        mod *= p;
    }
    if (2 * t > m) t -= m;
    return t;
}

// Nontrivial integer solution of X^2 = a Y^2 + b Z^2 for squarefree a, b
// (Lagrange descent on |b|).
std::array<Integer, 3> legendre_descent(const Integer& a, const Integer& b) {
    if (a == 1) return {Integer(1), Integer(1), Integer(0)};
    if (b == 1) return {Integer(1), Integer(0), Integer(1)};
    if (abs(a) > abs(b)) {
        auto s = legendre_descent(b, a);
        return {s[0], s[2], s[1]};
    }
    if (a == -b) return {Integer(0), Integer(1), Integer(1)};
    if (abs(b) == 1) throw ConsistencyError("ternary descent: X^2 + Y^2 + Z^2 has no zero");
    const Integer t = sqrt_mod_squarefree(a, b);
    const Integer k = (t * t - a) / b;
    const SquareClass kc = SquareClass::of(Rational(k));
    const Integer kp = kc.value();
    Integer s2 = k / kp;
    Integer s = isqrt(s2);
    auto r = legendre_descent(a, kp);
    Integer X = t * r[0] + a * r[1];
    Integer Y = r[0] + t * r[1];
    Integer Z = kp * s * r[2];
    Integer g;
    mpz_gcd(g.get_mpz_t(), X.get_mpz_t(), Y.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Z.get_mpz_t());
    if (g > 1) {
        X /= g;
        Y /= g;
        Z /= g;
    }
    return {X, Y, Z};
}

// Zero of <l0,l1,l2>, which must be isotropic.
Vec solve_ternary(const std::array<Rational, 3>& l, long bound) {
    // l_i = s_i r_i^2; in terms of X_i = r_i x_i the form is sum s_i X_i^2.
    std::array<Integer, 3> s;
    std::array<Rational, 3> to_orig;  // x_i = X_i * to_orig_i
    for (int i = 0; i < 3; ++i) {
        s[i] = SquareClass::of(l[i]).value();
        auto r = rational_sqrt(l[i] / Rational(s[i]));
        to_orig[i] = 1 / *r;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), s[0].get_mpz_t(), s[1].get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s[2].get_mpz_t());
    for (auto& x : s) x /= g;
    // A' (gX)^2 + B' (gY)^2 + gC Z^2 = g (A X^2 + B Y^2 + C Z^2) for g | A, B.
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                Integer h;
                mpz_gcd(h.get_mpz_t(), s[i].get_mpz_t(), s[j].get_mpz_t());
                if (h == 1) continue;
                int k = 3 - i - j;
                s[i] /= h;
                s[j] /= h;
                s[k] *= h;
                to_orig[i] /= h;
                to_orig[j] /= h;
                changed = true;
            }
        }
    }
    // Enumerate the two variables paired with the smallest coefficient in
    // the solved-for slot (minimal box under Holzer's bound).
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int x, int y) { return abs(s[x]) > abs(s[y]); });
    const Integer& A = s[order[0]];
    const Integer& B = s[order[1]];
    const Integer& C = s[order[2]];
    // A small box first so that small zeros stay small; Lagrange descent
    // otherwise.
    Integer X = isqrt(abs(B * C)) + 1;
    Integer Y = isqrt(abs(A * C)) + 1;
    const Integer cap(std::min<long>(bound, 64));
    if (X > cap) X = cap;
    if (Y > cap) Y = cap;
    auto sol = ternary_search(A, B, C, X, Y);
    if (!sol) {
        // A x^2 + B y^2 + C z^2 = 0  <=>  (C z)^2 = (-AC) x^2 + (-BC) y^2.
        auto r = legendre_descent(-A * C, -B * C);
        sol = std::array<Integer, 3>{r[1], r[2], Integer(0)};
        Rational z = Rational(r[0]) / Rational(C);
        Rational check = Rational(A * r[1] * r[1] + B * r[2] * r[2]) + Rational(C) * z * z;
        if (check != 0) throw ConsistencyError("ternary descent produced a non-zero value");
        Vec out(3);
        out[order[0]] = Rational((*sol)[0]) * to_orig[order[0]];
        out[order[1]] = Rational((*sol)[1]) * to_orig[order[1]];
        out[order[2]] = z * to_orig[order[2]];
        return out;
    }
    Vec out(3);
    out[order[0]] = Rational((*sol)[0]) * to_orig[order[0]];
    out[order[1]] = Rational((*sol)[1]) * to_orig[order[1]];
    out[order[2]] = Rational((*sol)[2]) * to_orig[order[2]];
    return out;
}

Vec embed(std::size_t n, const std::vector<std::size_t>& idx, const Vec& part) {
    Vec out(n, Rational(0));
    for (std::size_t i = 0; i < idx.size(); ++i) out[idx[i]] = part[i];
    return out;
}

std::optional<Vec> find_zero(const std::vector<Rational>& d, long bound);

// Zero of d through <d_i, d_j> _|_ rest: a value t of the head that rest
// _|_ <t> also represents as minus a value.
std::optional<Vec> split_zero(const std::vector<Rational>& d, std::size_t i, std::size_t j,
                              const std::vector<Integer>& primes, long bound) {
    const std::size_t n = d.size();
    std::vector<std::size_t> rest_idx;
    std::vector<Rational> rest;
    for (std::size_t k = 0; k < n; ++k) {
        if (k != i && k != j) {
            rest_idx.push_back(k);
            rest.push_back(d[k]);
        }
    }
    auto assemble = [&](const Rational& x, const Rational& y, const Vec& r) {
        Vec out(n);
        out[i] = x;
        out[j] = y;
        for (std::size_t k = 0; k < rest_idx.size(); ++k) out[rest_idx[k]] = r[k] / r.back();
        return out;
    };
    // Values t = d_i x^2 + d_j y^2 of the head come with their own zero of
    // <d_i, d_j, -t>.
    const long radius = 12;
    for (long m = 1; m <= radius; ++m) {
        for (long x = 0; x <= m; ++x) {
            for (long y : {m, -m}) {
                for (int swap = 0; swap < 2; ++swap) {
                    const long u = swap ? y : x, w = swap ? x : y;
                    if (std::gcd(u, w) != 1) continue;
                    const Rational tv = d[i] * Rational(u * u) + d[j] * Rational(w * w);
                    std::vector<Rational> ext = rest;
                    ext.push_back(tv);
                    if (!is_isotropic(QuadForm(ext))) continue;
                    Vec r = *find_zero(ext, bound);
                    if (r.back() == 0) continue;
                    return assemble(Rational(u), Rational(w), r);
                }
            }
        }
    }
    // Otherwise t = +-(product of bad primes) * (small squarefree).
    const QuadForm head({d[i], d[j]});
    const QuadForm restq(rest);
    const long mmax = std::min(bound, 64L);
    for (long m = 1; m <= mmax; ++m) {
        if (!is_squarefree(Integer(m))) continue;
        bool coprime = true;
        for (auto& p : primes) coprime = coprime && !mpz_divisible_p(Integer(m).get_mpz_t(), p.get_mpz_t());
        if (!coprime) continue;
        for (unsigned long mask = 0; mask < (1ul << primes.size()); ++mask) {
            Integer prod = m;
            for (std::size_t k = 0; k < primes.size(); ++k) {
                if (mask & (1ul << k)) prod *= primes[k];
            }
            for (int sign : {1, -1}) {
                const Rational tv(prod * sign);
                if (!is_isotropic(direct_sum(head, QuadForm({Rational(-tv)})))) continue;
                std::vector<Rational> ext = rest;
                ext.push_back(tv);
                if (!is_isotropic(QuadForm(ext))) continue;
                Vec h = solve_ternary({d[i], d[j], -tv}, bound);
                Vec r = *find_zero(ext, bound);
                if (h[2] == 0 || r.back() == 0) continue;
                return assemble(h[0] / h[2], h[1] / h[2], r);
            }
        }
    }
    return std::nullopt;
}

Vec find_zero_large(const std::vector<Rational>& d, long bound) {
    const std::size_t n = d.size();
    // Every binary and ternary subform is anisotropic here.
    std::vector<Rational> tail(d.begin() + 2, d.end());
    if (tail.size() >= 2 && is_isotropic(QuadForm(tail))) {
        std::vector<std::size_t> idx(n - 2);
        std::iota(idx.begin(), idx.end(), 2);
        return embed(n, idx, *find_zero(tail, bound));
    }
    std::set<Integer> bad{Integer(2)};
    for (auto& x : d) {
        for (auto& [p, e] : factor(x.get_num())) bad.insert(p);
        for (auto& [p, e] : factor(x.get_den())) bad.insert(p);
    }
    const std::vector<Integer> primes(bad.begin(), bad.end());
    if (primes.size() > 16) throw BoundExceeded("isotropic_vector: too many bad primes for the splitting search");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (auto z = split_zero(d, i, j, primes, bound)) return *z;
        }
    }
    throw BoundExceeded("isotropic_vector: no splitting value found within bound for " + QuadForm(d).str());
}

std::optional<Vec> find_zero(const std::vector<Rational>& d, long bound) {
    const std::size_t n = d.size();
    if (n < 2 || !is_isotropic(QuadForm(d))) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (auto z = binary_zero(d[i], d[j])) return embed(n, {i, j}, *z);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (is_isotropic(QuadForm({d[i], d[j], d[k]}))) {
                    return embed(n, {i, j, k}, solve_ternary({d[i], d[j], d[k]}, bound));
                }
            }
        }
    }
    if (n == 3) throw ConsistencyError("isotropic ternary form without a ternary zero");
    return find_zero_large(d, bound);
}

}  // namespace

std::optional<std::vector<Rational>> isotropic_vector(const QuadForm& q, long bound) {
    auto z = find_zero(q.diag(), bound);
    if (z && q.evaluate(*z) != 0) throw ConsistencyError("isotropic_vector: produced a non-zero value");
    return z;
}

namespace {

// x with q(x) = c supported on one coordinate or on a binary subform.
std::optional<Vec> small_representation(const QuadForm& q, const Rational& c, long bound) {
    for (std::size_t i = 0; i < q.dim(); ++i) {
        if (auto r = rational_sqrt(c / q[i])) {
            Vec v(q.dim(), Rational(0));
            v[i] = *r;
            return v;
        }
    }
    for (std::size_t i = 0; i < q.dim(); ++i) {
        for (std::size_t j = i + 1; j < q.dim(); ++j) {
            if (!is_isotropic(QuadForm({q[i], q[j], -c}))) continue;
            Vec z = solve_ternary({q[i], q[j], -c}, bound);
            if (z[2] == 0) continue;
            Vec v(q.dim(), Rational(0));
            v[i] = z[0] / z[2];
            v[j] = z[1] / z[2];
            return v;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<Rational>> representation_vector(const QuadForm& q, const Rational& c, long bound) {
    if (c == 0) throw DomainError("representation_vector: value must be nonzero");
    if (auto v = small_representation(q, c, bound)) {
        if (q.evaluate(*v) != c) throw ConsistencyError("representation_vector: wrong value");
        return v;
    }
    QuadForm ext = direct_sum(q, QuadForm({Rational(-c)}));
    auto z = isotropic_vector(ext, bound);
    if (!z) return std::nullopt;
    const std::size_t n = q.dim();
    Vec v(n);
    if ((*z)[n] != 0) {
        for (std::size_t i = 0; i < n; ++i) v[i] = (*z)[i] / (*z)[n];
    } else {
        // q is isotropic: q(v0) = 0. Complete to a hyperbolic pair and take
        // v0 + (c/2) w' with w' isotropic, B(v0, w') = 1.
        Vec v0(z->begin(), z->begin() + static_cast<long>(n));
        std::size_t k = 0;
        while (v0[k] == 0) ++k;
        Vec w(n, Rational(0));
        w[k] = 1 / (q[k] * v0[k]);
        Rational half = q.evaluate(w) / 2;
        for (std::size_t i = 0; i < n; ++i) w[i] -= half * v0[i];
        for (std::size_t i = 0; i < n; ++i) v[i] = v0[i] + (c / 2) * w[i];
    }
    if (q.evaluate(v) != c) throw ConsistencyError("representation_vector: wrong value");
    return v;
}

namespace {

// Complement of v in a diagonal form by folding its support one coordinate
// at a time: with f of value a and g = v_s e_s of value b orthogonal to f,
// span(f, g) = <a + b> _|_ <ab(a + b)> via f + g and b f - a g. Entries stay
// products of square classes of the partial sums. Returns nullopt when a
// partial sum vanishes before the last step (or, for isotropic v, only at
// the last step, which leaves the hyperbolic plane span(f, g)).
std::optional<std::vector<Rational>> fold_complement(const QuadForm& q, const Vec& v, bool isotropic) {
    std::vector<std::size_t> pending;
    std::vector<Rational> out;
    for (std::size_t i = 0; i < q.dim(); ++i) {
        if (v[i] == 0) {
            out.push_back(q[i]);
        } else {
            pending.push_back(i);
        }
    }
    if (pending.empty() || (isotropic && pending.size() < 2)) return std::nullopt;
    auto value = [&](std::size_t i) -> Rational { return q[i] * v[i] * v[i]; };
    Rational a = value(pending.front());
    SquareClass ac = SquareClass::of(a);
    pending.erase(pending.begin());
    const std::size_t stop = isotropic ? 1 : 0;
    while (pending.size() > stop) {
        // Next coordinate keeping the partial sum nonzero.
        auto it = std::find_if(pending.begin(), pending.end(), [&](std::size_t i) { return a + value(i) != 0; });
        if (it == pending.end()) return std::nullopt;
        const Rational b = value(*it);
        const Rational sum = a + b;
        const SquareClass sc = SquareClass::of(sum);
        out.emplace_back((ac * SquareClass::of(b) * sc).value());
        a = sum;
        ac = sc;
        pending.erase(it);
    }
    if (isotropic && a + value(pending.front()) != 0) return std::nullopt;
    return out;
}

QuadForm generic_complement(const QuadForm& q, const std::vector<std::vector<Rational>>& vectors) {
    linalg::Mat rows;
    for (auto& v : vectors) {
        Vec r(q.dim());
        for (std::size_t i = 0; i < q.dim(); ++i) r[i] = q[i] * v[i];
        rows.push_back(std::move(r));
    }
    linalg::Mat basis = linalg::nullspace(rows, q.dim());
    if (basis.size() + vectors.size() != q.dim()) {
        throw DomainError("orthogonal_complement: vectors are linearly dependent");
    }
    if (basis.empty()) return QuadForm();
    return QuadForm(linalg::diagonalize_symmetric(linalg::restricted_gram(q.diag(), basis))).reduced();
}

}  // namespace

QuadForm orthogonal_complement(const QuadForm& q, const std::vector<std::vector<Rational>>& vectors) {
    if (vectors.size() == 1 && q.evaluate(vectors[0]) != 0) {
        if (auto f = fold_complement(q, vectors[0], false)) return QuadForm(std::move(*f)).reduced();
    }
    return generic_complement(q, vectors);
}

QuadForm hyperbolic_complement(const QuadForm& q, const std::vector<Rational>& v) {
    if (q.evaluate(v) != 0) throw DomainError("hyperbolic_complement: vector is not isotropic");
    if (auto f = fold_complement(q, v, true)) return QuadForm(std::move(*f)).reduced();
    std::size_t k = 0;
    while (v[k] == 0) ++k;
    Vec w(q.dim(), Rational(0));
    w[k] = 1 / (q[k] * v[k]);
    return generic_complement(q, {v, w});
}

WittClass witt_decompose(const QuadForm& q, long bound) {
    WittClass out;
    QuadForm cur = q.reduced();
    while (auto v = isotropic_vector(cur, bound)) {
        cur = hyperbolic_complement(cur, *v);
        ++out.witt_index;
    }
    out.kernel = cur;
    return out;
}

QuadForm divide_by_binary(const QuadForm& q, const SquareClass& d, long bound) {
    if (q.dim() % 2 != 0) throw DomainError("divide_by_binary: form must have even dimension");
    if (!is_hyperbolic_over(q, d)) {
        throw DomainError("divide_by_binary: form is not hyperbolic over Q(sqrt " + d.str() + ")");
    }
    const Rational dv(d.value());
    std::vector<Rational> tau;
    QuadForm cur = q.reduced();
    while (cur.dim() > 0) {
        // Try entries of the current form first, then small square classes.
        std::vector<SquareClass> firsts;
        for (auto& x : cur.diag()) {
            SquareClass c = SquareClass::of(x);
            if (std::find(firsts.begin(), firsts.end(), c) == firsts.end()) firsts.push_back(c);
        }
        // First pass: both vectors supported on at most two coordinates,
        // which keeps the complements small.
        bool found = false;
        bool small_only = true;
        auto attempt = [&](const SquareClass& t) {
            Rational tv(t.value());
            if (!represents(cur, tv)) return false;
            auto v = small_only ? small_representation(cur, tv, bound) : representation_vector(cur, tv, bound);
            if (!v) return false;
            QuadForm q1 = orthogonal_complement(cur, {*v});
            if (!represents(q1, -tv * dv)) return false;
            auto w = small_only ? small_representation(q1, -tv * dv, bound) : representation_vector(q1, -tv * dv, bound);
            if (!w) return false;
            cur = orthogonal_complement(q1, {*w});
            tau.push_back(tv);
            return true;
        };
        for (int pass = 0; pass < 2 && !found; ++pass) {
            small_only = pass == 0;
            for (auto& t : firsts) {
                if ((found = attempt(t))) break;
            }
            if (!found) found = for_each_squarefree(small_only ? std::min(bound, 500L) : bound, attempt);
        }
        if (!found) throw BoundExceeded("divide_by_binary: no binary block found within bound");
    }
    QuadForm out(tau);
    if (!isometric(tensor(out, QuadForm({Rational(1), -dv})), q)) {
        throw ConsistencyError("divide_by_binary: round trip failed");
    }
    return out;
}

}  // namespace wittforge
