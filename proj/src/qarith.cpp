#include "wittforge/qarith.hpp"

#include "wittforge/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace wittforge {

long default_search_bound() {
    static const long bound = [] {
        if (const char* env = std::getenv("WITTFORGE_SEARCH_BOUND")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) return v;
        }
        return 10'000L;
    }();
    return bound;
}

namespace {

// A nontrivial factor of the odd composite n by Brent's variant of Pollard
// rho, or 0 when the step budget runs out.
Integer rho_split(const Integer& n) {
    constexpr unsigned long kBudget = 1ul << 22;
    for (unsigned long c = 1; c < 20; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1, steps = 0;
        auto f = [&](const Integer& v) {
            Integer out = v * v + c;
            mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
            return out;
        };
        while (g == 1 && steps < kBudget) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            for (unsigned long k = 0; k < r && g == 1; k += 128) {
                ys = y;
                for (unsigned long i = 0; i < std::min(128ul, r - k); ++i) {
                    y = f(y);
                    Integer diff = abs(x - y);
                    q = q * diff;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                steps += 128;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one step at a time.
            do {
                ys = f(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != 1 && g != n) return g;
    }
    return 0;
}

void split_cofactor(const Integer& m, std::vector<Integer>& primes) {
    if (m == 1) return;
    if (mpz_probab_prime_p(m.get_mpz_t(), 40) != 0) {
        primes.push_back(m);
        return;
    }
    Integer g = rho_split(m);
    if (g == 0) {
        throw BoundExceeded("factor: cofactor " + m.get_str() + " could not be split");
    }
    split_cofactor(g, primes);
    split_cofactor(m / g, primes);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor(const Integer& n, unsigned long bound) {
    if (n == 0) throw DomainError("factor: zero has no factorization");
    Integer m = abs(n);
    std::vector<std::pair<Integer, unsigned>> out;
    auto strip = [&](unsigned long p) {
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) return;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        out.emplace_back(Integer(p), e);
    };
    // Trial division over small primes, then rho on what is left.
    const unsigned long trial = std::min(bound, 1ul << 12);
    strip(2);
    for (unsigned long p = 3; p <= trial; p += 2) {
        if (m == 1) break;
        if (Integer(p) * p > m) break;
        strip(p);
    }
    if (m != 1) {
        std::vector<Integer> primes;
        split_cofactor(m, primes);
        std::sort(primes.begin(), primes.end());
        for (auto& p : primes) {
            if (!out.empty() && out.back().first == p) {
                ++out.back().second;
            } else {
                out.emplace_back(p, 1);
            }
        }
    }
    return out;
}

bool is_prime(const Integer& p) {
    return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

bool is_squarefree(const Integer& n) {
    if (n == 0) return false;
    for (const auto& [p, e] : factor(n)) {
        if (e > 1) return false;
    }
    return true;
}

Rational parse_rational(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0) {
        throw ParseError("not a rational number: '" + text + "'");
    }
    if (r.get_den() == 0) throw ParseError("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& n) { return n.get_str(); }

SquareClass SquareClass::of(const Rational& r) {
    if (r == 0) throw DomainError("square class of zero is undefined");
    Integer num = r.get_num() * r.get_den();
    Integer s = 1;
    for (const auto& [p, e] : factor(num)) {
        if (e % 2 == 1) s *= p;
    }
    if (num < 0) s = -s;
    return SquareClass(s);
}

std::vector<Integer> SquareClass::primes() const {
    std::vector<Integer> out;
    for (auto& [p, e] : factor(value_)) out.push_back(p);
    return out;
}

SquareClass operator*(const SquareClass& x, const SquareClass& y) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), x.value_.get_mpz_t(), y.value_.get_mpz_t());
    Integer v = (x.value_ / g) * (y.value_ / g);
    return SquareClass(v);
}

SquareClass squarefree_part(const Rational& r) { return SquareClass::of(r); }

Place Place::prime(const Integer& p) {
    if (!is_prime(p)) throw DomainError("not a prime: " + p.get_str());
    return Place(p);
}

Place Place::parse(const std::string& text) {
    if (text == "real" || text == "inf" || text == "oo") return real();
    Integer p;
    if (p.set_str(text, 10) != 0) throw ParseError("not a place: '" + text + "'");
    if (!is_prime(p)) throw ParseError("not a prime place: '" + text + "'");
    return Place(p);
}

int legendre(const Integer& a, const Integer& p) {
    if (p == 2 || !is_prime(p)) throw DomainError("legendre: modulus must be an odd prime");
    Integer r = a % p;
    if (r < 0) r += p;
    return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

namespace {

// a = p^alpha * u with alpha in {0,1} for a squarefree.
std::pair<int, Integer> split_prime(const Integer& a, const Integer& p) {
    if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) return {1, a / p};
    return {0, a};
}

int mod_small(const Integer& u, unsigned long m) {
    return static_cast<int>(mpz_fdiv_ui(u.get_mpz_t(), m));
}

}  // namespace

int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v) {
    if (v.is_real()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
    const Integer& p = v.p();
    auto [alpha, u] = split_prime(a.value(), p);
    auto [beta, w] = split_prime(b.value(), p);
    int exponent = 0;
    if (p == 2) {
        int eu = mod_small(u, 4) == 3 ? 1 : 0;
        int ew = mod_small(w, 4) == 3 ? 1 : 0;
        int u8 = mod_small(u, 8), w8 = mod_small(w, 8);
        int ou = (u8 == 3 || u8 == 5) ? 1 : 0;
        int ow = (w8 == 3 || w8 == 5) ? 1 : 0;
        exponent = eu * ew + alpha * ow + beta * ou;
        return exponent % 2 == 0 ? 1 : -1;
    }
    int sign = 1;
    // epsilon(p) = (p-1)/2 mod 2
    if (alpha && beta && mod_small(p, 4) == 3) sign = -sign;
    if (beta) sign *= legendre(u, p);
    if (alpha) sign *= legendre(w, p);
    return sign;
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    return hilbert_symbol(SquareClass::of(a), SquareClass::of(b), v);
}

bool is_local_square(const SquareClass& s, const Place& v) {
    if (v.is_real()) return s.sign() > 0;
    const Integer& p = v.p();
    if (mpz_divisible_p(s.value().get_mpz_t(), p.get_mpz_t())) return false;
    if (p == 2) return mod_small(s.value(), 8) == 1;
    return legendre(s.value(), p) == 1;
}

std::vector<Place> candidate_places(const SquareClass& a, const SquareClass& b) {
    std::vector<Place> out{Place::real(), Place::prime(2)};
    auto add = [&](const SquareClass& s) {
        for (auto& p : s.primes()) {
            if (p == 2) continue;
            Place q = Place::prime(p);
            bool seen = false;
            for (auto& x : out) seen = seen || x == q;
            if (!seen) out.push_back(q);
        }
    };
    add(a);
    add(b);
    return out;
}

}  // namespace wittforge
