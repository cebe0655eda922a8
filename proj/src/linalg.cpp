#include "wittforge/linalg.hpp"

#include "wittforge/errors.hpp"

#include <utility>

namespace wittforge::linalg {

Rational dot(const Vec& x, const Vec& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

Mat nullspace(const Mat& rows, std::size_t ncols) {
    Mat a = rows;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
        std::size_t sel = r;
        while (sel < a.size() && a[sel][c] == 0) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[r], a[sel]);
        Rational inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t k = 0; k < ncols; ++k) a[i][k] -= f * a[r][k];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    Mat basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(ncols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

Vec diagonalize_symmetric(Mat g) {
    const std::size_t n = g.size();
    Vec out;
    for (std::size_t i = 0; i < n; ++i) {
        if (g[i][i] == 0) {
            std::size_t j = i + 1;
            while (j < n && g[j][j] == 0) ++j;
            if (j < n) {
                std::swap(g[i], g[j]);
                for (auto& row : g) std::swap(row[i], row[j]);
            } else {
                j = i + 1;
                while (j < n && g[i][j] == 0) ++j;
                if (j == n) throw DomainError("diagonalize_symmetric: singular matrix");
                // e_i <- e_i + e_j gives a nonzero diagonal entry 2 g_ij.
                for (std::size_t k = 0; k < n; ++k) g[i][k] += g[j][k];
                for (std::size_t k = 0; k < n; ++k) g[k][i] += g[k][j];
            }
        }
        const Rational pivot = g[i][i];
        out.push_back(pivot);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g[j][i] == 0) continue;
            Rational f = g[j][i] / pivot;
            for (std::size_t k = i; k < n; ++k) g[j][k] -= f * g[i][k];
            for (std::size_t k = i; k < n; ++k) g[k][j] = g[j][k];
        }
    }
    return out;
}

Mat restricted_gram(const Vec& weights, const Mat& basis) {
    const std::size_t m = basis.size();
    Mat g(m, Vec(m, Rational(0)));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a; b < m; ++b) {
            Rational s = 0;
            for (std::size_t i = 0; i < weights.size(); ++i) s += weights[i] * basis[a][i] * basis[b][i];
            g[a][b] = g[b][a] = s;
        }
    }
    return g;
}

Mat inverse(Mat m) {
    const std::size_t n = m.size();
    Mat inv(n, Vec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m[sel][c] == 0) ++sel;
        if (sel == n) throw DomainError("inverse: singular matrix");
        std::swap(m[c], m[sel]);
        std::swap(inv[c], inv[sel]);
        Rational p = 1 / m[c][c];
        for (std::size_t k = 0; k < n; ++k) {
            m[c][k] *= p;
            inv[c][k] *= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t k = 0; k < n; ++k) {
                m[i][k] -= f * m[c][k];
                inv[i][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

IMat hermite_normal_form(IMat rows) {
    if (rows.empty()) return rows;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        // Euclid on column c among rows r..end.
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
                for (std::size_t k = 0; k < ncols; ++k) rows[i][k] -= q * rows[r][k];
                if (rows[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0) {
            for (auto& x : rows[r]) x = -x;
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
            for (std::size_t k = 0; k < ncols; ++k) rows[i][k] -= q * rows[r][k];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

}  // namespace wittforge::linalg
