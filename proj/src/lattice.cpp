#include "relcycles/lattice.hpp"

#include <utility>

#include "relcycles/error.hpp"

namespace relcycles {

namespace {

// Row echelon form of the row lattice; rows are combined by Euclid steps.
IntMatrix echelon(IntMatrix m, std::size_t cols) {
    IntMatrix out;
    std::size_t top = 0;
    for (std::size_t c = 0; c < cols && top < m.size(); ++c) {
        for (;;) {
            std::size_t best = m.size();
            for (std::size_t r = top; r < m.size(); ++r)
                if (m[r][c] != 0 && (best == m.size() || abs(m[r][c]) < abs(m[best][c]))) best = r;
            if (best == m.size()) break;
            std::swap(m[top], m[best]);
            bool clean = true;
            for (std::size_t r = top + 1; r < m.size(); ++r) {
                if (m[r][c] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[top][c].get_mpz_t());
                for (std::size_t j = c; j < cols; ++j) m[r][j] -= q * m[top][j];
                if (m[r][c] != 0) clean = false;
            }
            if (clean) {
                ++top;
                break;
            }
        }
    }
    m.resize(top);
    return m;
}

} // namespace

SmithForm::SmithForm(const IntMatrix& rows, std::size_t cols) : cols_(cols) {
    for (const auto& r : rows)
        if (r.size() != cols) throw Error(ErrorKind::InvalidArgument, "SmithForm: ragged matrix");
    IntMatrix a = echelon(rows, cols);
    const std::size_t n = a.size();
    v_.assign(cols, IntVector(cols, 0));
    v_inv_.assign(cols, IntVector(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) v_[i][i] = v_inv_[i][i] = 1;

    // Column operation col_j -= q col_i, mirrored into V and V^-1.
    auto col_sub = [&](std::size_t j, std::size_t i, const mpz_class& q) {
        for (auto& row : a) row[j] -= q * row[i];
        for (auto& row : v_) row[j] -= q * row[i];
        for (std::size_t k = 0; k < cols; ++k) v_inv_[i][k] += q * v_inv_[j][k];
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : v_) std::swap(row[i], row[j]);
        std::swap(v_inv_[i], v_inv_[j]);
    };
    auto row_sub = [&](std::size_t j, std::size_t i, const mpz_class& q) {
        for (std::size_t k = 0; k < cols; ++k) a[j][k] -= q * a[i][k];
    };

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            std::size_t br = n, bc = cols;
            for (std::size_t r = t; r < n; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (a[r][c] != 0 && (br == n || abs(a[r][c]) < abs(a[br][bc]))) br = r, bc = c;
            if (br == n) break;
            std::swap(a[t], a[br]);
            col_swap(t, bc);
            bool done = true;
            for (std::size_t r = t + 1; r < n; ++r) {
                if (a[r][t] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[r][t].get_mpz_t(), a[t][t].get_mpz_t());
                row_sub(r, t, q);
                if (a[r][t] != 0) done = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (a[t][c] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][c].get_mpz_t(), a[t][t].get_mpz_t());
                col_sub(c, t, q);
                if (a[t][c] != 0) done = false;
            }
            if (!done) continue;
            // Divisibility: fold a offending row into row t and repeat.
            std::size_t bad = n;
            for (std::size_t r = t + 1; r < n && bad == n; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (a[r][c] % a[t][t] != 0) {
                        bad = r;
                        break;
                    }
            if (bad == n) break;
            row_sub(t, bad, -1);
        }
        if (a[t][t] == 0) break;
        if (a[t][t] < 0) {
            for (auto& row : a) row[t] = -row[t];
            for (auto& row : v_) row[t] = -row[t];
            for (auto& x : v_inv_[t]) x = -x;
        }
        ++rank_;
    }
    diag_.assign(cols, 0);
    for (std::size_t t = 0; t < rank_; ++t) diag_[t] = a[t][t];
}

IntVector SmithForm::reduce(const IntVector& vec) const {
    if (vec.size() != cols_) throw Error(ErrorKind::InvalidArgument, "SmithForm::reduce: length mismatch");
    IntVector out(cols_, 0);
    for (std::size_t t = 0; t < cols_; ++t) {
        mpz_class s = 0;
        for (std::size_t k = 0; k < cols_; ++k) s += vec[k] * v_[k][t];
        if (diag_[t] != 0) mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), diag_[t].get_mpz_t());
        out[t] = s;
    }
    return out;
}

mpz_class SmithForm::torsion_order() const {
    mpz_class order = 1;
    for (std::size_t t = 0; t < rank_; ++t) order *= diag_[t];
    return order;
}

} // namespace relcycles
