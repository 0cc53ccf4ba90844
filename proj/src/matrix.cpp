#include "toric/matrix.hpp"

#include <algorithm>

namespace toric {

QVec QMat::row(int i) const {
    QVec out(cols_);
    for (int j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
    return out;
}

void QMat::set_row(int i, const QVec& v) {
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

QMat QMat::from_rows(const std::vector<QVec>& rows, int cols) {
    QMat m(int(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i) m.set_row(i, rows[i]);
    return m;
}

QMat QMat::from_int_rows(const std::vector<IVec>& rows, int cols) {
    QMat m(int(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Rat(rows[i][j]);
    return m;
}

IVec ZMat::row(int i) const {
    IVec out(cols_);
    for (int j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
    return out;
}

IVec ZMat::col(int j) const {
    IVec out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

ZMat ZMat::from_rows(const std::vector<IVec>& rows, int cols) {
    ZMat m(int(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

IVec ZMat::apply(const IVec& x) const {
    IVec out(rows_);
    for (int i = 0; i < rows_; ++i) {
        Int s = 0;
        for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
        out[i] = s;
    }
    return out;
}

QMat matmul(const QMat& a, const QMat& b) {
    QMat out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rat& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Rat& bkj = b(k, j);
                if (bkj != 0) out(i, j) += aik * bkj;
            }
        }
    return out;
}

QMat rref(QMat m, std::vector<int>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    int pr = 0;
    for (int c = 0; c < m.cols() && pr < m.rows(); ++c) {
        int sel = -1;
        for (int r = pr; r < m.rows(); ++r)
            if (m(r, c) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != pr)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(pr, j));
        Rat inv = 1 / m(pr, c);
        for (int j = c; j < m.cols(); ++j) m(pr, j) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == pr || m(r, c) == 0) continue;
            Rat f = m(r, c);
            for (int j = c; j < m.cols(); ++j) m(r, j) -= f * m(pr, j);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++pr;
    }
    return m;
}

int rank(const QMat& m) {
    // Clear denominators rowwise, then run the fraction-free elimination.
    std::vector<IVec> rows;
    rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        IVec r = primitive_of_rational(m.row(i));
        if (!is_zero(r)) rows.push_back(std::move(r));
    }
    return rank_fraction_free(ZMat::from_rows(rows, m.cols()));
}

int rank_fraction_free(ZMat m) {
    const int nr = m.rows(), nc = m.cols();
    std::vector<int> rperm(nr), cperm(nc);
    for (int i = 0; i < nr; ++i) rperm[i] = i;
    for (int j = 0; j < nc; ++j) cperm[j] = j;

    Int prev = 1;
    int k = 0;
    while (k < nr && k < nc) {
        // Smallest nonzero |entry| keeps the fraction-free updates small on
        // sparse incidence-like matrices.
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = k; i < nr; ++i)
            for (int j = k; j < nc; ++j) {
                const Int& v = m(rperm[i], cperm[j]);
                if (v == 0) continue;
                Int av = abs(v);
                if (pi < 0 || av < best) {
                    best = av;
                    pi = i;
                    pj = j;
                    if (best == 1) goto found;
                }
            }
        if (pi < 0) break;
    found:
        std::swap(rperm[k], rperm[pi]);
        std::swap(cperm[k], cperm[pj]);
        const Int piv = m(rperm[k], cperm[k]);
        for (int i = k + 1; i < nr; ++i) {
            // Even when m[i][k] == 0 the row must be rescaled by piv/prev to
            // keep the one-step division exact.
            const Int mik = m(rperm[i], cperm[k]);
            for (int j = k + 1; j < nc; ++j) {
                Int& t = m(rperm[i], cperm[j]);
                t = (t * piv - mik * m(rperm[k], cperm[j])) / prev;
            }
            m(rperm[i], cperm[k]) = 0;
        }
        prev = piv;
        ++k;
    }
    return k;
}

std::vector<QVec> q_kernel_basis(const QMat& m) {
    std::vector<int> pivots;
    QMat r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<QVec> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        QVec v(m.cols(), Rat(0));
        v[c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(int(i), c);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return basis;
    QMat b = rref(QMat::from_rows(basis, m.cols()));
    std::vector<QVec> out;
    for (int i = 0; i < b.rows(); ++i) out.push_back(b.row(i));
    return out;
}

std::vector<IVec> hnf_rows(std::vector<IVec> rows, int cols) {
    // Integer row reduction: euclidean elimination column by column.
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const IVec& v) { return is_zero(v); }),
               rows.end());
    size_t top = 0;
    for (int c = 0; c < cols && top < rows.size(); ++c) {
        // Reduce all entries in column c at/below `top` to a single one.
        while (true) {
            int nz = -1;
            Int best = 0;
            for (size_t i = top; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Int av = abs(rows[i][c]);
                if (nz < 0 || av < best) {
                    nz = int(i);
                    best = av;
                }
            }
            if (nz < 0) break;
            std::swap(rows[top], rows[size_t(nz)]);
            bool done = true;
            for (size_t i = top + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Int q = rows[i][c] / rows[top][c];  // truncated division
                if (q != 0)
                    for (int j = 0; j < cols; ++j) rows[i][j] -= q * rows[top][j];
                if (rows[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[top][c] == 0) continue;
        if (rows[top][c] < 0)
            for (int j = 0; j < cols; ++j) rows[top][j] = -rows[top][j];
        // Reduce the entries above the pivot into [0, pivot).
        for (size_t i = 0; i < top; ++i) {
            Int q = rows[i][c] / rows[top][c];
            if (rows[i][c] - q * rows[top][c] < 0) q -= 1;
            if (q != 0)
                for (int j = 0; j < cols; ++j) rows[i][j] -= q * rows[top][j];
        }
        ++top;
    }
    rows.resize(top);
    return rows;
}

std::vector<IVec> z_kernel_basis(const ZMat& m) {
    const int d = m.cols();
    // Column-style elimination on A, mirroring unimodular column operations
    // on U = I. Columns of U whose A-column becomes zero span the kernel.
    std::vector<IVec> acols(d), ucols(d);
    for (int j = 0; j < d; ++j) {
        acols[j] = m.col(j);
        ucols[j] = IVec(d, Int(0));
        ucols[j][j] = 1;
    }
    int done = 0;
    for (int r = 0; r < m.rows() && done < d; ++r) {
        while (true) {
            int sel = -1;
            Int best = 0;
            for (int j = done; j < d; ++j) {
                if (acols[j][r] == 0) continue;
                Int av = abs(acols[j][r]);
                if (sel < 0 || av < best) {
                    sel = j;
                    best = av;
                }
            }
            if (sel < 0) break;
            std::swap(acols[done], acols[sel]);
            std::swap(ucols[done], ucols[sel]);
            bool clean = true;
            for (int j = done + 1; j < d; ++j) {
                if (acols[j][r] == 0) continue;
                Int q = acols[j][r] / acols[done][r];
                if (q != 0) {
                    for (int t = 0; t < m.rows(); ++t) acols[j][t] -= q * acols[done][t];
                    for (int t = 0; t < d; ++t) ucols[j][t] -= q * ucols[done][t];
                }
                if (acols[j][r] != 0) clean = false;
            }
            if (clean) break;
        }
        if (done < d && acols[done][r] != 0) ++done;
    }
    std::vector<IVec> kernel;
    for (int j = done; j < d; ++j) kernel.push_back(ucols[j]);
    return hnf_rows(std::move(kernel), d);
}

std::optional<QVec> solve_square(const QMat& a, const QVec& b) {
    const int n = a.rows();
    QMat aug(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    std::vector<int> pivots;
    QMat r = rref(aug, &pivots);
    if (int(pivots.size()) != n || (!pivots.empty() && pivots.back() == n)) return std::nullopt;
    QVec x(n);
    for (int i = 0; i < n; ++i) x[i] = r(i, n);
    return x;
}

std::optional<QVec> solve_independent_columns(const QMat& a, const QVec& b) {
    const int n = a.rows(), m = a.cols();
    QMat aug(n, m + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) aug(i, j) = a(i, j);
        aug(i, m) = b[i];
    }
    std::vector<int> pivots;
    QMat r = rref(aug, &pivots);
    for (int c : pivots)
        if (c == m) return std::nullopt;  // inconsistent
    if (int(pivots.size()) != m) return std::nullopt;  // columns were dependent
    QVec x(m);
    for (int i = 0; i < m; ++i) x[i] = r(i, m);
    return x;
}

}  // namespace toric
