#include "qrefl/linalg.hpp"

#include <cstdlib>
#include <string>

namespace qrefl {

int thread_count() {
    static const int count = [] {
        const char* env = std::getenv("QREFL_THREADS");
        if (env == nullptr) return 1;
        try {
            int v = std::stoi(env);
            return v > 0 ? v : 1;
        } catch (const std::exception&) {
            return 1;
        }
    }();
    return count;
}

namespace {

// lcm of the denominators in one row, as a polynomial
LaurentPoly row_denominator(const ScalarMatrix& a, Eigen::Index row) {
    LaurentPoly l(Rational(1));
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        const Scalar& x = a(row, j);
        if (x.is_polynomial()) continue;
        const LaurentPoly& d = x.denominator();
        LaurentPoly g = gcd(l, d);
        l = exact_quotient(l * d, g);
    }
    return l;
}

}  // namespace

Scalar det_fraction_free(const ScalarMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("det: matrix is not square");
    const Eigen::Index n = a.rows();
    if (n == 0) return Scalar(1);
    ScalarMatrix m = a;
    Scalar cleared(1);
    for (Eigen::Index i = 0; i < n; ++i) {
        LaurentPoly l = row_denominator(a, i);
        if (l.is_one()) continue;
        Scalar factor(l);
        for (Eigen::Index j = 0; j < n; ++j)
            if (!m(i, j).is_zero()) m(i, j) *= factor;
        cleared *= factor;
    }
    Scalar sign(1);
    Scalar prev(1);
    for (Eigen::Index k = 0; k < n - 1; ++k) {
        if (m(k, k).is_zero()) {
            Eigen::Index swap = k + 1;
            while (swap < n && m(swap, k).is_zero()) ++swap;
            if (swap == n) return Scalar(0);
            m.row(k).swap(m.row(swap));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                Scalar v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = v.is_zero() ? v : v / prev;
            }
            m(i, k) = Scalar(0);
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1) / cleared;
}

ScalarMatrix inverse(const ScalarMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("inverse: matrix is not square");
    const Eigen::Index n = a.rows();
    ScalarMatrix m = a;
    ScalarMatrix inv = identity_matrix<Scalar>(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index pivot = k;
        while (pivot < n && m(pivot, k).is_zero()) ++pivot;
        if (pivot == n) throw SingularMatrix("inverse: matrix is singular");
        if (pivot != k) {
            m.row(k).swap(m.row(pivot));
            inv.row(k).swap(inv.row(pivot));
        }
        Scalar p = m(k, k).inverse();
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!m(k, j).is_zero()) m(k, j) *= p;
            if (!inv(k, j).is_zero()) inv(k, j) *= p;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == k || m(i, k).is_zero()) continue;
            Scalar f = m(i, k);
            for (Eigen::Index j = 0; j < n; ++j) {
                if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
                if (!inv(k, j).is_zero()) inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

ScalarMatrix diagonal_matrix(const std::vector<Scalar>& diag) {
    auto n = static_cast<Eigen::Index>(diag.size());
    ScalarMatrix m = zero_matrix<Scalar>(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
    return m;
}

ScalarMatrix scaled(const Scalar& c, const ScalarMatrix& a) {
    ScalarMatrix m = a;
    for (Eigen::Index i = 0; i < m.size(); ++i)
        if (!m.data()[i].is_zero()) m.data()[i] = c * m.data()[i];
    return m;
}

}  // namespace qrefl
