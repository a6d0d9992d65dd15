#ifndef QREFL_TENSOR_HPP
#define QREFL_TENSOR_HPP

// Dense operators on tensor powers V^{⊗k}, dim V = n.
//
// The basis vector v_{i_1} ⊗ ... ⊗ v_{i_k} (indices 0-based here) has flat
// index sum_j i_j * n^{k-1-j}: the first leg is the most significant digit.

#include <Eigen/Core>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "qrefl/errors.hpp"

namespace qrefl {

template <class T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

template <class T>
bool is_zero_value(const T& x) {
    if constexpr (requires { x.is_zero(); })
        return x.is_zero();
    else
        return x == T(0);
}

// Worker count from QREFL_THREADS; 1 when unset or invalid.
int thread_count();

inline std::size_t ipow(int base, int exponent) {
    std::size_t r = 1;
    for (int i = 0; i < exponent; ++i) r *= static_cast<std::size_t>(base);
    return r;
}

inline std::size_t flatten(std::span<const int> multi, int n) {
    std::size_t idx = 0;
    for (int i : multi) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
    return idx;
}

inline std::vector<int> unflatten(std::size_t index, int n, int legs) {
    std::vector<int> multi(static_cast<std::size_t>(legs));
    for (int j = legs - 1; j >= 0; --j) {
        multi[static_cast<std::size_t>(j)] = static_cast<int>(index % static_cast<std::size_t>(n));
        index /= static_cast<std::size_t>(n);
    }
    return multi;
}

template <class T>
Matrix<T> zero_matrix(Eigen::Index rows, Eigen::Index cols) {
    Matrix<T> m(rows, cols);
    m.fill(T(0));
    return m;
}

template <class T>
Matrix<T> identity_matrix(Eigen::Index dim) {
    Matrix<T> m = zero_matrix<T>(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) m(i, i) = T(1);
    return m;
}

template <class T>
Vector<T> zero_vector(Eigen::Index dim) {
    Vector<T> v(dim);
    v.fill(T(0));
    return v;
}

namespace detail {

template <class F>
void parallel_for(Eigen::Index count, F&& body) {
    int workers = std::min<Eigen::Index>(thread_count(), count);
    if (workers <= 1) {
        for (Eigen::Index j = 0; j < count; ++j) body(j);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (Eigen::Index j = w; j < count; j += workers) body(j);
        });
    for (auto& t : pool) t.join();
}

}  // namespace detail

// Product skipping structural zeros. Each output entry is summed in
// increasing inner index, so the result does not depend on thread count.
template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("multiply: " + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()));
    std::vector<std::vector<Eigen::Index>> nz(static_cast<std::size_t>(a.cols()));
    for (Eigen::Index k = 0; k < a.cols(); ++k)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (!is_zero_value(a(i, k))) nz[static_cast<std::size_t>(k)].push_back(i);
    Matrix<T> out = zero_matrix<T>(a.rows(), b.cols());
    detail::parallel_for(b.cols(), [&](Eigen::Index j) {
        for (Eigen::Index k = 0; k < b.rows(); ++k) {
            const T& bkj = b(k, j);
            if (is_zero_value(bkj)) continue;
            for (Eigen::Index i : nz[static_cast<std::size_t>(k)]) out(i, j) += a(i, k) * bkj;
        }
    });
    return out;
}

template <class T>
Vector<T> apply(const Matrix<T>& a, const Vector<T>& x) {
    if (a.cols() != x.rows()) throw DimensionMismatch("apply: operator and vector sizes differ");
    Vector<T> out = zero_vector<T>(a.rows());
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
        if (is_zero_value(x(k))) continue;
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (!is_zero_value(a(i, k))) out(i) += a(i, k) * x(k);
    }
    return out;
}

template <class T>
Matrix<T> kron_matrix(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> out = zero_matrix<T>(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (is_zero_value(a(i, j))) continue;
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    if (!is_zero_value(b(k, l))) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
    return multiply(a, b) - multiply(b, a);
}

namespace detail {

inline void check_positions(std::span<const int> dims, std::span<const int> positions) {
    std::vector<bool> seen(dims.size(), false);
    for (int p : positions) {
        if (p < 0 || static_cast<std::size_t>(p) >= dims.size())
            throw BadPositions("leg position " + std::to_string(p + 1) + " out of range");
        if (seen[static_cast<std::size_t>(p)]) throw BadPositions("repeated leg position " + std::to_string(p + 1));
        seen[static_cast<std::size_t>(p)] = true;
    }
}

// Mixed-radix digits of a flat index for legs with the given dimensions.
inline void digits_of(std::size_t index, std::span<const int> dims, std::vector<int>& out) {
    out.resize(dims.size());
    for (std::size_t j = dims.size(); j-- > 0;) {
        out[j] = static_cast<int>(index % static_cast<std::size_t>(dims[j]));
        index /= static_cast<std::size_t>(dims[j]);
    }
}

inline std::size_t index_of(const std::vector<int>& digits, std::span<const int> dims) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < dims.size(); ++j) idx = idx * static_cast<std::size_t>(dims[j]) + digits[j];
    return idx;
}

}  // namespace detail

/// Operator acting as `op` on the legs `positions` (0-based, in the listed
/// order) of a tensor product with leg dimensions `dims`, identity elsewhere.
template <class T>
Matrix<T> embed_legs(const Matrix<T>& op, std::span<const int> dims, std::span<const int> positions) {
    detail::check_positions(dims, positions);
    std::vector<int> sub_dims;
    for (int p : positions) sub_dims.push_back(dims[static_cast<std::size_t>(p)]);
    std::size_t sub = std::accumulate(sub_dims.begin(), sub_dims.end(), std::size_t{1}, std::multiplies<>());
    if (static_cast<std::size_t>(op.rows()) != sub || static_cast<std::size_t>(op.cols()) != sub)
        throw DimensionMismatch("embed_legs: operator size does not match the selected legs");
    std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
    Matrix<T> out = zero_matrix<T>(static_cast<Eigen::Index>(total), static_cast<Eigen::Index>(total));
    std::vector<int> digits, sub_digits(positions.size()), row_digits;
    for (std::size_t col = 0; col < total; ++col) {
        detail::digits_of(col, dims, digits);
        for (std::size_t a = 0; a < positions.size(); ++a)
            sub_digits[a] = digits[static_cast<std::size_t>(positions[a])];
        auto sc = static_cast<Eigen::Index>(detail::index_of(sub_digits, sub_dims));
        for (Eigen::Index sr = 0; sr < op.rows(); ++sr) {
            if (is_zero_value(op(sr, sc))) continue;
            row_digits = digits;
            std::vector<int> sr_digits;
            detail::digits_of(static_cast<std::size_t>(sr), sub_dims, sr_digits);
            for (std::size_t a = 0; a < positions.size(); ++a)
                row_digits[static_cast<std::size_t>(positions[a])] = sr_digits[a];
            out(static_cast<Eigen::Index>(detail::index_of(row_digits, dims)), static_cast<Eigen::Index>(col)) =
                op(sr, sc);
        }
    }
    return out;
}

/// Applies `op` on the given legs of a vector without forming the full operator.
template <class T>
Vector<T> apply_on_legs(const Matrix<T>& op, std::span<const int> dims, std::span<const int> positions,
                        const Vector<T>& x) {
    detail::check_positions(dims, positions);
    std::vector<int> sub_dims;
    for (int p : positions) sub_dims.push_back(dims[static_cast<std::size_t>(p)]);
    std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
    if (static_cast<std::size_t>(x.rows()) != total) throw DimensionMismatch("apply_on_legs: vector size");
    Vector<T> out = zero_vector<T>(x.rows());
    std::vector<int> digits, sub_digits(positions.size()), row_digits, sr_digits;
    for (std::size_t col = 0; col < total; ++col) {
        const T& xc = x(static_cast<Eigen::Index>(col));
        if (is_zero_value(xc)) continue;
        detail::digits_of(col, dims, digits);
        for (std::size_t a = 0; a < positions.size(); ++a)
            sub_digits[a] = digits[static_cast<std::size_t>(positions[a])];
        auto sc = static_cast<Eigen::Index>(detail::index_of(sub_digits, sub_dims));
        for (Eigen::Index sr = 0; sr < op.rows(); ++sr) {
            if (is_zero_value(op(sr, sc))) continue;
            row_digits = digits;
            detail::digits_of(static_cast<std::size_t>(sr), sub_dims, sr_digits);
            for (std::size_t a = 0; a < positions.size(); ++a)
                row_digits[static_cast<std::size_t>(positions[a])] = sr_digits[a];
            out(static_cast<Eigen::Index>(detail::index_of(row_digits, dims))) += op(sr, sc) * xc;
        }
    }
    return out;
}

/// Dense operator on V^{⊗legs} with dim V = n.
template <class T>
class TensorOperator {
   public:
    TensorOperator(int n, int legs) : n_(n), legs_(legs), m_(zero_matrix<T>(dim(n, legs), dim(n, legs))) {}
    TensorOperator(int n, int legs, Matrix<T> m) : n_(n), legs_(legs), m_(std::move(m)) {
        if (m_.rows() != dim(n, legs) || m_.cols() != dim(n, legs))
            throw DimensionMismatch("TensorOperator: matrix is not n^legs square");
    }

    static TensorOperator identity(int n, int legs) {
        return TensorOperator(n, legs, identity_matrix<T>(dim(n, legs)));
    }

    int n() const noexcept { return n_; }
    int legs() const noexcept { return legs_; }
    Eigen::Index size() const noexcept { return m_.rows(); }
    const Matrix<T>& matrix() const noexcept { return m_; }
    Matrix<T>& matrix() noexcept { return m_; }

    const T& operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }
    T& operator()(Eigen::Index r, Eigen::Index c) { return m_(r, c); }

    // entry for multi-indices (0-based)
    const T& at(std::span<const int> row, std::span<const int> col) const {
        return m_(static_cast<Eigen::Index>(flatten(row, n_)), static_cast<Eigen::Index>(flatten(col, n_)));
    }

    friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
        check_compatible(a, b);
        return TensorOperator(a.n_, a.legs_, multiply(a.m_, b.m_));
    }
    friend TensorOperator operator+(const TensorOperator& a, const TensorOperator& b) {
        check_compatible(a, b);
        return TensorOperator(a.n_, a.legs_, a.m_ + b.m_);
    }
    friend TensorOperator operator-(const TensorOperator& a, const TensorOperator& b) {
        check_compatible(a, b);
        return TensorOperator(a.n_, a.legs_, a.m_ - b.m_);
    }
    friend TensorOperator operator*(const T& c, const TensorOperator& a) {
        Matrix<T> m = a.m_;
        for (Eigen::Index i = 0; i < m.size(); ++i)
            if (!is_zero_value(m.data()[i])) m.data()[i] = c * m.data()[i];
        return TensorOperator(a.n_, a.legs_, std::move(m));
    }
    friend bool operator==(const TensorOperator& a, const TensorOperator& b) {
        return a.n_ == b.n_ && a.legs_ == b.legs_ && a.m_ == b.m_;
    }

   private:
    static Eigen::Index dim(int n, int legs) { return static_cast<Eigen::Index>(ipow(n, legs)); }
    static void check_compatible(const TensorOperator& a, const TensorOperator& b) {
        if (a.n_ != b.n_ || a.legs_ != b.legs_) throw DimensionMismatch("TensorOperator: shapes differ");
    }

    int n_;
    int legs_;
    Matrix<T> m_;
};

/// Coordinates of a vector in V^{⊗legs}.
template <class T>
class TensorVector {
   public:
    TensorVector(int n, int legs) : n_(n), legs_(legs), coords_(zero_vector<T>(ipow(n, legs))) {}
    TensorVector(int n, int legs, Vector<T> coords) : n_(n), legs_(legs), coords_(std::move(coords)) {
        if (static_cast<std::size_t>(coords_.rows()) != ipow(n, legs))
            throw DimensionMismatch("TensorVector: length is not n^legs");
    }

    int n() const noexcept { return n_; }
    int legs() const noexcept { return legs_; }
    const Vector<T>& coords() const noexcept { return coords_; }
    Vector<T>& coords() noexcept { return coords_; }

    friend bool operator==(const TensorVector& a, const TensorVector& b) {
        return a.n_ == b.n_ && a.legs_ == b.legs_ && a.coords_ == b.coords_;
    }

   private:
    int n_;
    int legs_;
    Vector<T> coords_;
};

template <class T>
TensorVector<T> operator*(const TensorOperator<T>& a, const TensorVector<T>& x) {
    if (a.n() != x.n() || a.legs() != x.legs()) throw DimensionMismatch("operator and vector shapes differ");
    return TensorVector<T>(x.n(), x.legs(), apply(a.matrix(), x.coords()));
}

template <class T>
TensorOperator<T> kron(const TensorOperator<T>& a, const TensorOperator<T>& b) {
    if (a.n() != b.n()) throw DimensionMismatch("kron: different base dimensions");
    return TensorOperator<T>(a.n(), a.legs() + b.legs(), kron_matrix(a.matrix(), b.matrix()));
}

/// `op` acting on the listed legs (1-based, in the listed order) of V^{⊗legs_target}.
template <class T>
TensorOperator<T> leg_embed(const TensorOperator<T>& op, int legs_target, std::span<const int> positions) {
    if (static_cast<int>(positions.size()) != op.legs())
        throw BadPositions("leg_embed: " + std::to_string(positions.size()) + " positions for an operator on " +
                           std::to_string(op.legs()) + " legs");
    std::vector<int> dims(static_cast<std::size_t>(legs_target), op.n());
    std::vector<int> zero_based;
    for (int p : positions) zero_based.push_back(p - 1);
    return TensorOperator<T>(op.n(), legs_target, embed_legs(op.matrix(), dims, zero_based));
}

template <class T>
TensorOperator<T> leg_embed(const TensorOperator<T>& op, int legs_target, std::initializer_list<int> positions) {
    std::vector<int> p(positions);
    return leg_embed(op, legs_target, std::span<const int>(p));
}

/// Permutation of tensor legs: v_{i_1} ⊗ ... ⊗ v_{i_k} goes to the vector
/// whose leg perm(a) carries i_a. `perm` is 1-based.
template <class T>
TensorOperator<T> permutation_op(std::span<const int> perm, int n, int legs) {
    if (static_cast<int>(perm.size()) != legs) throw BadPositions("permutation_op: wrong length");
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 1 || p > legs || seen[static_cast<std::size_t>(p - 1)]) throw BadPositions("not a permutation");
        seen[static_cast<std::size_t>(p - 1)] = true;
    }
    TensorOperator<T> out(n, legs);
    std::vector<int> image(perm.size());
    for (std::size_t col = 0; col < ipow(n, legs); ++col) {
        std::vector<int> digits = unflatten(col, n, legs);
        for (std::size_t a = 0; a < perm.size(); ++a) image[static_cast<std::size_t>(perm[a] - 1)] = digits[a];
        out(static_cast<Eigen::Index>(flatten(image, n)), static_cast<Eigen::Index>(col)) = T(1);
    }
    return out;
}

template <class T>
TensorOperator<T> permutation_op(std::initializer_list<int> perm, int n) {
    std::vector<int> p(perm);
    return permutation_op<T>(std::span<const int>(p), n, static_cast<int>(p.size()));
}

// P_{12} on V ⊗ V
template <class T>
TensorOperator<T> flip(int n) {
    return permutation_op<T>({2, 1}, n);
}

}  // namespace qrefl

#endif  // QREFL_TENSOR_HPP
