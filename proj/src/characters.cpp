#include "qrefl/characters.hpp"

#include <algorithm>
#include <numeric>

#include "qrefl/uqsln.hpp"

namespace qrefl {

namespace {

int inversions(const std::vector<int>& perm) {
    int count = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++count;
    return count;
}

Scalar minus_q_power(int n, int exponent) {
    Scalar v = Scalar::q_power(Rational(exponent), n);
    return exponent % 2 == 0 ? v : -v;
}

// Moves the content of each leg a to leg perm[a] (0-based).
ScalarVector permute_legs(const ScalarVector& x, int n, int legs, const std::vector<int>& perm) {
    ScalarVector out = zero_vector<Scalar>(x.rows());
    std::vector<int> image(static_cast<std::size_t>(legs));
    for (Eigen::Index col = 0; col < x.rows(); ++col) {
        if (x(col).is_zero()) continue;
        std::vector<int> digits = unflatten(static_cast<std::size_t>(col), n, legs);
        for (int a = 0; a < legs; ++a) image[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])] = digits[static_cast<std::size_t>(a)];
        out(static_cast<Eigen::Index>(flatten(image, n))) = x(col);
    }
    return out;
}

}  // namespace

ScalarVector antisymmetrizer(int n) {
    ScalarVector y = zero_vector<Scalar>(static_cast<Eigen::Index>(ipow(n, n)));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        y(static_cast<Eigen::Index>(flatten(perm, n))) = minus_q_power(n, inversions(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return y;
}

ScalarVector apply_d_operator(const CharacterMatrix& m, int k, const ScalarVector& v) {
    const int n = m.n();
    if (static_cast<std::size_t>(v.rows()) != ipow(n, k)) throw DimensionMismatch("apply_d_operator: vector size");
    const Operator rp = r_prime(n, m.variant);
    const Operator p = flip<Scalar>(n);
    const ScalarMatrix rh = (p * rp).matrix();
    const ScalarMatrix rh_inv = inverse(rh);
    const std::vector<int> dims(static_cast<std::size_t>(k), n);

    ScalarVector x = v;
    for (int j = 1; j <= k; ++j) {
        const int first = k - j;  // M_j acts on legs first..k-1 (0-based)
        // R_{V,W}: braid the leading leg past the others, then bring it back to the front
        for (int a = 0; a + 1 < j; ++a) {
            const std::vector<int> pos{first + a, first + a + 1};
            x = apply_on_legs(rh, dims, pos, x);
        }
        std::vector<int> to_front(static_cast<std::size_t>(k)), to_back(static_cast<std::size_t>(k));
        std::iota(to_front.begin(), to_front.end(), 0);
        std::iota(to_back.begin(), to_back.end(), 0);
        for (int a = 0; a < j; ++a) {
            to_front[static_cast<std::size_t>(first + a)] = first + (a + 1) % j;
            to_back[static_cast<std::size_t>(first + (a + 1) % j)] = first + a;
        }
        x = permute_legs(x, n, k, to_front);
        const std::vector<int> lead{first};
        x = apply_on_legs(m.entries, dims, lead, x);
        // R_{V,W}^{-1}
        x = permute_legs(x, n, k, to_back);
        for (int a = j - 2; a >= 0; --a) {
            const std::vector<int> pos{first + a, first + a + 1};
            x = apply_on_legs(rh_inv, dims, pos, x);
        }
    }
    return x;
}

Scalar qdet_antisym(const CharacterMatrix& m) {
    const int n = m.n();
    const ScalarVector y = antisymmetrizer(n);
    const ScalarVector dy = apply_d_operator(m, n, y);
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    const auto anchor = static_cast<Eigen::Index>(flatten(id, n));
    const Scalar ratio = dy(anchor) / y(anchor);
    for (Eigen::Index i = 0; i < y.rows(); ++i) {
        if (y(i).is_zero() ? dy(i).is_zero() : dy(i) == ratio * y(i)) continue;
        std::vector<int> multi = unflatten(static_cast<std::size_t>(i), n, n);
        std::string where;
        for (int d : multi) where += std::to_string(d + 1);
        throw NotProportional("D(Y) is not a multiple of Y (first mismatch at v_" + where + ")");
    }
    return ratio;
}

// ---------------------------------------------------------------------------

CharacterEvaluator::CharacterEvaluator(const CharacterMatrix& m, std::size_t max_length)
    : n_(m.n()), max_length_(max_length), m_(m.entries) {
    const Operator rp = r_prime(n_, m.variant);
    rp_ = rp.matrix();
    rp_inv_ = inverse(rp_);
}

const Scalar& CharacterEvaluator::r_form(bool inv, int a, int b, const Index& upper, const Index& lower) {
    auto key = std::make_tuple(inv, a, b, upper, lower);
    if (auto it = r_cache_.find(key); it != r_cache_.end()) return it->second;
    const ScalarMatrix& x = inv ? rp_inv_ : rp_;
    // X^{ac}_{bd} sits at row (a,c), column (b,d)
    auto entry = [&](int aa, int bb, int cc, int dd) -> const Scalar& { return x(aa * n_ + cc, bb * n_ + dd); };
    Scalar value(0);
    if (upper.empty()) {
        value = Scalar(a == b ? 1 : 0);
    } else if (upper.size() == 1) {
        value = entry(a, b, upper[0], lower[0]);
    } else {
        Index up_rest(upper.begin() + 1, upper.end()), low_rest(lower.begin() + 1, lower.end());
        for (int u = 0; u < n_; ++u) {
            if (!inv) {
                // r(a, bc) = r(a_1, c) r(a_2, b)
                const Scalar& head = entry(u, b, upper[0], lower[0]);
                if (head.is_zero()) continue;
                const Scalar& tail = r_form(inv, a, u, up_rest, low_rest);
                if (!tail.is_zero()) value += tail * head;
            } else {
                // r̄(a, bc) = r̄(a_1, b) r̄(a_2, c)
                const Scalar& head = entry(a, u, upper[0], lower[0]);
                if (head.is_zero()) continue;
                const Scalar& tail = r_form(inv, u, b, up_rest, low_rest);
                if (!tail.is_zero()) value += head * tail;
            }
        }
    }
    return r_cache_.emplace(std::move(key), std::move(value)).first->second;
}

Scalar CharacterEvaluator::f(const Index& upper, const Index& lower) {
    if (upper.empty()) return Scalar(1);
    if (upper.size() == 1) return m_(upper[0], lower[0]);
    auto key = std::make_pair(upper, lower);
    if (auto it = f_cache_.find(key); it != f_cache_.end()) return it->second;

    const int i = upper[0], j = lower[0];
    const Index rest_up(upper.begin() + 1, upper.end()), rest_low(lower.begin() + 1, lower.end());
    const int len = static_cast<int>(rest_up.size());
    const std::size_t count = ipow(n_, len);
    Scalar total(0);
    for (int x = 0; x < n_; ++x)
        for (int z = 0; z < n_; ++z) {
            const Scalar& mxz = m_(x, z);
            if (mxz.is_zero()) continue;
            for (std::size_t yi = 0; yi < count; ++yi) {
                const Index y = unflatten(yi, n_, len);
                const Scalar& r1 = r_form(true, i, x, rest_up, y);
                if (r1.is_zero()) continue;
                for (std::size_t wi = 0; wi < count; ++wi) {
                    const Index w = unflatten(wi, n_, len);
                    const Scalar& r2 = r_form(false, z, j, y, w);
                    if (r2.is_zero()) continue;
                    Scalar fw = f(w, rest_low);
                    if (fw.is_zero()) continue;
                    total += r1 * r2 * mxz * fw;
                }
            }
        }
    return f_cache_.emplace(std::move(key), std::move(total)).first->second;
}

Scalar CharacterEvaluator::evaluate(const std::vector<std::pair<int, int>>& word) {
    if (word.size() > max_length_)
        throw WordTooLong("monomial of length " + std::to_string(word.size()) + " exceeds the bound " +
                          std::to_string(max_length_));
    Index upper, lower;
    for (auto [i, j] : word) {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw DimensionMismatch("monomial index out of range");
        upper.push_back(i - 1);
        lower.push_back(j - 1);
    }
    return f(upper, lower);
}

Scalar char_eval_monomial(const CharacterMatrix& m, const std::vector<std::pair<int, int>>& word,
                          std::size_t max_length) {
    return CharacterEvaluator(m, max_length).evaluate(word);
}

Scalar qdet_monomial_oracle(const CharacterMatrix& m) {
    const int n = m.n();
    if (n > 3) throw TooLarge("qdet_monomial_oracle is limited to n <= 3");
    CharacterEvaluator eval(m, static_cast<std::size_t>(n));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    Scalar total(0);
    do {
        std::vector<std::pair<int, int>> word;
        for (int a = 0; a < n; ++a) word.emplace_back(a + 1, perm[static_cast<std::size_t>(a)]);
        Scalar v = eval.evaluate(word);
        if (!v.is_zero()) total += minus_q_power(n, inversions(perm)) * v;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

CriterionResult check_invertibility_criterion(const CharacterMatrix& m) {
    CriterionResult out{Report::pass("invertibility_criterion"), det_fraction_free(m.entries), qdet_antisym(m)};
    if (out.det.is_zero() != out.qdet.is_zero()) {
        out.report.passed = false;
        std::vector<int> none;
        out.report.witness = Witness{none, none, out.det, out.qdet, out.det - out.qdet};
    }
    return out;
}

namespace {

// exact n-th root of a rational, if any
std::optional<Rational> rational_root(const Rational& r, int n) {
    if (r < 0 && n % 2 == 0) return std::nullopt;
    Integer num = abs(r.get_num()), den = r.get_den();
    Integer root_num, root_den;
    if (mpz_root(root_num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n)) == 0) return std::nullopt;
    if (mpz_root(root_den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n)) == 0) return std::nullopt;
    Rational root(root_num, root_den);
    if (r < 0) root = -root;
    return root;
}

}  // namespace

SlNormalization normalize_sl_character(const CharacterMatrix& m) {
    const int n = m.n();
    SlNormalization out;
    out.qdet = qdet_antisym(m);
    if (out.qdet.is_zero()) throw ZeroQdet("f(det_q) = 0: no SL(n) normalization");
    out.needs_extension = true;
    const LaurentPoly& num = out.qdet.numerator();
    if (!out.qdet.is_polynomial() || !num.is_unit_monomial()) return out;
    const Term& term = num.terms()[0];
    const int root_order = num.root_order();
    if (term.q_exp % n != 0) return out;
    auto coeff = rational_root(term.coeff, n);
    if (!coeff) return out;
    Scalar beta = Scalar(*coeff) * Scalar::q_power(Rational(term.q_exp / n, root_order), root_order);
    out.beta = beta;
    out.normalized = CharacterMatrix(scaled(beta.inverse(), m.entries), m.variant);
    out.needs_extension = false;
    return out;
}

CharacterMatrix cylinder_scale(const CharacterMatrix& m) {
    const int n = m.n();
    Scalar factor = Scalar::q_power(Rational(n * n - 1, n), n);
    return CharacterMatrix(scaled(factor, m.entries), m.variant);
}

CharacterMatrix grassmann_matrix(int n, const Scalar& s, const Scalar& lambda) {
    if (n < 2 || n % 2 != 0) throw OddDimension("grassmann_matrix needs an even n >= 2, got " + std::to_string(n));
    const int m = n / 2;
    const Scalar q = Scalar::q_power(Rational(1), n);
    const Scalar diag = s * (q * q - Scalar(1));
    ScalarMatrix out = zero_matrix<Scalar>(n, n);
    for (int i = 1; i <= n; ++i) {
        const int j = n - i + 1;
        // rows below the middle carry q^{2i-n}, rows above q^{2i-n-1}
        const int exponent = i >= m + 1 ? 2 * i - n : 2 * i - n - 1;
        out(i - 1, j - 1) = lambda * Scalar::q_power(Rational(exponent), n);
        if (i >= m + 1) out(i - 1, i - 1) = lambda * diag;
    }
    return CharacterMatrix(std::move(out), Variant::r);
}

std::optional<std::pair<Scalar, Scalar>> match_grassmann(const CharacterMatrix& m) {
    const int n = m.n();
    if (n < 2 || n % 2 != 0) return std::nullopt;
    const Scalar q = Scalar::q_power(Rational(1), n);
    const Scalar lambda = m(n - 1, 0) / Scalar::q_power(Rational(n), n);
    if (lambda.is_zero()) return std::nullopt;
    const Scalar s = m(n - 1, n - 1) / (lambda * (q * q - Scalar(1)));
    if (!(grassmann_matrix(n, s, lambda).entries == m.entries)) return std::nullopt;
    return std::make_pair(lambda, s);
}

OmegaMatrix omega_from_character(const CharacterMatrix& m) {
    const int n = m.n();
    OmegaMatrix omega{n, zero_matrix<Scalar>(n, n), Scalar(0)};
    for (int i = 1; i <= n; ++i) {
        const Scalar factor = Scalar::q_power(Rational(n + 1 - 2 * i), n);
        for (int j = 1; j <= n; ++j)
            if (!m(i - 1, j - 1).is_zero()) omega.entries(j - 1, i - 1) = factor * m(i - 1, j - 1);
    }
    if (n % 2 == 0) omega.scale = omega.entries(n / 2, n / 2 - 1);
    return omega;
}

CharacterMatrix character_from_omega(const OmegaMatrix& omega) {
    const int n = omega.n;
    ScalarMatrix m = zero_matrix<Scalar>(n, n);
    for (int i = 1; i <= n; ++i) {
        const Scalar factor = Scalar::q_power(Rational(2 * i - n - 1), n);
        for (int j = 1; j <= n; ++j)
            if (!omega.entries(j - 1, i - 1).is_zero()) m(i - 1, j - 1) = factor * omega.entries(j - 1, i - 1);
    }
    return CharacterMatrix(std::move(m), Variant::r);
}

Report check_grassmann_invariance(const OmegaMatrix& omega, const Scalar& s) {
    const int n = omega.n;
    if (n % 2 != 0) throw OddDimension("check_grassmann_invariance needs an even n");
    const int m = n / 2;
    const Scalar q = Scalar::q_power(Rational(1), n);
    auto at = [&](int i, int j) -> const Scalar& { return omega.entries(i - 1, j - 1); };
    auto fail = [&](const char* relation, int i, int j, const Scalar& lhs, const Scalar& rhs) {
        return Report{false, relation, Witness{{i}, {j}, lhs, rhs, lhs - rhs}};
    };

    // Ω = [[0, F], [G, H]], F and G codiagonal, H diagonal
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            bool allowed = (j == n - i + 1) || (i == j && i >= m + 1);
            if (!allowed && !at(i, j).is_zero()) return fail("block_pattern", i, j, at(i, j), Scalar(0));
        }
    for (int i = 2; i <= m; ++i)
        if (!(at(i, n - i + 1) == at(1, n))) return fail("F_constant_codiagonal", i, n - i + 1, at(i, n - i + 1), at(1, n));
    for (int i = m + 2; i <= n; ++i)
        if (!(at(i, n - i + 1) == at(m + 1, m)))
            return fail("G_constant_codiagonal", i, n - i + 1, at(i, n - i + 1), at(m + 1, m));
    if (!(at(1, n) == q * at(m + 1, m))) return fail("F=qG", 1, n, at(1, n), q * at(m + 1, m));
    for (int i = m + 1; i <= n - 1; ++i) {
        Scalar rhs = q * q * at(i + 1, i + 1);
        if (!(at(i, i) == rhs)) return fail("diagonal_ratio", i, i, at(i, i), rhs);
    }
    Scalar rhs = s * (q - q.inverse()) * at(m + 1, m);
    if (!(at(m + 1, m + 1) == rhs)) return fail("diagonal_start", m + 1, m + 1, at(m + 1, m + 1), rhs);
    return Report::pass("grassmann_invariance");
}

}  // namespace qrefl
