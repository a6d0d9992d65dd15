#include "qrefl/uqsln.hpp"

#include <algorithm>

namespace qrefl {

WeightVector WeightVector::zero(int n) { return {std::vector<int>(static_cast<std::size_t>(n - 1), 0)}; }

WeightVector WeightVector::fundamental(int i, int n) {
    WeightVector w = zero(n);
    if (i >= 1 && i <= n - 1) w.coords[static_cast<std::size_t>(i - 1)] = 1;
    return w;
}

WeightVector WeightVector::simple_root(int i, int n) {
    // rows of the Cartan matrix of type A
    return 2 * fundamental(i, n) - fundamental(i - 1, n) - fundamental(i + 1, n);
}

WeightVector WeightVector::rho(int n) { return {std::vector<int>(static_cast<std::size_t>(n - 1), 1)}; }

WeightVector WeightVector::of_basis_vector(int j, int n) { return fundamental(j, n) - fundamental(j - 1, n); }

WeightVector operator+(const WeightVector& a, const WeightVector& b) {
    if (a.coords.size() != b.coords.size()) throw DimensionMismatch("weights of different rank");
    WeightVector r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

WeightVector operator-(const WeightVector& a, const WeightVector& b) { return a + (-1) * b; }

WeightVector operator*(int c, const WeightVector& a) {
    WeightVector r = a;
    for (int& x : r.coords) x *= c;
    return r;
}

Rational pairing(const WeightVector& a, const WeightVector& b) {
    if (a.coords.size() != b.coords.size()) throw DimensionMismatch("weights of different rank");
    int n = a.n();
    Rational total = 0;
    for (int i = 1; i < n; ++i) {
        int ai = a.coords[static_cast<std::size_t>(i - 1)];
        if (ai == 0) continue;
        for (int j = 1; j < n; ++j) {
            int bj = b.coords[static_cast<std::size_t>(j - 1)];
            if (bj == 0) continue;
            Rational ij(i * j, n);
            ij.canonicalize();
            Rational gram = Rational(std::min(i, j)) - ij;
            total += ai * bj * gram;
        }
    }
    total.canonicalize();
    return total;
}

std::string Generator::name() const {
    std::string idx = std::to_string(index);
    switch (kind) {
        case GeneratorKind::x:
            return "x" + idx;
        case GeneratorKind::y:
            return "y" + idx;
        case GeneratorKind::t:
            return "t" + idx;
        case GeneratorKind::t_inv:
            return "t" + idx + "^-1";
    }
    return idx;
}

std::vector<Generator> all_generators(int n) {
    std::vector<Generator> out;
    for (auto kind : {GeneratorKind::x, GeneratorKind::y, GeneratorKind::t, GeneratorKind::t_inv})
        for (int i = 1; i < n; ++i) out.push_back({kind, i});
    return out;
}

const ScalarMatrix& GeneratorSet::matrix(Generator g) const {
    if (g.index < 1 || g.index >= n) throw UnknownGenerator("no generator " + g.name() + " for n = " + std::to_string(n));
    auto i = static_cast<std::size_t>(g.index - 1);
    switch (g.kind) {
        case GeneratorKind::x:
            return x[i];
        case GeneratorKind::y:
            return y[i];
        case GeneratorKind::t:
            return t[i];
        case GeneratorKind::t_inv:
            return t_inv[i];
    }
    throw UnknownGenerator("unknown generator kind");
}

const ScalarMatrix& GeneratorSet::antipode_matrix(Generator g) const {
    if (g.index < 1 || g.index >= n) throw UnknownGenerator("no generator " + g.name() + " for n = " + std::to_string(n));
    auto i = static_cast<std::size_t>(g.index - 1);
    switch (g.kind) {
        case GeneratorKind::x:
            return sx[i];
        case GeneratorKind::y:
            return sy[i];
        case GeneratorKind::t:
            return st[i];
        case GeneratorKind::t_inv:
            return t[i];
    }
    throw UnknownGenerator("unknown generator kind");
}

GeneratorSet vector_rep(int n) {
    if (n < 2) throw DimensionMismatch("vector_rep needs n >= 2");
    GeneratorSet g;
    g.n = n;
    g.root_order = n;
    const Scalar q = Scalar::q_power(Rational(1), n);
    const Scalar q_inv = q.inverse();
    for (int i = 1; i < n; ++i) {
        ScalarMatrix x = zero_matrix<Scalar>(n, n), y = zero_matrix<Scalar>(n, n);
        std::vector<Scalar> t_diag(static_cast<std::size_t>(n), Scalar(1));
        // x_i v_{i+1} = v_i, y_i v_i = v_{i+1}, t_i v_i = q v_i, t_i v_{i+1} = q^{-1} v_{i+1}
        x(i - 1, i) = Scalar(1);
        y(i, i - 1) = Scalar(1);
        t_diag[static_cast<std::size_t>(i - 1)] = q;
        t_diag[static_cast<std::size_t>(i)] = q_inv;
        ScalarMatrix t = diagonal_matrix(t_diag);
        std::vector<Scalar> ti_diag = t_diag;
        for (auto& d : ti_diag) d = d.inverse();
        ScalarMatrix ti = diagonal_matrix(ti_diag);
        g.x.push_back(x);
        g.y.push_back(y);
        g.t.push_back(t);
        g.t_inv.push_back(ti);
        g.sx.push_back(scaled(Scalar(-1), multiply(ti, x)));
        g.sy.push_back(scaled(Scalar(-1), multiply(y, t)));
        g.st.push_back(ti);
    }
    return g;
}

Operator tau_action(const WeightVector& lambda, int n) {
    if (lambda.n() != n) throw DimensionMismatch("tau_action: weight rank does not match n");
    std::vector<Scalar> diag;
    for (int j = 1; j <= n; ++j)
        diag.push_back(Scalar::q_power(pairing(lambda, WeightVector::of_basis_vector(j, n)), n));
    return Operator(n, 1, diagonal_matrix(diag));
}

Operator r_matrix(int n, int root_order) {
    if (n < 2) throw DimensionMismatch("r_matrix needs n >= 2");
    if (root_order == 0) root_order = n;
    if (root_order % n != 0)
        throw RootOrderIncompatible("root order " + std::to_string(root_order) + " is not divisible by n = " +
                                    std::to_string(n));
    const Scalar prefactor = Scalar::q_power(Rational(1, n), root_order);
    const Scalar q = Scalar::q_power(Rational(1), root_order);
    const Scalar diag = prefactor * q.inverse();
    const Scalar cross = prefactor * (q.inverse() - q);
    Operator r(n, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto row = static_cast<Eigen::Index>(i * n + j);
            if (i == j) {
                r(row, row) = diag;
            } else {
                r(row, row) = prefactor;  // i = k != j = l
                if (i < j) r(row, static_cast<Eigen::Index>(j * n + i)) = cross;  // i = l < j = k
            }
        }
    return r;
}

Operator rhat(int n) { return flip<Scalar>(n) * r_matrix(n); }

Operator coproduct_on_pair(Generator g, int n) {
    GeneratorSet rep = vector_rep(n);
    Operator id = Operator::identity(n, 1);
    Operator m(n, 1, rep.matrix(g));
    switch (g.kind) {
        case GeneratorKind::x: {
            Operator t(n, 1, rep.t[static_cast<std::size_t>(g.index - 1)]);
            return kron(m, id) + kron(t, m);
        }
        case GeneratorKind::y: {
            Operator ti(n, 1, rep.t_inv[static_cast<std::size_t>(g.index - 1)]);
            return kron(m, ti) + kron(id, m);
        }
        case GeneratorKind::t:
        case GeneratorKind::t_inv:
            return kron(m, m);
    }
    throw UnknownGenerator("unknown generator kind");
}

Operator coproduct_op_on_pair(Generator g, int n) {
    Operator p = flip<Scalar>(n);
    return p * coproduct_on_pair(g, n) * p;
}

Scalar qtrace(const ScalarMatrix& x, int n) {
    if (x.rows() != n || x.cols() != n) throw DimensionMismatch("qtrace: expected an n x n matrix");
    Scalar total(0);
    for (int i = 1; i <= n; ++i) {
        const Scalar& d = x(i - 1, i - 1);
        if (!d.is_zero()) total += d * Scalar::q_power(Rational(n - 2 * i + 1), n);
    }
    return total;
}

Scalar qtrace(const Operator& x) {
    if (x.legs() != 1) throw DimensionMismatch("qtrace: expected an operator on V");
    return qtrace(x.matrix(), x.n());
}

// ---------------------------------------------------------------------------

UElement UElement::generator(Generator g) { return UElement{{Word{Scalar(1), {g}}}}; }

UElement operator*(const UElement& a, const UElement& b) {
    UElement r;
    for (const auto& x : a.terms)
        for (const auto& y : b.terms) {
            Word w{x.coeff * y.coeff, x.letters};
            w.letters.insert(w.letters.end(), y.letters.begin(), y.letters.end());
            r.terms.push_back(std::move(w));
        }
    return r;
}

UElement operator+(const UElement& a, const UElement& b) {
    UElement r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return r;
}

UElement operator*(const Scalar& c, const UElement& a) {
    UElement r = a;
    for (auto& w : r.terms) w.coeff = c * w.coeff;
    return r;
}

namespace {

UElement antipode_of(Generator g) {
    auto gen = [](GeneratorKind k, int i) { return UElement::generator({k, i}); };
    switch (g.kind) {
        case GeneratorKind::x:
            return Scalar(-1) * (gen(GeneratorKind::t_inv, g.index) * gen(GeneratorKind::x, g.index));
        case GeneratorKind::y:
            return Scalar(-1) * (gen(GeneratorKind::y, g.index) * gen(GeneratorKind::t, g.index));
        case GeneratorKind::t:
            return gen(GeneratorKind::t_inv, g.index);
        case GeneratorKind::t_inv:
            return gen(GeneratorKind::t, g.index);
    }
    throw UnknownGenerator("unknown generator kind");
}

}  // namespace

UElement antipode(const UElement& u) {
    UElement r;
    for (const auto& w : u.terms) {
        UElement image{{Word{w.coeff, {}}}};
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) image = image * antipode_of(*it);
        r = r + image;
    }
    return r;
}

ScalarMatrix represent(const UElement& u, const GeneratorSet& rep) {
    ScalarMatrix total = zero_matrix<Scalar>(rep.n, rep.n);
    for (const auto& w : u.terms) {
        ScalarMatrix m = identity_matrix<Scalar>(rep.n);
        for (const auto& g : w.letters) m = multiply(m, rep.matrix(g));
        total += scaled(w.coeff, m);
    }
    return total;
}

Scalar counit(Generator g) {
    return g.kind == GeneratorKind::t || g.kind == GeneratorKind::t_inv ? Scalar(1) : Scalar(0);
}

}  // namespace qrefl
