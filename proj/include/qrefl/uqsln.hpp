#ifndef QREFL_UQSLN_HPP
#define QREFL_UQSLN_HPP

// U_q(sl_n) acting on its vector representation V = span{v_1, ..., v_n}.
// All scalars live at root order n, enough for every weight pairing here.

#include <string>
#include <utility>
#include <vector>

#include "qrefl/linalg.hpp"

namespace qrefl {

/// Weight in the fundamental-weight basis: sum_i coords[i-1] * omega_i.
struct WeightVector {
    std::vector<int> coords;

    static WeightVector zero(int n);
    static WeightVector fundamental(int i, int n);  // omega_i; omega_0 = omega_n = 0
    static WeightVector simple_root(int i, int n);  // alpha_i
    static WeightVector rho(int n);
    static WeightVector of_basis_vector(int j, int n);  // wt(v_j) = omega_j - omega_{j-1}

    int n() const noexcept { return static_cast<int>(coords.size()) + 1; }

    friend WeightVector operator+(const WeightVector& a, const WeightVector& b);
    friend WeightVector operator-(const WeightVector& a, const WeightVector& b);
    friend WeightVector operator*(int c, const WeightVector& a);
    friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

// Invariant form with (alpha, alpha) = 2: (omega_i, omega_j) = min(i,j) - ij/n.
Rational pairing(const WeightVector& a, const WeightVector& b);

enum class GeneratorKind { x, y, t, t_inv };

struct Generator {
    GeneratorKind kind;
    int index;  // 1-based, 1..n-1

    std::string name() const;
    friend bool operator==(const Generator&, const Generator&) = default;
};

// x_1..x_{n-1}, y_*, t_*, t_*^{-1}
std::vector<Generator> all_generators(int n);

struct GeneratorSet {
    int n = 0;
    int root_order = 0;
    std::vector<ScalarMatrix> x, y, t, t_inv;  // index i-1
    std::vector<ScalarMatrix> sx, sy, st;      // antipode images

    const ScalarMatrix& matrix(Generator g) const;
    const ScalarMatrix& antipode_matrix(Generator g) const;
};

GeneratorSet vector_rep(int n);

// diag(q^{(lambda, wt v_j)})
Operator tau_action(const WeightVector& lambda, int n);

// R(v_k ⊗ v_l) = sum v_i ⊗ v_j R^{ij}_{kl}; matrix entry [(i,j),(k,l)].
Operator r_matrix(int n, int root_order = 0);
// R̂ = P ∘ R
Operator rhat(int n);

Operator coproduct_on_pair(Generator g, int n);
// Δ^op(g) = P Δ(g) P
Operator coproduct_op_on_pair(Generator g, int n);

// tr(X τ(2ρ)) with (2ρ, wt v_i) = n - 2i + 1
Scalar qtrace(const ScalarMatrix& x, int n);
Scalar qtrace(const Operator& x);

// ---------------------------------------------------------------------------
// Small noncommutative words in the generators, enough to apply the antipode
// formally and then represent the result on V.

struct Word {
    Scalar coeff;
    std::vector<Generator> letters;
};

struct UElement {
    std::vector<Word> terms;

    static UElement generator(Generator g);
    friend UElement operator*(const UElement& a, const UElement& b);
    friend UElement operator+(const UElement& a, const UElement& b);
    friend UElement operator*(const Scalar& c, const UElement& a);
};

// σ is an anti-homomorphism with σ(x_i) = -t_i^{-1} x_i, σ(y_i) = -y_i t_i, σ(t_i^{±1}) = t_i^{∓1}.
UElement antipode(const UElement& u);
ScalarMatrix represent(const UElement& u, const GeneratorSet& rep);

// ε on generators: 0 on x_i, y_i; 1 on t_i^{±1}
Scalar counit(Generator g);

}  // namespace qrefl

#endif  // QREFL_UQSLN_HPP
