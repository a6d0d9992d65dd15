#ifndef QREFL_CHARACTERS_HPP
#define QREFL_CHARACTERS_HPP

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "qrefl/matrices.hpp"
#include "qrefl/relations.hpp"

namespace qrefl {

// q-antisymmetrizer Y = sum_σ (-q)^{l(σ)} v_σ(1) ⊗ ... ⊗ v_σ(n)
ScalarVector antisymmetrizer(int n);

/// Applies D_k = M_k ... M_1 to a vector of V^{⊗k}, where
///   M_j = id ⊗ R_{V,W}^{-1} (M ⊗ id_W) R_{V,W},  W = V^{⊗ j-1},
/// acting on the last j legs. R_{V,W} is the R-matrix R' (not the braiding):
/// the chain R̂_{j-1,j} ... R̂_{12} followed by moving the last leg to the
/// front. With this convention D(v_I) = sum_J v_J f(t^J_I), matching the
/// monomial evaluation entrywise. Nothing n^k x n^k is ever materialized.
ScalarVector apply_d_operator(const CharacterMatrix& m, int k, const ScalarVector& v);

// f(det_q) read off from D(Y) = f(det_q) Y. Throws NotProportional.
Scalar qdet_antisym(const CharacterMatrix& m);

/// Evaluates a character on monomials t^{i_1}_{j_1} ... t^{i_k}_{j_k} by
/// repeatedly splitting off the left factor:
///   f(ab) = r'(σ(a_1), b_1) r'(a_3, b_2) f(a_2) f(b_3).
/// r' on degree-one coefficients is read from R', r'(σ(.), .) from R'^{-1}.
class CharacterEvaluator {
   public:
    explicit CharacterEvaluator(const CharacterMatrix& m, std::size_t max_length = 4);

    // word of 1-based (i, j) pairs
    Scalar evaluate(const std::vector<std::pair<int, int>>& word);

   private:
    using Index = std::vector<int>;

    Scalar f(const Index& upper, const Index& lower);
    const Scalar& r_form(bool inverse, int a, int b, const Index& upper, const Index& lower);

    int n_;
    std::size_t max_length_;
    ScalarMatrix m_;
    ScalarMatrix rp_;
    ScalarMatrix rp_inv_;
    std::map<std::pair<Index, Index>, Scalar> f_cache_;
    std::map<std::tuple<bool, int, int, Index, Index>, Scalar> r_cache_;
};

Scalar char_eval_monomial(const CharacterMatrix& m, const std::vector<std::pair<int, int>>& word,
                          std::size_t max_length = 4);

// sum_σ (-q)^{l(σ)} f(t^1_σ(1) ... t^n_σ(n)); n <= 3 else TooLarge.
Scalar qdet_monomial_oracle(const CharacterMatrix& m);

struct CriterionResult {
    Report report;  // passes iff (det != 0) <=> (qdet != 0)
    Scalar det;
    Scalar qdet;
};

CriterionResult check_invertibility_criterion(const CharacterMatrix& m);

struct SlNormalization {
    Scalar qdet;
    std::optional<Scalar> beta;  // β with β^n = f(det_q), when it exists over the base field
    std::optional<CharacterMatrix> normalized;  // β^{-1} M
    bool needs_extension = false;
};

SlNormalization normalize_sl_character(const CharacterMatrix& m);

// q^{(n^2-1)/n} M
CharacterMatrix cylinder_scale(const CharacterMatrix& m);

CharacterMatrix grassmann_matrix(int n, const Scalar& s, const Scalar& lambda = Scalar(1));

// Recognizes M = λ · grassmann_matrix(n, s'); returns (λ, s').
std::optional<std::pair<Scalar, Scalar>> match_grassmann(const CharacterMatrix& m);

struct OmegaMatrix {
    int n = 0;
    ScalarMatrix entries;
    Scalar scale;  // λ, read off the lower codiagonal block
};

// Ω(j,i) = q^{n+1-2i} M(i,j), 1-based
OmegaMatrix omega_from_character(const CharacterMatrix& m);
CharacterMatrix character_from_omega(const OmegaMatrix& omega);

Report check_grassmann_invariance(const OmegaMatrix& omega, const Scalar& s);

}  // namespace qrefl

#endif  // QREFL_CHARACTERS_HPP
