#ifndef QREFL_MATRICES_HPP
#define QREFL_MATRICES_HPP

#include <optional>
#include <string>
#include <vector>

#include "qrefl/linalg.hpp"

namespace qrefl {

// Which universal r-form the reflection equation refers to: R' = R for "r",
// R' = R_{21}^{-1} for "rbar21".
enum class Variant { r, rbar21 };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& text);

// R' for the vector representation of U_q(sl_n).
Operator r_prime(int n, Variant variant);

/// n x n matrix M with M(i,j) = f(s^i_j), a candidate character of the
/// reflection equation algebra.
struct CharacterMatrix {
    ScalarMatrix entries;
    Variant variant = Variant::r;
    // set by admit(); true iff the reflection equation holds for `variant`
    std::optional<bool> admissible;

    CharacterMatrix() = default;
    explicit CharacterMatrix(ScalarMatrix m, Variant v = Variant::r) : entries(std::move(m)), variant(v) {}

    int n() const noexcept { return static_cast<int>(entries.rows()); }
    const Scalar& operator()(int i, int j) const { return entries(i, j); }

    CharacterMatrix admit() const;
};

/// n x n grid of d x d blocks, stored flat on V_aux ⊗ V_rep with the
/// auxiliary space as the leading leg.
struct OperatorMatrix {
    int n = 0;
    int d = 0;
    ScalarMatrix flat;

    OperatorMatrix() = default;
    OperatorMatrix(int n_aux, int d_rep, ScalarMatrix m);

    static OperatorMatrix from_grid(const std::vector<std::vector<ScalarMatrix>>& grid);
    static OperatorMatrix from_character(const CharacterMatrix& m);

    // K^i_j (0-based)
    ScalarMatrix block(int i, int j) const;
};

}  // namespace qrefl

#endif  // QREFL_MATRICES_HPP
