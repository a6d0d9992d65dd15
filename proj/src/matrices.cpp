#include "qrefl/matrices.hpp"

#include "qrefl/relations.hpp"
#include "qrefl/uqsln.hpp"

namespace qrefl {

std::string to_string(Variant v) { return v == Variant::r ? "r" : "rbar21"; }

Variant variant_from_string(const std::string& text) {
    if (text == "r") return Variant::r;
    if (text == "rbar21") return Variant::rbar21;
    throw Error("unknown variant '" + text + "' (expected r or rbar21)");
}

Operator r_prime(int n, Variant variant) {
    Operator r = r_matrix(n);
    if (variant == Variant::r) return r;
    Operator p = flip<Scalar>(n);
    return inverse(p * r * p);
}

CharacterMatrix CharacterMatrix::admit() const {
    CharacterMatrix out = *this;
    out.admissible = check_reflection(r_prime(n(), variant), entries).passed;
    return out;
}

OperatorMatrix::OperatorMatrix(int n_aux, int d_rep, ScalarMatrix m) : n(n_aux), d(d_rep), flat(std::move(m)) {
    if (flat.rows() != n * d || flat.cols() != n * d)
        throw DimensionMismatch("OperatorMatrix: flat form must be (n*d) x (n*d)");
}

OperatorMatrix OperatorMatrix::from_grid(const std::vector<std::vector<ScalarMatrix>>& grid) {
    int n = static_cast<int>(grid.size());
    if (n == 0) throw DimensionMismatch("OperatorMatrix: empty grid");
    int d = static_cast<int>(grid[0][0].rows());
    ScalarMatrix flat = zero_matrix<Scalar>(n * d, n * d);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(grid[static_cast<std::size_t>(i)].size()) != n)
            throw DimensionMismatch("OperatorMatrix: grid is not square");
        for (int j = 0; j < n; ++j) {
            const auto& b = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (b.rows() != d || b.cols() != d) throw DimensionMismatch("OperatorMatrix: blocks differ in size");
            flat.block(i * d, j * d, d, d) = b;
        }
    }
    return OperatorMatrix(n, d, std::move(flat));
}

OperatorMatrix OperatorMatrix::from_character(const CharacterMatrix& m) { return OperatorMatrix(m.n(), 1, m.entries); }

ScalarMatrix OperatorMatrix::block(int i, int j) const { return flat.block(i * d, j * d, d, d); }

}  // namespace qrefl
