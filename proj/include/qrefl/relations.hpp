#ifndef QREFL_RELATIONS_HPP
#define QREFL_RELATIONS_HPP

// Exact relation checkers. Every check compares two matrices entry by entry
// and reports the first violation in row-major order.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qrefl/matrices.hpp"

namespace qrefl {

struct Witness {
    std::vector<int> row;  // 1-based multi-index
    std::vector<int> col;
    Scalar lhs;
    Scalar rhs;
    Scalar residual;  // lhs - rhs, nonzero
};

struct Report {
    bool passed = true;
    std::string relation;
    std::optional<Witness> witness;

    static Report pass(std::string relation) { return Report{true, std::move(relation), std::nullopt}; }
};

// `dims` are the leg dimensions used to split flat indices into multi-indices.
Report compare(const ScalarMatrix& lhs, const ScalarMatrix& rhs, std::string relation, std::span<const int> dims);
Report compare(const Operator& lhs, const Operator& rhs, std::string relation);

// First failing report, or a pass named `relation`.
Report combine(const std::vector<Report>& reports, std::string relation);

Report check_qybe(const Operator& r);
Report check_braid(const Operator& rh);
// (R̂ - q^{1/n-1})(R̂ + q^{1/n+1}) = 0
Report check_hecke(const Operator& rh);
// S_2 R'_21 S_1 R'_12 = R'_21 S_1 R'_12 S_2
Report check_reflection(const Operator& rp, const ScalarMatrix& m);
inline Report check_reflection(const Operator& rp, const CharacterMatrix& m) { return check_reflection(rp, m.entries); }
// R T_1 T_2 = T_2 T_1 R with operator-valued entries composed in written order
Report check_rtt(const Operator& r, const OperatorMatrix& t);
Report check_rtt(const Operator& r, const CharacterMatrix& t);
// K_23 R'_21 K_13 R'_12 = R'_21 K_13 R'_12 K_23 on V_aux ⊗ V_aux ⊗ V_rep
Report check_operator_reflection(const OperatorMatrix& k, const Operator& rp);
// S_a R̂ S_a R̂ = R̂ S_a R̂ S_a, S_1 = M ⊗ 1, S_2 = 1 ⊗ M
Report check_four_braid(int s_leg, const Operator& rh, const ScalarMatrix& m);

/// Generators of a type-B braid group representation on V^{⊗k}.
///
/// g_0 = scale * M on the last strand k; g_i = R̂ on strands (k-i, k-i+1).
/// With S on the second leg of R̂, the four-term relation is equivalent to the
/// reflection equation with R' = R (checked exhaustively at n = 2), which is
/// why the boundary sits on the last strand.
struct TypeBRepresentation {
    std::vector<Operator> generators;  // g_0, g_1, ..., g_{k-1}
    std::vector<Report> relations;
    Report summary;
};

TypeBRepresentation type_b_rep(int n, int strands, const ScalarMatrix& m, const Scalar& scale);

}  // namespace qrefl

#endif  // QREFL_RELATIONS_HPP
