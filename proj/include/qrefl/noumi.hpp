#ifndef QREFL_NOUMI_HPP
#define QREFL_NOUMI_HPP

// L-operators with operator-valued entries, their quantum traces, and the
// coideal generators of the Grassmannian symmetric pair.

#include <string>
#include <vector>

#include "qrefl/matrices.hpp"
#include "qrefl/relations.hpp"

namespace qrefl {

/// K = R_21 (M ⊗ 1) R_12 on V_aux ⊗ V_rep, R = r_matrix(n).
/// Entrywise (K^i_j)_{k,m} = sum_{a,b,l} R^{ki}_{la} M^a_b R^{bl}_{jm}.
OperatorMatrix build_k_operator(const CharacterMatrix& m);

// C = sum_i q^{n-2i+1} K^i_i, an operator on V_rep
Operator qtrace_aux(const OperatorMatrix& k);

// [C, K^i_j] = 0 for all i, j
Report check_centrality_bf(const OperatorMatrix& k);

struct NamedMatrix {
    std::string name;
    ScalarMatrix matrix;
};

/// Images on V of σ(B_i), i = 1..n-1, and τ(ω_i - ω_{p(i)}), i != m,
/// p(i) = n - i, for the pair with parameter s.
struct CoidealGenerators {
    int n = 0;
    Scalar s;
    std::vector<NamedMatrix> sigma_b;
    std::vector<NamedMatrix> tau;
};

CoidealGenerators grassmann_coideal_generators(int n, const Scalar& s);

// [qtrace_aux(K), g] = 0 for every generator image g
Report check_centrality_bs(const OperatorMatrix& k, const CoidealGenerators& g);

}  // namespace qrefl

#endif  // QREFL_NOUMI_HPP
