#include "qrefl/noumi.hpp"

#include "qrefl/uqsln.hpp"

namespace qrefl {

namespace {

Report commutes(const ScalarMatrix& a, const ScalarMatrix& b, const std::string& relation) {
    const std::vector<int> dims{static_cast<int>(a.rows())};
    return compare(multiply(a, b), multiply(b, a), relation, dims);
}

}  // namespace

OperatorMatrix build_k_operator(const CharacterMatrix& m) {
    const int n = m.n();
    Operator r = r_matrix(n);
    Operator p = flip<Scalar>(n);
    Operator s1 = kron(Operator(n, 1, m.entries), Operator::identity(n, 1));
    Operator k = p * r * p * s1 * r;
    return OperatorMatrix(n, n, k.matrix());
}

Operator qtrace_aux(const OperatorMatrix& k) {
    ScalarMatrix c = zero_matrix<Scalar>(k.d, k.d);
    for (int i = 0; i < k.n; ++i) {
        ScalarMatrix b = k.block(i, i);
        c += scaled(Scalar::q_power(Rational(k.n - 2 * i - 1), k.n), b);
    }
    return Operator(k.d, 1, std::move(c));
}

Report check_centrality_bf(const OperatorMatrix& k) {
    const ScalarMatrix c = qtrace_aux(k).matrix();
    for (int i = 0; i < k.n; ++i)
        for (int j = 0; j < k.n; ++j) {
            Report r = commutes(c, k.block(i, j),
                                "commute(C,K^" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + ")");
            if (!r.passed) return r;
        }
    return Report::pass("centrality_bf");
}

CoidealGenerators grassmann_coideal_generators(int n, const Scalar& s) {
    if (n < 2 || n % 2 != 0) throw OddDimension("coideal generators need an even n >= 2, got " + std::to_string(n));
    const int m = n / 2;
    const GeneratorSet rep = vector_rep(n);
    CoidealGenerators out{n, s, {}, {}};
    auto gen = [](GeneratorKind kind, int i) { return UElement::generator(Generator{kind, i}); };
    for (int i = 1; i < n; ++i) {
        const int p = n - i;
        // B_i = y_i + t_i^{-1} x_{p(i)}, plus s t_m^{-1} at i = m
        UElement b = gen(GeneratorKind::y, i) + gen(GeneratorKind::t_inv, i) * gen(GeneratorKind::x, p);
        if (i == m) b = b + s * gen(GeneratorKind::t_inv, m);
        out.sigma_b.push_back({"sigma(B_" + std::to_string(i) + ")", represent(antipode(b), rep)});
    }
    for (int i = 1; i < n; ++i) {
        if (i == m) continue;
        WeightVector w = WeightVector::fundamental(i, n) - WeightVector::fundamental(n - i, n);
        out.tau.push_back({"tau(omega_" + std::to_string(i) + "-omega_" + std::to_string(n - i) + ")",
                           tau_action(w, n).matrix()});
    }
    return out;
}

Report check_centrality_bs(const OperatorMatrix& k, const CoidealGenerators& g) {
    if (k.d != g.n) throw DimensionMismatch("check_centrality_bs: representation dimension differs from n");
    const ScalarMatrix c = qtrace_aux(k).matrix();
    for (const auto* list : {&g.sigma_b, &g.tau})
        for (const auto& [name, mat] : *list) {
            Report r = commutes(c, mat, "commute(C," + name + ")");
            if (!r.passed) return r;
        }
    return Report::pass("centrality_bs");
}

}  // namespace qrefl
