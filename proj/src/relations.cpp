#include "qrefl/relations.hpp"

#include "qrefl/uqsln.hpp"

namespace qrefl {

namespace {

std::vector<int> multi_index(std::size_t flat, std::span<const int> dims) {
    std::vector<int> digits;
    detail::digits_of(flat, dims, digits);
    for (int& d : digits) ++d;
    return digits;
}

ScalarMatrix mul(std::initializer_list<const ScalarMatrix*> factors) {
    auto it = factors.begin();
    ScalarMatrix acc = **it;
    for (++it; it != factors.end(); ++it) acc = multiply(acc, **it);
    return acc;
}

}  // namespace

Report compare(const ScalarMatrix& lhs, const ScalarMatrix& rhs, std::string relation, std::span<const int> dims) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        throw DimensionMismatch("compare: shapes differ for " + relation);
    for (Eigen::Index i = 0; i < lhs.rows(); ++i)
        for (Eigen::Index j = 0; j < lhs.cols(); ++j) {
            if (lhs(i, j) == rhs(i, j)) continue;
            Witness w{multi_index(static_cast<std::size_t>(i), dims), multi_index(static_cast<std::size_t>(j), dims),
                      lhs(i, j), rhs(i, j), lhs(i, j) - rhs(i, j)};
            return Report{false, std::move(relation), std::move(w)};
        }
    return Report::pass(std::move(relation));
}

Report compare(const Operator& lhs, const Operator& rhs, std::string relation) {
    std::vector<int> dims(static_cast<std::size_t>(lhs.legs()), lhs.n());
    return compare(lhs.matrix(), rhs.matrix(), std::move(relation), dims);
}

Report combine(const std::vector<Report>& reports, std::string relation) {
    for (const auto& r : reports)
        if (!r.passed) {
            Report out = r;
            out.relation = relation + ": " + r.relation;
            return out;
        }
    return Report::pass(std::move(relation));
}

Report check_qybe(const Operator& r) {
    if (r.legs() != 2) throw DimensionMismatch("check_qybe: expected an operator on V ⊗ V");
    Operator r12 = leg_embed(r, 3, {1, 2});
    Operator r13 = leg_embed(r, 3, {1, 3});
    Operator r23 = leg_embed(r, 3, {2, 3});
    return compare(r12 * r13 * r23, r23 * r13 * r12, "qybe");
}

Report check_braid(const Operator& rh) {
    if (rh.legs() != 2) throw DimensionMismatch("check_braid: expected an operator on V ⊗ V");
    Operator a = leg_embed(rh, 3, {1, 2});
    Operator b = leg_embed(rh, 3, {2, 3});
    return compare(a * b * a, b * a * b, "braid");
}

Report check_hecke(const Operator& rh) {
    if (rh.legs() != 2) throw DimensionMismatch("check_hecke: expected an operator on V ⊗ V");
    const int n = rh.n();
    Operator id = Operator::identity(n, 2);
    Scalar a = Scalar::q_power(Rational(1, n) - 1, n);
    Scalar b = Scalar::q_power(Rational(1, n) + 1, n);
    Operator lhs = (rh - a * id) * (rh + b * id);
    return compare(lhs, Operator(n, 2), "hecke");
}

Report check_reflection(const Operator& rp, const ScalarMatrix& m) {
    const int n = rp.n();
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("check_reflection: M must be n x n");
    Operator mm(n, 1, m);
    Operator id = Operator::identity(n, 1);
    Operator s1 = kron(mm, id), s2 = kron(id, mm);
    Operator p = flip<Scalar>(n);
    Operator r21 = p * rp * p;
    return compare(s2 * r21 * s1 * rp, r21 * s1 * rp * s2, "reflection");
}

Report check_rtt(const Operator& r, const OperatorMatrix& t) {
    if (t.n != r.n()) throw DimensionMismatch("check_rtt: auxiliary dimension differs from R");
    const std::vector<int> dims{t.n, t.n, t.d};
    const std::vector<int> p13{0, 2}, p23{1, 2}, p12{0, 1};
    ScalarMatrix t1 = embed_legs(t.flat, dims, p13);
    ScalarMatrix t2 = embed_legs(t.flat, dims, p23);
    ScalarMatrix r12 = embed_legs(r.matrix(), dims, p12);
    return compare(mul({&r12, &t1, &t2}), mul({&t2, &t1, &r12}), "rtt", dims);
}

Report check_rtt(const Operator& r, const CharacterMatrix& t) {
    return check_rtt(r, OperatorMatrix::from_character(t));
}

Report check_operator_reflection(const OperatorMatrix& k, const Operator& rp) {
    if (k.n != rp.n()) throw DimensionMismatch("check_operator_reflection: auxiliary dimension differs from R'");
    const std::vector<int> dims{k.n, k.n, k.d};
    const std::vector<int> p13{0, 2}, p23{1, 2}, p12{0, 1}, p21{1, 0};
    ScalarMatrix k13 = embed_legs(k.flat, dims, p13);
    ScalarMatrix k23 = embed_legs(k.flat, dims, p23);
    ScalarMatrix r12 = embed_legs(rp.matrix(), dims, p12);
    ScalarMatrix r21 = embed_legs(rp.matrix(), dims, p21);
    return compare(mul({&k23, &r21, &k13, &r12}), mul({&r21, &k13, &r12, &k23}), "operator_reflection", dims);
}

Report check_four_braid(int s_leg, const Operator& rh, const ScalarMatrix& m) {
    const int n = rh.n();
    if (s_leg != 1 && s_leg != 2) throw BadPositions("check_four_braid: S must sit on leg 1 or 2");
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("check_four_braid: M must be n x n");
    Operator s = leg_embed(Operator(n, 1, m), 2, {s_leg});
    return compare(s * rh * s * rh, rh * s * rh * s, "four_braid(S on leg " + std::to_string(s_leg) + ")");
}

TypeBRepresentation type_b_rep(int n, int strands, const ScalarMatrix& m, const Scalar& scale) {
    if (strands < 2) throw DimensionMismatch("type_b_rep needs at least two strands");
    const int k = strands;
    TypeBRepresentation out;
    out.generators.push_back(leg_embed(Operator(n, 1, scaled(scale, m)), k, {k}));
    Operator rh = rhat(n);
    for (int i = 1; i < k; ++i) out.generators.push_back(leg_embed(rh, k, {k - i, k - i + 1}));
    const auto& g = out.generators;
    auto name = [](int i) { return "g" + std::to_string(i); };

    for (int i = 1; i + 1 < k; ++i)
        out.relations.push_back(compare(g[i] * g[i + 1] * g[i], g[i + 1] * g[i] * g[i + 1],
                                        "braid(" + name(i) + "," + name(i + 1) + ")"));
    out.relations.push_back(compare(g[0] * g[1] * g[0] * g[1], g[1] * g[0] * g[1] * g[0], "four_term(g0,g1)"));
    for (int i = 0; i < k; ++i)
        for (int j = std::max(i + 2, 2); j < k; ++j)
            out.relations.push_back(compare(g[i] * g[j], g[j] * g[i], "commute(" + name(i) + "," + name(j) + ")"));
    out.summary = combine(out.relations, "type_b");
    return out;
}

}  // namespace qrefl
