#include <doctest.h>

#include "oracles.hpp"
#include "qrefl/characters.hpp"
#include "qrefl/noumi.hpp"
#include "qrefl/uqsln.hpp"

using namespace qrefl;
using oracle::q;

namespace {

bool is_scalar_multiple_of_identity(const ScalarMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (i != j && !m(i, j).is_zero()) return false;
            if (i == j && !(m(i, i) == m(0, 0))) return false;
        }
    return true;
}

const ScalarMatrix& gen(const GeneratorSet& rep, GeneratorKind k, int i) { return rep.matrix(Generator{k, i}); }

}  // namespace

TEST_CASE("K agrees with the index contraction at n = 2") {
    const int n = 2;
    const Scalar s = Scalar::s();
    for (const ScalarMatrix& m : {grassmann_matrix(2, s).entries, oracle::from_rows({{s, Scalar(2)}, {q(1, 1), Scalar(0)}})}) {
        OperatorMatrix k = build_k_operator(CharacterMatrix(m));
        REQUIRE(k.n == n);
        REQUIRE(k.d == n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                ScalarMatrix block = k.block(i, j);
                for (int kk = 0; kk < n; ++kk)
                    for (int mm = 0; mm < n; ++mm) {
                        Scalar acc(0);
                        for (int a = 0; a < n; ++a)
                            for (int b = 0; b < n; ++b)
                                for (int l = 0; l < n; ++l)
                                    acc += oracle::r_entry(n, kk, i, l, a) * m(a, b) * oracle::r_entry(n, b, l, j, mm);
                        CHECK(block(kk, mm) == acc);
                    }
            }
    }
}

TEST_CASE("K for the counit character and linearity in M") {
    for (int n = 2; n <= 3; ++n) {
        Operator r = r_matrix(n);
        Operator p = flip<Scalar>(n);
        OperatorMatrix k = build_k_operator(CharacterMatrix(identity_matrix<Scalar>(n)));
        CHECK(k.flat == (p * r * p * r).matrix());
        Operator c = qtrace_aux(k);
        CHECK(is_scalar_multiple_of_identity(c.matrix()));
        CHECK(!c.matrix()(0, 0).is_zero());
    }
    const Scalar s = Scalar::s();
    CharacterMatrix g = grassmann_matrix(2, s);
    const Scalar c = s + q(1, 1);
    CHECK(build_k_operator(CharacterMatrix(scaled(c, g.entries))).flat == scaled(c, build_k_operator(g).flat));
    OperatorMatrix zero = build_k_operator(CharacterMatrix(zero_matrix<Scalar>(2, 2)));
    CHECK(qtrace_aux(zero).matrix() == zero_matrix<Scalar>(2, 2));
}

TEST_CASE("operator reflection equation") {
    const Scalar s = Scalar::s();
    std::vector<CharacterMatrix> battery;
    for (int n = 2; n <= 4; ++n) battery.emplace_back(identity_matrix<Scalar>(n));
    battery.push_back(grassmann_matrix(2, s));
    battery.push_back(grassmann_matrix(4, s));
    for (const auto& m : oracle::screened_n2(Variant::r)) battery.emplace_back(m);
    for (const auto& m : battery) {
        CAPTURE(m.n());
        CHECK(check_operator_reflection(build_k_operator(m), r_prime(m.n(), Variant::r)).passed);
    }
    // a matrix that does not solve the reflection equation
    OperatorMatrix bad = build_k_operator(CharacterMatrix(oracle::from_rows({{Scalar(2), Scalar(0)}, {Scalar(0), Scalar(3)}})));
    CHECK(!check_operator_reflection(bad, r_prime(2, Variant::r)).passed);
}

TEST_CASE("quantum trace over the auxiliary leg is central") {
    const Scalar s = Scalar::s();
    std::vector<CharacterMatrix> battery{CharacterMatrix(identity_matrix<Scalar>(2)), grassmann_matrix(2, s), grassmann_matrix(4, s)};
    for (const auto& m : battery) {
        CAPTURE(m.n());
        CHECK(check_centrality_bf(build_k_operator(m)).passed);
    }
    OperatorMatrix k = build_k_operator(grassmann_matrix(2, s));
    // C = q K^1_1 + q^{-1} K^2_2
    ScalarMatrix c = scaled(q(1, 1), k.block(0, 0)) + scaled(q(-1, 1), k.block(1, 1));
    CHECK(qtrace_aux(k).matrix() == c);
    CHECK(!is_scalar_multiple_of_identity(c));
    k.flat(1, 0) = k.flat(1, 0) + Scalar(1);
    Report r = check_centrality_bf(k);
    CHECK(!r.passed);
    CHECK(r.relation.rfind("commute(C,K^", 0) == 0);
}

TEST_CASE("coideal generators") {
    const Scalar s = Scalar::s();
    {
        GeneratorSet rep = vector_rep(2);
        CoidealGenerators g = grassmann_coideal_generators(2, s);
        REQUIRE(g.sigma_b.size() == 1);
        CHECK(g.tau.empty());
        const ScalarMatrix& x = gen(rep, GeneratorKind::x, 1);
        const ScalarMatrix& y = gen(rep, GeneratorKind::y, 1);
        const ScalarMatrix& t = gen(rep, GeneratorKind::t, 1);
        const ScalarMatrix& ti = gen(rep, GeneratorKind::t_inv, 1);
        ScalarMatrix expected = scaled(Scalar(-1), multiply(y, t)) - multiply(multiply(ti, x), t) + scaled(s, t);
        CHECK(g.sigma_b[0].name == "sigma(B_1)");
        CHECK(g.sigma_b[0].matrix == expected);
    }
    {
        const int n = 4;
        GeneratorSet rep = vector_rep(n);
        CoidealGenerators g = grassmann_coideal_generators(n, s);
        REQUIRE(g.sigma_b.size() == 3);
        REQUIRE(g.tau.size() == 2);
        ScalarMatrix expected = scaled(Scalar(-1), multiply(gen(rep, GeneratorKind::y, 1), gen(rep, GeneratorKind::t, 1))) -
                                multiply(multiply(gen(rep, GeneratorKind::t_inv, 3), gen(rep, GeneratorKind::x, 3)),
                                         gen(rep, GeneratorKind::t, 1));
        CHECK(g.sigma_b[0].matrix == expected);
        // middle generator carries the s term
        ScalarMatrix mid = scaled(Scalar(-1), multiply(gen(rep, GeneratorKind::y, 2), gen(rep, GeneratorKind::t, 2))) -
                           multiply(multiply(gen(rep, GeneratorKind::t_inv, 2), gen(rep, GeneratorKind::x, 2)),
                                    gen(rep, GeneratorKind::t, 2)) +
                           scaled(s, gen(rep, GeneratorKind::t, 2));
        CHECK(g.sigma_b[1].matrix == mid);
        CHECK(g.tau[0].name == "tau(omega_1-omega_3)");
        WeightVector w = WeightVector::fundamental(1, n) - WeightVector::fundamental(3, n);
        ScalarMatrix diag = zero_matrix<Scalar>(n, n);
        for (int j = 1; j <= n; ++j) diag(j - 1, j - 1) = q(pairing(w, WeightVector::of_basis_vector(j, n)), n);
        CHECK(g.tau[0].matrix == diag);
        // exponents (1/2, -1/2, -1/2, 1/2)
        CHECK(diag(0, 0) == q(Rational(1, 2), 2));
        CHECK(diag(1, 1) == q(Rational(-1, 2), 2));
        CHECK(diag(3, 3) == q(Rational(1, 2), 2));
    }
    CHECK_THROWS_AS(grassmann_coideal_generators(3, s), OddDimension);
}

TEST_CASE("central element commutes with the coideal generators") {
    const Scalar s = Scalar::s();
    for (int n : {2, 4}) {
        CAPTURE(n);
        CHECK(check_centrality_bs(build_k_operator(grassmann_matrix(n, s)), grassmann_coideal_generators(n, s)).passed);
    }
    // mismatched parameter
    Report shifted = check_centrality_bs(build_k_operator(grassmann_matrix(2, s + Scalar(1))), grassmann_coideal_generators(2, s));
    CHECK(!shifted.passed);
    CHECK(shifted.relation == "commute(C,sigma(B_1))");
    REQUIRE(shifted.witness.has_value());
    // singular solutions
    for (const ScalarMatrix& m : {oracle::unit_matrix(2, 1, 1), oracle::unit_matrix(2, 0, 1)})
        CHECK(!check_centrality_bs(build_k_operator(CharacterMatrix(m)), grassmann_coideal_generators(2, s)).passed);
    // c I gives a scalar C, which commutes with anything
    OperatorMatrix ci = build_k_operator(CharacterMatrix(scaled(s, identity_matrix<Scalar>(2))));
    CHECK(is_scalar_multiple_of_identity(qtrace_aux(ci).matrix()));
    CHECK(check_centrality_bs(ci, grassmann_coideal_generators(2, s)).passed);
    CHECK_THROWS_AS(check_centrality_bs(build_k_operator(grassmann_matrix(2, s)), grassmann_coideal_generators(4, s)),
                    DimensionMismatch);
}
