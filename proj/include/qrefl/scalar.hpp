#ifndef QREFL_SCALAR_HPP
#define QREFL_SCALAR_HPP

// Exact coefficients: the fraction field of Laurent polynomials in t = q^{1/N}
// with an additional polynomial variable s, over the rationals.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qrefl/errors.hpp"

namespace qrefl {

using Rational = mpq_class;
using Integer = mpz_class;

// coeff * q^{q_exp/N} * s^{s_exp}
struct Term {
    int q_exp = 0;
    int s_exp = 0;
    Rational coeff;
};

/// Laurent polynomial in q^{1/N} and polynomial in s.
///
/// Terms are kept sorted by (q_exp, s_exp) ascending with no zero
/// coefficients, so structural comparison is equality once both sides share a
/// root order.
class LaurentPoly {
   public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c, int root_order = 1);
    LaurentPoly(std::vector<Term> terms, int root_order);

    static LaurentPoly monomial(const Rational& c, int q_exp, int s_exp, int root_order);

    int root_order() const noexcept { return root_order_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const noexcept;
    bool is_constant() const noexcept;
    // single term with s_exp = 0: a unit of the Laurent ring
    bool is_unit_monomial() const noexcept;
    bool depends_on_s() const noexcept;

    int min_q_exp() const;
    int max_q_exp() const;

    // Re-expresses the polynomial with root order k * root_order().
    LaurentPoly lifted(int new_root_order) const;
    // Multiplies by q^{shift/N}.
    LaurentPoly shifted(int shift) const;
    LaurentPoly scaled(const Rational& c) const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

   private:
    void normalize();

    int root_order_ = 1;
    std::vector<Term> terms_;
};

// Brings a and b to a common root order (the lcm).
void unify_root_order(LaurentPoly& a, LaurentPoly& b);

// gcd in Q[s][t] (t = q^{1/N}); monomial factors in t are units and ignored.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
// Exact quotient a / b; throws if b does not divide a.
LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

/// An element of Q(q^{1/N}, s) in canonical form.
///
/// Canonical form: numerator and denominator coprime, denominator with minimum
/// q-exponent 0 and leading term (highest q-exponent, then highest
/// s-exponent) with coefficient 1. Scalars with unit denominator are exactly
/// the Laurent polynomials.
class Scalar {
   public:
    Scalar() = default;
    Scalar(int value) : num_(Rational(value)) {}  // NOLINT: implicit by design of the field
    Scalar(const Rational& value) : num_(value) {}  // NOLINT
    Scalar(LaurentPoly poly) : num_(std::move(poly)), den_(Rational(1), num_.root_order()) {}  // NOLINT
    Scalar(LaurentPoly num, LaurentPoly den);

    // q^{numerator/denominator}, stored with root order `root_order` lifted as needed.
    static Scalar q_power(const Rational& exponent, int root_order = 1);
    static Scalar q_power(int exponent) { return q_power(Rational(exponent)); }
    static Scalar s();

    const LaurentPoly& numerator() const noexcept { return num_; }
    const LaurentPoly& denominator() const noexcept { return den_; }
    int root_order() const noexcept { return num_.root_order(); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    bool depends_on_s() const noexcept { return num_.depends_on_s() || den_.depends_on_s(); }

    Scalar lifted(int new_root_order) const;
    Scalar inverse() const;
    Scalar pow(int exponent) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& b);
    Scalar& operator-=(const Scalar& b);
    Scalar& operator*=(const Scalar& b);
    Scalar& operator/=(const Scalar& b);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

   private:
    void canonicalize();
    void normalize_units();
    static Scalar from_coprime(LaurentPoly num, LaurentPoly den);
    static Scalar cross_reduced(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c,
                                const LaurentPoly& d);

    LaurentPoly num_;
    LaurentPoly den_{Rational(1)};
};

enum class ArithKind { add, sub, mul, div };

Scalar arith(const Scalar& a, const Scalar& b, ArithKind kind);

inline bool is_zero(const Scalar& x) noexcept { return x.is_zero(); }

Scalar parse_scalar(std::string_view text, int root_order = 1);
std::string print_scalar(const Scalar& x);
std::string print_poly(const LaurentPoly& p);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace qrefl

#endif  // QREFL_SCALAR_HPP
