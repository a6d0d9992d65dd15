#include "qrefl/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <ostream>
#include <utility>

namespace qrefl {

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail)
    : Error("parse error at offset " + std::to_string(offset) + ": " + detail),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

bool term_less(const Term& a, const Term& b) {
    return a.q_exp != b.q_exp ? a.q_exp < b.q_exp : a.s_exp < b.s_exp;
}

bool same_monomial(const Term& a, const Term& b) { return a.q_exp == b.q_exp && a.s_exp == b.s_exp; }

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const Rational& c, int root_order) : root_order_(root_order) {
    if (c != 0) terms_.push_back({0, 0, c});
    if (!terms_.empty()) terms_[0].coeff.canonicalize();
}

LaurentPoly::LaurentPoly(std::vector<Term> terms, int root_order)
    : root_order_(root_order), terms_(std::move(terms)) {
    if (root_order_ <= 0) throw RootOrderIncompatible("root order must be positive");
    normalize();
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int q_exp, int s_exp, int root_order) {
    if (s_exp < 0) throw Error("negative power of s in a polynomial");
    LaurentPoly p;
    p.root_order_ = root_order;
    if (c != 0) p.terms_.push_back({q_exp, s_exp, c});
    if (!p.terms_.empty()) p.terms_[0].coeff.canonicalize();
    return p;
}

void LaurentPoly::normalize() {
    for (auto& t : terms_) t.coeff.canonicalize();
    std::sort(terms_.begin(), terms_.end(), term_less);
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && same_monomial(merged.back(), t)) {
            merged.back().coeff += t.coeff;
        } else {
            if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
            merged.push_back(std::move(t));
        }
    }
    if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
    terms_ = std::move(merged);
}

bool LaurentPoly::is_one() const noexcept {
    return terms_.size() == 1 && terms_[0].q_exp == 0 && terms_[0].s_exp == 0 && terms_[0].coeff == 1;
}

bool LaurentPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].q_exp == 0 && terms_[0].s_exp == 0);
}

bool LaurentPoly::is_unit_monomial() const noexcept { return terms_.size() == 1 && terms_[0].s_exp == 0; }

bool LaurentPoly::depends_on_s() const noexcept {
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.s_exp != 0; });
}

int LaurentPoly::min_q_exp() const { return terms_.empty() ? 0 : terms_.front().q_exp; }

int LaurentPoly::max_q_exp() const { return terms_.empty() ? 0 : terms_.back().q_exp; }

LaurentPoly LaurentPoly::lifted(int new_root_order) const {
    if (new_root_order == root_order_) return *this;
    if (new_root_order % root_order_ != 0)
        throw RootOrderIncompatible("cannot lift root order " + std::to_string(root_order_) + " to " +
                                    std::to_string(new_root_order));
    int k = new_root_order / root_order_;
    LaurentPoly out = *this;
    out.root_order_ = new_root_order;
    for (auto& t : out.terms_) t.q_exp *= k;
    return out;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
    LaurentPoly out = *this;
    for (auto& t : out.terms_) t.q_exp += shift;
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (c == 0) return LaurentPoly(Rational(0), root_order_);
    LaurentPoly out = *this;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(Rational(-1)); }

void unify_root_order(LaurentPoly& a, LaurentPoly& b) {
    if (a.root_order() == b.root_order()) return;
    int l = std::lcm(a.root_order(), b.root_order());
    a = a.lifted(l);
    b = b.lifted(l);
}

namespace {

LaurentPoly add_same_order(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    const auto& x = a.terms();
    const auto& y = b.terms();
    std::vector<Term> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && term_less(x[i], y[j]))) {
            out.push_back(x[i++]);
        } else if (i == x.size() || term_less(y[j], x[i])) {
            Term t = y[j++];
            if (subtract) t.coeff = -t.coeff;
            out.push_back(std::move(t));
        } else {
            Rational c = subtract ? Rational(x[i].coeff - y[j].coeff) : Rational(x[i].coeff + y[j].coeff);
            if (c != 0) out.push_back({x[i].q_exp, x[i].s_exp, c});
            ++i;
            ++j;
        }
    }
    return LaurentPoly(std::move(out), a.root_order());
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.root_order() != b.root_order()) {
        LaurentPoly x = a, y = b;
        unify_root_order(x, y);
        return add_same_order(x, y, false);
    }
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return add_same_order(a, b, false);
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.root_order() != b.root_order()) {
        LaurentPoly x = a, y = b;
        unify_root_order(x, y);
        return add_same_order(x, y, true);
    }
    if (b.is_zero()) return a;
    return add_same_order(a, b, true);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.root_order() != b.root_order()) {
        LaurentPoly x = a, y = b;
        unify_root_order(x, y);
        return x * y;
    }
    if (a.is_zero() || b.is_zero()) return LaurentPoly(Rational(0), a.root_order());
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a.terms())
        for (const auto& y : b.terms()) out.push_back({x.q_exp + y.q_exp, x.s_exp + y.s_exp, x.coeff * y.coeff});
    return LaurentPoly(std::move(out), a.root_order());
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.root_order() != b.root_order()) {
        LaurentPoly x = a, y = b;
        unify_root_order(x, y);
        return x == y;
    }
    const auto& x = a.terms();
    const auto& y = b.terms();
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!same_monomial(x[i], y[i]) || x[i].coeff != y[i].coeff) return false;
    return true;
}

// ---------------------------------------------------------------------------
// gcd machinery: Q[s] coefficients, dense in t.

namespace {

using SPoly = std::vector<Rational>;  // coefficient of s^k at index k
using TPoly = std::vector<SPoly>;     // coefficient of t^k at index k

void trim(SPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(TPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

int deg(const TPoly& p) { return static_cast<int>(p.size()) - 1; }

SPoly s_sub(const SPoly& a, const SPoly& b) {
    SPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

SPoly s_mul(const SPoly& a, const SPoly& b) {
    if (a.empty() || b.empty()) return {};
    SPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// a = quot * b + rem
void s_divmod(const SPoly& a, const SPoly& b, SPoly& quot, SPoly& rem) {
    assert(!b.empty());
    rem = a;
    quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    const Rational& lead = b.back();
    while (!rem.empty() && rem.size() >= b.size()) {
        std::size_t shift = rem.size() - b.size();
        Rational c = rem.back() / lead;
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) rem[i + shift] -= c * b[i];
        rem.pop_back();
        trim(rem);
    }
    trim(quot);
}

SPoly s_exact_div(const SPoly& a, const SPoly& b) {
    SPoly quot, rem;
    s_divmod(a, b, quot, rem);
    if (!rem.empty()) throw Error("internal: inexact division in Q[s]");
    return quot;
}

SPoly s_monic(SPoly p) {
    if (p.empty()) return p;
    Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

// Scales p to coprime integer coefficients.
void clear_numeric_content(SPoly& p) {
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& x : p) {
        if (x == 0) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
    }
    if (num_gcd == 0) return;
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (factor != 1)
        for (auto& x : p) x *= factor;
}

// lc(b)^k a = quot * b + rem, integer arithmetic for integer inputs
SPoly s_prem(SPoly a, const SPoly& b) {
    const Rational& lead = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        Rational c = a.back();
        for (auto& x : a) x *= lead;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

// Degree of gcd(a, b) mod p for integer a, b, or -1 if p divides a leading
// coefficient. Bounds the degree of the rational gcd from above.
int modular_gcd_degree(const SPoly& a, const SPoly& b, unsigned long p) {
    auto reduce = [p](const SPoly& x) {
        std::vector<unsigned long> r(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            unsigned long v = mpz_fdiv_ui(x[i].get_num_mpz_t(), p);
            r[i] = v;
        }
        return r;
    };
    auto mul = [p](unsigned long x, unsigned long y) { return static_cast<unsigned long>((static_cast<unsigned __int128>(x) * y) % p); };
    auto inv = [&](unsigned long x) {
        unsigned long result = 1, base = x, e = p - 2;
        while (e) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    };
    std::vector<unsigned long> u = reduce(a), v = reduce(b);
    if (u.empty() || v.empty() || u.back() == 0 || v.back() == 0) return -1;
    auto strip = [](std::vector<unsigned long>& x) {
        while (!x.empty() && x.back() == 0) x.pop_back();
    };
    while (!v.empty()) {
        if (u.size() < v.size()) std::swap(u, v);
        unsigned long lead_inv = inv(v.back());
        while (u.size() >= v.size() && !u.empty()) {
            unsigned long c = mul(u.back(), lead_inv);
            std::size_t shift = u.size() - v.size();
            for (std::size_t i = 0; i < v.size(); ++i) u[i + shift] = (u[i + shift] + p - mul(c, v[i])) % p;
            u.pop_back();
            strip(u);
        }
        std::swap(u, v);
    }
    return static_cast<int>(u.size()) - 1;
}

SPoly s_gcd(SPoly a, SPoly b) {
    if (a.size() < b.size()) std::swap(a, b);
    clear_numeric_content(a);
    clear_numeric_content(b);
    if (b.size() == 1) return SPoly{Rational(1)};
    for (unsigned long prime : {4294967291UL, 4294967279UL}) {
        int d = modular_gcd_degree(a, b, prime);
        if (d == 0) return SPoly{Rational(1)};
        if (d > 0) break;
    }
    while (!b.empty()) {
        if (b.size() == 1) return SPoly{Rational(1)};
        SPoly r = s_prem(a, b);
        clear_numeric_content(r);
        a = std::move(b);
        b = std::move(r);
    }
    return s_monic(std::move(a));
}

SPoly content(const TPoly& p) {
    std::vector<const SPoly*> order;
    for (const auto& c : p) {
        if (c.size() == 1) return SPoly{Rational(1)};
        if (!c.empty()) order.push_back(&c);
    }
    std::stable_sort(order.begin(), order.end(), [](const SPoly* x, const SPoly* y) { return x->size() < y->size(); });
    SPoly g;
    for (const SPoly* cp : order) {
        const SPoly& c = *cp;
        g = g.empty() ? s_monic(c) : s_gcd(g, c);
        if (g.size() == 1) break;
    }
    return g;
}

// Scales p to coprime integer coefficients.
void clear_numeric_content(TPoly& p) {
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& c : p)
        for (const auto& x : c) {
            if (x == 0) continue;
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
        }
    if (num_gcd == 0) return;
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (factor == 1) return;
    for (auto& c : p)
        for (auto& x : c) x *= factor;
}

TPoly primitive_part(const TPoly& p, const SPoly& cont) {
    TPoly r = p;
    if (!(cont.size() == 1 && cont[0] == 1))
        for (std::size_t i = 0; i < p.size(); ++i)
            if (!p[i].empty()) r[i] = s_exact_div(p[i], cont);
    clear_numeric_content(r);
    return r;
}

SPoly s_pow(const SPoly& p, int e) {
    SPoly r{Rational(1)};
    for (int k = 0; k < e; ++k) r = s_mul(r, p);
    return r;
}

// Pseudo-remainder: lc(b)^{deg a - deg b + 1} a = q b + r with deg r < deg b.
TPoly prem(TPoly a, const TPoly& b) {
    const SPoly& lead_b = b.back();
    int pending = deg(a) - deg(b) + 1;
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        SPoly lead_a = a.back();
        for (auto& c : a) c = s_mul(c, lead_b);
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = s_sub(a[i + shift], s_mul(lead_a, b[i]));
        trim(a);
        --pending;
    }
    if (pending > 0 && !a.empty()) {
        SPoly f = s_pow(lead_b, pending);
        for (auto& c : a) c = s_mul(c, f);
    }
    return a;
}

// Subresultant remainder sequence; only the last remainder is made primitive.
TPoly t_gcd(TPoly a, TPoly b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    SPoly ca = content(a), cb = content(b);
    SPoly c = s_gcd(ca, cb);
    a = primitive_part(a, ca);
    b = primitive_part(b, cb);
    if (deg(a) < deg(b)) std::swap(a, b);
    SPoly g{Rational(1)}, h{Rational(1)};
    while (true) {
        const int delta = deg(a) - deg(b);
        TPoly r = prem(a, b);
        if (r.empty()) break;
        if (deg(r) == 0) return TPoly{c};
        const SPoly divisor = s_mul(g, s_pow(h, delta));
        for (auto& coeff : r)
            if (!coeff.empty()) coeff = s_exact_div(coeff, divisor);
        a = std::move(b);
        b = std::move(r);
        g = a.back();
        if (delta > 0) h = s_exact_div(s_pow(g, delta), s_pow(h, delta - 1));
    }
    b = primitive_part(b, content(b));
    for (auto& coeff : b) coeff = s_mul(coeff, c);
    return b;
}

// Terms with t-exponents shifted by -min_q_exp.
TPoly to_tpoly(const LaurentPoly& p, int offset) {
    TPoly r;
    for (const auto& term : p.terms()) {
        std::size_t ti = static_cast<std::size_t>(term.q_exp - offset);
        if (r.size() <= ti) r.resize(ti + 1);
        auto& sp = r[ti];
        if (sp.size() <= static_cast<std::size_t>(term.s_exp)) sp.resize(term.s_exp + 1, Rational(0));
        sp[term.s_exp] = term.coeff;
    }
    for (auto& c : r) trim(c);
    trim(r);
    return r;
}

LaurentPoly from_tpoly(const TPoly& p, int offset, int root_order) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p[i].size(); ++j)
            if (p[i][j] != 0) terms.push_back({static_cast<int>(i) + offset, static_cast<int>(j), p[i][j]});
    return LaurentPoly(std::move(terms), root_order);
}

int inner_degree(const TPoly& p) {
    int d = -1;
    for (const auto& c : p) d = std::max(d, static_cast<int>(c.size()) - 1);
    return d;
}

// swaps the roles of t and s
TPoly transposed(const TPoly& p) {
    TPoly r(static_cast<std::size_t>(inner_degree(p) + 1));
    for (auto& c : r) c.assign(p.size(), Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p[i].size(); ++j) r[j][i] = p[i][j];
    for (auto& c : r) trim(c);
    trim(r);
    return r;
}

TPoly t_exact_div(TPoly a, const TPoly& b) {
    if (b.empty()) throw DivisionByZero();
    TPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (!a.empty()) {
        if (a.size() < b.size()) throw Error("internal: inexact division in Q[s][t]");
        std::size_t shift = a.size() - b.size();
        SPoly c = s_exact_div(a.back(), b.back());
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = s_sub(a[i + shift], s_mul(c, b[i]));
        quot[shift] = std::move(c);
        if (!a.empty() && !a.back().empty()) throw Error("internal: inexact division in Q[s][t]");
        trim(a);
    }
    trim(quot);
    return quot;
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a_in, const LaurentPoly& b_in) {
    LaurentPoly a = a_in, b = b_in;
    unify_root_order(a, b);
    int n = a.root_order();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_unit_monomial() || b.is_unit_monomial()) return LaurentPoly(Rational(1), n);
    TPoly ta = to_tpoly(a, a.min_q_exp()), tb = to_tpoly(b, b.min_q_exp());
    // run the remainder sequence in whichever variable has the lower degree
    if (inner_degree(ta) + inner_degree(tb) < deg(ta) + deg(tb)) {
        TPoly g = transposed(t_gcd(transposed(ta), transposed(tb)));
        return from_tpoly(g, 0, n);
    }
    return from_tpoly(t_gcd(std::move(ta), std::move(tb)), 0, n);
}

LaurentPoly exact_quotient(const LaurentPoly& a_in, const LaurentPoly& b_in) {
    LaurentPoly a = a_in, b = b_in;
    unify_root_order(a, b);
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return a;
    if (b.is_unit_monomial()) {
        const Term& t = b.terms()[0];
        std::vector<Term> out = a.terms();
        Rational inv = 1 / t.coeff;
        for (auto& x : out) {
            x.q_exp -= t.q_exp;
            x.coeff *= inv;
        }
        return LaurentPoly(std::move(out), a.root_order());
    }
    int shift_a = a.min_q_exp(), shift_b = b.min_q_exp();
    TPoly quot = t_exact_div(to_tpoly(a, shift_a), to_tpoly(b, shift_b));
    return from_tpoly(quot, shift_a - shift_b, a.root_order());
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    unify_root_order(num_, den_);
    canonicalize();
}

Scalar Scalar::q_power(const Rational& exponent_in, int root_order) {
    Rational exponent = exponent_in;
    exponent.canonicalize();
    Integer d = exponent.get_den();
    int need = std::lcm(root_order, static_cast<int>(d.get_si()));
    Rational scaled = exponent * need;
    return Scalar(LaurentPoly::monomial(Rational(1), static_cast<int>(scaled.get_num().get_si()), 0, need));
}

Scalar Scalar::s() { return Scalar(LaurentPoly::monomial(Rational(1), 0, 1, 1)); }

void Scalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rational(1), num_.root_order());
        return;
    }
    if (den_.is_one()) return;
    if (den_.is_unit_monomial()) {
        num_ = exact_quotient(num_, den_);
        den_ = LaurentPoly(Rational(1), num_.root_order());
        return;
    }
    LaurentPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = exact_quotient(num_, g);
        den_ = exact_quotient(den_, g);
    }
    normalize_units();
}

void Scalar::normalize_units() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rational(1), num_.root_order());
        return;
    }
    if (den_.is_unit_monomial()) {
        num_ = exact_quotient(num_, den_);
        den_ = LaurentPoly(Rational(1), num_.root_order());
        return;
    }
    // leading term: highest q-exponent, then highest s-exponent (last in storage order)
    const Term& lead = den_.terms().back();
    int shift = -den_.min_q_exp();
    Rational inv = 1 / lead.coeff;
    den_ = den_.shifted(shift).scaled(inv);
    num_ = num_.shifted(shift).scaled(inv);
}

Scalar Scalar::lifted(int new_root_order) const {
    Scalar r = *this;
    r.num_ = num_.lifted(new_root_order);
    r.den_ = den_.lifted(new_root_order);
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Scalar(den_, num_);
}

Scalar Scalar::pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Scalar result(LaurentPoly(Rational(1), root_order()));
    Scalar base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -num_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& b) {
    if (b.is_zero()) return *this;
    if (is_zero()) return *this = b;
    if (den_.is_one() && b.den_.is_one()) {
        num_ = num_ + b.num_;
        if (num_.is_zero() || den_.root_order() != num_.root_order())
            den_ = LaurentPoly(Rational(1), num_.root_order());
        return *this;
    }
    if (den_ == b.den_) {
        *this = Scalar(num_ + b.num_, den_);
        return *this;
    }
    // a/b + c/d with g = gcd(b, d): (a d' + c b') / (b' d' g), then only g can cancel
    LaurentPoly g = gcd(den_, b.den_);
    if (g.is_constant()) {
        *this = from_coprime(num_ * b.den_ + b.num_ * den_, den_ * b.den_);
        return *this;
    }
    LaurentPoly bp = exact_quotient(den_, g), dp = exact_quotient(b.den_, g);
    LaurentPoly top = num_ * dp + b.num_ * bp;
    LaurentPoly h = gcd(top, g);
    if (!h.is_constant()) {
        top = exact_quotient(top, h);
        g = exact_quotient(g, h);
    }
    *this = from_coprime(std::move(top), bp * dp * g);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) { return *this += -b; }

Scalar& Scalar::operator*=(const Scalar& b) {
    if (is_zero()) return *this;
    if (b.is_zero()) return *this = b;
    if (den_.is_one() && b.den_.is_one()) {
        num_ = num_ * b.num_;
        if (den_.root_order() != num_.root_order()) den_ = LaurentPoly(Rational(1), num_.root_order());
        return *this;
    }
    *this = cross_reduced(num_, den_, b.num_, b.den_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (is_zero()) return *this;
    if (b.den_.is_one() && b.num_.is_unit_monomial()) {
        LaurentPoly n = num_, d = b.num_;
        unify_root_order(n, d);
        num_ = exact_quotient(n, d);
        if (den_.root_order() != num_.root_order()) den_ = den_.lifted(num_.root_order());
        return *this;
    }
    *this = cross_reduced(num_, den_, b.den_, b.num_);
    return *this;
}

Scalar Scalar::from_coprime(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero()) throw DivisionByZero();
    Scalar r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    unify_root_order(r.num_, r.den_);
    r.normalize_units();
    return r;
}

// (a/b)(c/d) with a/b and c/d each reduced
Scalar Scalar::cross_reduced(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c, const LaurentPoly& d) {
    if (d.is_zero() || b.is_zero()) throw DivisionByZero();
    LaurentPoly a1 = a, b1 = b, c1 = c, d1 = d;
    LaurentPoly g1 = gcd(a1, d1), g2 = gcd(c1, b1);
    if (!g1.is_constant()) {
        a1 = exact_quotient(a1, g1);
        d1 = exact_quotient(d1, g1);
    }
    if (!g2.is_constant()) {
        c1 = exact_quotient(c1, g2);
        b1 = exact_quotient(b1, g2);
    }
    return from_coprime(a1 * c1, b1 * d1);
}

bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

Scalar arith(const Scalar& a, const Scalar& b, ArithKind kind) {
    switch (kind) {
        case ArithKind::add:
            return a + b;
        case ArithKind::sub:
            return a - b;
        case ArithKind::mul:
            return a * b;
        case ArithKind::div:
            return a / b;
    }
    return a;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << print_scalar(x); }

}  // namespace qrefl
