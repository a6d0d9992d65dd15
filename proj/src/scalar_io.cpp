// Text form of scalars.
//
//   expr     := ("+"|"-")? term (("+"|"-") term)*
//   term     := factor (("*"|"/")? factor)*
//   factor   := rational | variable power? | "(" expr ")"
//   variable := "q" | "s"
//   power    := "^" (integer | "(" integer "/" integer ")" | "{" integer "/" integer "}")
//   rational := integer ("/" positive-integer)?
//   integer  := "-"? digits
//
// "/" between factors is division, which makes "(num)/(den)" and "3/2" read
// the same way.

#include <cctype>
#include <numeric>
#include <sstream>

#include "qrefl/scalar.hpp"

namespace qrefl {

namespace {

class Parser {
   public:
    Parser(std::string_view text, int root_order) : text_(text), root_order_(root_order) {}

    Scalar parse() {
        Scalar value = expr();
        skip_ws();
        if (pos_ != text_.size()) fail({"+", "-", "*", "/", "end of input"}, "unexpected character");
        return value;
    }

   private:
    [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail) const {
        throw ParseError(pos_, std::move(expected), detail);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail({std::string(1, c)}, std::string("expected '") + c + "'");
    }

    static bool starts_factor(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 's' || c == '(';
    }

    Scalar expr() {
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Scalar value = term();
        if (negate) value = -value;
        for (;;) {
            if (accept('+'))
                value += term();
            else if (accept('-'))
                value -= term();
            else
                return value;
        }
    }

    Scalar term() {
        Scalar value = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                value *= factor();
            } else if (c == '/') {
                ++pos_;
                std::size_t at = pos_;
                Scalar d = factor();
                if (d.is_zero()) {
                    pos_ = at;
                    fail({"nonzero factor"}, "division by zero");
                }
                value /= d;
            } else if (starts_factor(c)) {
                value *= factor();
            } else {
                return value;
            }
        }
    }

    Integer integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        skip_ws();
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (digits == pos_) {
            pos_ = start;
            fail({"integer"}, "expected an integer");
        }
        Integer v(std::string(text_.substr(digits, pos_ - digits)));
        return text_[start] == '-' ? Integer(-v) : v;
    }

    Rational power_exponent() {
        char open = peek();
        if (open == '(' || open == '{') {
            ++pos_;
            Integer num = integer();
            Integer den = 1;
            if (accept('/')) {
                std::size_t at = pos_;
                den = integer();
                if (den <= 0) {
                    pos_ = at;
                    fail({"positive-integer"}, "exponent denominator must be positive");
                }
            }
            expect(open == '(' ? ')' : '}');
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(integer());
    }

    Scalar factor() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Scalar inner = expr();
            expect(')');
            return inner;
        }
        if (c == 'q' || c == 's') {
            ++pos_;
            std::size_t at = pos_;
            Rational exponent = 1;
            if (accept('^')) {
                at = pos_;
                exponent = power_exponent();
            }
            if (c == 'q') {
                Integer den = exponent.get_den();
                if (!den.fits_sint_p() || !exponent.get_num().fits_sint_p()) {
                    pos_ = at;
                    fail({"integer"}, "exponent out of range");
                }
                return Scalar::q_power(exponent, root_order_);
            }
            if (exponent.get_den() != 1 || !exponent.get_num().fits_sint_p()) {
                pos_ = at;
                fail({"integer"}, "s takes integer exponents only");
            }
            int k = static_cast<int>(exponent.get_num().get_si());
            Scalar base = Scalar::s();
            return base.pow(k);
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            // a negative integer is only a factor directly after '*' or '/'
            Integer num = integer();
            return Scalar(Rational(num));
        }
        fail({"integer", "q", "s", "("}, c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    std::string_view text_;
    int root_order_;
    std::size_t pos_ = 0;
};

std::string rational_text(const Rational& r) { return r.get_str(); }

std::string q_part(int q_exp, int root_order) {
    if (q_exp == 0) return {};
    int g = std::gcd(q_exp < 0 ? -q_exp : q_exp, root_order);
    int num = q_exp / g, den = root_order / g;
    if (den == 1) return num == 1 ? "q" : "q^" + std::to_string(num);
    return "q^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

std::string s_part(int s_exp) {
    if (s_exp == 0) return {};
    return s_exp == 1 ? "s" : "s^" + std::to_string(s_exp);
}

}  // namespace

Scalar parse_scalar(std::string_view text, int root_order) {
    if (root_order <= 0) throw RootOrderIncompatible("root order must be positive");
    Scalar value = Parser(text, root_order).parse();
    int target = std::lcm(root_order, value.root_order());
    return value.lifted(target);
}

std::string print_poly(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    // decreasing q-exponent, then increasing s-exponent
    std::vector<const Term*> order;
    for (const auto& t : p.terms()) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
        return a->q_exp != b->q_exp ? a->q_exp > b->q_exp : a->s_exp < b->s_exp;
    });
    std::string out;
    bool first = true;
    for (const Term* t : order) {
        std::string mono = q_part(t->q_exp, p.root_order());
        std::string sp = s_part(t->s_exp);
        if (!sp.empty()) mono = mono.empty() ? sp : mono + "*" + sp;
        bool negative = t->coeff < 0;
        Rational mag = abs(t->coeff);
        std::string body;
        if (mono.empty())
            body = rational_text(mag);
        else if (mag == 1)
            body = mono;
        else
            body = rational_text(mag) + "*" + mono;
        if (first)
            out = negative ? "-" + body : body;
        else
            out += negative ? " - " + body : " + " + body;
        first = false;
    }
    return out;
}

std::string print_scalar(const Scalar& x) {
    if (x.is_polynomial()) return print_poly(x.numerator());
    return "(" + print_poly(x.numerator()) + ")/(" + print_poly(x.denominator()) + ")";
}

}  // namespace qrefl
