#include "symlie/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace symlie {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Expr parse_all() {
        Expr e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    // Accepts ASCII '-' and U+2212.
    bool minus() {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '-') { ++pos_; return true; }
        if (s_.substr(pos_, 3) == "\xE2\x88\x92") { pos_ += 3; return true; }
        return false;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    static Expr joined(Kind k, const Expr& a, const Expr& b) {
        std::vector<Expr> xs;
        if (a.kind() == k) xs = a.args();
        else xs.push_back(a);
        if (b.kind() == k) xs.insert(xs.end(), b.args().begin(), b.args().end());
        else xs.push_back(b);
        return k == Kind::Add ? Expr::raw_add(std::move(xs)) : Expr::raw_mul(std::move(xs));
    }

    Expr expr() {
        Expr lhs = term();
        for (;;) {
            if (eat('+')) lhs = joined(Kind::Add, lhs, term());
            else if (minus()) lhs = Expr::raw_sub(lhs, term());
            else return lhs;
        }
    }

    Expr term() {
        Expr lhs = unary();
        for (;;) {
            if (eat('*')) lhs = joined(Kind::Mul, lhs, unary());
            else if (eat('/')) {
                Expr rhs = unary();
                if (lhs.is_num() && rhs.is_num() && lhs.number().exact() && rhs.number().exact() && !rhs.number().is_zero())
                    lhs = Expr(lhs.number() * rhs.number().inverse());
                else
                    lhs = Expr::raw_div(lhs, rhs);
            }
            else return lhs;
        }
    }

    Expr unary() {
        if (minus()) {
            Expr a = unary();
            if (a.is_num()) return Expr(-a.number());
            return Expr::raw_neg(a);
        }
        if (eat('+')) return unary();
        return power();
    }

    Expr power() {
        Expr b = base();
        if (eat('^')) return Expr::raw_pow(b, unary());
        return b;
    }

    Expr base() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        if (eat('(')) {
            Expr e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    Expr number() {
        std::size_t start = pos_;
        std::string digits;
        int frac_digits = 0;
        bool dot = false;
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                digits += c;
                if (dot) ++frac_digits;
                ++pos_;
            } else if (c == '.' && !dot) {
                dot = true;
                ++pos_;
            } else {
                break;
            }
        }
        if (digits.empty()) fail("malformed number");
        long exp10 = 0;
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t save = pos_;
            ++pos_;
            bool neg = false;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) { neg = s_[pos_] == '-'; ++pos_; }
            std::string ed;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ed += s_[pos_++];
            if (ed.empty()) {
                pos_ = save;
            } else {
                exp10 = std::strtol(ed.c_str(), nullptr, 10);
                if (neg) exp10 = -exp10;
            }
        }
        std::string text(s_.substr(start, pos_ - start));
        std::size_t first = digits.find_first_not_of('0');
        std::string sig = first == std::string::npos ? "0" : digits.substr(first);
        long scale = exp10 - frac_digits;
        if (sig.size() <= 15 && std::labs(scale) <= 18) {
            std::int64_t m = std::strtoll(sig.c_str(), nullptr, 10);
            std::int64_t p10 = 1;
            for (long i = 0; i < std::labs(scale); ++i) p10 *= 10;
            std::optional<Rational> r = scale >= 0 ? (std::labs(scale) + static_cast<long>(sig.size()) <= 18
                                                          ? Rational::make(m * p10, 1)
                                                          : std::nullopt)
                                                   : Rational::make(m, p10);
            if (r) return Expr(Number(*r));
        }
        return Expr(Number::real(std::strtod(text.c_str(), nullptr)));
    }

    Expr identifier() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string name(s_.substr(start, pos_ - start));
        skip();
        if (pos_ < s_.size() && s_[pos_] == '(') {
            std::size_t at = start;
            ++pos_;
            Expr a = expr();
            if (name == "atan2") {
                if (!eat(',')) fail("atan2 expects two arguments");
                Expr b = expr();
                if (!eat(')')) fail("expected ')'");
                return Expr::raw_atan2(a, b);
            }
            auto f = fn_from_name(name);
            if (!f) throw ParseError("unknown function '" + name + "'", at);
            if (!eat(')')) fail("expected ')'");
            return Expr::raw_func(*f, a);
        }
        if (name == "pi") return Expr(Number::real(M_PI));
        return Expr::sym(name);
    }
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace symlie
