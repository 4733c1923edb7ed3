#include "symlie/expr.hpp"

namespace symlie {

namespace {

// Terminating decimals print as decimals so they parse back to the same rational.
std::string number_text(const Number& n) {
    if (!n.exact()) return n.str();
    Rational r = n.rational();
    if (r.den == 1) return std::to_string(r.num);
    std::int64_t d = r.den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d == 1) {
        int k = std::max(twos, fives);
        if (k <= 15) {
            __int128 scaled = static_cast<__int128>(r.num);
            for (int i = 0; i < k - twos; ++i) scaled *= 2;
            for (int i = 0; i < k - fives; ++i) scaled *= 5;
            bool neg = scaled < 0;
            if (neg) scaled = -scaled;
            std::string digits;
            while (scaled > 0) { digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10))); scaled /= 10; }
            while (static_cast<int>(digits.size()) <= k) digits.insert(digits.begin(), '0');
            std::string s = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
            if (s.size() - 1 <= 15 + 1) return (neg ? "-" : "") + s;
        }
    }
    return n.str();
}

enum Prec { kSum = 1, kProd = 2, kUnary = 3, kPow = 4, kAtom = 5 };

void emit(const Expr& e, int ctx, std::string& out);

void wrap(const Expr& e, int own, int ctx, std::string& out, void (*body)(const Expr&, std::string&)) {
    if (own < ctx) out += '(';
    body(e, out);
    if (own < ctx) out += ')';
}

void emit(const Expr& e, int ctx, std::string& out) {
    switch (e.kind()) {
        case Kind::Num: {
            std::string s = number_text(e.number());
            bool compound = ctx > kProd && (s.find('/') != std::string::npos || s[0] == '-');
            if (compound) out += '(';
            out += s;
            if (compound) out += ')';
            return;
        }
        case Kind::Var:
        case Kind::Param: out += e.name(); return;
        case Kind::Add:
            wrap(e, kSum, ctx, out, [](const Expr& x, std::string& o) {
                for (std::size_t i = 0; i < x.args().size(); ++i) {
                    const Expr& a = x.arg(i);
                    if (i) o += " + ";
                    emit(a, i == 0 ? kSum : kProd, o);
                }
            });
            return;
        case Kind::Sub:
            wrap(e, kSum, ctx, out, [](const Expr& x, std::string& o) {
                emit(x.arg(0), kSum, o);
                o += " - ";
                emit(x.arg(1), kProd, o);
            });
            return;
        case Kind::Mul:
            wrap(e, kProd, ctx, out, [](const Expr& x, std::string& o) {
                for (std::size_t i = 0; i < x.args().size(); ++i) {
                    if (i) o += "*";
                    emit(x.arg(i), i == 0 ? kProd : kUnary, o);
                }
            });
            return;
        case Kind::Div:
            wrap(e, kProd, ctx, out, [](const Expr& x, std::string& o) {
                emit(x.arg(0), kProd, o);
                o += "/";
                emit(x.arg(1), kUnary, o);
            });
            return;
        case Kind::Neg:
            wrap(e, kUnary, ctx, out, [](const Expr& x, std::string& o) {
                o += "-";
                emit(x.arg(0), kUnary, o);
            });
            return;
        case Kind::Pow:
            wrap(e, kPow, ctx, out, [](const Expr& x, std::string& o) {
                emit(x.arg(0), kAtom, o);
                o += "^";
                emit(x.arg(1), kPow, o);
            });
            return;
        case Kind::Func:
            out += fn_name(e.fn());
            out += '(';
            emit(e.arg(0), 0, out);
            out += ')';
            return;
        case Kind::Atan2:
            out += "atan2(";
            emit(e.arg(0), 0, out);
            out += ", ";
            emit(e.arg(1), 0, out);
            out += ')';
            return;
    }
}

}  // namespace

std::string to_string(const Expr& e) {
    std::string out;
    emit(e, 0, out);
    return out;
}

}  // namespace symlie
