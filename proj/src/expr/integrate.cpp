#include "symlie/expr.hpp"

namespace symlie {

namespace {

using Opt = std::optional<Expr>;

// a with arg = a*v + b, if arg is linear in v
Opt linear_slope(const Expr& arg, const std::string& v) {
    Expr a = simplify(differentiate(arg, v));
    if (depends_on(a, v) || a.is_zero_literal()) return std::nullopt;
    return a;
}

Opt integrate(const Expr& e, const std::string& v, int depth);

// ∫ vⁿ h(v) dv for h in {sin, cos, exp, sinh, cosh} of a linear argument
Opt by_parts(std::int64_t n, const Expr& h, const std::string& v, int depth) {
    Opt H = integrate(h, v, depth + 1);
    if (!H) return std::nullopt;
    Expr V = Expr::var(v);
    if (n == 0) return H;
    Opt rest = by_parts(n - 1, *H, v, depth + 1);
    if (!rest) return std::nullopt;
    return pow(V, Expr(n)) * *H - Expr(n) * *rest;
}

bool transcendental(const Expr& e) {
    if (e.kind() != Kind::Func) return false;
    switch (e.fn()) {
        case Fn::Sin:
        case Fn::Cos:
        case Fn::Exp:
        case Fn::Sinh:
        case Fn::Cosh: return true;
        default: return false;
    }
}

Opt integrate(const Expr& e, const std::string& v, int depth) {
    if (depth > 24) return std::nullopt;
    Expr V = Expr::var(v);
    if (!depends_on(e, v)) return e * V;
    switch (e.kind()) {
        case Kind::Var:
        case Kind::Param: return Expr(Number(Rational{1, 2})) * pow(V, Expr(2));
        case Kind::Neg: {
            Opt a = integrate(e.arg(0), v, depth + 1);
            if (!a) return std::nullopt;
            return -*a;
        }
        case Kind::Add: {
            std::vector<Expr> parts;
            for (const auto& a : e.args()) {
                Opt r = integrate(a, v, depth + 1);
                if (!r) return std::nullopt;
                parts.push_back(*r);
            }
            return sum(parts);
        }
        case Kind::Sub: {
            Opt a = integrate(e.arg(0), v, depth + 1), b = integrate(e.arg(1), v, depth + 1);
            if (!a || !b) return std::nullopt;
            return *a - *b;
        }
        case Kind::Mul: {
            Expr c(1);
            std::vector<Expr> dep;
            for (const auto& a : e.args()) {
                if (depends_on(a, v)) dep.push_back(a);
                else c = c * a;
            }
            if (dep.size() == 1) {
                Opt r = integrate(dep[0], v, depth + 1);
                if (!r) return std::nullopt;
                return c * *r;
            }
            if (dep.size() == 2) {
                for (int k = 0; k < 2; ++k) {
                    const Expr& p = dep[static_cast<std::size_t>(k)];
                    const Expr& h = dep[static_cast<std::size_t>(1 - k)];
                    std::int64_t n = -1;
                    if (p.kind() == Kind::Var && p.name() == v) n = 1;
                    else if (p.kind() == Kind::Pow && structurally_equal(p.arg(0), V) && p.arg(1).is_num() &&
                             p.arg(1).number().is_integer() && p.arg(1).number().rational().num > 0)
                        n = p.arg(1).number().rational().num;
                    if (n > 0 && transcendental(h)) {
                        Opt r = by_parts(n, h, v, depth + 1);
                        if (!r) return std::nullopt;
                        return c * *r;
                    }
                }
            }
            return std::nullopt;
        }
        case Kind::Div: {
            if (!depends_on(e.arg(1), v)) {
                Opt r = integrate(e.arg(0), v, depth + 1);
                if (!r) return std::nullopt;
                return *r / e.arg(1);
            }
            if (!depends_on(e.arg(0), v)) {
                Opt a = linear_slope(e.arg(1), v);
                if (a) return e.arg(0) * ln(e.arg(1)) / *a;
                if (e.arg(1).kind() == Kind::Pow)
                    return integrate(e.arg(0) * pow(e.arg(1).arg(0), -e.arg(1).arg(1)), v, depth + 1);
            }
            return std::nullopt;
        }
        case Kind::Pow: {
            const Expr& b = e.arg(0);
            const Expr& n = e.arg(1);
            if (depends_on(n, v)) {
                if (depends_on(b, v)) return std::nullopt;
                Opt a = linear_slope(n, v);
                if (!a) return std::nullopt;
                return e / (*a * ln(b));
            }
            Opt a = linear_slope(b, v);
            if (!a) return std::nullopt;
            if (n.is_num() && n.number() == Number(-1)) return ln(b) / *a;
            Expr n1 = n + Expr(1);
            return pow(b, n1) / (*a * n1);
        }
        case Kind::Func: {
            Opt a = linear_slope(e.arg(0), v);
            if (!a) return std::nullopt;
            const Expr& u = e.arg(0);
            switch (e.fn()) {
                case Fn::Sin: return -cos(u) / *a;
                case Fn::Cos: return sin(u) / *a;
                case Fn::Exp: return e / *a;
                case Fn::Sinh: return func(Fn::Cosh, u) / *a;
                case Fn::Cosh: return func(Fn::Sinh, u) / *a;
                default: return std::nullopt;
            }
        }
        default: return std::nullopt;
    }
}

}  // namespace

std::optional<Expr> antiderivative(const Expr& e, const std::string& v, const SampleDomain& dom) {
    Expr s = simplify(e);
    Opt r = integrate(s, v, 0);
    if (!r) return std::nullopt;
    Expr out = simplify(*r);
    if (!is_zero(differentiate(out, v) - s, dom)) return std::nullopt;
    return out;
}

}  // namespace symlie
