#include "symlie/expr.hpp"

#include <functional>
#include <unordered_map>

namespace symlie {

namespace {

class Differ {
public:
    explicit Differ(std::string v) : v_(std::move(v)) {}

    Expr d(const Expr& e) {
        if (!depends(e)) return Expr(0);
        auto it = memo_.find(e.get());
        if (it != memo_.end()) return it->second;
        Expr r = rule(e);
        memo_.emplace(e.get(), r);
        return r;
    }

private:
    std::string v_;
    std::unordered_map<const Node*, Expr> memo_;
    std::unordered_map<const Node*, bool> dep_;

    bool depends(const Expr& e) {
        auto it = dep_.find(e.get());
        if (it != dep_.end()) return it->second;
        bool r = false;
        if (e.is_symbol()) r = e.name() == v_;
        else
            for (const auto& a : e.args())
                if (depends(a)) { r = true; break; }
        dep_.emplace(e.get(), r);
        return r;
    }

    Expr rule(const Expr& e) {
        switch (e.kind()) {
            case Kind::Num: return Expr(0);
            case Kind::Var:
            case Kind::Param: return Expr(e.name() == v_ ? 1 : 0);
            case Kind::Add: {
                Expr acc(0);
                for (const auto& a : e.args()) acc = acc + d(a);
                return acc;
            }
            case Kind::Sub: return d(e.arg(0)) - d(e.arg(1));
            case Kind::Neg: return -d(e.arg(0));
            case Kind::Mul: {
                Expr acc(0);
                const auto& xs = e.args();
                for (std::size_t i = 0; i < xs.size(); ++i) {
                    Expr di = d(xs[i]);
                    if (di.is_zero_literal()) continue;
                    Expr prod = di;
                    for (std::size_t j = 0; j < xs.size(); ++j)
                        if (j != i) prod = prod * xs[j];
                    acc = acc + prod;
                }
                return acc;
            }
            case Kind::Div: {
                const Expr& a = e.arg(0);
                const Expr& b = e.arg(1);
                Expr da = d(a), db = d(b);
                if (db.is_zero_literal()) return da / b;
                return (da * b - a * db) / pow(b, Expr(2));
            }
            case Kind::Pow: {
                const Expr& a = e.arg(0);
                const Expr& b = e.arg(1);
                if (!depends(b)) {
                    Expr bm1 = b.is_num() ? Expr(b.number() + Number(-1)) : b - Expr(1);
                    return b * pow(a, bm1) * d(a);
                }
                if (!depends(a)) return e * ln(a) * d(b);
                return e * (d(b) * ln(a) + b * d(a) / a);
            }
            case Kind::Func: {
                const Expr& u = e.arg(0);
                Expr du = d(u);
                switch (e.fn()) {
                    case Fn::Sin: return cos(u) * du;
                    case Fn::Cos: return -(sin(u) * du);
                    case Fn::Tan: return du / pow(cos(u), Expr(2));
                    case Fn::Sinh: return func(Fn::Cosh, u) * du;
                    case Fn::Cosh: return func(Fn::Sinh, u) * du;
                    case Fn::Exp: return e * du;
                    case Fn::Ln: return du / u;
                    case Fn::Sqrt: return du / (Expr(2) * e);
                    case Fn::Atan: return du / (Expr(1) + pow(u, Expr(2)));
                    case Fn::Abs: return u / e * du;
                }
                return Expr(0);
            }
            case Kind::Atan2: {
                const Expr& y = e.arg(0);
                const Expr& x = e.arg(1);
                return (x * d(y) - y * d(x)) / (pow(x, Expr(2)) + pow(y, Expr(2)));
            }
        }
        return Expr(0);
    }
};

}  // namespace

Expr differentiate(const Expr& e, const std::string& v, bool simplified) {
    Differ df(v);
    Expr r = df.d(e);
    return simplified ? simplify(r) : r;
}

}  // namespace symlie
