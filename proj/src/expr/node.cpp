#include "symlie/expr.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <unordered_map>

namespace symlie {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t number_hash(const Number& n) {
    if (n.exact()) return mix(std::hash<std::int64_t>{}(n.rational().num), std::hash<std::int64_t>{}(n.rational().den));
    return mix(77, std::hash<double>{}(n.value()));
}

Expr make(Kind k, std::vector<Expr> args, Number v = Number(), std::string name = {}, Fn fn = Fn::Sin) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->value = v;
    n->name = std::move(name);
    n->fn = fn;
    n->args = std::move(args);
    std::size_t h = static_cast<std::size_t>(k) * 1315423911ULL;
    if (k == Kind::Num) h = mix(h, number_hash(v));
    if (k == Kind::Var || k == Kind::Param) h = mix(h, std::hash<std::string>{}(n->name));
    if (k == Kind::Func) h = mix(h, static_cast<std::size_t>(fn) + 101);
    for (const auto& a : n->args) h = mix(h, a.hash());
    n->hash = h;
    return Expr(std::shared_ptr<const Node>(std::move(n)));
}

const std::vector<Expr> kNoArgs;

}  // namespace

const char* fn_name(Fn f) {
    switch (f) {
        case Fn::Sin: return "sin";
        case Fn::Cos: return "cos";
        case Fn::Tan: return "tan";
        case Fn::Sinh: return "sinh";
        case Fn::Cosh: return "cosh";
        case Fn::Exp: return "exp";
        case Fn::Ln: return "ln";
        case Fn::Sqrt: return "sqrt";
        case Fn::Atan: return "atan";
        case Fn::Abs: return "abs";
    }
    return "?";
}

std::optional<Fn> fn_from_name(std::string_view s) {
    static const std::pair<const char*, Fn> table[] = {
        {"sin", Fn::Sin},   {"cos", Fn::Cos},   {"tan", Fn::Tan},   {"sinh", Fn::Sinh}, {"cosh", Fn::Cosh},
        {"exp", Fn::Exp},   {"ln", Fn::Ln},     {"log", Fn::Ln},    {"sqrt", Fn::Sqrt}, {"atan", Fn::Atan},
        {"arctan", Fn::Atan}, {"abs", Fn::Abs},
    };
    for (const auto& [n, f] : table)
        if (s == n) return f;
    return std::nullopt;
}

bool is_reserved_variable(std::string_view n) {
    if (n == "t" || n == "x" || n == "y" || n == "vx" || n == "vy") return true;
    if (n.size() == 2 && (n[0] == 'x' || n[0] == 'v') && n[1] >= '1' && n[1] <= '9') return true;
    return false;
}

Expr::Expr() : Expr(Number(0)) {}
Expr::Expr(int n) : Expr(Number(static_cast<std::int64_t>(n))) {}
Expr::Expr(std::int64_t n) : Expr(Number(n)) {}
Expr::Expr(Number n) : p_(make(Kind::Num, {}, n).p_) {}

Expr Expr::num(Number n) { return Expr(n); }
Expr Expr::real(double d) { return Expr(Number::real(d)); }
Expr Expr::sym(const std::string& name) { return is_reserved_variable(name) ? var(name) : param(name); }
Expr Expr::var(const std::string& name) { return make(Kind::Var, {}, Number(), name); }
Expr Expr::param(const std::string& name) { return make(Kind::Param, {}, Number(), name); }

Expr Expr::raw_add(std::vector<Expr> xs) { return make(Kind::Add, std::move(xs)); }
Expr Expr::raw_mul(std::vector<Expr> xs) { return make(Kind::Mul, std::move(xs)); }
Expr Expr::raw_sub(Expr a, Expr b) { return make(Kind::Sub, {std::move(a), std::move(b)}); }
Expr Expr::raw_div(Expr a, Expr b) { return make(Kind::Div, {std::move(a), std::move(b)}); }
Expr Expr::raw_pow(Expr a, Expr b) { return make(Kind::Pow, {std::move(a), std::move(b)}); }
Expr Expr::raw_neg(Expr a) { return make(Kind::Neg, {std::move(a)}); }
Expr Expr::raw_func(Fn f, Expr a) { return make(Kind::Func, {std::move(a)}, Number(), {}, f); }
Expr Expr::raw_atan2(Expr y, Expr x) { return make(Kind::Atan2, {std::move(y), std::move(x)}); }

Kind Expr::kind() const { return p_->kind; }
const std::vector<Expr>& Expr::args() const { return p_->args; }
const Number& Expr::number() const { return p_->value; }
const std::string& Expr::name() const { return p_->name; }
Fn Expr::fn() const { return p_->fn; }
std::size_t Expr::hash() const { return p_->hash; }
bool Expr::is_zero_literal() const { return is_num() && number().is_zero(); }
bool Expr::is_one_literal() const { return is_num() && number().is_one(); }
std::string Expr::str() const { return to_string(*this); }

int structural_compare(const Expr& a, const Expr& b) {
    if (a.get() == b.get()) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
        case Kind::Num: return a.number().compare(b.number());
        case Kind::Var:
        case Kind::Param: return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
        default: break;
    }
    if (a.kind() == Kind::Func && a.fn() != b.fn()) return a.fn() < b.fn() ? -1 : 1;
    const auto& xa = a.args();
    const auto& xb = b.args();
    if (xa.size() != xb.size()) return xa.size() < xb.size() ? -1 : 1;
    for (std::size_t i = 0; i < xa.size(); ++i) {
        int c = structural_compare(xa[i], xb[i]);
        if (c != 0) return c;
    }
    return 0;
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.get() == b.get()) return true;
    if (a.hash() != b.hash()) return false;
    return structural_compare(a, b) == 0;
}

Expr operator+(const Expr& a, const Expr& b) {
    if (a.is_num() && b.is_num()) return Expr(a.number() + b.number());
    if (a.is_zero_literal()) return b;
    if (b.is_zero_literal()) return a;
    if (b.kind() == Kind::Neg) return Expr::raw_sub(a, b.arg(0));
    std::vector<Expr> xs;
    if (a.kind() == Kind::Add) xs = a.args(); else xs.push_back(a);
    xs.push_back(b);
    return Expr::raw_add(std::move(xs));
}

Expr operator-(const Expr& a, const Expr& b) {
    if (a.is_num() && b.is_num()) return Expr(a.number() + (-b.number()));
    if (b.is_zero_literal()) return a;
    if (a.is_zero_literal()) return -b;
    if (b.kind() == Kind::Neg) return a + b.arg(0);
    return Expr::raw_sub(a, b);
}

Expr operator-(const Expr& a) {
    if (a.is_num()) return Expr(-a.number());
    if (a.kind() == Kind::Neg) return a.arg(0);
    return Expr::raw_neg(a);
}

Expr operator*(const Expr& a, const Expr& b) {
    if (a.is_num() && b.is_num()) return Expr(a.number() * b.number());
    if (a.is_zero_literal() || b.is_zero_literal()) return Expr(0);
    if (a.is_one_literal()) return b;
    if (b.is_one_literal()) return a;
    if (a.is_num() && a.number() == Number(-1)) return -b;
    if (b.is_num() && b.number() == Number(-1)) return -a;
    if (a.kind() == Kind::Neg) return -(a.arg(0) * b);
    if (b.kind() == Kind::Neg) return -(a * b.arg(0));
    std::vector<Expr> xs;
    if (a.kind() == Kind::Mul) xs = a.args(); else xs.push_back(a);
    if (b.kind() == Kind::Mul) xs.insert(xs.end(), b.args().begin(), b.args().end()); else xs.push_back(b);
    return Expr::raw_mul(std::move(xs));
}

Expr operator/(const Expr& a, const Expr& b) {
    if (b.is_one_literal()) return a;
    if (a.is_zero_literal() && !b.is_zero_literal()) return Expr(0);
    if (a.is_num() && b.is_num() && !b.number().is_zero()) return Expr(a.number() * b.number().inverse());
    if (b.is_num() && !b.number().is_zero()) return b.number().inverse() == Number(1) ? a : Expr(b.number().inverse()) * a;
    if (a.kind() == Kind::Neg) return -(a.arg(0) / b);
    return Expr::raw_div(a, b);
}

Expr pow(const Expr& a, const Expr& b) {
    if (b.is_zero_literal()) return Expr(1);
    if (b.is_one_literal()) return a;
    if (a.is_one_literal()) return Expr(1);
    if (a.is_num() && b.is_num() && b.number().is_integer()) {
        std::int64_t n = b.number().rational().num;
        if (!(a.number().is_zero() && n < 0) && n > -64 && n < 64) return Expr(a.number().pow(n));
    }
    return Expr::raw_pow(a, b);
}

Expr func(Fn f, const Expr& a) {
    if (a.is_zero_literal()) {
        switch (f) {
            case Fn::Sin: case Fn::Tan: case Fn::Sinh: case Fn::Atan: case Fn::Abs: case Fn::Sqrt: return Expr(0);
            case Fn::Cos: case Fn::Cosh: case Fn::Exp: return Expr(1);
            default: break;
        }
    }
    if (f == Fn::Ln && a.is_one_literal()) return Expr(0);
    if (f == Fn::Abs && a.is_num()) return a.number().negative() ? Expr(-a.number()) : a;
    return Expr::raw_func(f, a);
}

Expr sin(const Expr& a) { return func(Fn::Sin, a); }
Expr cos(const Expr& a) { return func(Fn::Cos, a); }
Expr exp(const Expr& a) { return func(Fn::Exp, a); }
Expr ln(const Expr& a) { return func(Fn::Ln, a); }
Expr sqrt(const Expr& a) { return func(Fn::Sqrt, a); }
Expr atan2(const Expr& y, const Expr& x) { return Expr::raw_atan2(y, x); }

Expr sum(const std::vector<Expr>& xs) {
    Expr acc(0);
    for (const auto& x : xs) acc = acc + x;
    return acc;
}

namespace {

void collect(const Expr& e, std::set<std::string>& vars, std::set<std::string>& params,
             std::unordered_map<const Node*, bool>& seen) {
    if (!seen.emplace(e.get(), true).second) return;
    if (e.kind() == Kind::Var) vars.insert(e.name());
    else if (e.kind() == Kind::Param) params.insert(e.name());
    for (const auto& a : e.args()) collect(a, vars, params, seen);
}

}  // namespace

std::set<std::string> variables(const Expr& e) {
    std::set<std::string> v, p;
    std::unordered_map<const Node*, bool> seen;
    collect(e, v, p, seen);
    return v;
}

std::set<std::string> parameters(const Expr& e) {
    std::set<std::string> v, p;
    std::unordered_map<const Node*, bool> seen;
    collect(e, v, p, seen);
    return p;
}

std::set<std::string> symbols(const Expr& e) {
    std::set<std::string> v, p;
    std::unordered_map<const Node*, bool> seen;
    collect(e, v, p, seen);
    v.insert(p.begin(), p.end());
    return v;
}

bool depends_on(const Expr& e, const std::string& name) { return symbols(e).count(name) > 0; }

Expr substitute(const Expr& e, const std::map<std::string, Expr>& repl) {
    std::unordered_map<const Node*, Expr> memo;
    std::function<Expr(const Expr&)> go = [&](const Expr& x) -> Expr {
        auto it = memo.find(x.get());
        if (it != memo.end()) return it->second;
        Expr r = x;
        switch (x.kind()) {
            case Kind::Num: break;
            case Kind::Var:
            case Kind::Param: {
                auto f = repl.find(x.name());
                if (f != repl.end()) r = f->second;
                break;
            }
            case Kind::Add: {
                Expr acc(0);
                for (const auto& a : x.args()) acc = acc + go(a);
                r = acc;
                break;
            }
            case Kind::Mul: {
                Expr acc(1);
                for (const auto& a : x.args()) acc = acc * go(a);
                r = acc;
                break;
            }
            case Kind::Sub: r = go(x.arg(0)) - go(x.arg(1)); break;
            case Kind::Div: r = go(x.arg(0)) / go(x.arg(1)); break;
            case Kind::Pow: r = pow(go(x.arg(0)), go(x.arg(1))); break;
            case Kind::Neg: r = -go(x.arg(0)); break;
            case Kind::Func: r = func(x.fn(), go(x.arg(0))); break;
            case Kind::Atan2: r = atan2(go(x.arg(0)), go(x.arg(1))); break;
        }
        memo.emplace(x.get(), r);
        return r;
    };
    return go(e);
}

}  // namespace symlie
