// Canonical form: a Laurent polynomial over kernels. Kernels are symbols,
// function applications, atan2, q-th roots, general powers and primitive
// sums (the latter only with negative exponents, i.e. factored denominators).
#include "symlie/expr.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

namespace symlie {

namespace {

struct Kernel;
using KP = std::shared_ptr<const Kernel>;

struct Factor {
    KP k;
    int e;
};
using Mono = std::vector<Factor>;

struct Term {
    Mono m;
    Number c;
};

struct Poly {
    std::vector<Term> terms;
    bool zero() const { return terms.empty(); }
};

enum class KK { Sym, Func, Atan2, Root, GPow, Sum };

struct Kernel {
    KK kind;
    std::string name;
    bool param = false;
    Fn fn = Fn::Sin;
    Poly a, b;
    int q = 0;
    std::size_t hash = 0;
};

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

std::size_t number_hash(const Number& n) {
    if (n.exact()) return mix(std::hash<std::int64_t>{}(n.rational().num), std::hash<std::int64_t>{}(n.rational().den));
    return mix(91, std::hash<double>{}(n.value()));
}

std::size_t poly_hash(const Poly& p) {
    std::size_t h = 17;
    for (const auto& t : p.terms) {
        for (const auto& f : t.m) h = mix(mix(h, f.k->hash), static_cast<std::size_t>(f.e + 1000));
        h = mix(h, number_hash(t.c));
    }
    return h;
}

int kernel_cmp(const KP& a, const KP& b);

int mono_cmp_lex(const Mono& a, const Mono& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size()) c = 1;
        else if (j == b.size()) c = -1;
        else c = kernel_cmp(a[i].k, b[j].k);
        if (c < 0) {
            // kernel only in a
            return a[i].e > 0 ? 1 : -1;
        }
        if (c > 0) return b[j].e > 0 ? -1 : 1;
        if (a[i].e != b[j].e) return a[i].e > b[j].e ? 1 : -1;
        ++i;
        ++j;
    }
    return 0;
}

int degree(const Mono& m) {
    int d = 0;
    for (const auto& f : m) d += f.e;
    return d;
}

// Graded lex, > 0 when a is the larger monomial.
int mono_cmp(const Mono& a, const Mono& b) {
    int da = degree(a), db = degree(b);
    if (da != db) return da > db ? 1 : -1;
    return mono_cmp_lex(a, b);
}

int poly_cmp(const Poly& a, const Poly& b) {
    std::size_t n = std::min(a.terms.size(), b.terms.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = mono_cmp(a.terms[i].m, b.terms[i].m);
        if (c != 0) return c;
        c = a.terms[i].c.compare(b.terms[i].c);
        if (c != 0) return c;
    }
    if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size() ? -1 : 1;
    return 0;
}

int kernel_cmp(const KP& a, const KP& b) {
    if (a.get() == b.get()) return 0;
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    if (a->kind == KK::Sym) {
        if (a->param != b->param) return a->param ? 1 : -1;
        int c = a->name.compare(b->name);
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    if (a->hash != b->hash) return a->hash < b->hash ? -1 : 1;
    if (a->fn != b->fn) return a->fn < b->fn ? -1 : 1;
    if (a->q != b->q) return a->q < b->q ? -1 : 1;
    int c = poly_cmp(a->a, b->a);
    if (c != 0) return c;
    return poly_cmp(a->b, b->b);
}

struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const { return mono_cmp(a, b) > 0; }
};

KP finish(Kernel k) {
    std::size_t h = static_cast<std::size_t>(k.kind) * 2654435761ULL;
    h = mix(h, std::hash<std::string>{}(k.name));
    h = mix(h, static_cast<std::size_t>(k.fn));
    h = mix(h, static_cast<std::size_t>(k.q));
    h = mix(h, poly_hash(k.a));
    h = mix(h, poly_hash(k.b));
    k.hash = h;
    return std::make_shared<const Kernel>(std::move(k));
}

Poly constant(const Number& c) {
    Poly p;
    if (!c.is_zero()) p.terms.push_back({{}, c});
    return p;
}

bool is_constant(const Poly& p) { return p.terms.empty() || (p.terms.size() == 1 && p.terms[0].m.empty()); }
Number constant_value(const Poly& p) { return p.terms.empty() ? Number(0) : p.terms[0].c; }

Poly from_map(std::map<Mono, Number, MonoLess>& acc) {
    Poly p;
    p.terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) p.terms.push_back({m, c});
    return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        int c;
        if (i == a.terms.size()) c = -1;
        else if (j == b.terms.size()) c = 1;
        else c = mono_cmp(a.terms[i].m, b.terms[j].m);
        if (c > 0) r.terms.push_back(a.terms[i++]);
        else if (c < 0) r.terms.push_back(b.terms[j++]);
        else {
            Number s = a.terms[i].c + b.terms[j].c;
            if (!s.is_zero()) r.terms.push_back({a.terms[i].m, s});
            ++i;
            ++j;
        }
    }
    return r;
}

Poly poly_scale(const Poly& a, const Number& c) {
    if (c.is_zero()) return {};
    Poly r = a;
    for (auto& t : r.terms) t.c = t.c * c;
    return r;
}

Poly poly_neg(const Poly& a) { return poly_scale(a, Number(-1)); }

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow_int(const Poly& p, std::int64_t n);
Poly normalize_mono(const Number& c, Mono m);

Poly kernel_poly(const KP& k, int e = 1) { return normalize_mono(Number(1), Mono{{k, e}}); }

Mono mono_merge(const Mono& a, const Mono& b, int sb = 1) {
    Mono r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size()) c = 1;
        else if (j == b.size()) c = -1;
        else c = kernel_cmp(a[i].k, b[j].k);
        if (c < 0) r.push_back(a[i++]);
        else if (c > 0) { r.push_back({b[j].k, sb * b[j].e}); ++j; }
        else {
            int e = a[i].e + sb * b[j].e;
            if (e != 0) r.push_back({a[i].k, e});
            ++i;
            ++j;
        }
    }
    return r;
}

bool needs_normalize(const Mono& m) {
    int exps = 0;
    for (const auto& f : m) {
        switch (f.k->kind) {
            case KK::Func:
                if (f.k->fn == Fn::Exp && (++exps > 1 || f.e != 1)) return true;
                break;
            case KK::Root:
                if (f.e < 1 || f.e >= f.k->q) return true;
                break;
            case KK::Sum:
                if (f.e > 0) return true;
                break;
            default: break;
        }
    }
    return false;
}

KP make_exp_kernel(const Poly& arg) {
    Kernel k;
    k.kind = KK::Func;
    k.fn = Fn::Exp;
    k.a = arg;
    return finish(std::move(k));
}

Poly normalize_mono(const Number& c, Mono m) {
    if (c.is_zero()) return {};
    if (!needs_normalize(m)) {
        Poly p;
        p.terms.push_back({std::move(m), c});
        return p;
    }
    Mono plain;
    Poly exp_arg;
    bool has_exp = false;
    std::vector<Poly> extra;
    for (auto& f : m) {
        const Kernel& k = *f.k;
        if (k.kind == KK::Func && k.fn == Fn::Exp) {
            exp_arg = poly_add(exp_arg, poly_scale(k.a, Number(f.e)));
            has_exp = true;
        } else if (k.kind == KK::Root && (f.e < 1 || f.e >= k.q)) {
            int e = f.e, q = k.q;
            int whole = e >= 0 ? e / q : -((-e + q - 1) / q);
            int rest = e - whole * q;
            extra.push_back(poly_pow_int(k.a, whole));
            if (rest != 0) plain.push_back({f.k, rest});
        } else if (k.kind == KK::Sum && f.e > 0) {
            extra.push_back(poly_pow_int(k.a, f.e));
        } else {
            plain.push_back(f);
        }
    }
    if (has_exp && !exp_arg.zero()) {
        // keep kernel order
        Mono single{{make_exp_kernel(exp_arg), 1}};
        plain = mono_merge(plain, single);
    }
    Poly r;
    r.terms.push_back({plain, c});
    for (const auto& x : extra) r = poly_mul(r, x);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return {};
    if (is_constant(a)) return poly_scale(b, constant_value(a));
    if (is_constant(b)) return poly_scale(a, constant_value(b));
    std::map<Mono, Number, MonoLess> acc;
    for (const auto& ta : a.terms) {
        for (const auto& tb : b.terms) {
            Mono m = mono_merge(ta.m, tb.m);
            Number c = ta.c * tb.c;
            if (!needs_normalize(m)) {
                auto [it, fresh] = acc.emplace(std::move(m), c);
                if (!fresh) it->second = it->second + c;
            } else {
                for (auto& t : normalize_mono(c, std::move(m)).terms) {
                    auto [it, fresh] = acc.emplace(t.m, t.c);
                    if (!fresh) it->second = it->second + t.c;
                }
            }
        }
    }
    return from_map(acc);
}

Number content(const Poly& p) {
    bool exact = std::all_of(p.terms.begin(), p.terms.end(), [](const Term& t) { return t.c.exact(); });
    if (!exact) return p.terms[0].c;
    std::int64_t g = 0, l = 1;
    for (const auto& t : p.terms) {
        g = std::gcd(g, t.c.rational().num);
        std::int64_t d = t.c.rational().den;
        __int128 ll = static_cast<__int128>(l) / std::gcd(l, d) * d;
        if (ll > (static_cast<__int128>(1) << 62)) return p.terms[0].c;
        l = static_cast<std::int64_t>(ll);
    }
    if (g < 0) g = -g;
    auto r = Rational::make(p.terms[0].c.negative() ? -g : g, l);
    return r ? Number(*r) : p.terms[0].c;
}

KP make_sum_kernel(const Poly& p) {
    Kernel k;
    k.kind = KK::Sum;
    k.a = p;
    return finish(std::move(k));
}

std::int64_t estimate_terms(std::size_t n, std::int64_t e) {
    double est = 1;
    for (std::int64_t i = 0; i < e; ++i) est *= static_cast<double>(n);
    return est > 1e9 ? static_cast<std::int64_t>(1e9) : static_cast<std::int64_t>(est);
}

KP make_gpow_kernel(const Poly& base, const Poly& ex) {
    Kernel k;
    k.kind = KK::GPow;
    k.a = base;
    k.b = ex;
    return finish(std::move(k));
}

Poly poly_pow_int(const Poly& p, std::int64_t n) {
    if (n == 0) return constant(Number(1));
    if (n == 1) return p;
    if (p.zero()) return n > 0 ? Poly{} : kernel_poly(make_gpow_kernel(p, constant(Number(n))));
    if (p.terms.size() == 1) {
        const Term& t = p.terms[0];
        if (n > 1000000 || n < -1000000) return kernel_poly(make_gpow_kernel(p, constant(Number(n))));
        Mono m = t.m;
        for (auto& f : m) f.e = static_cast<int>(f.e * n);
        return normalize_mono(t.c.pow(n), std::move(m));
    }
    if (n > 0) {
        if (n > 12 || estimate_terms(p.terms.size(), n) > 20000)
            return kernel_poly(make_gpow_kernel(p, constant(Number(n))));
        Poly r = p;
        for (std::int64_t i = 1; i < n; ++i) r = poly_mul(r, p);
        return r;
    }
    // clear denominators
    std::map<const Kernel*, std::pair<KP, int>> dmax;
    for (const auto& t : p.terms)
        for (const auto& f : t.m)
            if (f.e < 0) {
                auto& slot = dmax[f.k.get()];
                if (!slot.first) slot = {f.k, 0};
                slot.second = std::max(slot.second, -f.e);
            }
    Mono d;
    for (auto& [_, v] : dmax) d.push_back({v.first, v.second});
    std::sort(d.begin(), d.end(), [](const Factor& a, const Factor& b) { return kernel_cmp(a.k, b.k) < 0; });
    Poly dpoly = normalize_mono(Number(1), d);
    Poly p2 = d.empty() ? p : poly_mul(p, dpoly);
    Poly dpow = d.empty() ? constant(Number(1)) : poly_pow_int(dpoly, -n);
    if (p2.terms.size() <= 1) return poly_mul(poly_pow_int(p2, n), dpow);
    // common monomial factor
    Mono common = p2.terms[0].m;
    for (std::size_t i = 1; i < p2.terms.size() && !common.empty(); ++i) {
        Mono next;
        for (const auto& f : common) {
            for (const auto& g : p2.terms[i].m)
                if (kernel_cmp(f.k, g.k) == 0) {
                    int e = std::min(f.e, g.e);
                    if (e > 0) next.push_back({f.k, e});
                }
        }
        common = std::move(next);
    }
    Poly p3 = p2;
    if (!common.empty())
        for (auto& t : p3.terms) t.m = mono_merge(t.m, common, -1);
    Number c = content(p3);
    Poly hat = poly_scale(p3, c.inverse());
    Mono cm = common;
    for (auto& f : cm) f.e = static_cast<int>(f.e * n);
    Poly r = normalize_mono(c.pow(n), cm);
    r = poly_mul(r, normalize_mono(Number(1), Mono{{make_sum_kernel(hat), static_cast<int>(n)}}));
    return poly_mul(r, dpow);
}

std::optional<std::int64_t> exact_root(std::int64_t v, int q) {
    if (v < 0) {
        if (q % 2 == 0) return std::nullopt;
        auto r = exact_root(-v, q);
        if (!r) return std::nullopt;
        return -*r;
    }
    auto r = static_cast<std::int64_t>(std::llround(std::pow(static_cast<double>(v), 1.0 / q)));
    for (std::int64_t c = std::max<std::int64_t>(0, r - 1); c <= r + 1; ++c) {
        __int128 acc = 1;
        for (int i = 0; i < q && acc <= v; ++i) acc *= c;
        if (acc == v) return c;
    }
    return std::nullopt;
}

KP make_root_kernel(const Poly& base, int q) {
    Kernel k;
    k.kind = KK::Root;
    k.a = base;
    k.q = q;
    return finish(std::move(k));
}

Poly poly_pow_rat(const Poly& p, Rational r) {
    if (r.is_integer()) return poly_pow_int(p, r.num);
    int q = static_cast<int>(r.den);
    std::int64_t pn = r.num;
    if (p.zero()) return r.value() > 0 ? Poly{} : kernel_poly(make_gpow_kernel(p, constant(Number(r))));
    if (is_constant(p)) {
        Number c = constant_value(p);
        if (!c.exact()) {
            double v = std::pow(c.value(), r.value());
            if (std::isfinite(v)) return constant(Number::real(v));
        } else {
            auto a = exact_root(c.rational().num, q);
            auto b = exact_root(c.rational().den, q);
            if (a && b) {
                auto base = Rational::make(*a, *b);
                if (base) return constant(Number(*base).pow(pn));
            }
        }
    }
    std::int64_t whole = pn >= 0 ? pn / q : -((-pn + q - 1) / q);
    std::int64_t rest = pn - whole * q;
    Poly out = poly_pow_int(p, whole);
    if (rest != 0) out = poly_mul(out, normalize_mono(Number(1), Mono{{make_root_kernel(p, q), static_cast<int>(rest)}}));
    return out;
}

bool leading_negative(const Poly& a) { return !a.zero() && a.terms[0].c.negative(); }

Poly make_func(Fn f, const Poly& a) {
    if (f == Fn::Sqrt) return poly_pow_rat(a, Rational{1, 2});
    if (a.zero()) {
        switch (f) {
            case Fn::Sin: case Fn::Tan: case Fn::Sinh: case Fn::Atan: case Fn::Abs: return {};
            case Fn::Cos: case Fn::Cosh: case Fn::Exp: return constant(Number(1));
            default: break;
        }
    }
    if (is_constant(a)) {
        Number c = constant_value(a);
        if (f == Fn::Ln && c.is_one()) return {};
        if (f == Fn::Abs) return constant(c.negative() ? -c : c);
    }
    if (leading_negative(a)) {
        switch (f) {
            case Fn::Sin: case Fn::Tan: case Fn::Sinh: case Fn::Atan: return poly_neg(make_func(f, poly_neg(a)));
            case Fn::Cos: case Fn::Cosh: case Fn::Abs: return make_func(f, poly_neg(a));
            default: break;
        }
    }
    if (f == Fn::Exp) return kernel_poly(make_exp_kernel(a));
    Kernel k;
    k.kind = KK::Func;
    k.fn = f;
    k.a = a;
    return kernel_poly(finish(std::move(k)));
}

Poly make_atan2(const Poly& y, const Poly& x) {
    if (y.zero() && is_constant(x) && !x.zero() && !constant_value(x).negative()) return {};
    Kernel k;
    k.kind = KK::Atan2;
    k.a = y;
    k.b = x;
    return kernel_poly(finish(std::move(k)));
}

Poly make_sym(const std::string& name, bool param) {
    Kernel k;
    k.kind = KK::Sym;
    k.name = name;
    k.param = param;
    return kernel_poly(finish(std::move(k)));
}

Poly make_pow(const Poly& b, const Poly& e) {
    if (is_constant(e)) {
        Number n = constant_value(e);
        if (n.exact()) {
            const Rational& r = n.rational();
            if (r.is_integer()) return poly_pow_int(b, r.num);
            return poly_pow_rat(b, r);
        }
    }
    if (is_constant(b) && constant_value(b).is_one()) return constant(Number(1));
    return kernel_poly(make_gpow_kernel(b, e));
}

class Canonicalizer {
public:
    Poly run(const Expr& e) {
        auto it = memo_.find(e.get());
        if (it != memo_.end()) return it->second;
        Poly r = compute(e);
        memo_.emplace(e.get(), r);
        keep_.push_back(e);
        return r;
    }

private:
    std::unordered_map<const Node*, Poly> memo_;
    std::vector<Expr> keep_;

    // Reciprocal taken at the tree level so powers of sums are not expanded first.
    Poly inverse(const Expr& b) {
        switch (b.kind()) {
            case Kind::Pow:
                if (b.arg(1).is_num() && b.arg(1).number().exact())
                    return make_pow(run(b.arg(0)), constant(-b.arg(1).number()));
                break;
            case Kind::Mul: {
                Poly acc = constant(Number(1));
                for (const auto& a : b.args()) acc = poly_mul(acc, inverse(a));
                return acc;
            }
            case Kind::Div: return poly_mul(run(b.arg(1)), inverse(b.arg(0)));
            case Kind::Neg: return poly_neg(inverse(b.arg(0)));
            default: break;
        }
        return poly_pow_int(run(b), -1);
    }

    Poly compute(const Expr& e) {
        switch (e.kind()) {
            case Kind::Num: return constant(e.number());
            case Kind::Var: return make_sym(e.name(), false);
            case Kind::Param: return make_sym(e.name(), true);
            case Kind::Add: {
                Poly acc;
                for (const auto& a : e.args()) acc = poly_add(acc, run(a));
                return acc;
            }
            case Kind::Sub: return poly_add(run(e.arg(0)), poly_neg(run(e.arg(1))));
            case Kind::Mul: {
                Poly acc = constant(Number(1));
                for (const auto& a : e.args()) {
                    acc = poly_mul(acc, run(a));
                    if (acc.zero()) break;
                }
                return acc;
            }
            case Kind::Div: return poly_mul(run(e.arg(0)), inverse(e.arg(1)));
            case Kind::Pow: return make_pow(run(e.arg(0)), run(e.arg(1)));
            case Kind::Neg: return poly_neg(run(e.arg(0)));
            case Kind::Func: return make_func(e.fn(), run(e.arg(0)));
            case Kind::Atan2: return make_atan2(run(e.arg(0)), run(e.arg(1)));
        }
        return {};
    }
};

// Exact division of polynomials with nonnegative exponents.
std::optional<Poly> poly_divide(Poly num, const Poly& den) {
    if (den.zero()) return std::nullopt;
    const Term& lt = den.terms[0];
    Poly quot;
    int guard = 0;
    while (!num.zero()) {
        if (++guard > 2000) return std::nullopt;
        const Term& nt = num.terms[0];
        Mono qm = mono_merge(nt.m, lt.m, -1);
        for (const auto& f : qm)
            if (f.e < 0) return std::nullopt;
        Number qc = nt.c * lt.c.inverse();
        Poly qt;
        qt.terms.push_back({qm, qc});
        quot = poly_add(quot, qt);
        num = poly_add(num, poly_neg(poly_mul(qt, den)));
        if (!num.zero() && !num.terms[0].c.exact() && std::fabs(num.terms[0].c.value()) < 1e-14) num.terms.erase(num.terms.begin());
    }
    return quot;
}

// Cancels primitive-sum denominators that divide the numerator of their group.
Poly cancel(const Poly& p) {
    Poly cur = p;
    for (int round = 0; round < 8; ++round) {
        std::map<Mono, std::vector<std::size_t>, MonoLess> groups;
        for (std::size_t i = 0; i < cur.terms.size(); ++i) {
            Mono sig;
            for (const auto& f : cur.terms[i].m)
                if (f.k->kind == KK::Sum && f.e < 0) sig.push_back(f);
            if (!sig.empty()) groups[sig].push_back(i);
        }
        bool changed = false;
        std::vector<bool> drop(cur.terms.size(), false);
        Poly added;
        for (auto& [sig, idx] : groups) {
            if (idx.size() < 2 || idx.size() > 200) continue;
            Poly numer;
            for (std::size_t i : idx) {
                Poly t;
                t.terms.push_back({mono_merge(cur.terms[i].m, sig, -1), cur.terms[i].c});
                numer = poly_add(numer, t);
            }
            // shift to nonnegative exponents
            Mono shift;
            for (const auto& t : numer.terms)
                for (const auto& f : t.m)
                    if (f.e < 0) {
                        auto it = std::find_if(shift.begin(), shift.end(), [&](const Factor& g) { return kernel_cmp(g.k, f.k) == 0; });
                        if (it == shift.end()) shift.push_back({f.k, -f.e});
                        else it->e = std::max(it->e, -f.e);
                    }
            std::sort(shift.begin(), shift.end(), [](const Factor& a, const Factor& b) { return kernel_cmp(a.k, b.k) < 0; });
            Poly shifted = numer;
            for (auto& t : shifted.terms) t.m = mono_merge(t.m, shift);
            std::sort(shifted.terms.begin(), shifted.terms.end(), [](const Term& a, const Term& b) { return mono_cmp(a.m, b.m) > 0; });
            for (const auto& f : sig) {
                auto q = poly_divide(shifted, f.k->a);
                if (!q) continue;
                Mono rest = mono_merge(sig, Mono{{f.k, f.e}}, -1);
                if (f.e + 1 != 0) rest = mono_merge(rest, Mono{{f.k, f.e + 1}});
                Mono unshift = shift;
                for (auto& g : unshift) g.e = -g.e;
                Mono outer = mono_merge(rest, unshift);
                Poly res = poly_mul(*q, normalize_mono(Number(1), outer));
                for (std::size_t i : idx) drop[i] = true;
                added = poly_add(added, res);
                changed = true;
                break;
            }
        }
        if (!changed) break;
        Poly next;
        for (std::size_t i = 0; i < cur.terms.size(); ++i)
            if (!drop[i]) {
                Poly t;
                t.terms.push_back(cur.terms[i]);
                next = poly_add(next, t);
            }
        cur = poly_add(next, added);
    }
    return cur;
}

Expr poly_expr(const Poly& p);

Expr kernel_expr(const KP& k) {
    switch (k->kind) {
        case KK::Sym: return k->param ? Expr::param(k->name) : Expr::var(k->name);
        case KK::Func: return Expr::raw_func(k->fn, poly_expr(k->a));
        case KK::Atan2: return Expr::raw_atan2(poly_expr(k->a), poly_expr(k->b));
        case KK::Root:
            if (k->q == 2) return Expr::raw_func(Fn::Sqrt, poly_expr(k->a));
            return Expr::raw_pow(poly_expr(k->a), Expr(Number(Rational{1, k->q})));
        case KK::GPow: return Expr::raw_pow(poly_expr(k->a), poly_expr(k->b));
        case KK::Sum: return poly_expr(k->a);
    }
    return Expr(0);
}

Expr factor_expr(const Factor& f, int e) {
    Expr base = kernel_expr(f.k);
    return e == 1 ? base : Expr::raw_pow(base, Expr(static_cast<std::int64_t>(e)));
}

Expr product(std::vector<Expr> xs) {
    if (xs.empty()) return Expr(1);
    if (xs.size() == 1) return xs[0];
    return Expr::raw_mul(std::move(xs));
}

Expr term_expr(const Term& t, bool positive) {
    Number c = positive && t.c.negative() ? -t.c : t.c;
    bool flip = c == Number(-1) && !t.m.empty();
    if (flip) c = Number(1);
    std::vector<Expr> num, den;
    if (!c.is_one()) num.push_back(Expr(c));
    for (const auto& f : t.m) {
        if (f.e > 0) num.push_back(factor_expr(f, f.e));
        else den.push_back(factor_expr(f, -f.e));
    }
    Expr n = product(num);
    Expr r = den.empty() ? n : Expr::raw_div(n, product(den));
    return flip ? Expr::raw_neg(r) : r;
}

Expr poly_expr(const Poly& p) {
    if (p.zero()) return Expr(0);
    if (p.terms.size() == 1) return term_expr(p.terms[0], false);
    std::vector<Expr> run;
    run.push_back(term_expr(p.terms[0], false));
    for (std::size_t i = 1; i < p.terms.size(); ++i) {
        const Term& t = p.terms[i];
        Expr e = term_expr(t, true);
        if (!t.c.negative()) {
            run.push_back(e);
            continue;
        }
        Expr left = run.size() == 1 ? run[0] : Expr::raw_add(std::move(run));
        run.assign(1, Expr::raw_sub(left, e));
    }
    return run.size() == 1 ? run[0] : Expr::raw_add(std::move(run));
}

}  // namespace

Expr simplify(const Expr& e) {
    Canonicalizer c;
    return poly_expr(cancel(c.run(e)));
}

}  // namespace symlie
