#include "symlie/classify.hpp"

#include <algorithm>
#include <cmath>

namespace symlie {

const char* row_kind_name(RowKind k) {
    switch (k) {
        case RowKind::LieAffine: return "lie-affine";
        case RowKind::LieGradient: return "lie-gradient";
        case RowKind::NoetherA: return "noether-A";
        case RowKind::NoetherB: return "noether-B";
    }
    return "?";
}

std::string FamilyRow::id() const { return "T" + std::to_string(table) + ".L" + std::to_string(line); }

std::string RowMatch::column() const {
    auto num = [&](const char* k) { return to_string(Expr(constants.at(k))); };
    switch (row.kind) {
        case RowKind::LieAffine: return "d=" + num("d");
        case RowKind::LieGradient:
        case RowKind::NoetherB: return "m=" + num("m");
        case RowKind::NoetherA: return "c1=" + num("c1");
    }
    return {};
}

namespace {

Expr X() { return Expr::var("x"); }
Expr Y() { return Expr::var("y"); }
Expr half() { return Expr(Number(Rational{1, 2})); }

struct Bases {
    RowBasis dx, dy, h, rot, xx, yy, yxd, xyd, diag, sym, turn;
};

Bases bases(Signature s) {
    const bool lor = s == Signature::Lorentzian;
    Expr x = X(), y = Y(), z(0), one(1);
    Bases b;
    b.dx = {"dx", {one, z}, Number(0), lor ? -x : x};
    b.dy = {"dy", {z, one}, Number(0), y};
    b.h = {"x*dx + y*dy", {x, y}, Number(1), lor ? half() * (y * y - x * x) : half() * (x * x + y * y)};
    b.rot = lor ? RowBasis{"y*dx + x*dy", {y, x}, Number(0), std::nullopt}
                : RowBasis{"y*dx - x*dy", {y, -x}, Number(0), std::nullopt};
    b.xx = {"x*dx", {x, z}, Number(0), std::nullopt};
    b.yy = {"y*dy", {z, y}, Number(0), std::nullopt};
    b.yxd = {"y*dx", {y, z}, Number(0), std::nullopt};
    b.xyd = {"x*dy", {z, x}, Number(0), std::nullopt};
    b.diag = {"(x+y)*(dx+dy)", {x + y, x + y}, Number(0), std::nullopt};
    b.sym = {"y*dx + x*dy", {y, x}, Number(0), std::nullopt};
    // x∂y − y∂x in the Euclidean chart, the boost in the Lorentzian one
    b.turn = lor ? RowBasis{"y*dx + x*dy", {y, x}, Number(0), std::nullopt}
                 : RowBasis{"x*dy - y*dx", {-y, x}, Number(0), std::nullopt};
    return b;
}

bool d_is(const Constants& c, const Number& v) { return c.count("d") && c.at("d") == v; }

bool table11_d(const Constants& c, int line) {
    if (d_is(c, Number(1))) return true;
    if (line == 4) {
        Number a = c.at("a");
        return d_is(c, Number(2) * (Number(1) + a * a));
    }
    return d_is(c, Number(2));
}

std::vector<FamilyRow> build_rows(Signature s) {
    Bases B = bases(s);
    const bool lor = s == Signature::Lorentzian;
    std::vector<FamilyRow> rows;
    auto add = [&](int t, int l, RowKind k, Applies ap, std::string vec, std::string fam, std::vector<RowBasis> bs,
                   std::vector<std::string> ps = {}, bool combo = false,
                   std::function<bool(const Constants&)> acc = nullptr) {
        FamilyRow r;
        r.table = t;
        r.line = l;
        r.kind = k;
        r.applies = ap;
        r.signature = s;
        r.vector = std::move(vec);
        r.family = std::move(fam);
        r.basis = std::move(bs);
        ps.resize(r.basis.size());
        r.params = std::move(ps);
        r.combination = combo;
        r.accept = std::move(acc);
        rows.push_back(std::move(r));
    };
    const auto LA = RowKind::LieAffine, LG = RowKind::LieGradient, NA = RowKind::NoetherA, NB = RowKind::NoetherB;
    const auto F = Applies::Force, P = Applies::Potential;
    const std::string rotv = lor ? "y*dx + x*dy" : "y*dx - x*dy";

    if (!lor) {
        add(4, 1, LA, F, "d/2 t dt + dx", "e^(-dx) f(y), e^(-dx) g(y)", {B.dx});
        add(4, 2, LA, F, "d/2 t dt + dy", "e^(-dy) f(x), e^(-dy) g(x)", {B.dy});
        add(4, 3, LA, F, "d/2 t dt + " + rotv, "f(r) e^(-d theta), g(r) e^(-d theta)", {B.rot});
        add(4, 4, LA, F, "d/2 t dt + x dx + y dy", "x^(1-d) f(y/x), x^(1-d) g(y/x)", {B.h});
        add(4, 5, LA, F, "d/2 t dt + x dx", "x^(1-d) f(y), x^(-d) g(y)", {B.xx});
        add(4, 6, LA, F, "d/2 t dt + y dy", "y^(-d) f(x), y^(1-d) g(x)", {B.yy});
        add(4, 7, LA, F, "d/2 t dt + y dx", "(x/y g(y) + f(y)) e^(-dx/y), g(y) e^(-dx/y)", {B.yxd});
        add(4, 8, LA, F, "d/2 t dt + x dy", "f(x) e^(-dy/x), (y/x f(x) + g(x)) e^(-dy/x)", {B.xyd});

        add(5, 1, LG, F, "T dx", "-mx + f(y), g(y)", {B.dx});
        add(5, 2, LG, F, "T dy", "f(x), -my + g(x)", {B.dy});
        add(5, 3, LG, F, "2 int(T) dt + T (x dx + y dy)", "-m/4 x + x^-3 f(y/x), -m/4 y + y^-3 g(y/x)", {B.h});

        add(6, 1, LA, F, "d/2 t dt + dx + b dy", "f(y-bx) e^(-dx), g(y-bx) e^(-dx)", {B.dx, B.dy}, {"", "b"}, true);
        add(6, 2, LA, F, "d/2 t dt + (a+x) dx + (b+y) dy", "f((b+y)/(a+x)) (a+x)^(1-d), g(..) (a+x)^(1-d)",
            {B.h, B.dx, B.dy}, {"", "a", "b"}, true);
        add(6, 3, LA, F, "d/2 t dt + (a+x) dx + (b+hy) dy", "f(u) (a+x)^(1-d), g(u) (a+x)^(h-d)",
            {B.xx, B.dx, B.dy, B.yy}, {"", "a", "b", "h"}, true);
        add(6, 4, LA, F, "d/2 t dt + (x+y) dx + (x+y) dy", "(x f(y-x) + g(y-x)) (x+y)^(-d/2), (y f - g) (x+y)^(-d/2)",
            {B.diag}, {}, true);
        add(6, 5, LA, F, "d/2 t dt + (a^2 x + a y) dx + (a x + y) dy", "s^(-k) a (s f(u) - g(u)), s^(-k) (s f(u) + a^2 g(u))",
            {B.yy, B.sym, B.xx}, {"", "a", "_a2"}, true, [](const Constants& c) {
                return c.at("_a2") == c.at("a") * c.at("a");
            });
        add(6, 6, LA, F, "d/2 t dt + (x - a y) dx + (a x + y) dy", "f(theta - a ln r) r^(1-d), g(..) r^(1-d)",
            {B.h, B.turn}, {"", "a"}, true);

        add(7, 1, LG, F, "T (dx + b dy)", "-mx + f(y-bx), -mbx + g(y-bx)", {B.dx, B.dy}, {"", "b"}, true);
        add(7, 2, LG, F, "2 int(T) dt + T ((a+x) dx + (b+y) dy)",
            "-m/4 (a+x) + f(u) (a+x)^-3, -m/4 (b+y) + g(u) (a+x)^-3", {B.h, B.dx, B.dy}, {"", "a", "b"}, true);
    }

    add(8, 1, LA, P, "d/2 t dt + dx", "c x + f(y) | f(y) e^(-dx)", {B.dx});
    add(8, 2, LA, P, "d/2 t dt + dy", "c y + f(x) | f(x) e^(-dy)", {B.dy});
    add(8, 3, LA, P, "d/2 t dt + " + rotv, "c theta + f(r) | f(r) e^(-d theta)", {B.rot});
    add(8, 4, LA, P, "d/2 t dt + x dx + y dy", "x^(2-d) f(y/x) | c ln x + f(y/x)", {B.h});
    add(8, 5, LA, P, "x dx", "c x^2 + f(y)", {B.xx});
    add(8, 6, LA, P, "y dy", "c y^2 + f(x)", {B.yy});
    add(8, 7, LA, P, "y dx", "x^2 + y^2 + c x", {B.yxd});
    add(8, 8, LA, P, "x dy", "x^2 + y^2 + c y", {B.xyd});

    add(9, 1, LG, P, "T dx", "-m x^2/2 + c x + f(y)", {B.dx});
    add(9, 2, LG, P, "T dy", "-m y^2/2 + c y + f(x)", {B.dy});
    add(9, 3, LG, P, "2 int(T) dt + T (x dx + y dy)", "-m/8 (x^2+y^2) + x^-2 f(y/x)", {B.h});

    struct Combo {
        int line;
        std::string vec, fam10, fam11;
        std::vector<RowBasis> bs;
        std::vector<std::string> ps;
        bool quad;
    };
    const std::string turnv = lor ? "(x + a y) dx + (a x + y) dy" : "(x - a y) dx + (a x + y) dy";
    std::vector<Combo> combos{
        {1, "d/2 t dt + a dx + b dy", "f(ay-bx) | (c + f(ay-bx)) e^(-dx/a)", "(c + f(y-bx)) e^(-2x/a) | e^(-x/a)",
         {B.dx, B.dy}, {"a", "b"}, false},
        {2, "d/2 t dt + (a+x) dx + (b+y) dy", "f(u) (a+x)^(2-d)", "f(u) + c ln(a+x) | f(u) (a+x)", {B.h, B.dx, B.dy},
         {"", "a", "b"}, false},
        {3, "d/2 t dt + (x+y) dx + (x+y) dy", "f(y-x) + c (x+y)^2 | (x+y)^(2-d/2)", "(x+y) | (x+y)^(3/2)", {B.diag},
         {}, false},
        {4, "d/2 t dt + (a^2 x + a y) dx + (a x + y) dy", "c (x^2+y^2) + f(ay-x) | c (ax+y)^(2-d/(1+a^2))",
         "ln(ax+y) | (ax+y)^((1+2a^2)/(1+a^2))", {B.yy, B.sym, B.xx}, {"", "a", "_a2"}, true},
        {5, "d/2 t dt + " + turnv, "f(theta - a ln r) r^(2-d)", "c ln r + f(..) | c r + f(..) r", {B.h, B.turn},
         {"", "a"}, false},
    };
    for (const auto& c : combos) {
        int line = c.line;
        bool quad = c.quad;
        auto base = [quad](const Constants& k) { return !quad || k.at("_a2") == k.at("a") * k.at("a"); };
        add(10, line, LA, P, c.vec, c.fam10, c.bs, c.ps, true,
            [=](const Constants& k) { return base(k) && !table11_d(k, line); });
        if (quad) rows.back().square = std::pair<std::size_t, std::size_t>{1, 2};
        add(11, line, LA, P, c.vec, c.fam11, c.bs, c.ps, true,
            [=](const Constants& k) { return base(k) && table11_d(k, line); });
        if (quad) rows.back().square = std::pair<std::size_t, std::size_t>{1, 2};
    }

    add(12, 1, LG, P, "T (a dx + b dy)", "-m/2 (x^2+y^2) + c x + f(ay-bx)", {B.dx, B.dy}, {"a", "b"}, true);
    add(12, 2, LG, P, "2 int(T) dt + T ((a+x) dx + (b+y) dy)", "-m/8 (x^2+y^2+2ax+2by) + (a+x)^-2 f(u)",
        {B.h, B.dx, B.dy}, {"", "a", "b"}, true);

    add(13, 1, NA, P, "dx", "c x + f(y)", {B.dx});
    add(13, 2, NA, P, "dy", "c y + f(x)", {B.dy});
    add(13, 3, NA, P, rotv, "c theta + f(r)", {B.rot});
    add(13, 4, NA, P, "2t dt + x dx + y dy", "x^-2 f(y/x)", {B.h});

    add(14, 1, NA, P, "dx + b dy", "f(y-bx) - c x", {B.dx, B.dy}, {"", "b"}, true);
    add(14, 2, NA, P, lor ? "(a+y) dx + (b+x) dy" : "(a+y) dx + (b-x) dy", "f((x^2+y^2)/2 + ay - bx)",
        {B.rot, B.dx, B.dy}, {"", "a", "b"}, true);
    add(14, 3, NA, P, lor ? "2t dt + (x+ay) dx + (y+ax) dy" : "2t dt + (x+ay) dx + (y-ax) dy",
        "r^-2 f(theta - a ln r)", {B.h, B.rot}, {"", "a"}, true);
    add(14, 4, NA, P, "2t dt + (a+x) dx + (b+y) dy", "f((b+y)/(a+x)) (a+x)^-2 - c (a+x)^-2 (x^2/2 + ax)",
        {B.h, B.dx, B.dy}, {"", "a", "b"}, true);

    add(15, 1, NB, P, "T dx", "f(y) - c x - m/2 x^2", {B.dx});
    add(15, 2, NB, P, "T dy", "f(x) - c y - m/2 y^2", {B.dy});
    add(15, 3, NB, P, "2 int(T) dt + T (x dx + y dy)", "x^-2 f(y/x) - m/8 (x^2+y^2)", {B.h});

    add(16, 1, NB, P, "T (dx + b dy)", "-m/2 (x^2+y^2) - m/2 (y-bx)^2 + f(y-bx) - c x", {B.dx, B.dy}, {"", "b"},
        true);
    add(16, 2, NB, P, "2 int(T) dt + T ((a+x) dx + (b+y) dy)", "f((b+y)/(a+x)) (a+x)^-2 - c/2 (a+x)^-2 x (x+2a) + m-term",
        {B.h, B.dx, B.dy}, {"", "a", "b"}, true);
    return rows;
}

Number snapped(double v) {
    if (auto q = snap_rational(v, 1000, 1e-7)) return Number(*q);
    return Number::real(v);
}

struct Candidate {
    Vec2 Y{Expr(0), Expr(0)};
    Number psi{0};
    Expr G{0};
    Constants constants;
};

// Normalizes a null vector to basis[0] = 1 and reads off the row parameters.
std::optional<Candidate> candidate(const FamilyRow& row, const std::vector<Number>& v, const SampleDomain& dom) {
    const std::size_t K = row.basis.size();
    if (v.empty() || v[0].is_zero()) return std::nullopt;
    Number s = v[0].inverse();
    Candidate c;
    for (std::size_t j = 0; j < K; ++j) {
        Number cj = v[j] * s;
        if (!row.params[j].empty()) c.constants[row.params[j]] = cj;
        if (cj.is_zero()) continue;
        for (int i = 0; i < 2; ++i) c.Y[i] = c.Y[i] + Expr(cj) * row.basis[j].Y[i];
        c.psi = c.psi + cj * row.basis[j].psi;
        if (row.basis[j].G) c.G = c.G + Expr(cj) * *row.basis[j].G;
    }
    c.Y = {simplify(c.Y[0]), simplify(c.Y[1])};
    c.G = simplify(c.G);
    for (std::size_t k = K; k < v.size(); ++k) c.constants["_extra" + std::to_string(k - K)] = v[k] * s;
    if (row.combination) {
        PointVectorField P = PointVectorField::spatial(c.Y);
        for (const auto& e : catalog(row.signature))
            if (in_span({PointVectorField::spatial(e.Y)}, P, dom)) return std::nullopt;
    }
    return c;
}

bool accepted(const FamilyRow& row, const Constants& k) { return !row.accept || row.accept(k); }

// Null vectors to try: the pivot p with p[0] = 1, then p + μq over the reduced directions q (q[0] = 0).
std::vector<std::vector<Number>> null_candidates(const FamilyRow& row, const std::vector<std::vector<Number>>& ns) {
    std::size_t piv = ns.size();
    for (std::size_t k = 0; k < ns.size() && piv == ns.size(); ++k)
        if (!ns[k].empty() && !ns[k][0].is_zero()) piv = k;
    if (piv == ns.size()) return {};
    std::vector<Number> p = ns[piv];
    Number s = p[0].inverse();
    for (auto& v : p) v = v * s;
    std::vector<std::vector<Number>> qs;
    for (std::size_t k = 0; k < ns.size(); ++k) {
        if (k == piv) continue;
        std::vector<Number> q = ns[k];
        Number c = q[0];
        for (std::size_t j = 0; j < q.size(); ++j) q[j] = q[j] - c * p[j];
        qs.push_back(std::move(q));
    }
    auto shifted = [&](const std::vector<Number>& q, const Number& mu) {
        std::vector<Number> v = p;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] + mu * q[j];
        return v;
    };
    std::vector<std::vector<Number>> out{p};
    if (row.square) {
        auto [i, j] = *row.square;
        for (const auto& q : qs) {
            double A = q[i].value() * q[i].value(), B = 2 * p[i].value() * q[i].value() - q[j].value(),
                   C = p[i].value() * p[i].value() - p[j].value();
            std::vector<double> roots;
            if (std::fabs(A) < 1e-12) {
                if (std::fabs(B) > 1e-12) roots.push_back(-C / B);
            } else if (double disc = B * B - 4 * A * C; disc >= -1e-12) {
                double r = std::sqrt(std::max(disc, 0.0));
                roots.push_back((-B + r) / (2 * A));
                roots.push_back((-B - r) / (2 * A));
            }
            for (double mu : roots) out.push_back(shifted(q, snapped(mu)));
        }
    }
    for (const auto& q : qs) out.push_back(shifted(q, Number(1)));
    return out;
}

Constants public_constants(const Constants& k) {
    Constants out;
    for (const auto& [n, v] : k)
        if (n.empty() || n[0] != '_') out[n] = v;
    return out;
}

Expr y_grad(const Vec2& Yv, const Expr& V) {
    return Yv[0] * differentiate(V, "x", false) + Yv[1] * differentiate(V, "y", false);
}

std::optional<RowMatch> lie_affine(const FamilyRow& row, const DynamicalSystem& sys, const SampleDomain& dom) {
    std::vector<std::vector<Expr>> cols;
    for (const auto& b : row.basis) {
        Vec2 L = lie_derivative_vector(b.Y, sys.force, sys.coords());
        cols.push_back({L[0], L[1]});
    }
    cols.push_back({sys.force[0], sys.force[1]});
    for (const auto& v : null_candidates(row, linear_null_space(cols, dom))) {
        auto c = candidate(row, v, dom);
        if (!c) continue;
        c->constants["d"] = c->constants.at("_extra0");
        if (!accepted(row, c->constants)) continue;
        PointVectorField Xv{half() * Expr(c->constants["d"]) * Expr::var("t"), c->Y};
        Xv = Xv.simplified();
        if (!lie_check(sys, Xv, dom).pass) continue;
        RowMatch m;
        m.row = row;
        m.constants = public_constants(c->constants);
        m.vectors.push_back(Xv);
        return m;
    }
    return std::nullopt;
}

std::vector<RowMatch> lie_gradient(const FamilyRow& row, const DynamicalSystem& sys, const SampleDomain& dom) {
    std::vector<std::vector<Expr>> acols, bcols;
    for (const auto& b : row.basis) {
        Vec2 L = lie_derivative_vector(b.Y, sys.force, sys.coords());
        Expr fp = Expr(4) * Expr(b.psi);
        acols.push_back({L[0] + fp * sys.force[0], L[1] + fp * sys.force[1]});
        bcols.push_back({b.Y[0], b.Y[1]});
    }
    std::vector<RowMatch> found;
    for (double mv : generalized_eigenvalues(acols, bcols, dom)) {
        Number m = snapped(mv);
        bool seen = false;
        for (const auto& f : found) seen = seen || f.constants.at("m") == m;
        if (seen) continue;
        std::vector<std::vector<Expr>> cols;
        for (std::size_t k = 0; k < acols.size(); ++k)
            cols.push_back({acols[k][0] - Expr(m) * bcols[k][0], acols[k][1] - Expr(m) * bcols[k][1]});
        for (const auto& v : null_candidates(row, linear_null_space(cols, dom))) {
            auto c = candidate(row, v, dom);
            if (!c) continue;
            c->constants["m"] = m;
            if (!accepted(row, c->constants)) continue;
            RowMatch out;
            bool ok = true;
            for (const auto& T : time_basis(m)) {
                PointVectorField Xv{Expr(2) * Expr(c->psi) * T.intT, {T.T * c->Y[0], T.T * c->Y[1]}};
                Xv = Xv.simplified();
                ok = ok && lie_check(sys, Xv, dom).pass;
                out.vectors.push_back(Xv);
            }
            if (!ok) continue;
            out.row = row;
            out.constants = public_constants(c->constants);
            found.push_back(std::move(out));
            break;
        }
    }
    return found;
}

std::optional<NoetherResult> noether_result(const Lagrangian2D& L, const PointVectorField& X, NoetherCase kind,
                                            const FamilyRow& row, const Constants& k, std::optional<Expr> T,
                                            const SampleDomain& dom) {
    NoetherCheck ch = noether_check(L, X, dom);
    if (!ch.pass || !ch.gauge) return std::nullopt;
    NoetherResult r;
    r.vector = X;
    r.gauge = *ch.gauge;
    r.integral = noether_integral(L, X, r.gauge);
    r.kind = kind;
    r.source = row.id();
    r.constants = k;
    r.T = std::move(T);
    r.verified = conserved(r.integral, L.system(), dom);
    if (!r.verified) return std::nullopt;
    return r;
}

std::optional<RowMatch> noether_a(const FamilyRow& row, const DynamicalSystem& sys, const SampleDomain& dom) {
    const Expr& V = *sys.potential;
    Lagrangian2D L{sys.metric, V};
    std::vector<std::vector<Expr>> cols;
    for (const auto& b : row.basis) cols.push_back({y_grad(b.Y, V) + Expr(2) * Expr(b.psi) * V});
    cols.push_back({Expr(1)});
    for (const auto& v : null_candidates(row, linear_null_space(cols, dom))) {
        auto c = candidate(row, v, dom);
        if (!c) continue;
        c->constants["c1"] = c->constants.at("_extra0");
        if (!accepted(row, c->constants)) continue;
        PointVectorField Xv{Expr(2) * Expr(c->psi) * Expr::var("t"), c->Y};
        Xv = Xv.simplified();
        if (!lie_check(sys, Xv, dom).pass) continue;
        Constants pub = public_constants(c->constants);
        auto nr = noether_result(L, Xv, NoetherCase::A, row, pub, std::nullopt, dom);
        if (!nr) continue;
        RowMatch m;
        m.row = row;
        m.constants = pub;
        m.vectors.push_back(Xv);
        m.noether.push_back(std::move(*nr));
        return m;
    }
    return std::nullopt;
}

std::vector<RowMatch> noether_b(const FamilyRow& row, const DynamicalSystem& sys, const SampleDomain& dom) {
    const Expr& V = *sys.potential;
    Lagrangian2D L{sys.metric, V};
    std::vector<Expr> a, g;
    std::vector<std::vector<Expr>> A, B;
    for (const auto& b : row.basis) {
        if (!b.G) return {};
        Expr aj = y_grad(b.Y, V) + Expr(2) * Expr(b.psi) * V;
        a.push_back(aj);
        g.push_back(*b.G);
        A.push_back({differentiate(aj, "x", false), differentiate(aj, "y", false)});
        B.push_back({-differentiate(*b.G, "x", false), -differentiate(*b.G, "y", false)});
    }
    std::vector<RowMatch> found;
    for (double mv : generalized_eigenvalues(A, B, dom)) {
        Number m = snapped(mv);
        bool seen = false;
        for (const auto& f : found) seen = seen || f.constants.at("m") == m;
        if (seen) continue;
        std::vector<std::vector<Expr>> cols;
        for (std::size_t k = 0; k < a.size(); ++k) cols.push_back({a[k] + Expr(m) * g[k]});
        cols.push_back({Expr(1)});
        for (const auto& v : null_candidates(row, linear_null_space(cols, dom))) {
            auto c = candidate(row, v, dom);
            if (!c) continue;
            c->constants["m"] = m;
            c->constants["d0"] = c->constants.at("_extra0");
            if (!accepted(row, c->constants)) continue;
            Constants pub = public_constants(c->constants);
            RowMatch out;
            bool ok = true;
            for (const auto& T : time_basis(m)) {
                PointVectorField Xv{Expr(2) * Expr(c->psi) * T.intT, {T.T * c->Y[0], T.T * c->Y[1]}};
                Xv = Xv.simplified();
                auto nr = noether_result(L, Xv, NoetherCase::B, row, pub, T.T, dom);
                if (!nr || !lie_check(sys, Xv, dom).pass) {
                    ok = false;
                    break;
                }
                out.vectors.push_back(Xv);
                out.noether.push_back(std::move(*nr));
            }
            if (!ok) continue;
            out.row = row;
            out.constants = pub;
            found.push_back(std::move(out));
            break;
        }
    }
    return found;
}

MatchReport run_rows(const DynamicalSystem& sys, Applies ap, Signature s, const ClassifyOptions& opt) {
    MatchReport rep;
    for (const auto& row : family_rows(s)) {
        if (row.applies != ap) continue;
        if (opt.table && row.table != *opt.table) continue;
        for (auto& m : match_row(row, sys, opt.dom)) rep.matches.push_back(std::move(m));
    }
    std::stable_sort(rep.matches.begin(), rep.matches.end(), [](const RowMatch& a, const RowMatch& b) {
        if (a.row.table != b.row.table || a.row.line != b.row.line)
            return std::pair(a.row.table, a.row.line) < std::pair(b.row.table, b.row.line);
        return a.constants.count("m") && b.constants.count("m") && a.constants.at("m").compare(b.constants.at("m")) < 0;
    });
    return rep;
}

}  // namespace

const std::vector<FamilyRow>& family_rows(Signature s) {
    static const std::vector<FamilyRow> eu = build_rows(Signature::Euclidean);
    static const std::vector<FamilyRow> lo = build_rows(Signature::Lorentzian);
    return s == Signature::Lorentzian ? lo : eu;
}

std::vector<RowMatch> match_row(const FamilyRow& row, const DynamicalSystem& sys, const SampleDomain& dom) {
    auto one = [](std::optional<RowMatch> m) {
        std::vector<RowMatch> out;
        if (m) out.push_back(std::move(*m));
        return out;
    };
    try {
        switch (row.kind) {
            case RowKind::LieAffine: return one(lie_affine(row, sys, dom));
            case RowKind::LieGradient: return lie_gradient(row, sys, dom);
            case RowKind::NoetherA:
                if (!sys.potential) return {};
                return one(noether_a(row, sys, dom));
            case RowKind::NoetherB:
                if (!sys.potential) return {};
                return noether_b(row, sys, dom);
        }
    } catch (const RouteDisagreement&) {
    } catch (const DomainError&) {
    }
    return {};
}

MatchReport classify_force(const Expr& Fx, const Expr& Fy, const ClassifyOptions& opt) {
    return run_rows(DynamicalSystem::from_force(Fx, Fy), Applies::Force, Signature::Euclidean, opt);
}

MatchReport classify_potential(const Expr& V, Signature s, const ClassifyOptions& opt) {
    return run_rows(DynamicalSystem::from_potential(V, Metric2D::of(s)), Applies::Potential, s, opt);
}

}  // namespace symlie
