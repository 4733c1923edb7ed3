#include "symlie/liesym.hpp"

#include <sstream>

namespace symlie {

namespace {

Expr d(const Expr& e, const std::string& v) { return differentiate(e, v, false); }

const std::string kT = "t";

}  // namespace

PointVectorField PointVectorField::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3) throw ParseError("vector needs three ';'-separated components", 0);
    std::size_t off = 0;
    PointVectorField X;
    Expr* slots[3] = {&X.xi, &X.eta[0], &X.eta[1]};
    for (int i = 0; i < 3; ++i) {
        try {
            *slots[i] = symlie::parse(parts[static_cast<std::size_t>(i)]);
        } catch (const ParseError& e) {
            throw ParseError(std::string("vector component: ") + e.what(), off + e.offset);
        }
        off += parts[static_cast<std::size_t>(i)].size() + 1;
    }
    return X;
}

PointVectorField PointVectorField::operator+(const PointVectorField& o) const {
    return {xi + o.xi, {eta[0] + o.eta[0], eta[1] + o.eta[1]}};
}

PointVectorField PointVectorField::scaled(const Expr& c) const { return {c * xi, {c * eta[0], c * eta[1]}}; }

PointVectorField PointVectorField::simplified() const {
    return {simplify(xi), {simplify(eta[0]), simplify(eta[1])}};
}

bool PointVectorField::point_symmetry() const {
    for (const auto* e : {&xi, &eta[0], &eta[1]})
        if (depends_on(*e, "vx") || depends_on(*e, "vy")) return false;
    return true;
}

std::string PointVectorField::str(const std::array<std::string, 2>& coords) const {
    PointVectorField s = simplified();
    std::string out;
    const Expr* comps[3] = {&s.xi, &s.eta[0], &s.eta[1]};
    const std::string names[3] = {"dt", "d" + coords[0], "d" + coords[1]};
    for (int i = 0; i < 3; ++i) {
        Expr c = *comps[i];
        if (c.is_zero_literal()) continue;
        bool neg = c.kind() == Kind::Neg;
        if (neg) c = c.arg(0);
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        if (c.is_one_literal()) {
            out += names[i];
            continue;
        }
        std::string cs = to_string(c);
        if (c.kind() == Kind::Add || c.kind() == Kind::Sub) out += "(" + cs + ")*" + names[i];
        else out += cs + "*" + names[i];
    }
    return out.empty() ? "0" : out;
}

const std::array<std::string, 2>& DynamicalSystem::velocities() {
    static const std::array<std::string, 2> v{"vx", "vy"};
    return v;
}

DynamicalSystem DynamicalSystem::from_force(const Expr& fx, const Expr& fy, const Metric2D& g) {
    for (const auto* e : {&fx, &fy})
        for (const char* bad : {"t", "vx", "vy"})
            if (depends_on(*e, bad))
                throw InconsistentSystem(std::string("force depends on '") + bad + "'");
    DynamicalSystem s;
    s.metric = g;
    s.gamma = christoffel(g);
    s.force = {fx, fy};
    return s;
}

DynamicalSystem DynamicalSystem::from_potential(const Expr& V, const Metric2D& g) {
    for (const char* bad : {"t", "vx", "vy"})
        if (depends_on(V, bad)) throw InconsistentSystem(std::string("potential depends on '") + bad + "'");
    Mat2 inv = g.inverse();
    Vec2 dV{d(V, g.coords[0]), d(V, g.coords[1])};
    Vec2 F;
    for (int i = 0; i < 2; ++i) F[i] = -(inv[i][0] * dV[0] + inv[i][1] * dV[1]);
    if (g.flat_cartesian())
        for (auto& f : F) f = simplify(f);
    DynamicalSystem s = from_force(F[0], F[1], g);
    s.potential = V;
    return s;
}

Vec2 DynamicalSystem::omega() const {
    const auto& v = velocities();
    Vec2 w;
    for (int i = 0; i < 2; ++i) {
        Expr acc = force[i];
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                if (!gamma(i, j, k).is_zero_literal())
                    acc = acc - gamma(i, j, k) * Expr::var(v[j]) * Expr::var(v[k]);
        w[i] = acc;
    }
    return w;
}

bool DynamicalSystem::conservative(const SampleDomain& dom) const {
    if (potential) return true;
    Vec2 low = metric.lower(force);
    return is_zero(d(low[1], coords()[0]) - d(low[0], coords()[1]), dom);
}

bool DynamicalSystem::free() const { return force[0].is_zero_literal() && force[1].is_zero_literal(); }

Expr total_derivative(const Expr& f, const DynamicalSystem& sys) {
    const auto& x = sys.coords();
    const auto& v = DynamicalSystem::velocities();
    Vec2 w = sys.omega();
    Expr acc = d(f, kT);
    for (int i = 0; i < 2; ++i) {
        acc = acc + Expr::var(v[i]) * d(f, x[i]);
        Expr dv = d(f, v[i]);
        if (!dv.is_zero_literal()) acc = acc + w[i] * dv;
    }
    return acc;
}

Prolongation prolong(const PointVectorField& X, const DynamicalSystem& sys) {
    const auto& v = DynamicalSystem::velocities();
    Vec2 w = sys.omega();
    Prolongation p;
    Expr Dxi = total_derivative(X.xi, sys);
    p.lambda = -Dxi;
    for (int i = 0; i < 2; ++i) p.G1[i] = total_derivative(X.eta[i], sys) - Expr::var(v[i]) * Dxi;
    for (int i = 0; i < 2; ++i) p.G2[i] = total_derivative(p.G1[i], sys) - w[i] * Dxi;
    return p;
}

Vec2 lie_direct(const PointVectorField& X, const DynamicalSystem& sys) {
    const auto& x = sys.coords();
    const auto& v = DynamicalSystem::velocities();
    Prolongation p = prolong(X, sys);
    Vec2 w = sys.omega();
    Vec2 R;
    for (int i = 0; i < 2; ++i) {
        Expr X1w = X.xi * d(w[i], kT);
        for (int j = 0; j < 2; ++j) X1w = X1w + X.eta[j] * d(w[i], x[j]) + p.G1[j] * d(w[i], v[j]);
        R[i] = p.G2[i] - X1w;
    }
    return R;
}

std::vector<Expr> LieSplit::all() const {
    std::vector<Expr> out{P0[0], P0[1]};
    for (const auto& r : P1) out.insert(out.end(), r.begin(), r.end());
    auto p2 = P2.flat();
    out.insert(out.end(), p2.begin(), p2.end());
    for (const auto& r : P3) out.insert(out.end(), r.begin(), r.end());
    return out;
}

LieSplit lie_split(const PointVectorField& X, const DynamicalSystem& sys) {
    const auto& x = sys.coords();
    const auto& G = sys.gamma;
    const Vec2& F = sys.force;
    LieSplit s;
    Expr xt = d(X.xi, kT);
    Expr xtt = d(xt, kT);
    Vec2 xs{d(X.xi, x[0]), d(X.xi, x[1])};
    Vec2 et{d(X.eta[0], kT), d(X.eta[1], kT)};
    Vec2 LF = lie_derivative_vector(X.eta, F, x);
    auto delta = [](int i, int j) { return i == j ? 1 : 0; };

    for (int i = 0; i < 2; ++i) s.P0[i] = d(et[i], kT) - LF[i] - Expr(2) * xt * F[i];

    Expr xsF = xs[0] * F[0] + xs[1] * F[1];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Expr acc = d(et[i], x[j]);
            for (int k = 0; k < 2; ++k)
                if (!G(i, j, k).is_zero_literal()) acc = acc + G(i, j, k) * et[k];
            acc = Expr(2) * acc - Expr(2) * xs[j] * F[i];
            if (delta(i, j)) acc = acc - xtt - xsF;
            s.P1[i][j] = acc;
        }

    Connection2D LG = lie_derivative_connection(X.eta, G, x);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                Expr acc = LG(i, j, k);
                if (delta(i, j)) acc = acc - d(xt, x[k]);
                if (delta(i, k)) acc = acc - d(xt, x[j]);
                s.P2(i, j, k) = acc;
            }

    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            Expr acc = d(xs[j], x[k]);
            for (int l = 0; l < 2; ++l)
                if (!G(l, j, k).is_zero_literal()) acc = acc - G(l, j, k) * xs[l];
            s.P3[j][k] = acc;
        }
    return s;
}

LieCheck lie_check(const DynamicalSystem& sys, const PointVectorField& X, const SampleDomain& dom) {
    LieCheck c;
    Vec2 R = lie_direct(X, sys);
    auto direct = check_zero({R[0], R[1]}, dom);
    c.direct_pass = direct.zero;
    c.direct_max = direct.max_abs;

    LieSplit s = lie_split(X, sys);
    std::vector<std::vector<Expr>> groups(4);
    groups[0] = {s.P0[0], s.P0[1]};
    for (const auto& r : s.P1) groups[1].insert(groups[1].end(), r.begin(), r.end());
    groups[2] = s.P2.flat();
    for (const auto& r : s.P3) groups[3].insert(groups[3].end(), r.begin(), r.end());
    c.split_pass = true;
    for (int g = 0; g < 4; ++g) {
        auto z = check_zero(groups[static_cast<std::size_t>(g)], dom);
        c.split_max[static_cast<std::size_t>(g)] = z.max_abs;
        if (!z.zero) c.split_pass = false;
    }
    if (c.direct_pass != c.split_pass) {
        std::ostringstream msg;
        msg << "direct and split Lie conditions disagree for " << X.str(sys.coords()) << " (direct max "
            << c.direct_max << ")";
        throw RouteDisagreement(msg.str());
    }
    c.pass = c.direct_pass && c.split_pass;
    return c;
}

const char* lie_case_name(LieCase c) {
    switch (c) {
        case LieCase::Trivial: return "trivial-dt";
        case LieCase::A1: return "A1";
        case LieCase::A2: return "A2";
        case LieCase::A3: return "A3";
        case LieCase::B1: return "B1";
        case LieCase::B2: return "B2";
        case LieCase::Direct: return "direct";
    }
    return "direct";
}

}  // namespace symlie
