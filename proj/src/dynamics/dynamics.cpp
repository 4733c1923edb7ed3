#include "symlie/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace symlie {

namespace {

bool finite(const State& s) {
    for (double v : s)
        if (!std::isfinite(v)) return false;
    return true;
}

std::vector<std::string> program_symbols(const std::vector<Expr>& es, const std::array<std::string, 2>& coords,
                                         const Bindings& params) {
    std::vector<std::string> syms{"t", coords[0], coords[1], "vx", "vy"};
    for (const auto& e : es)
        for (const auto& s : symbols(e)) {
            bool known = false;
            for (const auto& k : syms) known = known || k == s;
            if (known) continue;
            if (!params.count(s)) throw UnboundSymbol("unbound symbol '" + s + "'");
            syms.push_back(s);
        }
    return syms;
}

}  // namespace

Trajectory integrate(const DynamicalSystem& sys, const State& ic, double t1, double h, double t0,
                     const Bindings& params) {
    if (!(h > 0)) throw IntegrationError("step must be positive");
    Vec2 w = sys.omega();
    auto syms = program_symbols({w[0], w[1]}, sys.coords(), params);
    Compiled prog({w[0], w[1]}, syms);
    std::vector<double> point(syms.size(), 0.0);
    for (std::size_t k = 5; k < syms.size(); ++k) point[k] = params.at(syms[k]);
    double acc[2];
    auto rhs = [&](double t, const State& s) {
        point[0] = t;
        for (int i = 0; i < 4; ++i) point[static_cast<std::size_t>(i) + 1] = s[static_cast<std::size_t>(i)];
        prog.run_values(point.data(), acc);
        return State{s[2], s[3], acc[0], acc[1]};
    };

    Trajectory tr;
    tr.coords = sys.coords();
    if (!finite(ic) || !finite(rhs(t0, ic))) throw IntegrationError("non-finite state at t0");
    double span = t1 - t0;
    long n = static_cast<long>(std::ceil(std::fabs(span) / h - 1e-9));
    if (n < 1) n = 1;
    double step = span / static_cast<double>(n);
    tr.t.reserve(static_cast<std::size_t>(n) + 1);
    tr.states.reserve(static_cast<std::size_t>(n) + 1);
    tr.t.push_back(t0);
    tr.states.push_back(ic);
    State s = ic;
    for (long k = 0; k < n; ++k) {
        double t = t0 + step * static_cast<double>(k);
        State k1 = rhs(t, s);
        State a, b, c;
        for (int i = 0; i < 4; ++i) a[i] = s[i] + 0.5 * step * k1[i];
        State k2 = rhs(t + 0.5 * step, a);
        for (int i = 0; i < 4; ++i) b[i] = s[i] + 0.5 * step * k2[i];
        State k3 = rhs(t + 0.5 * step, b);
        for (int i = 0; i < 4; ++i) c[i] = s[i] + step * k3[i];
        State k4 = rhs(t + step, c);
        for (int i = 0; i < 4; ++i) s[i] += step / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
        if (!finite(s)) {
            tr.diverged = true;
            break;
        }
        tr.t.push_back(k + 1 == n ? t1 : t0 + step * static_cast<double>(k + 1));
        tr.states.push_back(s);
    }
    return tr;
}

DriftReport conservation_drift(const Expr& phi, const Trajectory& traj, const Bindings& params) {
    DriftReport r;
    r.phi = phi;
    auto syms = program_symbols({phi}, traj.coords, params);
    Compiled prog({phi}, syms);
    std::vector<double> point(syms.size(), 0.0);
    for (std::size_t k = 5; k < syms.size(); ++k) point[k] = params.at(syms[k]);
    r.series.reserve(traj.t.size());
    for (std::size_t n = 0; n < traj.t.size(); ++n) {
        point[0] = traj.t[n];
        for (std::size_t i = 0; i < 4; ++i) point[i + 1] = traj.states[n][i];
        double v = 0.0;
        prog.run_values(point.data(), &v);
        if (!std::isfinite(v)) throw DomainError("integral is not finite on the trajectory");
        if (n == 0) r.initial = v;
        double dr = std::fabs(v - r.initial) / (1.0 + std::fabs(r.initial));
        r.series.push_back(dr);
        r.max_drift = std::max(r.max_drift, dr);
    }
    return r;
}

void write_csv(const Trajectory& traj, std::ostream& os) {
    os << "t,x,y,vx,vy\n";
    char buf[160];
    for (std::size_t n = 0; n < traj.t.size(); ++n) {
        const State& s = traj.states[n];
        std::snprintf(buf, sizeof buf, "%.12g,%.17g,%.17g,%.17g,%.17g\n", traj.t[n], s[0], s[1], s[2], s[3]);
        os << buf;
    }
}

}  // namespace symlie
