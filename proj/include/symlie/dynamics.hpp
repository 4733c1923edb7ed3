#pragma once

#include "symlie/liesym.hpp"

#include <array>
#include <iosfwd>

namespace symlie {

using State = std::array<double, 4>;   // x, y, vx, vy

struct IntegrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Trajectory {
    std::vector<double> t;
    std::vector<State> states;
    bool diverged = false;   // stopped early on a non-finite state
    std::array<std::string, 2> coords{"x", "y"};
};

// Classical RK4 on ẍⁱ = −Γⁱⱼₖẋʲẋᵏ + Fⁱ over a uniform grid from t0 to t1.
// The step is shrunk so the grid lands exactly on t1; t1 < t0 integrates backwards.
Trajectory integrate(const DynamicalSystem& sys, const State& ic, double t1, double h, double t0 = 0.0,
                     const Bindings& params = {});

struct DriftReport {
    Expr phi;
    double initial = 0.0;
    double max_drift = 0.0;         // max |φ(t) − φ(t₀)| / (1 + |φ(t₀)|)
    std::vector<double> series;
};

DriftReport conservation_drift(const Expr& phi, const Trajectory& traj, const Bindings& params = {});

// header t,x,y,vx,vy
void write_csv(const Trajectory& traj, std::ostream& os);

}  // namespace symlie
