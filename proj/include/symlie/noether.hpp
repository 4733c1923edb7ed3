#pragma once

#include "symlie/liesym.hpp"

namespace symlie {

struct Lagrangian2D {
    Metric2D metric;
    Expr V{0};

    Lagrangian2D() = default;
    Lagrangian2D(Metric2D g, Expr v) : metric(std::move(g)), V(std::move(v)) {}

    // ½gᵢⱼvⁱvʲ − V
    Expr lagrangian() const;
    DynamicalSystem system() const;
    // d/dt ∂L/∂vⁱ − ∂L/∂xⁱ along the system's flow
    Vec2 euler_lagrange_residual() const;
};

// E = ½gᵢⱼvⁱvʲ + V
Expr hamiltonian(const Lagrangian2D& L);

struct GaugeFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoetherCheck {
    bool pass = false;
    std::optional<Expr> gauge;
    std::string diagnostic;
    double killing_max = 0.0;   // L_η g − ξ,t g
    double gauge_max = 0.0;     // X¹L + ξ̇L − ḟ with the reconstructed f
};

// Gauge from ηᵢ,t = f,ᵢ integrated along (x₀,y₀)→(x,y₀)→(x,y), then V,ₖηᵏ + Vξ,t = −f,t.
std::optional<Expr> reconstruct_gauge(const Lagrangian2D& L, const PointVectorField& X, std::string* why = nullptr,
                                      const SampleDomain& dom = {});

NoetherCheck noether_check(const Lagrangian2D& L, const PointVectorField& X, const SampleDomain& dom = {});

// φ = ξE − gᵢⱼηⁱvʲ + f
Expr noether_integral(const Lagrangian2D& L, const PointVectorField& X, const Expr& f);

// dφ/dt along the equations of motion vanishes.
bool conserved(const Expr& phi, const DynamicalSystem& sys, const SampleDomain& dom = {});

enum class NoetherCase { Trivial, A, B, Direct };
const char* noether_case_name(NoetherCase c);

struct NoetherResult {
    PointVectorField vector;
    Expr gauge{0};
    Expr integral{0};
    NoetherCase kind = NoetherCase::Direct;
    std::string source;
    std::map<std::string, Number> constants;   // c1, c2, d, psi
    std::optional<Expr> T;
    bool verified = false;                     // noether_check and conservation both pass
};

// ∂t, then Case A over the homothetic algebra and Case B over the gradient entries.
std::vector<NoetherResult> noether_solve(const Lagrangian2D& L, const SampleDomain& dom = {});

}  // namespace symlie
