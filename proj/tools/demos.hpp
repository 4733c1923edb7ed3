#pragma once

#include "report.hpp"

namespace symlie::demo {

struct Assertion {
    std::string id;
    std::string row;   // table row or result the assertion reproduces
    bool pass = false;
    std::string detail;
};

struct DemoResult {
    std::string name;
    std::vector<Assertion> assertions;
    report::Json data = report::Json::object();

    bool pass() const;
    const Assertion* find(const std::string& id) const;
};

// Scale-field chart change x = √3 a^{3/2} sinh(sφ), y = √3 a^{3/2} cosh(sφ) applied to
// 3aȧ² − ½a³φ̇², matched against κ·½(ẏ² − ẋ²).
struct ChartCheck {
    Number kappa{0};
    Number s2{0};                    // solved s²
    double printed_s2 = 1.5;
    bool kinetic_zero = false;        // with the solved s
    double printed_residual = 0.0;    // max |residual| with the printed s
    bool angle_depends_on_ratio = false;
    bool volume_zero = false;         // a³ = (y² − x²)/3
    bool curvature_term_zero = false; // 3κa = κ·3^{2/3}(y² − x²)^{1/3}
    Number potential_factor{0};       // 2κ/3
    bool pass() const { return kinetic_zero && angle_depends_on_ratio && volume_zero && curvature_term_zero; }
};

ChartCheck verify_chart(const SampleDomain& dom = {});

// Sampling box with y > |x| for the canonical (x, y) chart.
SampleDomain cosmology_domain(const SampleDomain& dom);

struct HHPotential {
    std::string id, V;
    std::vector<std::string> lie;         // expected symmetry basis, "xi;etax;etay"
    std::vector<std::string> integrals;   // Table 17 integrals
    std::vector<std::string> rows;
    State ic{0.1, 0.2, 0.0, 0.0};         // demo orbit
};

// V1..V4 with a = 1/10.
const std::vector<HHPotential>& henon_heiles_potentials();

DemoResult kepler_ermakov(const SampleDomain& dom = {});
DemoResult henon_heiles(const SampleDomain& dom = {});
DemoResult cosmology(const SampleDomain& dom = {});

const std::vector<std::string>& demo_names();
// Throws std::invalid_argument for an unknown name.
DemoResult run(const std::string& name, const SampleDomain& dom = {});

report::Json to_json(const DemoResult& r);

}  // namespace symlie::demo
