#include "CLI11.hpp"
#include "demos.hpp"

#include <fstream>
#include <iostream>

using namespace symlie;
using report::Json;

namespace {

enum Exit { kOk = 0, kFail = 1, kParse = 2, kSingular = 3 };

struct Common {
    std::uint64_t seed = SampleDomain{}.seed;
    double tol = SampleDomain{}.atol;
    std::string json;

    SampleDomain domain() const {
        SampleDomain d;
        d.seed = seed;
        d.atol = tol;
        d.rtol = tol;
        return d;
    }
};

struct SystemArgs {
    std::vector<std::string> force;
    std::string potential;
    std::string signature = "euclidean";
};

void add_common(CLI::App* c, Common& o) {
    c->add_option("--seed", o.seed, "Sampling seed");
    c->add_option("--tol", o.tol, "Absolute and relative zero tolerance");
    c->add_option("--json", o.json, "Write the JSON report to PATH ('-' for stdout)");
}

void add_system(CLI::App* c, SystemArgs& s, bool force_allowed = true) {
    CLI::Option* p = c->add_option("--potential", s.potential, "Potential V(x, y)");
    if (force_allowed) {
        CLI::Option* f = c->add_option("--force", s.force, "Force components Fx Fy")->expected(2);
        f->excludes(p);
        p->excludes(f);
    } else {
        p->required();
    }
    c->add_option("--signature", s.signature, "Metric signature")
        ->check(CLI::IsMember({"euclidean", "lorentzian"}));
}

Json system_input(const SystemArgs& s) {
    Json j;
    if (!s.force.empty())
        j["force"] = s.force;
    else
        j["potential"] = s.potential;
    j["signature"] = s.signature;
    return j;
}

DynamicalSystem build_system(const SystemArgs& s) {
    Metric2D g = Metric2D::of(signature_from_name(s.signature));
    if (!s.force.empty()) return DynamicalSystem::from_force(parse(s.force[0]), parse(s.force[1]), g);
    if (s.potential.empty()) throw CLI::ValidationError("one of --force or --potential is required");
    return DynamicalSystem::from_potential(parse(s.potential), g);
}

void emit(const Json& j, const Common& o, const std::function<void()>& text) {
    if (o.json.empty()) {
        text();
        return;
    }
    if (o.json == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(o.json);
    if (!f) throw std::runtime_error("cannot write " + o.json);
    f << j.dump(2) << "\n";
    text();
}

State parse_ic(const std::string& s) {
    State st{};
    std::stringstream ss(s);
    std::string item;
    std::size_t i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 4) throw CLI::ValidationError("--ic expects x,y,vx,vy");
        try {
            st[i++] = std::stod(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--ic: bad number '" + item + "'");
        }
    }
    if (i != 4) throw CLI::ValidationError("--ic expects x,y,vx,vy");
    return st;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lie and Noether point symmetries of second-order systems in the plane", "symlie"};
    app.set_version_flag("--version", report::kVersion);
    app.require_subcommand(1);

    Common o;
    SystemArgs sa;
    std::string vector;
    int table = 0;
    std::string ic_text = "0.1,0.2,0,0";
    double t1 = 20.0, h = 1e-3;
    std::vector<std::string> checks, params;
    std::string csv;
    std::vector<std::string> coeffs, sys_d;
    std::string demo_name;

    auto* lie = app.add_subcommand("lie", "Lie point symmetries");
    add_system(lie, sa);
    lie->add_option("--vector", vector, "Check one vector \"xi;etax;etay\"");
    add_common(lie, o);

    auto* noe = app.add_subcommand("noether", "Noether point symmetries and integrals");
    add_system(noe, sa, false);
    noe->add_option("--vector", vector, "Check one vector \"xi;etax;etay\"");
    add_common(noe, o);

    auto* cls = app.add_subcommand("classify", "Match a force or potential against the family tables");
    add_system(cls, sa);
    cls->add_option("--table", table, "Restrict to one table")->check(CLI::Range(4, 16));
    add_common(cls, o);

    auto* itg = app.add_subcommand("integrate", "RK4 trajectory and first-integral drift");
    itg->set_help_flag("--help", "Print this help message and exit");
    add_system(itg, sa);
    itg->add_option("--ic", ic_text, "Initial state x,y,vx,vy");
    itg->add_option("--t1", t1, "Final time");
    itg->add_option("--h", h, "Step size")->check(CLI::PositiveNumber);
    itg->add_option("--check", checks, "Expression to monitor (repeatable)");
    itg->add_option("--param", params, "Parameter binding name=value (repeatable)");
    itg->add_option("--csv", csv, "Write the trajectory as CSV ('-' for stdout)");
    add_common(itg, o);

    auto* lin = app.add_subcommand("linearize", "Linearizability by point transformation");
    auto* co = lin->add_option("--coeffs", coeffs, "a b c d of x'' + a x'^3 + b x'^2 + c x' + d = 0")->expected(4);
    auto* sy = lin->add_option("--system", sys_d, "d1 d2 of x_i'' + d_i = 0 in (t, x, y)")->expected(2);
    co->excludes(sy);
    sy->excludes(co);
    add_common(lin, o);

    auto* dem = app.add_subcommand("demo", "Run a built-in application preset");
    dem->add_option("name", demo_name, "Preset")->required()->check(CLI::IsMember(demo::demo_names()));
    add_common(dem, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        SampleDomain dom = o.domain();
        if (lie->parsed()) {
            auto sys = build_system(sa);
            Json j = report::header("lie", system_input(sa), dom);
            Json res;
            res["route"] = sys.free() ? "geodesic" : "theorem";
            if (!vector.empty()) {
                j["input"]["vector"] = vector;
                auto X = PointVectorField::parse(vector);
                auto c = lie_check(sys, X, dom);
                res["vector"] = report::vector(X);
                res["check"] = report::lie_check(c);
                j["results"] = res;
                emit(j, o, [&] { std::cout << X.str() << (c.pass ? " is" : " is not") << " a Lie point symmetry\n"; });
                return kOk;
            }
            auto rs = full_solve(sys, dom);
            Json sj = Json::array();
            for (const auto& r : rs) sj.push_back(report::symmetry(r));
            res["symmetries"] = sj;
            MatchReport rep = sa.force.empty()
                                  ? classify_potential(*sys.potential, sys.metric.signature, {std::nullopt, dom})
                                  : classify_force(sys.force[0], sys.force[1], {std::nullopt, dom});
            Json mj = Json::array();
            for (const auto& m : rep.matches) mj.push_back(report::match(m));
            res["matches"] = mj;
            j["results"] = res;
            emit(j, o, [&] {
                std::cout << "route: " << res["route"].get<std::string>() << "\n";
                std::cout << rs.size() << " generator(s)\n";
                for (const auto& r : rs) std::cout << "  " << r.vector.str() << "  [" << r.source << "]\n";
                for (const auto& m : rep.matches) {
                    std::cout << "match " << m.row.id();
                    for (const auto& [k, v] : m.constants) std::cout << " " << k << "=" << v.str();
                    std::cout << "\n";
                }
            });
            return kOk;
        }
        if (noe->parsed()) {
            Lagrangian2D L(Metric2D::of(signature_from_name(sa.signature)), parse(sa.potential));
            Json j = report::header("noether", system_input(sa), dom);
            Json res;
            res["energy"] = to_string(hamiltonian(L));
            if (!vector.empty()) {
                j["input"]["vector"] = vector;
                auto X = PointVectorField::parse(vector);
                auto c = noether_check(L, X, dom);
                res["vector"] = report::vector(X);
                res["check"] = report::noether_check(c);
                if (c.gauge) res["integral"] = to_string(noether_integral(L, X, *c.gauge));
                j["results"] = res;
                emit(j, o, [&] {
                    std::cout << X.str() << (c.pass ? " is" : " is not") << " a Noether point symmetry";
                    if (!c.pass && !c.diagnostic.empty()) std::cout << ": " << c.diagnostic;
                    std::cout << "\n";
                    if (c.pass && c.gauge) std::cout << "  integral " << to_string(noether_integral(L, X, *c.gauge)) << "\n";
                });
                return kOk;
            }
            auto ns = noether_solve(L, dom);
            Json nj = Json::array();
            for (const auto& r : ns) nj.push_back(report::noether(r));
            res["symmetries"] = nj;
            j["results"] = res;
            emit(j, o, [&] {
                std::cout << ns.size() << " Noether symmetr" << (ns.size() == 1 ? "y" : "ies") << "\n";
                for (const auto& r : ns)
                    std::cout << "  " << r.vector.str() << "  integral " << to_string(r.integral) << "\n";
            });
            return kOk;
        }
        if (cls->parsed()) {
            auto sys = build_system(sa);
            ClassifyOptions opt{table ? std::optional<int>(table) : std::nullopt, dom};
            Json in = system_input(sa);
            if (table) in["table"] = table;
            Json j = report::header("classify", in, dom);
            MatchReport rep = sa.force.empty() ? classify_potential(*sys.potential, sys.metric.signature, opt)
                                               : classify_force(sys.force[0], sys.force[1], opt);
            Json mj = Json::array();
            for (const auto& m : rep.matches) mj.push_back(report::match(m));
            j["results"] = {{"unmatched", rep.unmatched()}, {"matches", mj}};
            emit(j, o, [&] {
                if (rep.unmatched()) std::cout << "unmatched\n";
                for (const auto& m : rep.matches) {
                    std::cout << m.row.id();
                    for (const auto& [k, v] : m.constants) std::cout << " " << k << "=" << v.str();
                    std::cout << "\n";
                    for (const auto& X : m.vectors) std::cout << "  " << X.str() << "\n";
                }
            });
            return kOk;
        }
        if (itg->parsed()) {
            auto sys = build_system(sa);
            State ic = parse_ic(ic_text);
            Bindings b;
            for (const auto& p : params) {
                auto eq = p.find('=');
                if (eq == std::string::npos) throw CLI::ValidationError("--param expects name=value");
                b[p.substr(0, eq)] = std::stod(p.substr(eq + 1));
            }
            auto traj = integrate(sys, ic, t1, h, 0.0, b);
            Json in = system_input(sa);
            in["ic"] = ic;
            in["t1"] = t1;
            in["h"] = h;
            in["check"] = checks;
            in["param"] = b;
            Json j = report::header("integrate", in, dom);
            Json dj = Json::array();
            std::vector<DriftReport> drifts;
            for (const auto& c : checks) {
                drifts.push_back(conservation_drift(parse(c), traj, b));
                dj.push_back(report::drift(drifts.back()));
            }
            j["results"] = {{"steps", traj.t.size() ? traj.t.size() - 1 : 0},
                            {"diverged", traj.diverged},
                            {"final", traj.states.back()},
                            {"drifts", dj}};
            if (csv == "-") {
                write_csv(traj, std::cout);
            } else if (!csv.empty()) {
                std::ofstream f(csv);
                if (!f) throw std::runtime_error("cannot write " + csv);
                write_csv(traj, f);
            }
            if (csv != "-")
                emit(j, o, [&] {
                    std::cout << traj.t.size() - 1 << " steps" << (traj.diverged ? " (diverged)" : "") << "\n";
                    for (const auto& d : drifts)
                        std::cout << "  " << to_string(d.phi) << "  initial " << d.initial << "  max drift "
                                  << d.max_drift << "\n";
                });
            return traj.diverged ? kSingular : kOk;
        }
        if (lin->parsed()) {
            Json in;
            Json res;
            bool pass = false;
            if (!sys_d.empty()) {
                in["system"] = sys_d;
                SystemCoeffs k = SystemCoeffs::zero();
                k.d = {parse(sys_d[0]), parse(sys_d[1])};
                auto w = weyl_projective_vanishes(projective_connection(k), dom);
                res = report::weyl(w);
                pass = w.pass;
            } else {
                if (coeffs.empty()) throw CLI::ValidationError("one of --coeffs or --system is required");
                in["coeffs"] = coeffs;
                auto c = check_scalar({parse(coeffs[0]), parse(coeffs[1]), parse(coeffs[2]), parse(coeffs[3])}, dom);
                res = report::scalar(c);
                pass = c.pass;
            }
            Json j = report::header("linearize", in, dom);
            j["results"] = res;
            emit(j, o, [&] { std::cout << (pass ? "linearizable" : "not linearizable") << "\n"; });
            return kOk;
        }
        if (dem->parsed()) {
            auto r = demo::run(demo_name, dom);
            Json j = report::header("demo", {{"name", demo_name}}, dom);
            j["results"] = demo::to_json(r);
            emit(j, o, [&] {
                for (const auto& a : r.assertions)
                    std::cout << (a.pass ? "PASS " : "FAIL ") << a.id << "  " << a.row << "  " << a.detail << "\n";
                std::cout << r.name << ": " << (r.pass() ? "all assertions pass" : "assertion failure") << "\n";
            });
            return r.pass() ? kOk : kFail;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kParse;
    } catch (const UnboundSymbol& e) {
        std::cerr << "unbound symbol: " << e.what() << "\n";
        return kParse;
    } catch (const DomainError& e) {
        std::cerr << "singular domain: " << e.what() << "\n";
        return kSingular;
    } catch (const SingularMetric& e) {
        std::cerr << "singular metric: " << e.what() << "\n";
        return kSingular;
    } catch (const IntegrationError& e) {
        std::cerr << "integration failed: " << e.what() << "\n";
        return kSingular;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kOk;
}
