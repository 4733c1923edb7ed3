#include "symlie/expr.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <unordered_map>

namespace symlie {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

// Real power; odd-denominator rational exponents take the real root.
double real_pow(double b, double e, std::int64_t p, std::int64_t q) {
    if (q > 1 && (q % 2 == 1) && b < 0) {
        double r = std::pow(-b, static_cast<double>(p) / static_cast<double>(q));
        return (p % 2 == 0) ? r : -r;
    }
    return std::pow(b, e);
}

}  // namespace

Compiled::Compiled(const std::vector<Expr>& roots, std::vector<std::string> syms) : symbols_(std::move(syms)) {
    std::unordered_map<const Node*, int> slot;
    std::unordered_map<std::string, int> symidx;
    for (std::size_t i = 0; i < symbols_.size(); ++i) symidx[symbols_[i]] = static_cast<int>(i);
    std::function<int(const Expr&)> emit = [&](const Expr& e) -> int {
        auto it = slot.find(e.get());
        if (it != slot.end()) return it->second;
        Op op{e.kind(), e.kind() == Kind::Func ? e.fn() : Fn::Sin, 0.0, -1, -1, {}};
        switch (e.kind()) {
            case Kind::Num: op.c = e.number().value(); break;
            case Kind::Var:
            case Kind::Param: {
                auto f = symidx.find(e.name());
                if (f == symidx.end()) throw UnboundSymbol("unbound symbol '" + e.name() + "'");
                op.a = f->second;
                break;
            }
            case Kind::Add:
            case Kind::Mul:
                for (const auto& a : e.args()) op.many.push_back(emit(a));
                break;
            case Kind::Sub:
            case Kind::Div:
            case Kind::Atan2:
                op.a = emit(e.arg(0));
                op.b = emit(e.arg(1));
                break;
            case Kind::Pow:
                op.a = emit(e.arg(0));
                op.b = emit(e.arg(1));
                if (e.arg(1).is_num() && e.arg(1).number().exact()) {
                    const Rational& r = e.arg(1).number().rational();
                    op.many = {static_cast<int>(std::clamp<std::int64_t>(r.num, -1000000, 1000000)),
                               static_cast<int>(std::clamp<std::int64_t>(r.den, 1, 1000000))};
                }
                break;
            case Kind::Neg:
            case Kind::Func: op.a = emit(e.arg(0)); break;
        }
        ops_.push_back(std::move(op));
        int id = static_cast<int>(ops_.size()) - 1;
        slot.emplace(e.get(), id);
        return id;
    };
    for (const auto& r : roots) roots_.push_back(emit(r));
    scratch_.resize(ops_.size());
}

Compiled::Result Compiled::run(const double* pt, double eps) const {
    Result res;
    double* v = scratch_.data();
    double scale = 0.0;
    bool sing = false;
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        const Op& o = ops_[i];
        double r = 0.0;
        switch (o.kind) {
            case Kind::Num: r = o.c; break;
            case Kind::Var:
            case Kind::Param: r = pt[o.a]; break;
            case Kind::Add:
                for (int k : o.many) r += v[k];
                break;
            case Kind::Mul:
                r = 1.0;
                for (int k : o.many) r *= v[k];
                break;
            case Kind::Sub: r = v[o.a] - v[o.b]; break;
            case Kind::Div:
                if (std::fabs(v[o.b]) < eps) sing = true;
                r = v[o.a] / v[o.b];
                break;
            case Kind::Pow: {
                double b = v[o.a], e = v[o.b];
                if (o.many.size() == 2) {
                    if (o.many[1] == 1 && o.many[0] >= 0 && o.many[0] <= 16) {
                        r = 1.0;
                        for (int k = 0; k < o.many[0]; ++k) r *= b;
                    } else {
                        r = real_pow(b, e, o.many[0], o.many[1]);
                    }
                    if (o.many[0] < 0 && std::fabs(b) < eps) sing = true;
                    if (o.many[1] > 1 && std::fabs(b) < eps) sing = true;
                } else {
                    r = std::pow(b, e);
                    if (std::fabs(b) < eps) sing = true;
                }
                break;
            }
            case Kind::Neg: r = -v[o.a]; break;
            case Kind::Func: {
                double u = v[o.a];
                switch (o.fn) {
                    case Fn::Sin: r = std::sin(u); break;
                    case Fn::Cos: r = std::cos(u); break;
                    case Fn::Tan:
                        if (std::fabs(std::cos(u)) < eps) sing = true;
                        r = std::tan(u);
                        break;
                    case Fn::Sinh: r = std::sinh(u); break;
                    case Fn::Cosh: r = std::cosh(u); break;
                    case Fn::Exp: r = std::exp(u); break;
                    case Fn::Ln:
                        if (std::fabs(u) < eps) sing = true;
                        r = std::log(u);
                        break;
                    case Fn::Sqrt:
                        if (std::fabs(u) < eps) sing = true;
                        r = std::sqrt(u);
                        break;
                    case Fn::Atan: r = std::atan(u); break;
                    case Fn::Abs:
                        if (std::fabs(u) < eps) sing = true;
                        r = std::fabs(u);
                        break;
                }
                break;
            }
            case Kind::Atan2: {
                double y = v[o.a], x = v[o.b];
                if (x < 0 && std::fabs(y) < eps) sing = true;
                if (x * x + y * y < eps * eps) sing = true;
                r = std::atan2(y, x);
                break;
            }
        }
        v[i] = r;
        if (!std::isfinite(r)) res.finite = false;
        else scale = std::max(scale, std::fabs(r));
    }
    res.values.reserve(roots_.size());
    for (int r : roots_) res.values.push_back(v[r]);
    res.scale = scale;
    res.near_singular = sing;
    return res;
}

void Compiled::run_values(const double* pt, double* out) const {
    Result r = run(pt, 0.0);
    std::copy(r.values.begin(), r.values.end(), out);
}

double evaluate(const Expr& e, const Bindings& vars, const Bindings& params) {
    std::vector<std::string> names;
    std::vector<double> vals;
    for (const auto& s : symbols(e)) {
        auto a = vars.find(s);
        auto b = params.find(s);
        if (a != vars.end()) vals.push_back(a->second);
        else if (b != params.end()) vals.push_back(b->second);
        else throw UnboundSymbol("unbound symbol '" + s + "'");
        names.push_back(s);
    }
    Compiled c({e}, names);
    return c.run(vals.data(), 0.0).values[0];
}

std::pair<double, double> SampleDomain::interval(const std::string& s) const {
    auto it = intervals.find(s);
    return it == intervals.end() ? default_interval : it->second;
}

std::vector<std::vector<double>> sample_points(const Compiled& prog, const SampleDomain& dom, std::mt19937_64& rng,
                                               int count) {
    std::vector<std::vector<double>> pts;
    std::vector<double> p(prog.symbols().size());
    int attempts = 0;
    while (static_cast<int>(pts.size()) < count) {
        if (++attempts > dom.max_attempts) throw DomainError("domain too singular");
        for (std::size_t i = 0; i < p.size(); ++i) {
            auto [lo, hi] = dom.interval(prog.symbols()[i]);
            p[i] = uniform(rng, lo, hi);
        }
        auto r = prog.run(p.data(), dom.singular_eps);
        if (!r.finite || r.near_singular) continue;
        pts.push_back(p);
    }
    return pts;
}

namespace {

std::vector<std::string> symbol_list(const std::vector<Expr>& es) {
    std::set<std::string> all;
    for (const auto& e : es) {
        auto s = symbols(e);
        all.insert(s.begin(), s.end());
    }
    return {all.begin(), all.end()};
}

}  // namespace

ZeroCheck check_zero(const std::vector<Expr>& es, const SampleDomain& dom) {
    ZeroCheck out;
    if (es.empty()) return out;
    auto syms = symbol_list(es);
    Compiled joint(es, syms);
    std::vector<Compiled> each;
    each.reserve(es.size());
    for (const auto& e : es) each.emplace_back(std::vector<Expr>{e}, syms);
    std::mt19937_64 rng(dom.seed);
    auto pts = sample_points(joint, dom, rng, dom.samples);
    for (const auto& p : pts) {
        for (auto& c : each) {
            auto r = c.run(p.data(), dom.singular_eps);
            double v = std::fabs(r.values[0]);
            double tol = dom.atol + dom.rtol * r.scale;
            out.max_abs = std::max(out.max_abs, v);
            out.max_excess = std::max(out.max_excess, v / tol);
            if (!(v <= tol)) out.zero = false;
        }
        ++out.accepted;
    }
    return out;
}

bool is_zero(const Expr& e, const SampleDomain& dom) { return check_zero({e}, dom).zero; }
bool is_zero(const std::vector<Expr>& es, const SampleDomain& dom) { return check_zero(es, dom).zero; }

Number LinearSolution::get(const std::string& u) const {
    auto it = exact.find(u);
    if (it != exact.end()) return it->second;
    auto v = values.find(u);
    return v == values.end() ? Number(0) : Number::real(v->second);
}

std::optional<LinearSolution> solve_linear_constants(const Expr& residual, const std::vector<std::string>& unknowns,
                                                     const SampleDomain& dom) {
    return solve_linear_constants(std::vector<Expr>{residual}, unknowns, dom);
}

std::optional<LinearSolution> solve_linear_constants(const std::vector<Expr>& residuals,
                                                     const std::vector<std::string>& unknowns,
                                                     const SampleDomain& dom) {
    const std::size_t k = unknowns.size();
    std::set<std::string> unk(unknowns.begin(), unknowns.end());
    std::vector<std::string> sampled;
    for (const auto& s : symbol_list(residuals))
        if (!unk.count(s)) sampled.push_back(s);
    std::vector<std::string> syms = sampled;
    syms.insert(syms.end(), unknowns.begin(), unknowns.end());
    Compiled prog(residuals, syms);
    const std::size_t m = residuals.size();
    const std::size_t ns = sampled.size();
    const int npts = std::max<int>(static_cast<int>(2 * k), 8);

    std::mt19937_64 rng(dom.seed ^ 0x51ed27a5c0ffeeULL);
    std::vector<double> p(syms.size(), 0.0);
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    int accepted = 0, attempts = 0;
    auto run_at = [&](const std::vector<double>& u) {
        std::copy(u.begin(), u.end(), p.begin() + static_cast<long>(ns));
        return prog.run(p.data(), dom.singular_eps);
    };
    while (accepted < npts) {
        if (++attempts > dom.max_attempts) throw DomainError("domain too singular");
        for (std::size_t i = 0; i < ns; ++i) {
            auto [lo, hi] = dom.interval(sampled[i]);
            p[i] = uniform(rng, lo, hi);
        }
        std::vector<double> u(k, 0.0);
        auto r0 = run_at(u);
        if (!r0.finite || r0.near_singular) continue;
        std::vector<std::vector<double>> cols(k, std::vector<double>(m));
        std::vector<std::vector<double>> ej(k);
        bool ok = true;
        double scale = r0.scale;
        for (std::size_t j = 0; j < k && ok; ++j) {
            std::fill(u.begin(), u.end(), 0.0);
            u[j] = 1.0;
            auto r1 = run_at(u);
            u[j] = 2.0;
            auto r2 = run_at(u);
            if (!r1.finite || !r2.finite) { ok = false; break; }
            scale = std::max({scale, r1.scale, r2.scale});
            ej[j] = r1.values;
            for (std::size_t c = 0; c < m; ++c) {
                cols[j][c] = r1.values[c] - r0.values[c];
                double second = r2.values[c] - 2 * r1.values[c] + r0.values[c];
                if (std::fabs(second) > 1e-7 * (1.0 + scale)) throw NonlinearError("residual is not affine in " + unknowns[j]);
            }
        }
        if (!ok) continue;
        for (std::size_t i = 0; i + 1 < k; ++i) {
            std::fill(u.begin(), u.end(), 0.0);
            u[i] = 1.0;
            u[i + 1] = 1.0;
            auto rm = run_at(u);
            if (!rm.finite) continue;
            for (std::size_t c = 0; c < m; ++c) {
                double mixed = rm.values[c] - ej[i][c] - ej[i + 1][c] + r0.values[c];
                if (std::fabs(mixed) > 1e-7 * (1.0 + std::max(scale, rm.scale)))
                    throw NonlinearError("residual has a product of unknowns");
            }
        }
        for (std::size_t c = 0; c < m; ++c) {
            std::vector<double> row(k);
            double w = std::fabs(r0.values[c]);
            for (std::size_t j = 0; j < k; ++j) {
                row[j] = cols[j][c];
                w = std::max(w, std::fabs(row[j]));
            }
            if (w < 1e-300) continue;
            for (auto& x : row) x /= w;
            rows.push_back(row);
            rhs.push_back(-r0.values[c] / w);
        }
        ++accepted;
    }

    LinearSolution sol;
    std::vector<double> x(k, 0.0);
    if (k > 0 && !rows.empty()) {
        Eigen::MatrixXd A(static_cast<long>(rows.size()), static_cast<long>(k));
        Eigen::VectorXd b(static_cast<long>(rows.size()));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < k; ++j) A(static_cast<long>(i), static_cast<long>(j)) = rows[i][j];
            b(static_cast<long>(i)) = rhs[i];
        }
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
        qr.setThreshold(1e-9);
        Eigen::VectorXd s = qr.solve(b);
        long rank = qr.rank();
        std::vector<bool> basic(k, false);
        for (long i = 0; i < rank; ++i) basic[static_cast<std::size_t>(qr.colsPermutation().indices()(i))] = true;
        for (std::size_t j = 0; j < k; ++j) {
            if (!basic[j]) {
                sol.free.push_back(unknowns[j]);
                x[j] = 0.0;
            } else {
                x[j] = s(static_cast<long>(j));
            }
        }
    } else {
        sol.free = unknowns;
    }

    auto verify = [&](bool snapped) {
        std::map<std::string, Expr> repl;
        for (std::size_t j = 0; j < k; ++j) {
            Number n = Number::real(x[j]);
            if (snapped) {
                if (auto r = snap_rational(x[j], 1000, 1e-7)) n = Number(*r);
            }
            repl[unknowns[j]] = Expr(n);
        }
        std::vector<Expr> subs;
        for (const auto& r : residuals) subs.push_back(substitute(r, repl));
        if (!is_zero(subs, dom.with_seed(dom.seed * 6364136223846793005ULL + 1442695040888963407ULL))) return false;
        for (std::size_t j = 0; j < k; ++j) {
            sol.values[unknowns[j]] = repl[unknowns[j]].number().value();
            sol.exact[unknowns[j]] = repl[unknowns[j]].number();
        }
        return true;
    };
    if (verify(true) || verify(false)) return sol;
    return std::nullopt;
}

std::vector<std::vector<Number>> linear_null_space(const std::vector<std::vector<Expr>>& columns,
                                                   const SampleDomain& dom) {
    const std::size_t k = columns.size();
    std::vector<std::vector<Number>> out;
    if (k == 0) return out;
    const std::size_t m = columns[0].size();
    std::vector<Expr> flat;
    for (const auto& c : columns) flat.insert(flat.end(), c.begin(), c.end());
    auto syms = symbol_list(flat);
    Compiled prog(flat, syms);
    std::mt19937_64 rng(dom.seed ^ 0x9a11ce5eedULL);
    const int npts = static_cast<int>(std::max<std::size_t>(k, 8)) + 4;
    auto pts = sample_points(prog, dom, rng, npts);

    Eigen::MatrixXd A(static_cast<long>(pts.size() * m), static_cast<long>(k));
    for (std::size_t p = 0; p < pts.size(); ++p) {
        auto r = prog.run(pts[p].data(), 0.0);
        for (std::size_t row = 0; row < m; ++row) {
            const double floor = dom.atol + dom.rtol * r.scale;
            double w = 0.0;
            for (std::size_t j = 0; j < k; ++j) {
                double& v = r.values[j * m + row];
                if (std::fabs(v) <= floor) v = 0.0;
                w = std::max(w, std::fabs(v));
            }
            for (std::size_t j = 0; j < k; ++j)
                A(static_cast<long>(p * m + row), static_cast<long>(j)) = w > 0 ? r.values[j * m + row] / w : 0.0;
        }
    }
    Eigen::VectorXd scale(static_cast<long>(k));
    for (long j = 0; j < A.cols(); ++j) {
        double n = A.col(j).norm();
        scale(j) = n > 0 ? n : 1.0;
        A.col(j) /= scale(j);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double top = sv.size() ? sv(0) : 0.0;
    long rank = 0;
    for (long i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-8 * std::max(top, 1e-300)) ++rank;
    long nul = static_cast<long>(k) - rank;
    if (nul <= 0) return out;
    Eigen::MatrixXd N = svd.matrixV().rightCols(nul).transpose();
    for (long j = 0; j < N.cols(); ++j) N.col(j) /= scale(j);

    // reduced row echelon form of the basis
    long row = 0;
    std::vector<long> pivots;
    for (long col = 0; col < N.cols() && row < N.rows(); ++col) {
        long best = row;
        for (long r = row + 1; r < N.rows(); ++r)
            if (std::fabs(N(r, col)) > std::fabs(N(best, col))) best = r;
        double colmax = N.col(col).cwiseAbs().maxCoeff();
        if (std::fabs(N(best, col)) < 1e-9 * std::max(1.0, colmax) || std::fabs(N(best, col)) < 1e-12) continue;
        N.row(row).swap(N.row(best));
        N.row(row) /= N(row, col);
        for (long r = 0; r < N.rows(); ++r)
            if (r != row) N.row(r) -= N(r, col) * N.row(row);
        pivots.push_back(col);
        ++row;
    }

    SampleDomain check = dom.with_seed(dom.seed * 2862933555777941757ULL + 3037000493ULL);
    for (long r = 0; r < row; ++r) {
        for (bool snapped : {true, false}) {
            std::vector<Number> v(k);
            for (std::size_t j = 0; j < k; ++j) {
                double x = N(r, static_cast<long>(j));
                if (std::fabs(x) < 1e-10) x = 0.0;
                v[j] = Number::real(x);
                if (snapped)
                    if (auto q = snap_rational(x, 1000, 1e-7)) v[j] = Number(*q);
            }
            std::vector<Expr> res;
            for (std::size_t i = 0; i < m; ++i) {
                Expr acc(0);
                for (std::size_t j = 0; j < k; ++j)
                    if (!v[j].is_zero()) acc = acc + Expr(v[j]) * columns[j][i];
                res.push_back(acc);
            }
            if (is_zero(res, check)) {
                out.push_back(std::move(v));
                break;
            }
        }
    }
    return out;
}

std::vector<double> generalized_eigenvalues(const std::vector<std::vector<Expr>>& A,
                                            const std::vector<std::vector<Expr>>& B, const SampleDomain& dom) {
    std::vector<double> out;
    const std::size_t k = A.size();
    if (k == 0 || B.size() != k) return out;
    const std::size_t m = A[0].size();
    std::vector<Expr> flat;
    for (std::size_t j = 0; j < k; ++j) {
        flat.insert(flat.end(), A[j].begin(), A[j].end());
        flat.insert(flat.end(), B[j].begin(), B[j].end());
    }
    auto syms = symbol_list(flat);
    Compiled prog(flat, syms);
    std::mt19937_64 rng(dom.seed ^ 0xa2a2a2ULL);
    auto pts = sample_points(prog, dom, rng, static_cast<int>(std::max<std::size_t>(k, 8)) + 4);
    Eigen::MatrixXd MA(static_cast<long>(pts.size() * m), static_cast<long>(k));
    Eigen::MatrixXd MB(MA.rows(), MA.cols());
    for (std::size_t p = 0; p < pts.size(); ++p) {
        auto r = prog.run(pts[p].data(), 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            double w = 0;
            for (std::size_t j = 0; j < k; ++j)
                w = std::max({w, std::fabs(r.values[2 * m * j + i]), std::fabs(r.values[2 * m * j + m + i])});
            if (w == 0) w = 1;
            for (std::size_t j = 0; j < k; ++j) {
                MA(static_cast<long>(p * m + i), static_cast<long>(j)) = r.values[2 * m * j + i] / w;
                MB(static_cast<long>(p * m + i), static_cast<long>(j)) = r.values[2 * m * j + m + i] / w;
            }
        }
    }
    const double nA = MA.norm(), nB = MB.norm();
    if (nB == 0) return out;
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 2; ++trial) {
        Eigen::MatrixXd W(static_cast<long>(k), MA.rows());
        for (long i = 0; i < W.rows(); ++i)
            for (long j = 0; j < W.cols(); ++j) W(i, j) = gauss(rng);
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(W * MB);
        if (qr.rank() < static_cast<long>(k)) continue;
        Eigen::EigenSolver<Eigen::MatrixXd> es(qr.solve(W * MA));
        for (long i = 0; i < es.eigenvalues().size(); ++i) {
            std::complex<double> ev = es.eigenvalues()(i);
            if (std::fabs(ev.imag()) > 1e-7 * (1 + std::fabs(ev.real()))) continue;
            double re = ev.real();
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(MA - re * MB);
            double smin = svd.singularValues()(svd.singularValues().size() - 1);
            if (smin > 1e-7 * (nA + (1 + std::fabs(re)) * nB)) continue;
            bool dup = false;
            for (double q : out)
                if (std::fabs(q - re) < 1e-6 * (1 + std::fabs(q))) dup = true;
            if (!dup) out.push_back(re);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace symlie
