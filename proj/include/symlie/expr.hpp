#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symlie {

// Exact rational with int64 parts; ops return nullopt on overflow.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static std::optional<Rational> make(std::int64_t n, std::int64_t d);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_integer() const { return den == 1; }
    bool operator==(const Rational&) const = default;
};

std::optional<Rational> add(Rational a, Rational b);
std::optional<Rational> mul(Rational a, Rational b);
std::optional<Rational> inverse(Rational a);
std::optional<Rational> rational_pow(Rational a, std::int64_t n);
// Best rational approximation with denominator <= max_den, if within tol.
std::optional<Rational> snap_rational(double v, std::int64_t max_den = 1000, double tol = 1e-9);

// Numeric constant: exact rational when possible, double otherwise.
class Number {
public:
    Number() = default;
    Number(std::int64_t n) : exact_(true), r_{n, 1} {}
    Number(Rational r) : exact_(true), r_(r) {}
    static Number real(double d);

    bool exact() const { return exact_; }
    const Rational& rational() const { return r_; }
    double value() const { return exact_ ? r_.value() : d_; }
    bool is_zero() const { return exact_ ? r_.num == 0 : d_ == 0.0; }
    bool is_one() const { return exact_ && r_.num == 1 && r_.den == 1; }
    bool is_integer() const { return exact_ && r_.den == 1; }
    bool negative() const { return value() < 0; }
    int compare(const Number& o) const;
    bool operator==(const Number& o) const { return compare(o) == 0; }

    friend Number operator+(const Number& a, const Number& b);
    friend Number operator*(const Number& a, const Number& b);
    Number operator-() const;
    friend Number operator-(const Number& a, const Number& b) { return a + (-b); }
    friend Number operator/(const Number& a, const Number& b) { return a * b.inverse(); }
    Number inverse() const;
    Number pow(std::int64_t n) const;

    std::string str() const;

private:
    bool exact_ = true;
    Rational r_{0, 1};
    double d_ = 0.0;
};

enum class Kind { Num, Var, Param, Add, Sub, Mul, Div, Pow, Neg, Func, Atan2 };
enum class Fn { Sin, Cos, Tan, Sinh, Cosh, Exp, Ln, Sqrt, Atan, Abs };

const char* fn_name(Fn f);
std::optional<Fn> fn_from_name(std::string_view s);

struct Node;

// Immutable expression handle. Copies share structure.
class Expr {
public:
    Expr();
    Expr(int n);
    Expr(std::int64_t n);
    Expr(Number n);
    explicit Expr(std::shared_ptr<const Node> p) : p_(std::move(p)) {}

    static Expr num(Number n);
    static Expr real(double d);
    // Variable if the name is reserved, parameter otherwise.
    static Expr sym(const std::string& name);
    static Expr var(const std::string& name);
    static Expr param(const std::string& name);

    // Raw constructors, no folding.
    static Expr raw_add(std::vector<Expr> xs);
    static Expr raw_mul(std::vector<Expr> xs);
    static Expr raw_sub(Expr a, Expr b);
    static Expr raw_div(Expr a, Expr b);
    static Expr raw_pow(Expr a, Expr b);
    static Expr raw_neg(Expr a);
    static Expr raw_func(Fn f, Expr a);
    static Expr raw_atan2(Expr y, Expr x);

    Kind kind() const;
    const Node& node() const { return *p_; }
    const Node* get() const { return p_.get(); }
    const std::vector<Expr>& args() const;
    const Expr& arg(std::size_t i) const { return args()[i]; }
    const Number& number() const;
    const std::string& name() const;
    Fn fn() const;
    std::size_t hash() const;

    bool is_num() const { return kind() == Kind::Num; }
    bool is_zero_literal() const;
    bool is_one_literal() const;
    bool is_symbol() const { return kind() == Kind::Var || kind() == Kind::Param; }

    std::string str() const;

private:
    std::shared_ptr<const Node> p_;
};

struct Node {
    Kind kind;
    Number value;
    std::string name;
    Fn fn = Fn::Sin;
    std::vector<Expr> args;
    std::size_t hash = 0;
};

bool structurally_equal(const Expr& a, const Expr& b);
// Total order on trees (deterministic, hash-free).
int structural_compare(const Expr& a, const Expr& b);

// Folding constructors.
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr pow(const Expr& a, const Expr& b);
Expr func(Fn f, const Expr& a);
Expr sin(const Expr& a);
Expr cos(const Expr& a);
Expr exp(const Expr& a);
Expr ln(const Expr& a);
Expr sqrt(const Expr& a);
Expr atan2(const Expr& y, const Expr& x);
Expr sum(const std::vector<Expr>& xs);

bool is_reserved_variable(std::string_view name);

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

Expr parse(std::string_view text);
std::string to_string(const Expr& e);

// Free symbols split by role.
std::set<std::string> variables(const Expr& e);
std::set<std::string> parameters(const Expr& e);
std::set<std::string> symbols(const Expr& e);
bool depends_on(const Expr& e, const std::string& name);

Expr substitute(const Expr& e, const std::map<std::string, Expr>& repl);

Expr simplify(const Expr& e);
// Partial derivative. With simplified=false only local folding is applied.
Expr differentiate(const Expr& e, const std::string& v, bool simplified = true);

struct UnboundSymbol : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonlinearError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Bindings = std::map<std::string, double>;

struct EvalResult {
    double value = 0.0;
    double scale = 0.0;      // max |subterm|
    bool finite = true;
    bool near_singular = false;
};

double evaluate(const Expr& e, const Bindings& vars, const Bindings& params = {});

// Flattened program over a fixed symbol list; evaluates many roots at once.
class Compiled {
public:
    Compiled(const std::vector<Expr>& roots, std::vector<std::string> symbols);

    const std::vector<std::string>& symbols() const { return symbols_; }
    std::size_t size() const { return roots_.size(); }

    struct Result {
        std::vector<double> values;
        double scale = 0.0;
        bool finite = true;
        bool near_singular = false;
    };
    // Symbol values in the order of symbols().
    Result run(const double* point, double singular_eps = 1e-3) const;
    void run_values(const double* point, double* out) const;

private:
    struct Op {
        Kind kind;
        Fn fn;
        double c;
        int a, b;
        std::vector<int> many;
    };
    std::vector<std::string> symbols_;
    std::vector<Op> ops_;
    std::vector<int> roots_;
    mutable std::vector<double> scratch_;
};

struct SampleDomain {
    std::map<std::string, std::pair<double, double>> intervals;
    std::pair<double, double> default_interval{-2.0, 2.0};
    std::uint64_t seed = 0x5eed;
    int samples = 16;
    int max_attempts = 4000;
    double atol = 1e-9;
    double rtol = 1e-9;
    double singular_eps = 1e-3;

    std::pair<double, double> interval(const std::string& s) const;
    SampleDomain with_seed(std::uint64_t s) const {
        SampleDomain d = *this;
        d.seed = s;
        return d;
    }
};

struct ZeroCheck {
    bool zero = true;
    double max_abs = 0.0;       // largest |value| seen
    double max_excess = 0.0;    // largest |value| / (atol + rtol*scale)
    int accepted = 0;
};

// Draws accepted points for the given symbols; caller owns the RNG.
std::vector<std::vector<double>> sample_points(const Compiled& prog, const SampleDomain& dom,
                                               std::mt19937_64& rng, int count);

ZeroCheck check_zero(const std::vector<Expr>& es, const SampleDomain& dom);
bool is_zero(const Expr& e, const SampleDomain& dom = {});
bool is_zero(const std::vector<Expr>& es, const SampleDomain& dom = {});

struct LinearSolution {
    std::map<std::string, double> values;
    std::map<std::string, Number> exact;   // snapped values
    std::vector<std::string> free;         // unknowns not determined by the residual
    Number get(const std::string& u) const;
};

std::optional<LinearSolution> solve_linear_constants(const std::vector<Expr>& residuals,
                                                     const std::vector<std::string>& unknowns,
                                                     const SampleDomain& dom = {});
std::optional<LinearSolution> solve_linear_constants(const Expr& residual,
                                                     const std::vector<std::string>& unknowns,
                                                     const SampleDomain& dom = {});

// Basis of the constant vectors c with Σ_k c_k·columns[k][r] ≡ 0 for every r.
// Entries are snapped to rationals when the snapped vector still verifies.
std::vector<std::vector<Number>> linear_null_space(const std::vector<std::vector<Expr>>& columns,
                                                   const SampleDomain& dom = {});

// Real λ with Σ c_k·A[k] = λ·Σ c_k·B[k] for some c ≠ 0, estimated from sampled values.
// Candidates only; callers confirm each with linear_null_space.
std::vector<double> generalized_eigenvalues(const std::vector<std::vector<Expr>>& A,
                                            const std::vector<std::vector<Expr>>& B, const SampleDomain& dom = {});

// Closed-form antiderivative over the grammar's function set, verified by differentiation.
std::optional<Expr> antiderivative(const Expr& e, const std::string& v, const SampleDomain& dom = {});

}  // namespace symlie
