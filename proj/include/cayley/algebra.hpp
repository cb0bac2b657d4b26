#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace cayley {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Formal variable. Three families are used throughout:
//   Edge{s,t,i} : x_{s,t,i}, marking an edge from a type-s child to vertex (t,i)
//   Root{s}     : z_s, marking a root of type s in a forest
//   Axis{t}     : x_t, the ambient variables of a power series in d variables
struct Var {
    enum class Kind : std::uint8_t { Edge, Root, Axis };
    Kind kind;
    int s = 0, t = 0, i = 0;

    static Var edge(int s, int t, int i) { return {Kind::Edge, s, t, i}; }
    static Var root(int s) { return {Kind::Root, s, 0, 0}; }
    static Var axis(int t) { return {Kind::Axis, t, 0, 0}; }

    friend auto operator<=>(const Var&, const Var&) = default;

    std::string name() const;
    static Var parse(const std::string& name);
};

class Monomial {
public:
    Monomial() = default;

    int exponent(const Var& v) const;
    Monomial& set_exponent(const Var& v, int e);  // e == 0 erases
    int total_degree() const { return degree_; }
    bool is_constant() const { return exps_.empty(); }
    const std::map<Var, int>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& o) const;
    // Formal derivative helper: returns exponent of v, and the monomial with
    // that exponent lowered by one. Exponent 0 yields {0, unchanged}.
    std::pair<int, Monomial> lower(const Var& v) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::map<Var, int> exps_;  // no zero exponents stored
    int degree_ = 0;
};

// Graded lexicographic order: compare total degree first, then the exponent
// maps lexicographically by variable. Used for canonical serialization.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rat, GradedLexLess>;

    Polynomial() = default;
    explicit Polynomial(Rat constant);
    static Polynomial variable(const Var& v);
    static Polynomial monomial(Monomial m, Rat coeff);

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rat coefficient(const Monomial& m) const;
    Rat constant_term() const { return coefficient(Monomial{}); }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    Polynomial operator-() const;
    Polynomial pow(int e) const;

    // Truncating multiply: terms of total degree >= order are dropped.
    // order < 0 means no truncation.
    Polynomial mul_truncated(const Polynomial& o, int order) const;
    Polynomial truncated(int order) const;

    Polynomial derivative(const Var& v) const;
    Rat evaluate(const std::map<Var, Rat>& values) const;

    void add_term(const Monomial& m, const Rat& coeff);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    TermMap terms_;  // no zero coefficients stored
};

// Total-degree-truncated series: every stored term has total degree < order.
class PowerSeries {
public:
    PowerSeries() = default;
    PowerSeries(Polynomial body, int order);

    const Polynomial& body() const { return body_; }
    int order() const { return order_; }

    Rat coefficient(const Monomial& m) const;
    Rat constant_term() const { return body_.constant_term(); }

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;
    PowerSeries pow(int e) const;
    PowerSeries derivative(const Var& v) const;  // order drops by one

    // Substitutes args[k] for Axis(k+1). Each argument must have zero
    // constant term, which keeps the truncated composition exact.
    PowerSeries compose(const std::vector<PowerSeries>& args) const;

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    Polynomial body_;
    int order_ = 0;
};

struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultDeterminantBound = 8;

// Exact determinant by cofactor expansion. rows.size() x rows.size(),
// dimension limited by `bound`.
Polynomial matrix_determinant(const std::vector<std::vector<Polynomial>>& rows,
                              int bound = kDefaultDeterminantBound);

Int factorial(int n);
Int binomial(const Int& n, int k);
Int multinomial(int n, const std::vector<int>& parts);  // 0 if parts don't sum to n
Int int_pow(const Int& base, int e);

// Canonical JSON: array of {exponents, numerator, denominator} records in
// graded-lex order; a series wraps it with an "order" field.
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const PowerSeries& f);
Polynomial polynomial_from_json(const nlohmann::json& j);
PowerSeries series_from_json(const nlohmann::json& j);

}  // namespace cayley
