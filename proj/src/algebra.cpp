#include "cayley/algebra.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace cayley {

std::string Var::name() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::Edge: out << "x_" << s << "_" << t << "_" << i; break;
        case Kind::Root: out << "z_" << s; break;
        case Kind::Axis: out << "y_" << s; break;
    }
    return out.str();
}

Var Var::parse(const std::string& name) {
    auto fields = [&](std::size_t from) {
        std::vector<int> out;
        std::size_t pos = from;
        while (pos < name.size()) {
            std::size_t next = name.find('_', pos);
            if (next == std::string::npos) next = name.size();
            out.push_back(std::stoi(name.substr(pos, next - pos)));
            pos = next + 1;
        }
        return out;
    };
    if (name.rfind("x_", 0) == 0) {
        auto f = fields(2);
        if (f.size() == 3) return Var::edge(f[0], f[1], f[2]);
    } else if (name.rfind("z_", 0) == 0) {
        auto f = fields(2);
        if (f.size() == 1) return Var::root(f[0]);
    } else if (name.rfind("y_", 0) == 0) {
        auto f = fields(2);
        if (f.size() == 1) return Var::axis(f[0]);
    }
    throw std::invalid_argument("unrecognized variable name: " + name);
}

int Monomial::exponent(const Var& v) const {
    auto it = exps_.find(v);
    return it == exps_.end() ? 0 : it->second;
}

Monomial& Monomial::set_exponent(const Var& v, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    auto it = exps_.find(v);
    if (it != exps_.end()) {
        degree_ -= it->second;
        exps_.erase(it);
    }
    if (e > 0) {
        exps_.emplace(v, e);
        degree_ += e;
    }
    return *this;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out = *this;
    for (const auto& [v, e] : o.exps_) {
        auto [it, inserted] = out.exps_.emplace(v, e);
        if (!inserted) it->second += e;
        out.degree_ += e;
    }
    return out;
}

std::pair<int, Monomial> Monomial::lower(const Var& v) const {
    int e = exponent(v);
    if (e == 0) return {0, *this};
    Monomial out = *this;
    out.set_exponent(v, e - 1);
    return {e, out};
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    if (a.total_degree() != b.total_degree())
        return a.total_degree() < b.total_degree();
    return a.exponents() < b.exponents();
}

Polynomial::Polynomial(Rat constant) {
    if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

Polynomial Polynomial::variable(const Var& v) {
    Monomial m;
    m.set_exponent(v, 1);
    return monomial(m, 1);
}

Polynomial Polynomial::monomial(Monomial m, Rat coeff) {
    Polynomial p;
    if (coeff != 0) p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total_degree();
}

Rat Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    out += o;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out = *this;
    out -= o;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    return mul_truncated(o, -1);
}

Polynomial Polynomial::mul_truncated(const Polynomial& o, int order) const {
    Polynomial out;
    for (const auto& [ma, ca] : terms_) {
        if (order >= 0 && ma.total_degree() >= order) break;
        for (const auto& [mb, cb] : o.terms_) {
            if (order >= 0 && ma.total_degree() + mb.total_degree() >= order) break;
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::truncated(int order) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        if (m.total_degree() >= order) break;
        out.add_term(m, c);
    }
    return out;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial out;
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

Polynomial Polynomial::operator-() const {
    return *this * Rat(-1);
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    Polynomial out{Rat(1)};
    for (int k = 0; k < e; ++k) out = out * *this;
    return out;
}

Polynomial Polynomial::derivative(const Var& v) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        auto [e, lowered] = m.lower(v);
        if (e > 0) out.add_term(lowered, c * e);
    }
    return out;
}

Rat Polynomial::evaluate(const std::map<Var, Rat>& values) const {
    Rat out = 0;
    for (const auto& [m, c] : terms_) {
        Rat term = c;
        for (const auto& [v, e] : m.exponents()) {
            auto it = values.find(v);
            if (it == values.end())
                throw std::invalid_argument("no value for variable " + v.name());
            for (int k = 0; k < e; ++k) term *= it->second;
        }
        out += term;
    }
    return out;
}

PowerSeries::PowerSeries(Polynomial body, int order)
    : body_(body.truncated(order)), order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
}

Rat PowerSeries::coefficient(const Monomial& m) const {
    return body_.coefficient(m);
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    int ord = std::min(order_, o.order_);
    return PowerSeries(body_ + o.body_, ord);
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    int ord = std::min(order_, o.order_);
    return PowerSeries(body_ - o.body_, ord);
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    int ord = std::min(order_, o.order_);
    return PowerSeries(body_.mul_truncated(o.body_, ord), ord);
}

PowerSeries PowerSeries::pow(int e) const {
    PowerSeries out(Polynomial{Rat(1)}, order_);
    for (int k = 0; k < e; ++k) out = out * *this;
    return out;
}

PowerSeries PowerSeries::derivative(const Var& v) const {
    return PowerSeries(body_.derivative(v), order_ > 0 ? order_ - 1 : 0);
}

PowerSeries PowerSeries::compose(const std::vector<PowerSeries>& args) const {
    int ord = order_;
    for (const auto& a : args) {
        if (a.constant_term() != 0)
            throw std::invalid_argument("composition argument must have zero constant term");
        ord = std::min(ord, a.order());
    }
    // Cache powers of the arguments as they are needed.
    std::vector<std::vector<Polynomial>> powers(args.size());
    for (auto& p : powers) p.push_back(Polynomial{Rat(1)});
    auto arg_power = [&](std::size_t k, int e) -> const Polynomial& {
        auto& cache = powers[k];
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back().mul_truncated(args[k].body(), ord));
        return cache[e];
    };
    Polynomial out;
    for (const auto& [m, c] : body_.terms()) {
        Polynomial term{c};
        for (const auto& [v, e] : m.exponents()) {
            if (v.kind != Var::Kind::Axis || v.s < 1 ||
                v.s > static_cast<int>(args.size()))
                throw std::invalid_argument("composition: unbound variable " + v.name());
            term = term.mul_truncated(arg_power(v.s - 1, e), ord);
            if (term.is_zero()) break;
        }
        out += term;
    }
    return PowerSeries(out, ord);
}

Polynomial matrix_determinant(const std::vector<std::vector<Polynomial>>& rows,
                              int bound) {
    const int n = static_cast<int>(rows.size());
    if (n > bound) throw SizeError("determinant dimension exceeds bound");
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("determinant: matrix is not square");
    if (n == 0) return Polynomial{Rat(1)};
    if (n == 1) return rows[0][0];
    Polynomial out;
    std::vector<std::vector<Polynomial>> minor(n - 1, std::vector<Polynomial>(n - 1));
    for (int j = 0; j < n; ++j) {
        if (rows[0][j].is_zero()) continue;
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = rows[r][c];
            }
        }
        Polynomial cofactor = rows[0][j] * matrix_determinant(minor, bound);
        if (j % 2 == 0) out += cofactor; else out -= cofactor;
    }
    return out;
}

Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Int out = 1;
    for (int k = 2; k <= n; ++k) out *= k;
    return out;
}

Int binomial(const Int& n, int k) {
    if (k < 0 || n < 0) return 0;
    if (n < k) return 0;
    Int num = 1;
    for (int j = 0; j < k; ++j) num *= n - j;
    return num / factorial(k);
}

Int multinomial(int n, const std::vector<int>& parts) {
    int sum = 0;
    for (int p : parts) {
        if (p < 0) return 0;
        sum += p;
    }
    if (sum != n) return 0;
    Int out = factorial(n);
    for (int p : parts) out /= factorial(p);
    return out;
}

Int int_pow(const Int& base, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Int out = 1;
    for (int k = 0; k < e; ++k) out *= base;
    return out;
}

nlohmann::json to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json exps = nlohmann::json::object();
        for (const auto& [v, e] : m.exponents()) exps[v.name()] = e;
        terms.push_back({{"exponents", std::move(exps)},
                         {"numerator", numerator(c).str()},
                         {"denominator", denominator(c).str()}});
    }
    return terms;
}

nlohmann::json to_json(const PowerSeries& f) {
    return {{"order", f.order()}, {"terms", to_json(f.body())}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    Polynomial p;
    for (const auto& term : j) {
        Monomial m;
        for (const auto& [name, e] : term.at("exponents").items())
            m.set_exponent(Var::parse(name), e.get<int>());
        Int num(term.at("numerator").is_string()
                    ? Int(term.at("numerator").get<std::string>())
                    : Int(term.at("numerator").get<long long>()));
        Int den(term.at("denominator").is_string()
                    ? Int(term.at("denominator").get<std::string>())
                    : Int(term.at("denominator").get<long long>()));
        if (den <= 0) throw std::invalid_argument("denominator must be positive");
        p.add_term(m, Rat(num, den));
    }
    return p;
}

PowerSeries series_from_json(const nlohmann::json& j) {
    return PowerSeries(polynomial_from_json(j.at("terms")), j.at("order").get<int>());
}

}  // namespace cayley
