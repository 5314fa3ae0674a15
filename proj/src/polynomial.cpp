#include "hamnf/polynomial.hpp"

#include "hamnf/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace hamnf {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {
    for (auto e : exps_)
        degree_ += e;
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index) {
    require(index < num_vars, ErrorKind::DimensionMismatch, "variable index out of range");
    std::vector<unsigned> e(num_vars, 0);
    e[index] = 1;
    return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
    require(num_vars() == other.num_vars(), ErrorKind::DimensionMismatch, "monomial variable count");
    std::vector<unsigned> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] += other.exps_[i];
    return Monomial(std::move(e));
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    if (degree_ != other.degree_)
        return degree_ <=> other.degree_;
    // larger exponent vector (lexicographically) sorts first
    return other.exps_ <=> exps_;
}

std::string Monomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0)
            continue;
        os << (first ? "" : "*") << 'x' << (i + 1);
        if (exps_[i] > 1)
            os << '^' << exps_[i];
        first = false;
    }
    return first ? "1" : os.str();
}

// ---------------------------------------------------------------- Poly

Poly Poly::constant(std::size_t num_vars, const Scalar& c) {
    Poly p(num_vars);
    p.add_term(Monomial::one(num_vars), c);
    return p;
}

Poly Poly::variable(std::size_t num_vars, std::size_t index) {
    Poly p(num_vars);
    p.add_term(Monomial::variable(num_vars, index), 1);
    return p;
}

Poly Poly::term(const Monomial& m, const Scalar& c) {
    Poly p(m.num_vars());
    p.add_term(m, c);
    return p;
}

int Poly::degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

int Poly::min_degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

bool Poly::is_homogeneous(unsigned degree) const {
    return terms_.empty() || (min_degree() == static_cast<int>(degree) && this->degree() == static_cast<int>(degree));
}

Scalar Poly::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    require(m.num_vars() == num_vars_, ErrorKind::DimensionMismatch, "monomial variable count differs from polynomial");
    if (hamnf::is_zero(c))
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (hamnf::is_zero(it->second))
            terms_.erase(it);
    }
}

Poly Poly::homogeneous_part(unsigned degree) const {
    Poly out(num_vars_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == degree)
            out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
}

Poly Poly::truncated(unsigned order) const {
    Poly out(num_vars_);
    for (const auto& [m, c] : terms_) {
        if (m.degree() > order)
            break;
        out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
}

Poly Poly::operator-() const {
    Poly out(*this);
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& other) {
    require(num_vars_ == other.num_vars_, ErrorKind::DimensionMismatch, "polynomial variable count");
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    require(num_vars_ == other.num_vars_, ErrorKind::DimensionMismatch, "polynomial variable count");
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Scalar& factor) {
    if (hamnf::is_zero(factor)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= factor;
    return *this;
}

std::string Poly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Scalar mag = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        const bool unit = mag == 1;
        if (m.degree() == 0)
            os << hamnf::to_string(mag);
        else if (unit)
            os << m.to_string();
        else
            os << hamnf::to_string(mag) << '*' << m.to_string();
        first = false;
    }
    return os.str();
}

Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
Poly operator*(Poly lhs, const Scalar& factor) { return lhs *= factor; }
Poly operator*(const Scalar& factor, Poly rhs) { return rhs *= factor; }

Poly operator*(const Poly& lhs, const Poly& rhs) {
    require(lhs.num_vars() == rhs.num_vars(), ErrorKind::DimensionMismatch, "polynomial variable count");
    Poly out(lhs.num_vars());
    for (const auto& [ma, ca] : lhs.terms())
        for (const auto& [mb, cb] : rhs.terms())
            out.add_term(ma * mb, ca * cb);
    return out;
}

Poly multiply_truncated(const Poly& lhs, const Poly& rhs, unsigned order) {
    require(lhs.num_vars() == rhs.num_vars(), ErrorKind::DimensionMismatch, "polynomial variable count");
    Poly out(lhs.num_vars());
    for (const auto& [ma, ca] : lhs.terms()) {
        if (ma.degree() > order)
            break;
        for (const auto& [mb, cb] : rhs.terms()) {
            if (ma.degree() + mb.degree() > order)
                break;
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

Jet::Jet(const Poly& p, unsigned order_) : poly(p.truncated(order_)), order(order_) {
    require(order_ >= 1, ErrorKind::InvalidArgument, "jet order must be positive");
}

// ---------------------------------------------------------------- bases

namespace {

// number of monomials of total degree d in n variables
std::size_t count_monomials(std::size_t n, unsigned d) {
    if (n == 0)
        return d == 0 ? 1 : 0;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n + d - 1, d);
    return c.get_ui();
}

void enumerate(std::size_t var, unsigned remaining, std::vector<unsigned>& e, std::vector<Monomial>& out) {
    if (var + 1 == e.size()) {
        e[var] = remaining;
        out.emplace_back(e);
        return;
    }
    for (unsigned x = remaining + 1; x-- > 0;) {
        e[var] = x;
        enumerate(var + 1, remaining - x, e, out);
    }
}

// position of m inside monomial_basis(n, deg m)
std::size_t basis_index(const Monomial& m) {
    const std::size_t n = m.num_vars();
    std::size_t index = 0;
    unsigned remaining = m.degree();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (unsigned e = m[i] + 1; e <= remaining; ++e)
            index += count_monomials(n - i - 1, remaining - e);
        remaining -= m[i];
    }
    return index;
}

} // namespace

std::vector<Monomial> monomial_basis(std::size_t num_vars, unsigned degree) {
    require(num_vars >= 1, ErrorKind::InvalidArgument, "monomial basis needs at least one variable");
    std::vector<Monomial> out;
    out.reserve(count_monomials(num_vars, degree));
    std::vector<unsigned> e(num_vars, 0);
    enumerate(0, degree, e, out);
    return out;
}

std::size_t homogeneous_dimension(std::size_t num_vars, unsigned degree) { return count_monomials(num_vars, degree); }

Vector coordinates(const Poly& p, unsigned degree) {
    Vector v(count_monomials(p.num_vars(), degree));
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() != degree)
            fail(ErrorKind::NonHomogeneous,
                 "term " + m.to_string() + " has degree " + std::to_string(m.degree()) + ", expected " +
                     std::to_string(degree));
        v[basis_index(m)] = c;
    }
    return v;
}

Poly from_coordinates(const Vector& coords, std::size_t num_vars, unsigned degree) {
    const auto basis = monomial_basis(num_vars, degree);
    require(coords.size() == basis.size(), ErrorKind::DimensionMismatch, "coordinate vector length");
    Poly p(num_vars);
    for (std::size_t i = 0; i < basis.size(); ++i)
        p.add_term(basis[i], coords[i]);
    return p;
}

// ---------------------------------------------------------------- calculus

Poly derivative(const Poly& p, std::size_t var) {
    require(var < p.num_vars(), ErrorKind::DimensionMismatch, "derivative variable out of range");
    Poly out(p.num_vars());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] == 0)
            continue;
        std::vector<unsigned> e = m.exponents();
        const unsigned power = e[var]--;
        out.add_term(Monomial(std::move(e)), c * power);
    }
    return out;
}

std::vector<Poly> gradient(const Poly& p) {
    std::vector<Poly> g;
    g.reserve(p.num_vars());
    for (std::size_t i = 0; i < p.num_vars(); ++i)
        g.push_back(derivative(p, i));
    return g;
}

namespace {

// Evaluates p on substitutes, caching powers; order < 0 disables truncation.
Poly substitute_impl(const Poly& p, const std::vector<Poly>& phi, std::size_t out_vars, long order) {
    const auto mul = [order](const Poly& a, const Poly& b) {
        return order < 0 ? a * b : multiply_truncated(a, b, static_cast<unsigned>(order));
    };
    std::vector<std::vector<Poly>> powers(phi.size());
    const auto power = [&](std::size_t i, unsigned e) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty())
            cache.push_back(Poly::constant(out_vars, 1));
        while (cache.size() <= e)
            cache.push_back(mul(cache.back(), phi[i]));
        return cache[e];
    };
    Poly out(out_vars);
    for (const auto& [m, c] : p.terms()) {
        Poly t = Poly::constant(out_vars, c);
        for (std::size_t i = 0; i < m.num_vars() && !t.is_zero(); ++i)
            if (m[i] > 0)
                t = mul(t, power(i, m[i]));
        out += t;
    }
    return out;
}

} // namespace

Poly substitute(const Poly& p, const std::vector<Poly>& phi) {
    require(phi.size() == p.num_vars(), ErrorKind::DimensionMismatch, "substitution length differs from variable count");
    require(!phi.empty(), ErrorKind::DimensionMismatch, "empty substitution");
    const std::size_t out_vars = phi.front().num_vars();
    for (const auto& f : phi)
        require(f.num_vars() == out_vars, ErrorKind::DimensionMismatch, "substitutes disagree on variable count");
    return substitute_impl(p, phi, out_vars, -1);
}

Jet compose_jet(const Poly& p, const std::vector<Jet>& phi, unsigned order) {
    require(phi.size() == p.num_vars(), ErrorKind::DimensionMismatch, "substitution length differs from variable count");
    require(!phi.empty(), ErrorKind::DimensionMismatch, "empty substitution");
    const std::size_t out_vars = phi.front().num_vars();
    std::vector<Poly> polys;
    polys.reserve(phi.size());
    for (const auto& j : phi) {
        require(j.num_vars() == out_vars, ErrorKind::DimensionMismatch, "jets disagree on variable count");
        require(j.order >= order, ErrorKind::InvalidArgument, "jet order below requested composition order");
        polys.push_back(j.poly);
    }
    return Jet(substitute_impl(p, polys, out_vars, static_cast<long>(order)), order);
}

Poly pullback(const Poly& p, const Matrix& g) {
    require(g.is_square() && g.rows() == p.num_vars(), ErrorKind::DimensionMismatch, "pullback matrix shape");
    const std::size_t n = p.num_vars();
    std::vector<Poly> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Poly r(n);
        for (std::size_t j = 0; j < n; ++j)
            r.add_term(Monomial::variable(n, j), g(i, j));
        rows.push_back(std::move(r));
    }
    return substitute_impl(p, rows, n, -1);
}

Scalar factorial_weight(const Monomial& m) {
    mpz_class w = 1;
    for (auto e : m.exponents()) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), e);
        w *= f;
    }
    return Scalar(w);
}

Scalar fischer_ip(const Poly& f, const Poly& g, unsigned degree) {
    require(f.num_vars() == g.num_vars(), ErrorKind::DimensionMismatch, "polynomial variable count");
    require(f.is_homogeneous(degree), ErrorKind::NonHomogeneous, "first argument is not homogeneous of degree " + std::to_string(degree));
    require(g.is_homogeneous(degree), ErrorKind::NonHomogeneous, "second argument is not homogeneous of degree " + std::to_string(degree));
    Scalar s = 0;
    for (const auto& [m, c] : f.terms()) {
        const auto it = g.terms().find(m);
        if (it != g.terms().end())
            s += factorial_weight(m) * c * it->second;
    }
    return s;
}

} // namespace hamnf
