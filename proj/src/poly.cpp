#include "knapsack/poly.hpp"

#include <stdexcept>

namespace knapsack {

MultiPoly MultiPoly::constant(std::size_t nvars, const BigInt& c)
{
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index)
{
    if (index >= nvars) {
        throw std::out_of_range("variable index out of range");
    }
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::linear(std::span<const long> coeffs, long c)
{
    MultiPoly p(coeffs.size());
    p.add_term(Exponents(coeffs.size(), 0), c);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

int MultiPoly::total_degree() const
{
    int best = 0;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int x : e) {
            d += x;
        }
        best = std::max(best, d);
    }
    return best;
}

BigInt MultiPoly::content() const
{
    BigInt g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    return g;
}

BigInt MultiPoly::leading_coefficient() const
{
    return terms_.empty() ? BigInt(0) : terms_.rbegin()->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other)
{
    if (other.nvars_ != nvars_) {
        throw std::invalid_argument("polynomial variable counts differ");
    }
    for (const auto& [e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other)
{
    if (other.nvars_ != nvars_) {
        throw std::invalid_argument("polynomial variable counts differ");
    }
    for (const auto& [e, c] : other.terms_) {
        add_term(e, -c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other)
{
    if (other.nvars_ != nvars_) {
        throw std::invalid_argument("polynomial variable counts differ");
    }
    MultiPoly product(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            Exponents e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) {
                e[i] = ea[i] + eb[i];
            }
            product.add_term(e, ca * cb);
        }
    }
    *this = std::move(product);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const BigInt& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

MultiPoly& MultiPoly::divide_exact(const BigInt& scalar)
{
    for (auto& [e, c] : terms_) {
        if (!mpz_divisible_p(c.get_mpz_t(), scalar.get_mpz_t())) {
            throw std::logic_error("coefficient not divisible");
        }
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), scalar.get_mpz_t());
    }
    return *this;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) {
        c = -c;
    }
    return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const
{
    if (point.size() != nvars_) {
        throw std::invalid_argument("evaluation point has wrong dimension");
    }
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            for (int j = 0; j < e[i]; ++j) {
                term *= point[i];
            }
        }
        total += term;
    }
    return total;
}

BigInt MultiPoly::evaluate(std::span<const BigInt> point) const
{
    if (point.size() != nvars_) {
        throw std::invalid_argument("evaluation point has wrong dimension");
    }
    BigInt total = 0;
    for (const auto& [e, c] : terms_) {
        BigInt term = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            for (int j = 0; j < e[i]; ++j) {
                term *= point[i];
            }
        }
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::substitute(std::size_t index, const MultiPoly& replacement) const
{
    if (index >= nvars_ || replacement.nvars_ != nvars_) {
        throw std::invalid_argument("bad substitution");
    }
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        rest[index] = 0;
        MultiPoly term(nvars_);
        term.add_term(rest, c);
        term *= pow(replacement, e[index]);
        out += term;
    }
    return out;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    // highest terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string monomial;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!monomial.empty()) {
                monomial += '*';
            }
            monomial += i < names.size() ? names[i] : "x" + std::to_string(i);
            if (e[i] > 1) {
                monomial += '^' + std::to_string(e[i]);
            }
        }
        BigInt magnitude = abs(c);
        std::string body;
        if (monomial.empty()) {
            body = magnitude.get_str();
        } else if (magnitude == 1) {
            body = monomial;
        } else {
            body = magnitude.get_str() + '*' + monomial;
        }
        if (out.empty()) {
            out = (c < 0 ? "-" : "") + body;
        } else {
            out += (c < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

MultiPoly pow(const MultiPoly& base, int exponent)
{
    if (exponent < 0) {
        throw std::invalid_argument("negative polynomial exponent");
    }
    MultiPoly result = MultiPoly::constant(base.nvars(), 1);
    for (int i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

RationalFunction::RationalFunction(std::size_t nvars)
    : num_(nvars), den_(MultiPoly::constant(nvars, 1))
{
}

RationalFunction::RationalFunction(MultiPoly numerator, MultiPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator))
{
    if (num_.nvars() != den_.nvars()) {
        throw std::invalid_argument("numerator and denominator variable counts differ");
    }
    if (den_.is_zero()) {
        throw std::domain_error("rational function with zero denominator");
    }
    normalize();
}

RationalFunction RationalFunction::from_poly(MultiPoly p)
{
    const std::size_t n = p.nvars();
    return RationalFunction(std::move(p), MultiPoly::constant(n, 1));
}

RationalFunction RationalFunction::constant(std::size_t nvars, const BigInt& c)
{
    return from_poly(MultiPoly::constant(nvars, c));
}

void RationalFunction::normalize()
{
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(den_.nvars(), 1);
        return;
    }
    BigInt g;
    const BigInt cn = num_.content();
    const BigInt cd = den_.content();
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den_.leading_coefficient() < 0) {
        g = -g;
    }
    num_.divide_exact(g);
    den_.divide_exact(g);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other)
{
    if (den_ == other.den_) {
        num_ += other.num_;
    } else {
        num_ = num_ * other.den_ + other.num_ * den_;
        den_ *= other.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other)
{
    return *this += -other;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other)
{
    num_ *= other.num_;
    den_ *= other.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other)
{
    if (other.num_.is_zero()) {
        throw std::domain_error("division by the zero rational function");
    }
    num_ *= other.den_;
    den_ *= other.num_;
    normalize();
    return *this;
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

bool operator==(const RationalFunction& a, const RationalFunction& b)
{
    return cross_difference(a, b).is_zero();
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const
{
    Rational d = den_.evaluate(point);
    if (d == 0) {
        throw std::domain_error("rational function denominator vanishes");
    }
    Rational out = num_.evaluate(point) / d;
    out.canonicalize();
    return out;
}

RationalFunction RationalFunction::substitute(std::size_t index, const MultiPoly& replacement) const
{
    return RationalFunction(num_.substitute(index, replacement), den_.substitute(index, replacement));
}

std::string RationalFunction::to_string(std::span<const std::string> names) const
{
    const std::string n = num_.to_string(names);
    if (den_ == MultiPoly::constant(den_.nvars(), 1)) {
        return n;
    }
    return "(" + n + ") / (" + den_.to_string(names) + ")";
}

MultiPoly cross_difference(const RationalFunction& a, const RationalFunction& b)
{
    return a.numerator() * b.denominator() - b.numerator() * a.denominator();
}

}  // namespace knapsack
