#include "knapsack/factorial_quotient.hpp"

#include <algorithm>

namespace knapsack {

LinearForm LinearForm::variable(std::size_t nvars, std::size_t index)
{
    LinearForm f(nvars);
    f.coeffs_.at(index) = 1;
    return f;
}

bool LinearForm::is_constant() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](long c) { return c == 0; });
}

LinearForm& LinearForm::operator+=(const LinearForm& other)
{
    if (other.nvars() != nvars()) {
        throw std::invalid_argument("linear form variable counts differ");
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    offset_ += other.offset_;
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& other)
{
    return *this += -other;
}

LinearForm& LinearForm::operator*=(long c)
{
    for (long& x : coeffs_) {
        x *= c;
    }
    offset_ *= c;
    return *this;
}

MultiPoly LinearForm::to_poly() const
{
    return MultiPoly::linear(coeffs_, offset_);
}

long LinearForm::evaluate(std::span<const long> point) const
{
    if (point.size() != coeffs_.size()) {
        throw std::invalid_argument("evaluation point has wrong dimension");
    }
    long total = offset_;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        total += coeffs_[i] * point[i];
    }
    return total;
}

LinearForm LinearForm::substitute(std::size_t index, const LinearForm& replacement) const
{
    LinearForm out = *this;
    const long c = out.coeffs_.at(index);
    out.coeffs_[index] = 0;
    LinearForm scaled = replacement;
    scaled *= c;
    out += scaled;
    return out;
}

std::string LinearForm::to_string(std::span<const std::string> names) const
{
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const long c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        const std::string name = i < names.size() ? names[i] : "x" + std::to_string(i);
        const long mag = c < 0 ? -c : c;
        std::string body = mag == 1 ? name : std::to_string(mag) + name;
        if (out.empty()) {
            out = (c < 0 ? "-" : "") + body;
        } else {
            out += (c < 0 ? "-" : "+") + body;
        }
    }
    if (offset_ != 0 || out.empty()) {
        if (out.empty()) {
            out = std::to_string(offset_);
        } else {
            out += (offset_ < 0 ? "-" : "+") + std::to_string(offset_ < 0 ? -offset_ : offset_);
        }
    }
    return out;
}

FactorialQuotient::FactorialQuotient(std::size_t nvars) : rational_(RationalFunction::constant(nvars, 1)) {}

FactorialQuotient::FactorialQuotient(std::vector<Factor> factors, RationalFunction rational)
    : factors_(std::move(factors)), rational_(std::move(rational))
{
    for (const auto& f : factors_) {
        if (f.argument.nvars() != rational_.nvars() || (f.power != 1 && f.power != -1)) {
            throw std::invalid_argument("malformed factorial factor");
        }
    }
}

FactorialQuotient& FactorialQuotient::operator*=(const FactorialQuotient& other)
{
    factors_.insert(factors_.end(), other.factors_.begin(), other.factors_.end());
    rational_ *= other.rational_;
    return *this;
}

FactorialQuotient FactorialQuotient::inverse() const
{
    FactorialQuotient out = *this;
    for (auto& f : out.factors_) {
        f.power = -f.power;
    }
    out.rational_ = RationalFunction::constant(nvars(), 1) / rational_;
    return out;
}

namespace {

// prod_{i=1}^{count} (base + i)
MultiPoly rising_product(const LinearForm& base, long count)
{
    MultiPoly out = MultiPoly::constant(base.nvars(), 1);
    for (long i = 1; i <= count; ++i) {
        out *= (base + i).to_poly();
    }
    return out;
}

}  // namespace

FactorialQuotient& FactorialQuotient::reduce()
{
    const std::size_t nv = nvars();
    std::vector<Factor> kept;
    std::vector<bool> used(factors_.size(), false);

    // constant arguments evaluate directly
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const Factor& f = factors_[i];
        if (!f.argument.is_constant()) {
            continue;
        }
        used[i] = true;
        const long value = f.argument.offset();
        if (value < 0) {
            if (f.power > 0) {
                throw std::domain_error("factorial of a negative constant in a numerator");
            }
            rational_ = RationalFunction(nv);  // 1/j! = 0
            continue;
        }
        const BigInt fac = factorial(value);
        rational_ *= f.power > 0 ? RationalFunction::constant(nv, fac)
                                 : RationalFunction(MultiPoly::constant(nv, 1), MultiPoly::constant(nv, fac));
    }

    // pair numerator factorials with parallel denominator factorials,
    // preferring exact matches
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (used[i] || factors_[i].power < 0) {
                continue;
            }
            for (std::size_t j = 0; j < factors_.size(); ++j) {
                if (used[j] || factors_[j].power > 0) {
                    continue;
                }
                const LinearForm& top = factors_[i].argument;
                const LinearForm& bottom = factors_[j].argument;
                if (!top.parallel_to(bottom) || (pass == 0 && top.offset() != bottom.offset())) {
                    continue;
                }
                used[i] = used[j] = true;
                const long shift = top.offset() - bottom.offset();
                if (shift >= 0) {
                    rational_ *= RationalFunction::from_poly(rising_product(bottom, shift));
                } else {
                    rational_ /= RationalFunction::from_poly(rising_product(top, -shift));
                }
                break;
            }
        }
    }

    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (!used[i]) {
            kept.push_back(factors_[i]);
        }
    }
    factors_ = std::move(kept);
    return *this;
}

FactorialQuotient FactorialQuotient::substitute(std::size_t index, const LinearForm& replacement) const
{
    std::vector<Factor> factors;
    factors.reserve(factors_.size());
    for (const auto& f : factors_) {
        factors.push_back({f.argument.substitute(index, replacement), f.power});
    }
    return FactorialQuotient(std::move(factors), rational_.substitute(index, replacement.to_poly()));
}

Rational FactorialQuotient::evaluate(std::span<const long> point) const
{
    std::vector<Rational> rational_point(point.begin(), point.end());
    Rational value = rational_.evaluate(rational_point);
    for (const auto& f : factors_) {
        const long arg = f.argument.evaluate(point);
        if (arg < 0) {
            if (f.power > 0) {
                throw std::domain_error("factorial of a negative integer in a numerator");
            }
            return 0;
        }
        if (f.power > 0) {
            value *= factorial(arg);
        } else {
            value /= factorial(arg);
        }
    }
    value.canonicalize();
    return value;
}

std::string FactorialQuotient::to_string(std::span<const std::string> names) const
{
    std::string top;
    std::string bottom;
    for (const auto& f : factors_) {
        std::string& side = f.power > 0 ? top : bottom;
        if (!side.empty()) {
            side += ' ';
        }
        side += "(" + f.argument.to_string(names) + ")!";
    }
    std::string out = top.empty() ? "1" : top;
    if (!bottom.empty()) {
        out += " / (" + bottom + ")";
    }
    return out + " * [" + rational_.to_string(names) + "]";
}

RationalFunction ratio(const FactorialQuotient& a, const FactorialQuotient& b)
{
    FactorialQuotient q = a * b.inverse();
    q.reduce();
    if (!q.factors().empty()) {
        throw IncompatibleFactorials("factorial content differs: " + q.to_string({}));
    }
    return q.rational_part();
}

std::string SymbolicShape::to_string(std::span<const std::string> names) const
{
    if (family == Family::FatHook) {
        return "(" + first.to_string(names) + "," + second.to_string(names) + ",1^(" + third.to_string(names) + "))";
    }
    return "(" + first.to_string(names) + "," + second.to_string(names) + "," + third.to_string(names) + ")";
}

FactorialQuotient closed_form_symbol(const SymbolicShape& shape)
{
    const std::size_t nv = shape.first.nvars();
    if (shape.second.nvars() != nv || shape.third.nvars() != nv) {
        throw std::invalid_argument("shape entries use different variable lists");
    }
    const LinearForm& a = shape.first;
    const LinearForm& b = shape.second;
    const LinearForm& t = shape.third;
    const LinearForm total = a + b + t;
    switch (shape.family) {
    case SymbolicShape::Family::FatHook: {
        MultiPoly num = (a - b + 1).to_poly();
        MultiPoly den = (a + t + 1).to_poly() * (b + t).to_poly();
        return FactorialQuotient({{total, 1}, {a, -1}, {b - 1, -1}, {t, -1}},
                                 RationalFunction(std::move(num), std::move(den)));
    }
    case SymbolicShape::Family::ThreePart: {
        MultiPoly num = (a - b + 1).to_poly() * (a - t + 2).to_poly() * (b - t + 1).to_poly();
        return FactorialQuotient({{total, 1}, {a + 2, -1}, {b + 1, -1}, {t, -1}},
                                 RationalFunction::from_poly(std::move(num)));
    }
    }
    throw std::invalid_argument("unsupported shape family");
}

}  // namespace knapsack
