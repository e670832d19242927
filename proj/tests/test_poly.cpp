#include "knapsack/degree.hpp"
#include "knapsack/factorial_quotient.hpp"
#include "knapsack/poly.hpp"

#include <doctest.h>

#include <random>

using namespace knapsack;

namespace {

// variables k, m
MultiPoly k2() { return MultiPoly::variable(2, 0); }
MultiPoly m2() { return MultiPoly::variable(2, 1); }
MultiPoly c2(long c) { return MultiPoly::constant(2, c); }

LinearForm lf(std::vector<long> coeffs, long offset) { return LinearForm(std::move(coeffs), offset); }

}  // namespace

TEST_CASE("polynomial arithmetic")
{
    const MultiPoly a = k2() + c2(1);
    const MultiPoly b = k2() - c2(1);
    const MultiPoly product = a * b;
    CHECK(product == k2() * k2() - c2(1));
    CHECK((product - product).is_zero());
    CHECK(product.total_degree() == 2);
    const std::vector<std::string> names{"k", "m"};
    CHECK(pow(a, 2).to_string(names) == "k^2 + 2*k + 1");
    const std::vector<BigInt> point{3, 5};
    CHECK(product.evaluate(point) == 8);
}

TEST_CASE("substitution")
{
    const MultiPoly p = k2() * m2();
    const MultiPoly q = p.substitute(1, k2() + c2(2));
    CHECK(q == k2() * k2() + c2(2) * k2());
}

TEST_CASE("rational functions compare by cross multiplication")
{
    const RationalFunction a(k2() * k2() - c2(1), k2() - c2(1));
    const RationalFunction b = RationalFunction::from_poly(k2() + c2(1));
    CHECK(a == b);
    CHECK(cross_difference(a, b).is_zero());
    const RationalFunction c(c2(2) * k2(), c2(4) * m2());
    const RationalFunction d(k2(), c2(2) * m2());
    CHECK(c == d);
    CHECK(!(a == d));
}

TEST_CASE("random equal rational functions normalize identically")
{
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> coef(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        const MultiPoly p = c2(coef(rng)) * k2() + c2(coef(rng)) * m2() + c2(coef(rng) == 0 ? 1 : 3);
        const MultiPoly q = c2(coef(rng)) * k2() * m2() + c2(7);
        const MultiPoly s = c2(coef(rng) == 0 ? -2 : 5) * m2() + c2(1);
        const RationalFunction a(p * s, q * s);
        const RationalFunction b(p, q);
        REQUIRE(a == b);
        // content normalization makes scalar multiples print identically
        const long scale = coef(rng) == 0 ? -6 : coef(rng) * 2 + 11;
        const RationalFunction scaled(p * c2(scale), q * c2(scale));
        const std::vector<std::string> names{"k", "m"};
        REQUIRE(scaled == b);
        REQUIRE(scaled.to_string(names) == b.to_string(names));
    }
}

TEST_CASE("factorial shifts reduce to rising products")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> pick(0, 12);
    for (long c = 0; c <= 6; ++c) {
        const LinearForm base = lf({2, 1}, -1);
        FactorialQuotient q({{base + c, 1}, {base, -1}}, RationalFunction::constant(2, 1));
        q.reduce();
        CHECK(q.factors().empty());
        for (int sample = 0; sample < 20; ++sample) {
            const std::vector<long> point{pick(rng) + 1, pick(rng)};
            const long arg = base.evaluate(point);
            Rational expected = 1;
            for (long i = 1; i <= c; ++i) {
                expected *= arg + i;
            }
            REQUIRE(q.evaluate(point) == expected);
        }
    }
}

TEST_CASE("closed form symbol of (k,k,1^m)")
{
    const auto q = closed_form_symbol(SymbolicShape::fat_hook(lf({1, 0}, 0), lf({1, 0}, 0), lf({0, 1}, 0)));
    for (long k = 1; k <= 8; ++k) {
        for (long m = 0; m <= 8; ++m) {
            const std::vector<long> point{k, m};
            REQUIRE(q.evaluate(point) == Rational(degree(*fat_hook(k, k, m))));
        }
    }
}

TEST_CASE("ratio of the three-window shapes")
{
    const auto top = closed_form_symbol(SymbolicShape::fat_hook(lf({1, 0}, 2), lf({1, 0}, 0), lf({0, 1}, -2)));
    const auto base = closed_form_symbol(SymbolicShape::fat_hook(lf({1, 0}, 0), lf({1, 0}, 0), lf({0, 1}, 0)));
    const RationalFunction r = ratio(top, base);
    const RationalFunction expected(c2(3) * (k2() + m2()) * (m2() - c2(1)) * m2(),
                                    (k2() + c2(1)) * (k2() + c2(2)) * (k2() + m2() - c2(2)));
    CHECK(r == expected);
    CHECK(ratio(base, base) == RationalFunction::constant(2, 1));
}

TEST_CASE("ratio of a fat hook to the three-part shape with the same entries")
{
    // variables l, k, m
    auto v = [](std::size_t i) { return MultiPoly::variable(3, i); };
    auto c = [](long x) { return MultiPoly::constant(3, x); };
    const LinearForm l({1, 0, 0}, 0);
    const LinearForm k({0, 1, 0}, 0);
    const LinearForm m({0, 0, 1}, 0);
    const auto hook = closed_form_symbol(SymbolicShape::fat_hook(l, k, m));
    const auto three = closed_form_symbol(SymbolicShape::three_part(l, k, m));
    const RationalFunction expected((v(0) + c(1)) * (v(0) + c(2)) * v(1) * (v(1) + c(1)),
                                    (v(1) + v(2)) * (v(0) + v(2) + c(1)) * (v(0) - v(2) + c(2)) * (v(1) - v(2) + c(1)));
    CHECK(ratio(hook, three) == expected);
}

TEST_CASE("mismatched factorial content is refused")
{
    const auto a = closed_form_symbol(SymbolicShape::fat_hook(lf({1, 0}, 0), lf({1, 0}, 0), lf({0, 1}, 0)));
    const auto b = closed_form_symbol(SymbolicShape::fat_hook(lf({2, 0}, 0), lf({1, 0}, 0), lf({0, 1}, 0)));
    CHECK_THROWS_AS(ratio(a, b), IncompatibleFactorials);
}

TEST_CASE("single row closed form is 1")
{
    const auto q = closed_form_symbol(SymbolicShape::three_part(LinearForm({}, 9), LinearForm({}, 0), LinearForm({}, 0)));
    FactorialQuotient reduced = q;
    reduced.reduce();
    CHECK(reduced.factors().empty());
    CHECK(reduced.evaluate(std::vector<long>{}) == 1);
}
