#include "knapsack/certify.hpp"

#include "knapsack/degree.hpp"
#include "knapsack/factorial_quotient.hpp"
#include "knapsack/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace knapsack {

bool Certificate::symbolic_pass() const
{
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) { return c.holds(); });
}

bool Certificate::pass() const
{
    return symbolic_pass() &&
           std::all_of(spot_checks.begin(), spot_checks.end(), [](const SpotCheck& s) { return s.holds(); });
}

std::string Certificate::difference_text() const
{
    std::string out;
    for (const auto& c : checks) {
        if (!c.holds()) {
            if (!out.empty()) {
                out += "; ";
            }
            out += c.difference.to_string(variables);
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

FactorialQuotient fat(const LinearForm& a, const LinearForm& b, const LinearForm& t)
{
    return closed_form_symbol(SymbolicShape::fat_hook(a, b, t));
}

FactorialQuotient three(const LinearForm& r, const LinearForm& s, const LinearForm& t)
{
    return closed_form_symbol(SymbolicShape::three_part(r, s, t));
}

MultiPoly product(std::initializer_list<LinearForm> factors)
{
    const std::size_t nv = factors.begin()->nvars();
    MultiPoly out = MultiPoly::constant(nv, 1);
    for (const auto& f : factors) {
        out *= f.to_poly();
    }
    return out;
}

CertificateCheck compare(std::string description, const RationalFunction& lhs, const RationalFunction& rhs,
                         const std::vector<std::string>& names)
{
    return {std::move(description), lhs.to_string(names), rhs.to_string(names), cross_difference(lhs, rhs)};
}

// Signed sum of ratio(term, base).
RationalFunction ratio_sum(const std::vector<std::pair<int, FactorialQuotient>>& terms, const FactorialQuotient& base)
{
    RationalFunction total(base.nvars());
    for (const auto& [sign, term] : terms) {
        RationalFunction r = ratio(term, base);
        total += sign > 0 ? r : -r;
    }
    return total;
}

BigInt f(std::optional<Partition> shape)
{
    return shape ? degree(*shape) : BigInt(0);
}

struct Vars {
    std::vector<std::string> names;
    std::vector<LinearForm> v;

    explicit Vars(std::vector<std::string> n) : names(std::move(n))
    {
        for (std::size_t i = 0; i < names.size(); ++i) {
            v.push_back(LinearForm::variable(names.size(), i));
        }
    }
    LinearForm one(long c = 1) const { return LinearForm(names.size(), c); }
};

}  // namespace

Certificate certify_three_window()
{
    Vars vars({"k", "m"});
    const LinearForm& k = vars.v[0];
    const LinearForm& m = vars.v[1];
    const std::size_t nv = 2;

    Certificate cert;
    cert.id = "lem2.3";
    cert.statement =
        "f^(k,k,1^m) + f^(k+1,k+1,1^(m-2)) + f^(k+2,k+2,1^(m-4)) - f^(k+2,k,1^(m-2)) "
        "= (2k+m)! (k-m+1)(k-m+2) / ((k+1)! (k+2)! m!) = f^(m-2,k+1,k+1) = f^(k,k,m)";
    cert.variables = vars.names;

    const FactorialQuotient base = fat(k, k, m);
    const FactorialQuotient displayed(
        {{2 * k + m, 1}, {k, -1}, {k - 1, -1}, {m, -1}},
        RationalFunction(MultiPoly::constant(nv, 1), product({k + m, k + m + 1})));
    cert.checks.push_back(compare("closed form of f^(k,k,1^m)", ratio(base, displayed),
                                  RationalFunction::constant(nv, 1), vars.names));

    cert.checks.push_back(compare(
        "f^(k+2,k,1^(m-2)) / f^(k,k,1^m)", ratio(fat(k + 2, k, m - 2), base),
        RationalFunction(product({k + m, m - 1, m}) * BigInt(3), product({k + 1, k + 2, k + m - 2})), vars.names));

    const std::vector<std::pair<int, FactorialQuotient>> window = {
        {1, fat(k, k, m)}, {1, fat(k + 1, k + 1, m - 2)}, {1, fat(k + 2, k + 2, m - 4)}, {-1, fat(k + 2, k, m - 2)}};
    cert.checks.push_back(
        compare("difference / f^(k,k,1^m)", ratio_sum(window, base),
                RationalFunction(product({k - m + 1, k - m + 2, k + m, k + m + 1}), product({k, k + 1, k + 1, k + 2})),
                vars.names));

    const FactorialQuotient closed({{2 * k + m, 1}, {k + 1, -1}, {k + 2, -1}, {m, -1}},
                                   RationalFunction::from_poly(product({k - m + 1, k - m + 2})));
    const RationalFunction unit = RationalFunction::constant(nv, 1);
    cert.checks.push_back(compare("difference / closed form", ratio_sum(window, closed), unit, vars.names));
    cert.checks.push_back(compare("f^(m-2,k+1,k+1) / closed form", ratio(three(m - 2, k + 1, k + 1), closed), unit,
                                  vars.names));
    cert.checks.push_back(compare("f^(k,k,m) / closed form", ratio(three(k, k, m), closed), unit, vars.names));

    auto difference = [](int kk, int mm) -> BigInt {
        return f(fat_hook(kk, kk, mm)) + f(fat_hook(kk + 1, kk + 1, mm - 2)) + f(fat_hook(kk + 2, kk + 2, mm - 4)) -
               f(fat_hook(kk + 2, kk, mm - 2));
    };
    cert.spot_checks.push_back(
        {"difference = f^(14,14,7)", {{"k", 14}, {"m", 7}}, difference(14, 7), f(three_part(14, 14, 7))});
    cert.spot_checks.push_back({"difference = 0 at m = k+2", {{"k", 11}, {"m", 13}}, difference(11, 13), 0});
    cert.spot_checks.push_back(
        {"difference = f^(19,8,8)", {{"k", 7}, {"m", 21}}, difference(7, 21), f(three_part(19, 8, 8))});
    return cert;
}

Certificate certify_boundary_pair()
{
    Vars vars({"k", "m"});
    const LinearForm& k = vars.v[0];
    const LinearForm& m = vars.v[1];
    const std::size_t nv = 2;

    Certificate cert;
    cert.id = "prop2.4";
    cert.statement = "f^(k,k,1^m) + f^(k+1,k+1,1^(m-2)) - f^(k+1,k,1^(m-1)) "
                     "= (2k+m)! (k-m-1)(k-m+1) / ((k+m-1)(k+m+1) (k+1)! k! m!), zero at k = m +- 1";
    cert.variables = vars.names;

    const RationalFunction vanishing(product({k - m - 1, k - m + 1}), product({k + m - 1, k + m + 1}));
    const FactorialQuotient closed({{2 * k + m, 1}, {k + 1, -1}, {k, -1}, {m, -1}}, vanishing);
    const std::vector<std::pair<int, FactorialQuotient>> terms = {
        {1, fat(k, k, m)}, {1, fat(k + 1, k + 1, m - 2)}, {-1, fat(k + 1, k, m - 1)}};
    cert.checks.push_back(
        compare("combination / closed form", ratio_sum(terms, closed), RationalFunction::constant(nv, 1), vars.names));

    for (long shift : {1L, -1L}) {
        const RationalFunction at = vanishing.substitute(0, (m + shift).to_poly());
        cert.checks.push_back(compare(std::string("closed form at k = m") + (shift > 0 ? "+1" : "-1"), at,
                                      RationalFunction(nv), vars.names));
    }

    auto lhs = [](int kk, int mm) -> BigInt { return f(fat_hook(kk, kk, mm)) + f(fat_hook(kk + 1, kk + 1, mm - 2)); };
    cert.spot_checks.push_back({"f^(3,3,1^2) + f^(4,4) = f^(4,3,1)", {{"k", 3}, {"m", 2}}, lhs(3, 2),
                                f(fat_hook(4, 3, 1))});
    cert.spot_checks.push_back({"f^(8,8,1^7) + f^(9,9,1^5) = f^(9,8,1^6)", {{"k", 8}, {"m", 7}}, lhs(8, 7),
                                f(fat_hook(9, 8, 6))});
    return cert;
}

Certificate certify_four_term()
{
    Vars vars({"l", "k", "m"});
    const LinearForm& l = vars.v[0];
    const LinearForm& k = vars.v[1];
    const LinearForm& m = vars.v[2];
    const std::size_t nv = 3;

    Certificate cert;
    cert.id = "lem4.3";
    cert.statement =
        "f^(l,k,m) = f^(l,k,1^m) - f^(l,k+2,1^(m-2)) - f^(l+2,k,1^(m-2)) + f^(l+2,k+2,1^(m-4))";
    cert.variables = vars.names;

    const FactorialQuotient base = three(l, k, m);
    cert.checks.push_back(compare("f^(l,k,1^m) / f^(l,k,m)", ratio(fat(l, k, m), base),
                                  RationalFunction(product({l + 1, l + 2, k, k + 1}),
                                                   product({k + m, l + m + 1, l - m + 2, k - m + 1})),
                                  vars.names));
    const std::vector<std::pair<int, FactorialQuotient>> terms = {{1, fat(l, k, m)},
                                                                  {-1, fat(l, k + 2, m - 2)},
                                                                  {-1, fat(l + 2, k, m - 2)},
                                                                  {1, fat(l + 2, k + 2, m - 4)}};
    cert.checks.push_back(
        compare("four-term combination / f^(l,k,m)", ratio_sum(terms, base), RationalFunction::constant(nv, 1),
                vars.names));

    auto rhs = [](int ll, int kk, int mm) -> BigInt {
        return f(fat_hook(ll, kk, mm)) - f(fat_hook(ll, kk + 2, mm - 2)) - f(fat_hook(ll + 2, kk, mm - 2)) +
               f(fat_hook(ll + 2, kk + 2, mm - 4));
    };
    cert.spot_checks.push_back({"l=6, k=4, m=4", {{"l", 6}, {"k", 4}, {"m", 4}}, f(three_part(6, 4, 4)), rhs(6, 4, 4)});
    cert.spot_checks.push_back({"l=k+2, k=5, m=4", {{"l", 7}, {"k", 5}, {"m", 4}}, f(three_part(7, 5, 4)), rhs(7, 5, 4)});
    return cert;
}

Certificate certify_h_swap()
{
    Certificate cert;
    cert.id = "h-swap";
    cert.statement = "h(x,y,z) = h(z-2,x+1,y+1)";

    Vars xyz({"x", "y", "z"});
    const LinearForm& x = xyz.v[0];
    const LinearForm& y = xyz.v[1];
    const LinearForm& z = xyz.v[2];
    cert.variables = xyz.names;

    cert.checks.push_back(compare("h(z-2,x+1,y+1) / h(x,y,z)", ratio(three(z - 2, x + 1, y + 1), three(x, y, z)),
                                  RationalFunction::constant(3, 1), xyz.names));
    const MultiPoly left = product({x - y + 1, x - z + 2, y - z + 1});
    const MultiPoly right = product({z - x - 2, z - y - 1, x - y + 1});
    cert.checks.push_back(compare("linear factors after matching factorials", RationalFunction::from_poly(left),
                                  RationalFunction::from_poly(right), xyz.names));

    // the instance used to turn the small-m window identity into the large-m one
    Vars kmrj({"k", "m", "r", "j"});
    const LinearForm& k = kmrj.v[0];
    const LinearForm& m = kmrj.v[1];
    const LinearForm& r = kmrj.v[2];
    const LinearForm& j = kmrj.v[3];
    const RationalFunction swapped =
        ratio(three(m - 2 * (r + j) - 2, k + 2 * r + 1, k + 2 * j + 1), three(k + 2 * r, k + 2 * j, m - 2 * (r + j)));
    CertificateCheck instance = compare("h(m-2(r+j)-2,k+2r+1,k+2j+1) / h(k+2r,k+2j,m-2(r+j))", swapped,
                                        RationalFunction::constant(4, 1), kmrj.names);
    cert.checks.push_back(std::move(instance));

    cert.spot_checks.push_back({"h(2,2,2) = h(0,3,3)", {{"x", 2}, {"y", 2}, {"z", 2}},
                                h_analytic(2, 2, 2).to_integer(), h_analytic(0, 3, 3).to_integer()});
    // k=2, m=10, r=1, j=0
    cert.spot_checks.push_back({"h(4,2,8) = h(6,5,3)", {{"k", 2}, {"m", 10}, {"r", 1}, {"j", 0}},
                                h_analytic(4, 2, 8).to_integer(), h_analytic(6, 5, 3).to_integer()});
    return cert;
}

Certificate certify_s_symmetry()
{
    Certificate cert;
    cert.id = "s-symmetry";
    cert.statement = "s(j) = h(m+2j,k,k-2j) satisfies s((k-m)/2-1-j) = -s(j)";

    Vars kmj({"k", "m", "j"});
    const LinearForm& k = kmj.v[0];
    const LinearForm& m = kmj.v[1];
    const LinearForm& j = kmj.v[2];

    const FactorialQuotient s({{m + 2 * k, 1}, {m + 2 * j + 2, -1}, {k + 1, -1}, {k - 2 * j, -1}},
                              RationalFunction::from_poly(product({m + 2 * j - k + 1, m - k + 4 * j + 2, 2 * j + 1})));
    cert.checks.push_back(compare("s(j) / h(m+2j,k,k-2j)", ratio(s, three(m + 2 * j, k, k - 2 * j)),
                                  RationalFunction::constant(3, 1), kmj.names));

    // k - m = 2u keeps the reflected index integral: put u in k's slot
    const std::vector<std::string> umj = {"u", "m", "j"};
    const FactorialQuotient s_u = s.substitute(0, LinearForm({2, 1, 0}, 0));
    const FactorialQuotient reflected = s_u.substitute(2, LinearForm({1, 0, -1}, -1));
    cert.variables = umj;
    cert.checks.push_back(compare("s(u-1-j) / s(j) with k = m+2u", ratio(reflected, s_u),
                                  RationalFunction::constant(3, -1), umj));

    auto s_value = [](long kk, long mm, long jj) { return h_analytic(mm + 2 * jj, kk, kk - 2 * jj).to_integer(); };
    cert.spot_checks.push_back({"s(0) + s(1) = 0 (h(4,8,8) + h(6,8,6))", {{"k", 8}, {"m", 4}},
                                s_value(8, 4, 0) + s_value(8, 4, 1), 0});
    cert.spot_checks.push_back({"s(0) = h(3,5,5) = 0", {{"k", 5}, {"m", 3}}, s_value(5, 3, 0), 0});
    return cert;
}

std::vector<Certificate> certify_all()
{
    return {certify_three_window(), certify_boundary_pair(), certify_four_term(), certify_h_swap(),
            certify_s_symmetry()};
}

Certificate certify_by_id(const std::string& id)
{
    static const std::vector<std::pair<std::string, std::function<Certificate()>>> table = {
        {"lem2.3", certify_three_window}, {"prop2.4", certify_boundary_pair}, {"lem4.3", certify_four_term},
        {"h-swap", certify_h_swap},       {"s-symmetry", certify_s_symmetry},
    };
    for (const auto& [name, fn] : table) {
        if (name == id) {
            return fn();
        }
    }
    throw std::invalid_argument("unknown certificate '" + id + "'");
}

}  // namespace knapsack
