#include "cyclo/error.hpp"
#include "cyclo/parameters.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace cyclo;

namespace {

std::vector<long> exponents(const std::vector<RootOfUnity>& q)
{
    std::vector<long> out;
    for (const auto& x : q) out.push_back(x.exponent());
    return out;
}

// Brute-force closure of "ratio is a power of q" on explicit complex angles (as fractions of a turn).
std::size_t brute_force_class_count(const std::vector<RootOfUnity>& q, int e)
{
    const std::size_t n = q.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (int k = 0; k < e; ++k) {
                // q_a = q^k q_b  <=>  exp_a = exp_b + k L / e (mod L)
                const long L = q[a].order();
                if (((q[b].exponent() + k * (L / e) - q[a].exponent()) % L + L) % L == 0) parent[find(a)] = find(b);
            }
    std::set<std::size_t> roots;
    for (std::size_t a = 0; a < n; ++a) roots.insert(find(a));
    return roots.size();
}

}  // namespace

TEST_CASE("derived constants")
{
    const auto a = build_parameters(4, 2, 1, {0});
    CHECK(a.f() == 2);
    CHECK(a.eprime() == 2);
    CHECK(a.pprime() == 1);
    CHECK(a.r() == 2);
    CHECK(a.L() == 4);

    const auto b = build_parameters(3, 1, 2, {0, 1});
    CHECK(b.f() == 1);
    CHECK(b.eprime() == 3);
    CHECK(b.pprime() == 1);
    CHECK(b.r() == 2);

    const auto c = build_parameters(2, 4, 1, {0});
    CHECK(c.f() == 2);
    CHECK(c.eprime() == 1);
    CHECK(c.pprime() == 2);
    CHECK(c.r() == 4);
    CHECK(c.L() == 4);
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(build_parameters(1, 2, 1, {0}), InvalidOrder);
    CHECK_THROWS_AS(build_parameters(0, 2, 1, {0}), InvalidOrder);
    CHECK_THROWS_AS(build_parameters(4, 0, 1, {0}), InvalidParameters);
    CHECK_THROWS_AS(build_parameters(4, 2, 0, {}), InvalidParameters);
    CHECK_THROWS_AS(build_parameters(4, 2, 2, {0}), InvalidParameters);
    CHECK_THROWS_AS(build_parameters(4, 2, 1, {7}), InvalidCharge);
    CHECK_THROWS_AS(build_parameters(4, 2, 1, {2}), InvalidCharge);
    CHECK_THROWS_AS(build_parameters(5, 1, 2, {3, 1}), InvalidCharge);
    CHECK_THROWS_AS(build_parameters(5, 1, 1, {-1}), InvalidCharge);
    CHECK_NOTHROW(build_parameters(2, 1, 2, {0, 0}));
}

TEST_CASE("canonical Q")
{
    const auto a = build_Q(build_parameters(4, 2, 1, {0}));
    CHECK(exponents(a) == std::vector<long>{0, 2});
    CHECK(a[0].order() == 4);

    const auto b = build_Q(build_parameters(2, 2, 1, {0}));
    CHECK(exponents(b) == std::vector<long>{0, 1});
    CHECK(b[0].order() == 2);

    CHECK_THROWS_AS(build_Q(build_parameters(2, 1, 2, {0, 0})), DuplicateParameter);
    CHECK(q_sequence(build_parameters(2, 1, 2, {0, 0})).size() == 2);
}

TEST_CASE("Q has r distinct entries for distinct charges")
{
    for (int e = 2; e <= 8; ++e)
        for (int p = 1; p <= 6; ++p) {
            const int eprime = e / std::gcd(e, p);
            for (int delta = 1; delta <= std::min(3, eprime); ++delta) {
                std::vector<int> v(static_cast<std::size_t>(delta));
                std::iota(v.begin(), v.end(), 0);
                const auto spec = build_parameters(e, p, delta, v);
                const auto q = build_Q(spec);
                CHECK(static_cast<int>(q.size()) == spec.r());
                const auto ex = exponents(q);
                std::set<long> seen(ex.begin(), ex.end());
                CHECK(static_cast<int>(seen.size()) == spec.r());
            }
        }
}

TEST_CASE("morita_split examples")
{
    const auto a = morita_split(build_Q(build_parameters(4, 2, 1, {0})), 4);
    CHECK(a == std::vector<std::vector<std::size_t>>{{0, 1}});

    const auto b = morita_split(build_Q(build_parameters(2, 4, 1, {0})), 2);
    REQUIRE(b.size() == 2);
    CHECK(b[0].size() == 2);
    CHECK(b[1].size() == 2);

    const std::vector<RootOfUnity> one{RootOfUnity(3, 5)};
    CHECK(morita_split(one, 5).size() == 1);
}

TEST_CASE("morita_split is invariant under permuting Q")
{
    std::mt19937 rng(7);
    for (const auto& spec : {build_parameters(2, 4, 1, {0}), build_parameters(6, 4, 1, {0}),
                             build_parameters(6, 4, 2, {0, 2}), build_parameters(3, 3, 1, {0})}) {
        auto q = build_Q(spec);
        const auto ref = morita_split(q, spec.e());
        CHECK(ref.size() == brute_force_class_count(q, spec.e()));
        std::multiset<std::size_t> sizes;
        for (const auto& c : ref) sizes.insert(c.size());
        for (int trial = 0; trial < 10; ++trial) {
            std::shuffle(q.begin(), q.end(), rng);
            const auto shuffled = morita_split(q, spec.e());
            std::multiset<std::size_t> s;
            for (const auto& c : shuffled) s.insert(c.size());
            CHECK(s == sizes);
            CHECK(shuffled.size() == brute_force_class_count(q, spec.e()));
        }
    }
}

TEST_CASE("split classes are quotients of translated copies")
{
    for (const auto& spec : {build_parameters(2, 4, 1, {0}), build_parameters(6, 4, 2, {0, 1}),
                             build_parameters(4, 6, 1, {0}), build_parameters(3, 3, 1, {0})}) {
        const auto q = build_Q(spec);
        const auto classes = morita_split(q, spec.e());
        REQUIRE(static_cast<int>(classes.size()) == spec.pprime());
        const RootOfUnity eta_p(spec.L() / spec.p(), spec.L());
        RootOfUnity shift(0, spec.L());
        for (const auto& c : classes) {
            CHECK(static_cast<int>(c.size()) == spec.fdelta());
            for (std::size_t k = 0; k < c.size(); ++k) CHECK(q[c[k]] == shift * q[classes[0][k]]);
            shift = shift * eta_p;
        }
    }
}

TEST_CASE("charge_data examples")
{
    const auto a = charge_data(build_parameters(4, 2, 1, {0}));
    CHECK(a.w == std::vector<int>{0, 2});
    CHECK(a.m == std::vector<Rational>{2, 2});

    const auto b = charge_data(build_parameters(3, 1, 1, {0}));
    CHECK(b.w == std::vector<int>{0});
    CHECK(b.m == std::vector<Rational>{0});

    const auto c = charge_data(build_parameters(6, 2, 2, {0, 2}));
    CHECK(c.w == std::vector<int>{0, 2, 3, 5});
    CHECK(c.m == std::vector<Rational>{Rational(9, 2), 5, Rational(9, 2), 5});

    const auto d = charge_data(build_parameters(5, 1, 2, {0, 3}));
    CHECK(d.m == std::vector<Rational>{Rational(5, 2), 3});
}

TEST_CASE("m does not depend on j when delta = 1")
{
    for (int e = 2; e <= 9; ++e)
        for (int p = 1; p <= 6; ++p) {
            const int eprime = e / std::gcd(e, p);
            for (int v = 0; v < eprime; ++v) {
                const auto cd = charge_data(build_parameters(e, p, 1, {v}));
                for (const auto& m : cd.m) CHECK(m == Rational(v - eprime + e));
            }
        }
}

TEST_CASE("m is non-negative")
{
    for (int e = 2; e <= 9; ++e)
        for (int p = 1; p <= 4; ++p)
            for (int delta = 1; delta <= 3; ++delta) {
                const int eprime = e / std::gcd(e, p);
                if (delta > eprime) continue;
                std::vector<int> v(static_cast<std::size_t>(delta));
                for (int k = 0; k < delta; ++k) v[static_cast<std::size_t>(k)] = k * (eprime - 1) / std::max(1, delta - 1);
                for (const auto& m : charge_data(build_parameters(e, p, delta, v)).m) CHECK(m >= Rational(0));
            }
}
