#include "isoext/errors.hpp"
#include "isoext/hopf.hpp"

#include <doctest.h>

using namespace isoext;

namespace {

MonomialKey xi(int j, int e = 1)
{
    return MonomialKey::xi_gen(j, e);
}

// a^v * (sum of dual monomials), for associativity checking
std::vector<MonomialKey> mul_dual(AlgebraId alg, const MonomialKey& a, const std::vector<MonomialKey>& sum)
{
    std::vector<MonomialKey> raw;
    for (const auto& b : sum) {
        Bidegree d = a.bidegree() + b.bidegree();
        const auto& basis = enumerate_basis(alg, d);
        for (int i : dual_product(alg, a, b).support)
            raw.push_back(basis[i]);
    }
    std::sort(raw.begin(), raw.end());
    std::vector<MonomialKey> out;
    for (size_t i = 0; i < raw.size();) {
        size_t j = i;
        while (j < raw.size() && raw[j] == raw[i])
            ++j;
        if ((j - i) % 2)
            out.push_back(raw[i]);
        i = j;
    }
    return out;
}

std::vector<MonomialKey> as_monomials(AlgebraId alg, Bidegree d, const F2Vector& v)
{
    const auto& basis = enumerate_basis(alg, d);
    std::vector<MonomialKey> out;
    for (int i : v.support)
        out.push_back(basis[i]);
    return out;
}

}  // namespace

TEST_CASE("generator bidegrees")
{
    CHECK(xi_bidegree(1) == Bidegree{2, 1});
    CHECK(xi_bidegree(2) == Bidegree{6, 3});
    CHECK(tau_bidegree(0) == Bidegree{1, 0});
    CHECK(tau_bidegree(1) == Bidegree{3, 1});
    CHECK(rho_bidegree(2) == Bidegree{7, 3});
    CHECK(xi(1, 2).bidegree() == Bidegree{4, 2});
}

TEST_CASE("basis enumeration examples")
{
    auto b1 = enumerate_basis(AlgebraId::G, {2, 1});
    REQUIRE(b1.size() == 1);
    CHECK(b1[0] == xi(1));

    CHECK(enumerate_basis(AlgebraId::G, {3, 1}).empty());

    auto b2 = enumerate_basis(AlgebraId::RISO, {1, 0});
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == MonomialKey::tau_gen(0));

    auto b3 = enumerate_basis(AlgebraId::HPT, {4, 1});
    REQUIRE(b3.size() == 1);
    auto r0r1 = *(MonomialKey::rho_gen(0) * MonomialKey::rho_gen(1));
    CHECK(b3[0] == r0r1);

    CHECK(enumerate_basis(AlgebraId::G, {0, 0}) == std::vector<MonomialKey>{MonomialKey::one()});
    CHECK(enumerate_basis(AlgebraId::G, {-2, -1}).empty());

    // G sits on the line p = 2q, so its monomials have Chow-Novikov degree 0
    for (int p = 0; p <= 20; ++p)
        for (int q = -1; q <= p; ++q) {
            const auto& basis = enumerate_basis(AlgebraId::G, {p, q});
            if (p != 2 * q || q < 0)
                CHECK(basis.empty());
            for (const auto& m : basis)
                CHECK(m.bidegree().cn() == 0);
        }
}

TEST_CASE("basis is ordered and degree-correct")
{
    for (auto alg : {AlgebraId::G, AlgebraId::RISO, AlgebraId::HPT, AlgebraId::AISO})
        for (int p = 0; p <= 14; ++p)
            for (int q = 0; q <= p; ++q) {
                const auto& basis = enumerate_basis(alg, {p, q});
                for (size_t i = 0; i < basis.size(); ++i) {
                    CHECK(basis[i].bidegree() == Bidegree{p, q});
                    if (i)
                        CHECK(basis[i - 1] < basis[i]);
                }
            }

    // AISO counts factor as HPT x RISO
    for (int p = 0; p <= 12; ++p)
        for (int q = 0; q <= p; ++q) {
            size_t expect = 0;
            for (int ph = 0; ph <= p; ++ph)
                for (int qh = 0; qh <= q; ++qh)
                    expect += enumerate_basis(AlgebraId::HPT, {ph, qh}).size() * enumerate_basis(AlgebraId::RISO, {p - ph, q - qh}).size();
            CHECK(enumerate_basis(AlgebraId::AISO, {p, q}).size() == expect);
        }
}

TEST_CASE("coproduct formulas")
{
    // psi(xi_2) = xi_2 (x) 1 + xi_1^2 (x) xi_1 + 1 (x) xi_2
    TensorSum expect;
    expect.add(xi(2), MonomialKey::one());
    expect.add(xi(1, 2), xi(1));
    expect.add(MonomialKey::one(), xi(2));
    CHECK(coproduct(AlgebraId::G, xi(2)) == expect);

    CHECK(coproduct(AlgebraId::G, MonomialKey::one()) == TensorSum::of(MonomialKey::one(), MonomialKey::one()));

    // psi(tau_1) = xi_1 (x) tau_0 + tau_1 (x) 1 + 1 (x) tau_1
    TensorSum expect_tau;
    expect_tau.add(xi(1), MonomialKey::tau_gen(0));
    expect_tau.add(MonomialKey::tau_gen(1), MonomialKey::one());
    expect_tau.add(MonomialKey::one(), MonomialKey::tau_gen(1));
    CHECK(coproduct(AlgebraId::RISO, MonomialKey::tau_gen(1)) == expect_tau);

    // cube of the primitive-ish coproduct of xi_1, mod 2
    TensorSum expect_cube;
    expect_cube.add(xi(1, 3), MonomialKey::one());
    expect_cube.add(xi(1, 2), xi(1));
    expect_cube.add(xi(1), xi(1, 2));
    expect_cube.add(MonomialKey::one(), xi(1, 3));
    CHECK(coproduct(AlgebraId::G, xi(1, 3)) == expect_cube);

    CHECK_THROWS_AS(coproduct(AlgebraId::RISO, MonomialKey::rho_gen(0)), UnsupportedCoaction);
    CHECK_THROWS_AS(coproduct(AlgebraId::HPT, MonomialKey::one()), UnsupportedCoaction);
}

TEST_CASE("dual product examples")
{
    CHECK(dual_product(AlgebraId::G, xi(1), xi(1)).empty());

    auto v = dual_product(AlgebraId::G, xi(1), xi(1, 2));
    CHECK(as_monomials(AlgebraId::G, {6, 3}, v) == std::vector<MonomialKey>{xi(1, 3)});

    for (const auto& m : monomials_up_to_p(AlgebraId::G, 10)) {
        auto u = dual_product(AlgebraId::G, MonomialKey::one(), m);
        CHECK(as_monomials(AlgebraId::G, m.bidegree(), u) == std::vector<MonomialKey>{m});
    }
}

TEST_CASE("dual product associativity through degree 16")
{
    for (auto alg : {AlgebraId::G, AlgebraId::RISO}) {
        auto mons = monomials_up_to_p(alg, 16);
        for (const auto& a : mons)
            for (const auto& b : mons) {
                if (a.bidegree().p + b.bidegree().p > 16)
                    continue;
                auto ab = mul_dual(alg, a, {b});
                for (const auto& c : mons) {
                    if (a.bidegree().p + b.bidegree().p + c.bidegree().p > 16)
                        continue;
                    std::vector<MonomialKey> lhs;
                    for (const auto& m : ab) {
                        auto part = mul_dual(alg, m, {c});
                        lhs.insert(lhs.end(), part.begin(), part.end());
                    }
                    std::sort(lhs.begin(), lhs.end());
                    std::vector<MonomialKey> lhs_red;
                    for (size_t i = 0; i < lhs.size();) {
                        size_t j = i;
                        while (j < lhs.size() && lhs[j] == lhs[i])
                            ++j;
                        if ((j - i) % 2)
                            lhs_red.push_back(lhs[i]);
                        i = j;
                    }
                    auto rhs = mul_dual(alg, a, mul_dual(alg, b, {c}));
                    CHECK(lhs_red == rhs);
                }
            }
    }
}

TEST_CASE("milnor action")
{
    auto r0 = MonomialKey::rho_gen(0);
    auto r1 = MonomialKey::rho_gen(1);
    auto r0r1 = *(r0 * r1);

    auto v1 = milnor_action(1, r1);
    CHECK(as_monomials(AlgebraId::HPT, {0, 0}, v1) == std::vector<MonomialKey>{MonomialKey::one()});

    CHECK(milnor_action(2, r0).empty());

    auto v3 = milnor_action(0, r0r1);
    CHECK(as_monomials(AlgebraId::HPT, {3, 1}, v3) == std::vector<MonomialKey>{r1});
}

TEST_CASE("milnor operations square to zero and commute, degree <= 31")
{
    auto mons = monomials_up_to_p(AlgebraId::HPT, 31);
    auto apply = [](int j, const std::vector<MonomialKey>& sum) {
        std::vector<MonomialKey> raw;
        for (const auto& m : sum) {
            Bidegree target = m.bidegree() - rho_bidegree(j);
            for (const auto& t : as_monomials(AlgebraId::HPT, target, milnor_action(j, m)))
                raw.push_back(t);
        }
        std::sort(raw.begin(), raw.end());
        std::vector<MonomialKey> out;
        for (size_t i = 0; i < raw.size();) {
            size_t j2 = i;
            while (j2 < raw.size() && raw[j2] == raw[i])
                ++j2;
            if ((j2 - i) % 2)
                out.push_back(raw[i]);
            i = j2;
        }
        return out;
    };

    for (const auto& m : mons)
        for (int i = 0; i <= 4; ++i) {
            CHECK(apply(i, apply(i, {m})).empty());
            for (int j = 0; j < i; ++j)
                CHECK(apply(i, apply(j, {m})) == apply(j, apply(i, {m})));
        }
}

TEST_CASE("hopf axioms hold through degree 12")
{
    auto g = verify_hopf(AlgebraId::G, 12);
    CHECK(g.ok());
    CHECK(g.monomials_checked > 0);

    auto riso = verify_hopf(AlgebraId::RISO, 12);
    CHECK(riso.ok());

    auto unit_only = verify_hopf(AlgebraId::G, 0);
    CHECK(unit_only.ok());
    CHECK(unit_only.monomials_checked == 1);
}
