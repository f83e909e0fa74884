#include "isoext/hopf.hpp"

#include "isoext/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace isoext {

std::string algebra_name(AlgebraId a)
{
    switch (a) {
    case AlgebraId::G:
        return "G";
    case AlgebraId::RISO:
        return "RISO";
    case AlgebraId::HPT:
        return "HPT";
    case AlgebraId::AISO:
        return "AISO";
    }
    return "?";
}

std::optional<AlgebraId> algebra_from_name(const std::string& s)
{
    if (s == "G")
        return AlgebraId::G;
    if (s == "RISO")
        return AlgebraId::RISO;
    if (s == "HPT")
        return AlgebraId::HPT;
    if (s == "AISO")
        return AlgebraId::AISO;
    return std::nullopt;
}

Bidegree xi_bidegree(int j)
{
    return {(1 << (j + 1)) - 2, (1 << j) - 1};
}

Bidegree tau_bidegree(int i)
{
    return {(1 << (i + 1)) - 1, (1 << i) - 1};
}

Bidegree rho_bidegree(int i)
{
    return {(1 << (i + 1)) - 1, (1 << i) - 1};
}

MonomialKey MonomialKey::xi_gen(int j, int e)
{
    MonomialKey m;
    if (e > 0) {
        m.xi.assign(j, 0);
        m.xi[j - 1] = e;
    }
    return m;
}

MonomialKey MonomialKey::tau_gen(int i)
{
    MonomialKey m;
    m.tau.assign(i + 1, 0);
    m.tau[i] = 1;
    return m;
}

MonomialKey MonomialKey::rho_gen(int i)
{
    MonomialKey m;
    m.rho.assign(i + 1, 0);
    m.rho[i] = 1;
    return m;
}

Bidegree MonomialKey::bidegree() const
{
    Bidegree d;
    for (size_t i = 0; i < rho.size(); ++i)
        if (rho[i]) {
            auto g = rho_bidegree(static_cast<int>(i));
            d = d + g;
        }
    for (size_t i = 0; i < tau.size(); ++i)
        if (tau[i]) {
            auto g = tau_bidegree(static_cast<int>(i));
            d = d + g;
        }
    for (size_t j = 0; j < xi.size(); ++j)
        if (xi[j]) {
            auto g = xi_bidegree(static_cast<int>(j) + 1);
            d = d + Bidegree{xi[j] * g.p, xi[j] * g.q};
        }
    return d;
}

void MonomialKey::normalize()
{
    while (!rho.empty() && rho.back() == 0)
        rho.pop_back();
    while (!tau.empty() && tau.back() == 0)
        tau.pop_back();
    while (!xi.empty() && xi.back() == 0)
        xi.pop_back();
}

std::optional<MonomialKey> operator*(const MonomialKey& a, const MonomialKey& b)
{
    MonomialKey m;
    m.rho.assign(std::max(a.rho.size(), b.rho.size()), 0);
    for (size_t i = 0; i < m.rho.size(); ++i) {
        int e = (i < a.rho.size() ? a.rho[i] : 0) + (i < b.rho.size() ? b.rho[i] : 0);
        if (e > 1)
            return std::nullopt;  // rho_i^2 = 0
        m.rho[i] = static_cast<uint8_t>(e);
    }
    m.tau.assign(std::max(a.tau.size(), b.tau.size()), 0);
    for (size_t i = 0; i < m.tau.size(); ++i) {
        int e = (i < a.tau.size() ? a.tau[i] : 0) + (i < b.tau.size() ? b.tau[i] : 0);
        if (e > 1)
            return std::nullopt;  // tau_i^2 = 0
        m.tau[i] = static_cast<uint8_t>(e);
    }
    m.xi.assign(std::max(a.xi.size(), b.xi.size()), 0);
    for (size_t j = 0; j < m.xi.size(); ++j)
        m.xi[j] = (j < a.xi.size() ? a.xi[j] : 0) + (j < b.xi.size() ? b.xi[j] : 0);
    m.normalize();
    return m;
}

std::string MonomialKey::str() const
{
    std::string s;
    auto app = [&s](const std::string& part) {
        if (!s.empty())
            s += ' ';
        s += part;
    };
    for (size_t i = 0; i < rho.size(); ++i)
        if (rho[i])
            app(fmt::format("r{}", i));
    for (size_t i = 0; i < tau.size(); ++i)
        if (tau[i])
            app(fmt::format("t{}", i));
    for (size_t j = 0; j < xi.size(); ++j)
        if (xi[j] == 1)
            app(fmt::format("x{}", j + 1));
        else if (xi[j] > 1)
            app(fmt::format("x{}^{}", j + 1, xi[j]));
    return s.empty() ? "1" : s;
}

bool TensorSum::contains(const MonomialKey& a, const MonomialKey& b) const
{
    return std::binary_search(terms.begin(), terms.end(), std::make_pair(a, b));
}

void TensorSum::add(MonomialKey a, MonomialKey b)
{
    auto key = std::make_pair(std::move(a), std::move(b));
    auto it = std::lower_bound(terms.begin(), terms.end(), key);
    if (it != terms.end() && *it == key)
        terms.erase(it);
    else
        terms.insert(it, std::move(key));
}

TensorSum TensorSum::operator*(const TensorSum& o) const
{
    TensorSum out;
    std::vector<std::pair<MonomialKey, MonomialKey>> raw;
    for (const auto& [a1, b1] : terms)
        for (const auto& [a2, b2] : o.terms) {
            auto left = a1 * a2;
            if (!left)
                continue;
            auto right = b1 * b2;
            if (!right)
                continue;
            raw.emplace_back(std::move(*left), std::move(*right));
        }
    std::sort(raw.begin(), raw.end());
    for (size_t i = 0; i < raw.size();) {
        size_t j = i;
        while (j < raw.size() && raw[j] == raw[i])
            ++j;
        if ((j - i) % 2)
            out.terms.push_back(raw[i]);
        i = j;
    }
    return out;
}

TensorSum TensorSum::operator+(const TensorSum& o) const
{
    TensorSum out = *this;
    for (const auto& [a, b] : o.terms)
        out.add(a, b);
    return out;
}

namespace {

    struct GeneratorInfo
    {
        enum Kind
        {
            Rho,
            Tau,
            Xi
        } kind;
        int index;  // rho_i / tau_i / xi_j
        Bidegree deg;
        bool exterior;
    };

    // Generators usable in the algebra, cheapest degree last so the DFS can
    // peel them in a fixed order.
    std::vector<GeneratorInfo> generators_up_to(AlgebraId alg, int max_p)
    {
        std::vector<GeneratorInfo> gens;
        auto want_rho = alg == AlgebraId::HPT || alg == AlgebraId::AISO;
        auto want_tau = alg == AlgebraId::RISO || alg == AlgebraId::AISO;
        auto want_xi = alg != AlgebraId::HPT;
        if (want_rho)
            for (int i = 0; rho_bidegree(i).p <= max_p; ++i)
                gens.push_back({GeneratorInfo::Rho, i, rho_bidegree(i), true});
        if (want_tau)
            for (int i = 0; tau_bidegree(i).p <= max_p; ++i)
                gens.push_back({GeneratorInfo::Tau, i, tau_bidegree(i), true});
        if (want_xi)
            for (int j = 1; xi_bidegree(j).p <= max_p; ++j)
                gens.push_back({GeneratorInfo::Xi, j, xi_bidegree(j), false});
        return gens;
    }

    void enumerate_rec(const std::vector<GeneratorInfo>& gens, size_t from, Bidegree left, MonomialKey& cur, std::vector<MonomialKey>& out)
    {
        if (left.p == 0 && left.q == 0) {
            MonomialKey m = cur;
            m.normalize();
            out.push_back(std::move(m));
            return;
        }
        if (left.p < 0 || left.q < 0)
            return;
        for (size_t k = from; k < gens.size(); ++k) {
            const auto& g = gens[k];
            if (g.deg.p > left.p || g.deg.q > left.q)
                continue;
            int emax = g.exterior ? 1 : left.p / g.deg.p;
            for (int e = 1; e <= emax; ++e) {
                Bidegree rest = {left.p - e * g.deg.p, left.q - e * g.deg.q};
                if (rest.p < 0 || rest.q < 0)
                    break;
                switch (g.kind) {
                case GeneratorInfo::Rho:
                    if (cur.rho.size() <= static_cast<size_t>(g.index))
                        cur.rho.resize(g.index + 1, 0);
                    cur.rho[g.index] = 1;
                    break;
                case GeneratorInfo::Tau:
                    if (cur.tau.size() <= static_cast<size_t>(g.index))
                        cur.tau.resize(g.index + 1, 0);
                    cur.tau[g.index] = 1;
                    break;
                case GeneratorInfo::Xi:
                    if (cur.xi.size() < static_cast<size_t>(g.index))
                        cur.xi.resize(g.index, 0);
                    cur.xi[g.index - 1] = e;
                    break;
                }
                enumerate_rec(gens, k + 1, rest, cur, out);
            }
            switch (g.kind) {
            case GeneratorInfo::Rho:
                if (cur.rho.size() > static_cast<size_t>(g.index))
                    cur.rho[g.index] = 0;
                break;
            case GeneratorInfo::Tau:
                if (cur.tau.size() > static_cast<size_t>(g.index))
                    cur.tau[g.index] = 0;
                break;
            case GeneratorInfo::Xi:
                if (cur.xi.size() >= static_cast<size_t>(g.index))
                    cur.xi[g.index - 1] = 0;
                break;
            }
        }
    }

    struct BasisCache
    {
        std::shared_mutex mtx;
        std::map<std::pair<AlgebraId, Bidegree>, std::vector<MonomialKey>> table;
    };

    BasisCache& basis_cache()
    {
        static BasisCache c;
        return c;
    }

    struct CoproductCache
    {
        std::shared_mutex mtx;
        std::map<std::pair<AlgebraId, MonomialKey>, TensorSum> table;
    };

    CoproductCache& coproduct_cache()
    {
        static CoproductCache c;
        return c;
    }

    TensorSum xi_coproduct(int k)
    {
        // psi(xi_k) = sum_{i=0}^{k} xi_{k-i}^{2^i} (x) xi_i, with xi_0 = 1
        TensorSum t;
        for (int i = 0; i <= k; ++i) {
            MonomialKey left = (k - i == 0) ? MonomialKey::one() : MonomialKey::xi_gen(k - i, 1 << i);
            MonomialKey right = (i == 0) ? MonomialKey::one() : MonomialKey::xi_gen(i);
            t.add(std::move(left), std::move(right));
        }
        return t;
    }

    TensorSum tau_coproduct(int k)
    {
        // psi(tau_k) = tau_k (x) 1 + sum_{i=0}^{k} xi_{k-i}^{2^i} (x) tau_i
        TensorSum t;
        t.add(MonomialKey::tau_gen(k), MonomialKey::one());
        for (int i = 0; i <= k; ++i) {
            MonomialKey left = (k - i == 0) ? MonomialKey::one() : MonomialKey::xi_gen(k - i, 1 << i);
            t.add(std::move(left), MonomialKey::tau_gen(i));
        }
        return t;
    }

    // Split m = g * rest with g the first generator factor in canonical order.
    std::optional<std::pair<MonomialKey, MonomialKey>> split_first(const MonomialKey& m)
    {
        for (size_t i = 0; i < m.tau.size(); ++i)
            if (m.tau[i]) {
                MonomialKey rest = m;
                rest.tau[i] = 0;
                rest.normalize();
                return std::make_pair(MonomialKey::tau_gen(static_cast<int>(i)), rest);
            }
        for (size_t j = 0; j < m.xi.size(); ++j)
            if (m.xi[j]) {
                MonomialKey rest = m;
                rest.xi[j] -= 1;
                rest.normalize();
                return std::make_pair(MonomialKey::xi_gen(static_cast<int>(j) + 1), rest);
            }
        return std::nullopt;
    }

    TensorSum compute_coproduct(AlgebraId alg, const MonomialKey& m)
    {
        auto split = split_first(m);
        if (!split)
            return TensorSum::of(MonomialKey::one(), MonomialKey::one());
        const auto& [g, rest] = *split;
        TensorSum gpsi = g.tau.empty() ? xi_coproduct(static_cast<int>(g.xi.size())) : tau_coproduct(static_cast<int>(g.tau.size()) - 1);
        return gpsi * coproduct(alg, rest);
    }

}  // namespace

const std::vector<MonomialKey>& enumerate_basis(AlgebraId alg, Bidegree d)
{
    auto& cache = basis_cache();
    auto key = std::make_pair(alg, d);
    {
        std::shared_lock lock(cache.mtx);
        auto it = cache.table.find(key);
        if (it != cache.table.end())
            return it->second;
    }

    std::vector<MonomialKey> out;
    bool feasible = d.p >= 0 && d.q >= 0;
    if (alg == AlgebraId::G && d.p != 2 * d.q)
        feasible = false;
    if (feasible) {
        auto gens = generators_up_to(alg, d.p);
        MonomialKey cur;
        enumerate_rec(gens, 0, d, cur, out);
        std::sort(out.begin(), out.end());
    }

    std::unique_lock lock(cache.mtx);
    auto [it, inserted] = cache.table.try_emplace(std::move(key), std::move(out));
    (void)inserted;
    return it->second;
}

int basis_index(AlgebraId alg, const MonomialKey& m)
{
    const auto& basis = enumerate_basis(alg, m.bidegree());
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || *it != m)
        return -1;
    return static_cast<int>(it - basis.begin());
}

const TensorSum& coproduct(AlgebraId alg, const MonomialKey& m)
{
    if (alg != AlgebraId::G && alg != AlgebraId::RISO)
        throw UnsupportedCoaction(fmt::format("coproduct is defined for G and RISO, not {}", algebra_name(alg)));
    if (!m.rho_free())
        throw UnsupportedCoaction(fmt::format("coproduct of {} involves rho generators", m.str()));
    if (alg == AlgebraId::G && !m.tau.empty())
        throw UnsupportedCoaction(fmt::format("{} is not a G monomial", m.str()));

    auto& cache = coproduct_cache();
    auto key = std::make_pair(alg, m);
    {
        std::shared_lock lock(cache.mtx);
        auto it = cache.table.find(key);
        if (it != cache.table.end())
            return it->second;
    }

    TensorSum psi = compute_coproduct(alg, m);

    std::unique_lock lock(cache.mtx);
    auto [it, inserted] = cache.table.try_emplace(std::move(key), std::move(psi));
    (void)inserted;
    return it->second;
}

F2Vector dual_product(AlgebraId alg, const MonomialKey& a, const MonomialKey& b)
{
    Bidegree d = a.bidegree() + b.bidegree();
    const auto& basis = enumerate_basis(alg, d);
    F2Vector out;
    for (size_t i = 0; i < basis.size(); ++i)
        if (coproduct(alg, basis[i]).contains(a, b))
            out.support.push_back(static_cast<int>(i));
    return out;
}

F2Vector milnor_action(int j, const MonomialKey& m)
{
    if (!m.tau.empty() || !m.xi.empty())
        throw Error(fmt::format("milnor_action expects an HPT monomial, got {}", m.str()));
    F2Vector out;
    if (j < 0 || static_cast<size_t>(j) >= m.rho.size() || !m.rho[j])
        return out;
    MonomialKey target = m;
    target.rho[j] = 0;
    target.normalize();
    int idx = basis_index(AlgebraId::HPT, target);
    if (idx < 0)
        throw Error("milnor_action: target monomial missing from basis");
    out.support.push_back(idx);
    return out;
}

std::vector<MonomialKey> monomials_up_to_p(AlgebraId alg, int max_p)
{
    std::vector<MonomialKey> out;
    for (int p = 0; p <= max_p; ++p)
        for (int q = 0; q <= p; ++q) {
            const auto& basis = enumerate_basis(alg, {p, q});
            out.insert(out.end(), basis.begin(), basis.end());
        }
    return out;
}

HopfReport verify_hopf(AlgebraId alg, int max_p)
{
    if (alg != AlgebraId::G && alg != AlgebraId::RISO)
        throw UnsupportedCoaction("verify_hopf applies to G and RISO");

    HopfReport report;
    auto monomials = monomials_up_to_p(alg, max_p);

    for (const auto& m : monomials) {
        const auto& psi = coproduct(alg, m);
        ++report.monomials_checked;

        // counit on both sides
        TensorSum left_unit, right_unit;
        for (const auto& [a, b] : psi.terms) {
            if (a.is_one())
                right_unit.add(MonomialKey::one(), b);
            if (b.is_one())
                left_unit.add(a, MonomialKey::one());
        }
        if (right_unit != TensorSum::of(MonomialKey::one(), m))
            report.violations.push_back(fmt::format("counit (eps(x)1) fails at {}", m.str()));
        if (left_unit != TensorSum::of(m, MonomialKey::one()))
            report.violations.push_back(fmt::format("counit (1(x)eps) fails at {}", m.str()));

        // bidegree additivity of every term
        for (const auto& [a, b] : psi.terms)
            if (a.bidegree() + b.bidegree() != m.bidegree()) {
                report.violations.push_back(fmt::format("bidegree additivity fails at {}", m.str()));
                break;
            }

        // coassociativity: (psi(x)1)psi = (1(x)psi)psi as mod-2 triple sums
        std::vector<std::tuple<MonomialKey, MonomialKey, MonomialKey>> lhs, rhs;
        for (const auto& [a, b] : psi.terms) {
            for (const auto& [a1, a2] : coproduct(alg, a).terms)
                lhs.emplace_back(a1, a2, b);
            for (const auto& [b1, b2] : coproduct(alg, b).terms)
                rhs.emplace_back(a, b1, b2);
        }
        auto reduce = [](std::vector<std::tuple<MonomialKey, MonomialKey, MonomialKey>>& v) {
            std::sort(v.begin(), v.end());
            std::vector<std::tuple<MonomialKey, MonomialKey, MonomialKey>> out;
            for (size_t i = 0; i < v.size();) {
                size_t j = i;
                while (j < v.size() && v[j] == v[i])
                    ++j;
                if ((j - i) % 2)
                    out.push_back(v[i]);
                i = j;
            }
            v = std::move(out);
        };
        reduce(lhs);
        reduce(rhs);
        if (lhs != rhs)
            report.violations.push_back(fmt::format("coassociativity fails at {}", m.str()));
    }

    // multiplicativity on generator * monomial pairs
    std::vector<MonomialKey> gens;
    if (alg == AlgebraId::RISO)
        for (int i = 0; tau_bidegree(i).p <= max_p; ++i)
            gens.push_back(MonomialKey::tau_gen(i));
    for (int j = 1; xi_bidegree(j).p <= max_p; ++j)
        gens.push_back(MonomialKey::xi_gen(j));

    for (const auto& g : gens) {
        const auto& gpsi = coproduct(alg, g);
        for (const auto& m : monomials) {
            if (g.bidegree().p + m.bidegree().p > max_p)
                continue;
            auto prod = g * m;
            TensorSum expanded = gpsi * coproduct(alg, m);
            if (prod) {
                if (expanded != coproduct(alg, *prod))
                    report.violations.push_back(fmt::format("psi not multiplicative on {} * {}", g.str(), m.str()));
            }
            else if (!expanded.terms.empty()) {
                report.violations.push_back(fmt::format("psi({} * {}) should vanish", g.str(), m.str()));
            }
        }
    }

    return report;
}

}  // namespace isoext
