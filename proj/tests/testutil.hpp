#pragma once

// Shared generators and small oracles for the test and acceptance suites.

#include "isoext/comodule.hpp"

#include <random>
#include <tuple>
#include <vector>

namespace isoext::testutil {

/// Basis of the space of degree-1 cobar cocycles z (psi(e) = 1(x)e + z
/// candidates) for an extension of Sigma^{shift} F2 by c, computed from the
/// coproduct alone.
inline std::vector<std::vector<CoactionTerm>> cocycle_space(const Comodule& c, Bidegree shift)
{
    // candidate terms m (x) w with m nontrivial and |m| + |w| = shift
    std::vector<CoactionTerm> candidates;
    for (int w = 0; w < c.dim(); ++w) {
        Bidegree need = shift - c.basis[w].deg;
        for (const auto& m : enumerate_basis(AlgebraId::G, need))
            if (!m.is_one())
                candidates.push_back({m, w});
    }
    if (candidates.empty())
        return {};

    using Triple = std::tuple<MonomialKey, MonomialKey, int>;
    std::map<Triple, int> row_index;
    std::vector<std::vector<int>> cols(candidates.size());
    for (size_t ci = 0; ci < candidates.size(); ++ci) {
        const auto& [m, w] = candidates[ci];
        std::vector<Triple> triples;
        for (const auto& [m1, m2] : coproduct(AlgebraId::G, m).terms)
            if (!m1.is_one() && !m2.is_one())
                triples.emplace_back(m1, m2, w);
        for (const auto& t : c.coaction[w])
            if (!(t.mon.is_one() && t.target == w))
                triples.emplace_back(m, t.mon, t.target);
        for (const auto& tr : triples) {
            auto [it, fresh] = row_index.try_emplace(tr, static_cast<int>(row_index.size()));
            (void)fresh;
            cols[ci].push_back(it->second);
        }
    }

    F2Matrix d1(static_cast<int>(row_index.size()), static_cast<int>(candidates.size()));
    for (size_t ci = 0; ci < candidates.size(); ++ci) {
        // mod-2 collapse of repeated triples in one column
        auto rows = cols[ci];
        std::sort(rows.begin(), rows.end());
        for (size_t i = 0; i < rows.size();) {
            size_t j = i;
            while (j < rows.size() && rows[j] == rows[i])
                ++j;
            if ((j - i) % 2)
                d1.row[rows[i]].support.push_back(static_cast<int>(ci));
            i = j;
        }
    }
    for (auto& r : d1.row)
        std::sort(r.support.begin(), r.support.end());

    std::vector<std::vector<CoactionTerm>> out;
    for (const auto& k : kernel_basis(d1)) {
        std::vector<CoactionTerm> z;
        for (int ci : k.support)
            z.push_back(candidates[ci]);
        out.push_back(std::move(z));
    }
    return out;
}

/// Random valid CN-0 comodule built by chaining random extensions.
inline Comodule random_cn0_comodule(std::mt19937_64& rng, int dim, const std::string& prefix = "x")
{
    auto qdist = [&rng]() { return static_cast<int>(rng() % 4); };
    int q0 = qdist();
    Comodule c = Comodule::trivial({{prefix + "0", {2 * q0, q0}}});
    for (int i = 1; i < dim; ++i) {
        // aim near the top of the current comodule so cocycle candidates exist
        Bidegree base = c.basis[rng() % c.basis.size()].deg;
        int d = 1 + static_cast<int>(rng() % 3);
        Bidegree target = base + Bidegree{2 * d, d};
        if (rng() % 4 == 0)
            target = {2 * qdist(), qdist()};  // occasionally a fresh spot
        if (target.p != 2 * target.q)
            target = {2 * target.q, target.q};

        auto space = cocycle_space(c, target);
        std::vector<CoactionTerm> z;
        if (!space.empty() && rng() % 8 != 0) {
            // random combination of basis cocycles
            std::vector<CoactionTerm> acc;
            for (const auto& zk : space)
                if (rng() & 1)
                    acc.insert(acc.end(), zk.begin(), zk.end());
            std::sort(acc.begin(), acc.end());
            for (size_t a = 0; a < acc.size();) {
                size_t b = a;
                while (b < acc.size() && acc[b] == acc[a])
                    ++b;
                if ((b - a) % 2)
                    z.push_back(acc[a]);
                a = b;
            }
        }
        c = extension_from_cocycle(c, target, z, prefix + std::to_string(i));
    }
    return c;
}

/// Random valid comodule supported on a handful of Chow-Novikov degrees.
inline Comodule random_bounded_comodule(std::mt19937_64& rng, int dim, int max_pieces = 3)
{
    int pieces = 1 + static_cast<int>(rng() % max_pieces);
    std::vector<Comodule> parts;
    int left = dim;
    for (int k = 0; k < pieces && left > 0; ++k) {
        int take = (k == pieces - 1) ? left : 1 + static_cast<int>(rng() % left);
        left -= take;
        int cn = static_cast<int>(rng() % 5) - 2;
        auto part = random_cn0_comodule(rng, take, "p" + std::to_string(k) + "_");
        parts.push_back(shift(part, {cn, 0}));
    }
    return direct_sum(parts);
}

}  // namespace isoext::testutil
