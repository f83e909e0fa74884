#include "isoext/specseq.hpp"

#include "isoext/errors.hpp"
#include "isoext/resolution.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace isoext {

namespace {

    long g_dim(int d)
    {
        return d < 0 ? 0 : static_cast<long>(enumerate_basis(AlgebraId::G, {2 * d, d}).size());
    }

    bool in_cone(Bidegree alpha, Bidegree probe)
    {
        return probe.q >= alpha.q && probe.p - alpha.p >= 2 * (probe.q - alpha.q);
    }

}  // namespace

GeneratorSet GeneratorSet::of_comodule(const Comodule& c)
{
    std::map<Bidegree, long> counts;
    for (const auto& e : c.basis)
        counts[e.deg]++;
    GeneratorSet g;
    for (const auto& [deg, count] : counts)
        g.entries.emplace_back(deg, count);
    return g;
}

std::optional<long> GeneratorSet::cone_count(Bidegree probe) const
{
    switch (family) {
    case Family::Explicit: {
        long total = 0;
        for (const auto& [deg, mult] : entries)
            if (in_cone(deg, probe)) {
                if (mult < 0)
                    return std::nullopt;
                total += mult;
            }
        return total;
    }
    case Family::GMonomials: {
        // members (2d,d) qualify iff d <= q and p >= 2q
        if (probe.p < 2 * probe.q)
            return 0L;
        long total = 0;
        for (int d = 0; d <= probe.q; ++d)
            total += g_dim(d);
        return total;
    }
    case Family::GTensorG: {
        if (probe.p < 2 * probe.q)
            return 0L;
        long total = 0;
        for (int d = 0; d <= probe.q; ++d)
            for (int a = 0; a <= d; ++a)
                total += g_dim(a) * g_dim(d - a);
        return total;
    }
    case Family::Diagonal2N:
        if (probe.p < 2 * probe.q || probe.q < 0)
            return 0L;
        return static_cast<long>(probe.q) + 1;
    case Family::HptMonomials: {
        long total = 0;
        if (probe.p < 0)
            return 0L;
        for (const auto& m : monomials_up_to_p(AlgebraId::HPT, probe.p))
            if (in_cone(m.bidegree(), probe))
                ++total;
        return total;
    }
    }
    return 0L;
}

std::optional<std::pair<int, int>> GeneratorSet::cn_range() const
{
    switch (family) {
    case Family::Explicit: {
        if (entries.empty())
            return std::make_pair(0, 0);
        int lo = entries.front().first.cn(), hi = lo;
        for (const auto& [deg, mult] : entries) {
            lo = std::min(lo, deg.cn());
            hi = std::max(hi, deg.cn());
        }
        return std::make_pair(lo, hi);
    }
    case Family::GMonomials:
    case Family::GTensorG:
    case Family::Diagonal2N:
        return std::make_pair(0, 0);
    case Family::HptMonomials:
        return std::nullopt;  // rho_i has Chow-Novikov degree 2^i + 1
    }
    return std::nullopt;
}

IftResult ift_check(const GeneratorSet& gens, BidegreeWindow probe_window)
{
    bool finite_window = probe_window.p_min > -kDegUnbounded && probe_window.p_max < kDegUnbounded && probe_window.q_min > -kDegUnbounded && probe_window.q_max < kDegUnbounded;
    if (!finite_window) {
        // only an explicit infinite multiplicity can fail everywhere
        if (gens.family == GeneratorSet::Family::Explicit)
            for (const auto& [deg, mult] : gens.entries)
                if (mult < 0)
                    return {false, deg};
        return {true, std::nullopt};
    }
    for (int p = probe_window.p_min; p <= probe_window.p_max; ++p)
        for (int q = probe_window.q_min; q <= probe_window.q_max; ++q)
            if (!gens.cone_count({p, q}))
                return {false, Bidegree{p, q}};
    return {true, std::nullopt};
}

ExtChart iso_ass_e2(const Comodule& l, const GeneratorSet& gens, ChartBounds bounds, Engine engine, int threads)
{
    require_valid(l);

    int reach = std::max(1, bounds.max_t());
    auto gate = ift_check(gens, BidegreeWindow::box(-reach, reach, -reach, reach));
    if (!gate.ok)
        throw NotIsotropicallyFiniteType(fmt::format("generator set is not isotropically finite type: unbounded count in the cone of {}", gate.witness ? gate.witness->str() : "?"));

    if (bounds.max_stem > certified_stem(Comodule::sphere(), l))
        throw WindowTooSmall(fmt::format("requested stems up to {} exceed the certified range {} of the truncated input; enlarge the cofree window", bounds.max_stem, certified_stem(Comodule::sphere(), l)));

    if (engine == Engine::Resolution) {
        auto res = minimal_resolution(ModuleSpec::dual_of(l), bounds.max_s, bounds.max_t(), threads);
        auto chart = chart_from_resolution(res, bounds);
        return chart;
    }
    return cobar_ext(Comodule::sphere(), l, bounds, threads);
}

ExtChart iso_ass_e2(const Comodule& l, ChartBounds bounds, Engine engine, int threads)
{
    return iso_ass_e2(l, GeneratorSet::of_comodule(l), bounds, engine, threads);
}

std::map<Bidegree, int> sphere_homotopy(ChartBounds bounds, Engine engine, int threads)
{
    auto chart = iso_ass_e2(Comodule::sphere(), bounds, engine, threads);
    std::map<Bidegree, int> table;
    for (const auto& [deg, dim] : chart.dims)
        if (dim > 0)
            table[{deg.stem(), deg.u}] += dim;
    return table;
}

AnssResult iso_anss(const Comodule& n, const Comodule& m, ChartBounds bounds, int threads, const std::optional<GeneratorSet>& n_family, const std::optional<GeneratorSet>& m_family)
{
    require_valid(n);
    require_valid(m);

    auto cn_bounds = [](const Comodule& c, const std::optional<GeneratorSet>& family, const char* side) {
        if (family) {
            auto r = family->cn_range();
            if (!r)
                throw UnboundedChowNovikov(fmt::format("{} input has unbounded Chow-Novikov support", side));
            return *r;
        }
        auto support = c.cn_support();
        if (support.empty())
            return std::make_pair(0, 0);
        return std::make_pair(support.front(), support.back());
    };
    auto [a, b] = cn_bounds(n, n_family, "source");
    auto [c, d] = cn_bounds(m, m_family, "target");

    AnssResult out;
    out.collapse = {a, b, c, d, d - a - c + b + 2};
    out.chart = cobar_ext(n, m, bounds, threads);

    // the proof's vanishing range is a theorem; treat violations as fatal
    for (const auto& [deg, dim] : out.chart.dims)
        if (dim > 0 && (deg.t < c - b + 2 * deg.u || deg.t > d - a + 2 * deg.u))
            throw Error(fmt::format("E2 entry at {} escapes the Chow-Novikov vanishing range", deg.str()));
    return out;
}

std::map<Bidegree, int> heart_homotopy(const Comodule& n, const Comodule& m, BidegreeWindow window, int threads)
{
    for (const auto& e : n.basis)
        if (e.deg.cn() != 0)
            throw NonZeroChowNovikov(fmt::format("source element {} has Chow-Novikov degree {}", e.label, e.deg.cn()));
    for (const auto& e : m.basis)
        if (e.deg.cn() != 0)
            throw NonZeroChowNovikov(fmt::format("target element {} has Chow-Novikov degree {}", e.label, e.deg.cn()));
    if (window.empty())
        return {};
    if (!(window.p_min > -kDegUnbounded && window.p_max < kDegUnbounded && window.q_min > -kDegUnbounded && window.q_max < kDegUnbounded))
        throw Error("heart_homotopy window must be finite");

    ChartBounds bounds;
    bounds.max_s = 0;
    bounds.max_stem = window.p_max;  // the reindexed stem is t itself
    for (int t = window.p_min; t <= window.p_max; ++t)
        for (int u = window.q_min; u <= window.q_max; ++u)
            bounds.max_s = std::max(bounds.max_s, 2 * u - t);
    bounds.u_min = window.q_min;
    bounds.u_max = window.q_max;

    auto chart = cobar_ext(n, m, bounds, threads);
    for (const auto& [deg, dim] : chart.dims)
        if (dim > 0 && deg.t != 2 * deg.u)
            throw Error(fmt::format("E2 entry at {} violates the t = 2u collapse", deg.str()));

    std::map<Bidegree, int> table;
    for (int t = window.p_min; t <= window.p_max; ++t)
        for (int u = window.q_min; u <= window.q_max; ++u) {
            int s = 2 * u - t;
            if (s < 0)
                continue;
            int dim = chart.dim({s, 2 * u, u});
            if (dim > 0)
                table[{t, u}] = dim;
        }
    return table;
}

int heart_hom(const Comodule& n, const Comodule& m)
{
    require_valid(n);
    require_valid(m);
    for (const auto& e : n.basis)
        if (e.deg.cn() < 0)
            throw ChowNovikovHypothesisViolated(fmt::format("source element {} has negative Chow-Novikov degree", e.label));
    for (const auto& e : m.basis)
        if (e.deg.cn() > 0)
            throw ChowNovikovHypothesisViolated(fmt::format("target element {} has positive Chow-Novikov degree", e.label));

    CobarComplex complex(n, m, ChartBounds{0, 0});
    Bidegree origin{0, 0};
    int dim0 = static_cast<int>(complex.basis(0, origin).size());
    if (dim0 == 0)
        return 0;
    return dim0 - rank(complex.differential(0, origin));
}

}  // namespace isoext
