#pragma once

#include "isoext/chart.hpp"
#include "isoext/cobar.hpp"
#include "isoext/comodule.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace isoext {

/// A multiset of generator bidegrees, either listed explicitly (possibly
/// with an infinite multiplicity) or described by a built-in family rule.
struct GeneratorSet
{
    enum class Family
    {
        Explicit,
        GMonomials,    // bidegrees of all G monomials
        GTensorG,      // bidegrees of G (x) G monomial pairs
        Diagonal2N,    // {(2n, n) : n >= 0}, multiplicity one
        HptMonomials,  // bidegrees of all HPT monomials
    };

    Family family = Family::Explicit;
    std::vector<std::pair<Bidegree, long>> entries;  // Explicit only; -1 = infinite

    static GeneratorSet explicit_set(std::vector<std::pair<Bidegree, long>> e)
    {
        GeneratorSet g;
        g.entries = std::move(e);
        return g;
    }
    static GeneratorSet family_set(Family f)
    {
        GeneratorSet g;
        g.family = f;
        return g;
    }
    static GeneratorSet of_comodule(const Comodule& c);

    /// Members in the cone p - p_a >= 2(q - q_a) >= 0 of the probe;
    /// absent when infinite.
    std::optional<long> cone_count(Bidegree probe) const;

    /// Chow-Novikov degree range of the family; absent when unbounded.
    std::optional<std::pair<int, int>> cn_range() const;
};

struct IftResult
{
    bool ok = true;
    std::optional<Bidegree> witness;  // probe with unbounded count
};

/// Isotropically-finite-type check over every probe bidegree in the window.
IftResult ift_check(const GeneratorSet& gens, BidegreeWindow probe_window);

enum class Engine
{
    Cobar,
    Resolution,
};

/// E2-page of the isotropic Adams spectral sequence for the G-comodule
/// factor l: Ext_G(F2, l). The generator set of H (x) l must pass the
/// finiteness gate. Throws NotIsotropicallyFiniteType, InvalidComodule,
/// WindowTooSmall.
ExtChart iso_ass_e2(const Comodule& l, const GeneratorSet& gens, ChartBounds bounds, Engine engine = Engine::Cobar, int threads = 1);
ExtChart iso_ass_e2(const Comodule& l, ChartBounds bounds, Engine engine = Engine::Cobar, int threads = 1);

/// Sphere homotopy table: dimension at (p,q) is the E2 entry at
/// (2q-p, 2q, q).
std::map<Bidegree, int> sphere_homotopy(ChartBounds bounds, Engine engine = Engine::Cobar, int threads = 1);

struct CollapseReport
{
    int source_cn_min = 0, source_cn_max = 0;  // [a,b] of the source
    int target_cn_min = 0, target_cn_max = 0;  // [c,d] of the target
    int page = 2;                              // d - a - c + b + 2
};

struct AnssResult
{
    ExtChart chart;
    CollapseReport collapse;
};

/// Isotropic Adams-Novikov E2-page with its collapse page, computed from
/// the Chow-Novikov supports. Entries are checked against the vanishing
/// range c-b+2u <= t <= d-a+2u. Throws InvalidComodule,
/// UnboundedChowNovikov.
AnssResult iso_anss(const Comodule& n, const Comodule& m, ChartBounds bounds, int threads = 1, const std::optional<GeneratorSet>& n_family = std::nullopt, const std::optional<GeneratorSet>& m_family = std::nullopt);

/// Heart-level homotopy table over a finite (t,u) window: dimension at
/// (t,u) is the E2 entry at (2u-t, 2u, u). Both comodules must be CN-0;
/// the vanishing off t = 2u is checked, not assumed.
std::map<Bidegree, int> heart_homotopy(const Comodule& n, const Comodule& m, BidegreeWindow window, int threads = 1);

/// Dimension of the bidegree-preserving comodule hom space, for n in
/// non-negative and m in non-positive Chow-Novikov degrees.
int heart_hom(const Comodule& n, const Comodule& m);

}  // namespace isoext
