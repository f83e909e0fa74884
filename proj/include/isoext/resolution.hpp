#pragma once

#include "isoext/chart.hpp"
#include "isoext/comodule.hpp"

#include <string>
#include <vector>

namespace isoext {

/// The module resolved over the dual of G (the bigraded Steenrod algebra
/// acting through dual_product).
struct ModuleSpec
{
    enum class Kind
    {
        Trivial,  // F2^k with vanishing positive-degree action
        Free,     // free module on the listed generators
        Dual,     // dual of a finite comodule
    };

    Kind kind = Kind::Trivial;
    std::vector<Bidegree> gens;  // Trivial / Free
    Comodule dual;               // Dual

    static ModuleSpec sphere()
    {
        return trivial_module({{0, 0}});
    }
    static ModuleSpec trivial_module(std::vector<Bidegree> degrees)
    {
        ModuleSpec m;
        m.kind = Kind::Trivial;
        m.gens = std::move(degrees);
        return m;
    }
    static ModuleSpec free_module(std::vector<Bidegree> degrees)
    {
        ModuleSpec m;
        m.kind = Kind::Free;
        m.gens = std::move(degrees);
        return m;
    }
    static ModuleSpec dual_of(Comodule c)
    {
        ModuleSpec m;
        m.kind = Kind::Dual;
        m.dual = std::move(c);
        return m;
    }

    /// Canonical identifier recorded in checkpoints.
    std::string id() const;

    /// Ordered basis of the module in one bidegree (element handles).
    struct Elem
    {
        int gen = 0;        // generator / comodule basis index
        MonomialKey op;     // free part; the unit for Trivial and Dual
        auto operator<=>(const Elem&) const = default;
    };
    std::vector<Elem> basis_at(Bidegree d) const;

    /// Left action of a monomial dual on a module element, as a vector over
    /// basis_at(degree(e) + degree(b)).
    F2Vector act(const MonomialKey& b, const Elem& e) const;

    Bidegree elem_degree(const Elem& e) const;
    std::string elem_label(const Elem& e) const;
    /// Parse an element label from a checkpoint dif line.
    Elem elem_from_label(const std::string& label) const;

    /// Weights occupied at internal degree t.
    std::vector<int> weights_at(int t) const;

    void check_consistent() const;  // throws PresentationInconsistent
};

/// One term op * target of a differential; at level 0 the target is a
/// module element handle, above it is a generator id one level down.
struct DiffTerm
{
    MonomialKey op;
    int target = 0;
    auto operator<=>(const DiffTerm&) const = default;
};

struct ResGenerator
{
    Bidegree deg;  // internal degree (t,u)
    std::vector<DiffTerm> diff;
    std::vector<ModuleSpec::Elem> diff0;  // level-0 image (single element)
};

/// Minimal free resolution data with a rectangular completion watermark:
/// every task (s,t) with s <= done_s and t <= done_t is complete.
struct Resolution
{
    ModuleSpec module;
    int done_s = -1;
    int done_t = -1;
    std::vector<std::vector<ResGenerator>> levels;

    std::string gen_label(int s, int i) const;
    int total_generators() const;
};

/// Build the resolution through filtration max_s and internal degree max_t.
/// Deterministic: independent of thread count. Throws
/// PresentationInconsistent on malformed module input.
Resolution minimal_resolution(const ModuleSpec& module, int max_s, int max_t, int threads = 1);

/// Grow an existing resolution to the union rectangle; no completed task is
/// recomputed, and the result is identical to a from-scratch run.
void extend_resolution(Resolution& res, int max_s, int max_t, int threads = 1);

/// Chart read off the generator counts (minimality makes this exact).
/// Bounds must sit inside the watermark.
ExtChart chart_from_resolution(const Resolution& res, ChartBounds bounds);

/// Checkpoint text format; canonical bytes. Parsing binds the module the
/// checkpoint was computed for and verifies its id.
/// Throws CorruptCheckpoint / VersionMismatch.
std::string checkpoint_serialize(const Resolution& res);
Resolution checkpoint_parse(const std::string& text, const ModuleSpec& module);
void checkpoint_save(const Resolution& res, const std::string& path);

/// Load a checkpoint for `module` and extend it to the new bounds; the
/// result is identical to a from-scratch run at the union rectangle.
Resolution resume(const std::string& path, const ModuleSpec& module, int max_s, int max_t, int threads = 1);

}  // namespace isoext
