#include "isoext/resolution.hpp"

#include "isoext/comodule_io.hpp"
#include "isoext/errors.hpp"
#include "isoext/parallel.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace isoext {

namespace {

    uint64_t fnv1a(const std::string& s)
    {
        uint64_t h = 1469598103934665603ull;
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }

}  // namespace

std::string ModuleSpec::id() const
{
    switch (kind) {
    case Kind::Trivial: {
        if (gens.size() == 1 && gens[0] == Bidegree{0, 0})
            return "sphere";
        std::string s = "trivial:";
        for (size_t i = 0; i < gens.size(); ++i)
            s += fmt::format("{}{},{}", i ? ";" : "", gens[i].p, gens[i].q);
        return s;
    }
    case Kind::Free: {
        std::string s = "free:";
        for (size_t i = 0; i < gens.size(); ++i)
            s += fmt::format("{}{},{}", i ? ";" : "", gens[i].p, gens[i].q);
        return s;
    }
    case Kind::Dual:
        return fmt::format("dual:{:016x}", fnv1a(serialize_comodule(dual)));
    }
    return "?";
}

std::vector<ModuleSpec::Elem> ModuleSpec::basis_at(Bidegree d) const
{
    std::vector<Elem> out;
    switch (kind) {
    case Kind::Trivial:
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i] == d)
                out.push_back({static_cast<int>(i), MonomialKey::one()});
        break;
    case Kind::Free:
        for (size_t i = 0; i < gens.size(); ++i) {
            Bidegree need = d - gens[i];
            if (need.p < 0 || need.p != 2 * need.q)
                continue;
            for (const auto& b : enumerate_basis(AlgebraId::G, need))
                out.push_back({static_cast<int>(i), b});
        }
        break;
    case Kind::Dual:
        for (int i = 0; i < dual.dim(); ++i)
            if (dual.basis[i].deg == d)
                out.push_back({i, MonomialKey::one()});
        break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

F2Vector ModuleSpec::act(const MonomialKey& b, const Elem& e) const
{
    Bidegree target_deg = elem_degree(e) + b.bidegree();
    auto target_basis = basis_at(target_deg);
    F2Vector out;
    if (b.is_one()) {
        auto it = std::lower_bound(target_basis.begin(), target_basis.end(), e);
        if (it != target_basis.end() && *it == e)
            out.support.push_back(static_cast<int>(it - target_basis.begin()));
        return out;
    }
    switch (kind) {
    case Kind::Trivial:
        break;  // positive-degree action vanishes
    case Kind::Free: {
        auto prod = dual_product(AlgebraId::G, b, e.op);
        const auto& mono_basis = enumerate_basis(AlgebraId::G, b.bidegree() + e.op.bidegree());
        for (int i : prod.support) {
            Elem target{e.gen, mono_basis[i]};
            auto it = std::lower_bound(target_basis.begin(), target_basis.end(), target);
            if (it != target_basis.end() && *it == target)
                out.support.push_back(static_cast<int>(it - target_basis.begin()));
        }
        break;
    }
    case Kind::Dual: {
        // (b . m_j^v) picks out coaction terms b (x) m_j
        for (size_t i = 0; i < target_basis.size(); ++i) {
            int src = target_basis[i].gen;
            CoactionTerm key{b, e.gen};
            if (std::binary_search(dual.coaction[src].begin(), dual.coaction[src].end(), key))
                out.support.push_back(static_cast<int>(i));
        }
        break;
    }
    }
    return out;
}

Bidegree ModuleSpec::elem_degree(const Elem& e) const
{
    switch (kind) {
    case Kind::Trivial:
    case Kind::Free:
        return gens[e.gen] + e.op.bidegree();
    case Kind::Dual:
        return dual.basis[e.gen].deg;
    }
    return {};
}

std::string ModuleSpec::elem_label(const Elem& e) const
{
    switch (kind) {
    case Kind::Trivial:
        return fmt::format("g{}", e.gen);
    case Kind::Free:
        return e.op.is_one() ? fmt::format("g{}", e.gen) : fmt::format("{}*g{}", exponents_str(e.op), e.gen);
    case Kind::Dual:
        return dual.basis[e.gen].label;
    }
    return "?";
}

ModuleSpec::Elem ModuleSpec::elem_from_label(const std::string& label) const
{
    switch (kind) {
    case Kind::Trivial:
    case Kind::Free: {
        std::string body = label;
        MonomialKey op;
        auto star = label.find("*g");
        if (star != std::string::npos) {
            op = monomial_from_exponents(label.substr(0, star));
            body = label.substr(star + 1);
        }
        if (body.size() < 2 || body[0] != 'g')
            throw CorruptCheckpoint(fmt::format("bad module element label '{}'", label));
        int idx = 0;
        try {
            idx = std::stoi(body.substr(1));
        }
        catch (...) {
            throw CorruptCheckpoint(fmt::format("bad module element label '{}'", label));
        }
        if (idx < 0 || idx >= static_cast<int>(gens.size()))
            throw CorruptCheckpoint(fmt::format("module element '{}' out of range", label));
        return {idx, op};
    }
    case Kind::Dual: {
        int idx = dual.find(label);
        if (idx < 0)
            throw CorruptCheckpoint(fmt::format("unknown comodule element '{}'", label));
        return {idx, MonomialKey::one()};
    }
    }
    throw CorruptCheckpoint("bad module element label");
}

std::vector<int> ModuleSpec::weights_at(int t) const
{
    std::vector<int> out;
    switch (kind) {
    case Kind::Trivial:
        for (const auto& g : gens)
            if (g.p == t)
                out.push_back(g.q);
        break;
    case Kind::Free:
        for (const auto& g : gens) {
            int diff = t - g.p;
            if (diff >= 0 && diff % 2 == 0)
                out.push_back(g.q + diff / 2);
        }
        break;
    case Kind::Dual:
        for (const auto& e : dual.basis)
            if (e.deg.p == t)
                out.push_back(e.deg.q);
        break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void ModuleSpec::check_consistent() const
{
    if (kind == Kind::Dual) {
        auto rep = validate(dual);
        if (!rep.ok()) {
            std::string msg = "module presentation is not a valid comodule dual:";
            for (const auto& i : rep.issues)
                msg += fmt::format(" [{}: {}]", i.element, i.message);
            throw PresentationInconsistent(msg);
        }
    }
}

std::string Resolution::gen_label(int s, int i) const
{
    (void)this;
    return fmt::format("{}_{}", s, i);
}

int Resolution::total_generators() const
{
    int n = 0;
    for (const auto& level : levels)
        n += static_cast<int>(level.size());
    return n;
}

namespace {

    int module_min_t(const ModuleSpec& module)
    {
        int m = 0;
        switch (module.kind) {
        case ModuleSpec::Kind::Trivial:
        case ModuleSpec::Kind::Free:
            for (const auto& g : module.gens)
                m = std::min(m, g.p);
            break;
        case ModuleSpec::Kind::Dual:
            for (const auto& e : module.dual.basis)
                m = std::min(m, e.deg.p);
            break;
        }
        return m;
    }

    // basis element (generator, monomial) of a free level in one bidegree
    struct FreeElem
    {
        int gen;
        MonomialKey op;
        auto operator<=>(const FreeElem&) const = default;
    };

    std::vector<FreeElem> free_basis_at(const Resolution& res, int s, Bidegree d)
    {
        std::vector<FreeElem> out;
        if (s < 0 || s >= static_cast<int>(res.levels.size()))
            return out;
        const auto& level = res.levels[s];
        for (size_t g = 0; g < level.size(); ++g) {
            Bidegree need = d - level[g].deg;
            if (need.p < 0 || need.p != 2 * need.q)
                continue;
            for (const auto& b : enumerate_basis(AlgebraId::G, need))
                out.push_back({static_cast<int>(g), b});
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    int index_of(const std::vector<FreeElem>& basis, const FreeElem& e)
    {
        auto it = std::lower_bound(basis.begin(), basis.end(), e);
        if (it == basis.end() || !(*it == e))
            return -1;
        return static_cast<int>(it - basis.begin());
    }

    // column of the differential for b * gen at level s >= 1, over the free
    // basis of level s-1 in the same bidegree
    F2Vector diff_column(const Resolution& res, int s, const FreeElem& col, const std::vector<FreeElem>& rows)
    {
        std::vector<int> hits;
        const auto& gen = res.levels[s][col.gen];
        for (const auto& term : gen.diff) {
            auto prod = dual_product(AlgebraId::G, col.op, term.op);
            const auto& mono_basis = enumerate_basis(AlgebraId::G, col.op.bidegree() + term.op.bidegree());
            for (int i : prod.support) {
                int r = index_of(rows, {term.target, mono_basis[i]});
                if (r < 0)
                    throw Error("resolution differential target missing from basis");
                hits.push_back(r);
            }
        }
        std::sort(hits.begin(), hits.end());
        F2Vector out;
        for (size_t i = 0; i < hits.size();) {
            size_t j = i;
            while (j < hits.size() && hits[j] == hits[i])
                ++j;
            if ((j - i) % 2)
                out.support.push_back(hits[i]);
            i = j;
        }
        return out;
    }

    // column of the level-0 differential into the module
    F2Vector diff0_column(const Resolution& res, const FreeElem& col, Bidegree d)
    {
        const auto& gen = res.levels[0][col.gen];
        (void)d;
        return res.module.act(col.op, gen.diff0.front());
    }

    struct NewGen
    {
        Bidegree deg;
        std::vector<DiffTerm> diff;
        std::vector<ModuleSpec::Elem> diff0;
    };

    // The (s,t) task: find the new generators this slot contributes.
    std::vector<NewGen> run_task(const Resolution& res, int s, int t)
    {
        std::vector<NewGen> out;

        if (s == 0) {
            const int min_t = module_min_t(res.module);
            for (int u : res.module.weights_at(t)) {
                Bidegree d{t, u};
                auto elems = res.module.basis_at(d);
                if (elems.empty())
                    continue;
                // span of the positive-degree action hitting this degree
                RowSpace span(static_cast<int>(elems.size()));
                for (int dd = 1; 2 * dd <= t - min_t; ++dd) {
                    Bidegree bdeg{2 * dd, dd};
                    auto sources = res.module.basis_at(d - bdeg);
                    if (sources.empty())
                        continue;
                    for (const auto& b : enumerate_basis(AlgebraId::G, bdeg))
                        for (const auto& src : sources)
                            span.insert(res.module.act(b, src));
                }
                for (size_t i = 0; i < elems.size(); ++i)
                    if (span.insert(F2Vector::unit(static_cast<int>(i))))
                        out.push_back({d, {}, {elems[i]}});
            }
            return out;
        }

        // weights occupied by the free module one level down
        std::vector<int> weights;
        for (const auto& g : res.levels[s - 1]) {
            int diff = t - g.deg.p;
            if (diff >= 0 && diff % 2 == 0)
                weights.push_back(g.deg.q + diff / 2);
        }
        std::sort(weights.begin(), weights.end());
        weights.erase(std::unique(weights.begin(), weights.end()), weights.end());

        for (int u : weights) {
            Bidegree d{t, u};
            auto rows_prev = free_basis_at(res, s - 1, d);
            if (rows_prev.empty())
                continue;

            // kernel of the previous differential in this bidegree
            F2Matrix prev(0, static_cast<int>(rows_prev.size()));
            std::vector<F2Vector> cols;
            if (s == 1) {
                auto module_rows = res.module.basis_at(d);
                prev = F2Matrix(static_cast<int>(module_rows.size()), static_cast<int>(rows_prev.size()));
                for (size_t c = 0; c < rows_prev.size(); ++c)
                    cols.push_back(diff0_column(res, rows_prev[c], d));
            }
            else {
                auto rows_prev2 = free_basis_at(res, s - 2, d);
                prev = F2Matrix(static_cast<int>(rows_prev2.size()), static_cast<int>(rows_prev.size()));
                for (size_t c = 0; c < rows_prev.size(); ++c)
                    cols.push_back(diff_column(res, s - 1, rows_prev[c], rows_prev2));
            }
            for (size_t c = 0; c < cols.size(); ++c)
                for (int r : cols[c].support)
                    prev.row[r].support.push_back(static_cast<int>(c));
            for (auto& r : prev.row)
                std::sort(r.support.begin(), r.support.end());

            auto kernel = kernel_basis(prev);
            if (kernel.empty())
                continue;

            // image of the current differential from generators below t
            RowSpace image(static_cast<int>(rows_prev.size()));
            auto cur_cols = free_basis_at(res, s, d);
            for (const auto& col : cur_cols)
                image.insert(diff_column(res, s, col, rows_prev));

            for (const auto& k : kernel) {
                if (!image.insert(k))
                    continue;
                NewGen gen;
                gen.deg = d;
                for (int r : k.support) {
                    const auto& e = rows_prev[r];
                    if (e.op.is_one())
                        throw Error("minimality violated: unit coefficient in a differential");
                    gen.diff.push_back({e.op, e.gen});
                }
                std::sort(gen.diff.begin(), gen.diff.end());
                out.push_back(std::move(gen));
            }
        }
        return out;
    }

}  // namespace

void extend_resolution(Resolution& res, int max_s, int max_t, int threads)
{
    res.module.check_consistent();
    max_s = std::max(max_s, res.done_s);
    max_t = std::max(max_t, res.done_t);
    if (static_cast<int>(res.levels.size()) < max_s + 1)
        res.levels.resize(max_s + 1);

    const int min_t = module_min_t(res.module);
    auto done = [&](int s, int t) { return s <= res.done_s && t <= res.done_t; };

    // anti-diagonal wavefront: tasks on s + t = c are independent
    for (int c = min_t; c <= max_s + max_t; ++c) {
        std::vector<std::pair<int, int>> tasks;
        for (int s = 0; s <= std::min(max_s, c - min_t); ++s) {
            int t = c - s;
            if (t >= min_t && t <= max_t && !done(s, t))
                tasks.emplace_back(s, t);
        }
        if (tasks.empty())
            continue;
        std::vector<std::vector<NewGen>> results(tasks.size());
        parallel_for(static_cast<int>(tasks.size()), threads, [&](int i) { results[i] = run_task(res, tasks[i].first, tasks[i].second); });
        // merge in task order; per level this is ascending t
        for (size_t i = 0; i < tasks.size(); ++i)
            for (auto& gen : results[i])
                res.levels[tasks[i].first].push_back({gen.deg, std::move(gen.diff), std::move(gen.diff0)});
    }
    res.done_s = max_s;
    res.done_t = max_t;
}

Resolution minimal_resolution(const ModuleSpec& module, int max_s, int max_t, int threads)
{
    Resolution res;
    res.module = module;
    extend_resolution(res, max_s, max_t, threads);
    return res;
}

ExtChart chart_from_resolution(const Resolution& res, ChartBounds bounds)
{
    if (bounds.max_s > res.done_s || bounds.max_t() > res.done_t)
        throw Error(fmt::format("chart bounds (s<={}, t<={}) exceed the resolution watermark (s<={}, t<={})", bounds.max_s, bounds.max_t(), res.done_s, res.done_t));
    ExtChart chart;
    chart.bounds = bounds;
    chart.engine = "resolution";
    for (int s = 0; s < static_cast<int>(res.levels.size()) && s <= bounds.max_s; ++s)
        for (size_t i = 0; i < res.levels[s].size(); ++i) {
            const auto& gen = res.levels[s][i];
            Tridegree deg{s, gen.deg.p, gen.deg.q};
            if (!bounds.contains(deg))
                continue;
            chart.set(deg, chart.dim(deg) + 1);
            chart.labels[deg].push_back(res.gen_label(s, static_cast<int>(i)));
        }
    return chart;
}

}  // namespace isoext
