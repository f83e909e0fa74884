#include "isoext/comodule.hpp"

#include "isoext/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>
#include <tuple>

namespace isoext {

namespace {

    void reduce_terms(std::vector<CoactionTerm>& terms)
    {
        std::sort(terms.begin(), terms.end());
        std::vector<CoactionTerm> out;
        for (size_t i = 0; i < terms.size();) {
            size_t j = i;
            while (j < terms.size() && terms[j] == terms[i])
                ++j;
            if ((j - i) % 2)
                out.push_back(terms[i]);
            i = j;
        }
        terms = std::move(out);
    }

    using Triple = std::tuple<MonomialKey, MonomialKey, int>;

    void reduce_triples(std::vector<Triple>& v)
    {
        std::sort(v.begin(), v.end());
        std::vector<Triple> out;
        for (size_t i = 0; i < v.size();) {
            size_t j = i;
            while (j < v.size() && v[j] == v[i])
                ++j;
            if ((j - i) % 2)
                out.push_back(v[i]);
            i = j;
        }
        v = std::move(out);
    }

    // Reduced coproduct of a G monomial.
    std::vector<std::pair<MonomialKey, MonomialKey>> reduced_coproduct(const MonomialKey& m)
    {
        std::vector<std::pair<MonomialKey, MonomialKey>> out;
        for (const auto& [a, b] : coproduct(AlgebraId::G, m).terms)
            if (!a.is_one() && !b.is_one())
                out.emplace_back(a, b);
        return out;
    }

    std::vector<CoactionTerm> reduced_coaction(const Comodule& c, int j)
    {
        std::vector<CoactionTerm> out;
        for (const auto& t : c.coaction[j])
            if (!(t.mon.is_one() && t.target == j))
                out.push_back(t);
        return out;
    }

}  // namespace

Comodule Comodule::trivial(std::vector<BasisElem> elems)
{
    Comodule c;
    c.basis = std::move(elems);
    c.coaction.resize(c.basis.size());
    for (size_t j = 0; j < c.basis.size(); ++j)
        c.coaction[j].push_back({MonomialKey::one(), static_cast<int>(j)});
    c.canonicalize();
    return c;
}

Comodule Comodule::sphere()
{
    return trivial({{"s", {0, 0}}});
}

int Comodule::find(const std::string& label) const
{
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].label == label)
            return static_cast<int>(i);
    return -1;
}

void Comodule::canonicalize()
{
    std::vector<int> order(basis.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [this](int a, int b) {
        return std::tie(basis[a].deg.p, basis[a].deg.q, basis[a].label) < std::tie(basis[b].deg.p, basis[b].deg.q, basis[b].label);
    });
    std::vector<int> where(basis.size());
    for (size_t pos = 0; pos < order.size(); ++pos)
        where[order[pos]] = static_cast<int>(pos);

    std::vector<BasisElem> new_basis(basis.size());
    std::vector<std::vector<CoactionTerm>> new_coaction(basis.size());
    for (size_t old = 0; old < basis.size(); ++old) {
        new_basis[where[old]] = basis[old];
        auto terms = coaction[old];
        for (auto& t : terms)
            t.target = where[t.target];
        reduce_terms(terms);
        new_coaction[where[old]] = std::move(terms);
    }
    basis = std::move(new_basis);
    coaction = std::move(new_coaction);
}

std::vector<int> Comodule::cn_support() const
{
    std::vector<int> out;
    for (const auto& e : basis)
        out.push_back(e.deg.cn());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int Comodule::max_p() const
{
    int m = 0;
    for (const auto& e : basis)
        m = std::max(m, e.deg.p);
    return m;
}

ValidationReport validate(const Comodule& c)
{
    ValidationReport rep;
    auto issue = [&rep](const std::string& elem, std::string msg) {
        rep.issues.push_back({elem, std::move(msg)});
    };

    if (c.coaction.size() != c.basis.size()) {
        issue("", "coaction table size differs from basis size");
        return rep;
    }
    for (size_t i = 0; i < c.basis.size(); ++i)
        for (size_t j = i + 1; j < c.basis.size(); ++j)
            if (c.basis[i].label == c.basis[j].label)
                issue(c.basis[i].label, "duplicate label");

    for (size_t j = 0; j < c.basis.size(); ++j) {
        const auto& v = c.basis[j];
        auto terms = c.coaction[j];
        reduce_terms(terms);

        bool malformed = false;
        for (const auto& t : terms) {
            if (t.target < 0 || t.target >= c.dim()) {
                issue(v.label, "coaction target out of range");
                malformed = true;
                continue;
            }
            if (!t.mon.rho.empty() || !t.mon.tau.empty()) {
                issue(v.label, fmt::format("coaction monomial {} is not a G monomial", t.mon.str()));
                malformed = true;
            }
        }
        if (malformed)
            continue;

        // counit: the unit-monomial part of psi(v) must be exactly 1 (x) v
        std::vector<int> unit_targets;
        for (const auto& t : terms)
            if (t.mon.is_one())
                unit_targets.push_back(t.target);
        if (unit_targets != std::vector<int>{static_cast<int>(j)})
            issue(v.label, "counit fails: unit part of the coaction is not 1 (x) self");

        for (const auto& t : terms)
            if (t.mon.bidegree() + c.basis[t.target].deg != v.deg)
                issue(v.label, fmt::format("bidegree coherence fails on term {} (x) {}", t.mon.str(), c.basis[t.target].label));

        // coassociativity: (Delta (x) 1) psi = (1 (x) psi) psi
        std::vector<Triple> lhs, rhs;
        for (const auto& t : terms) {
            for (const auto& [m1, m2] : coproduct(AlgebraId::G, t.mon).terms)
                lhs.emplace_back(m1, m2, t.target);
            auto inner = c.coaction[t.target];
            reduce_terms(inner);
            for (const auto& s : inner) {
                if (s.target < 0 || s.target >= c.dim() || !s.mon.rho.empty() || !s.mon.tau.empty())
                    continue;  // reported on its own element
                rhs.emplace_back(t.mon, s.mon, s.target);
            }
        }
        reduce_triples(lhs);
        reduce_triples(rhs);
        if (lhs != rhs)
            issue(v.label, "coassociativity fails");
    }
    return rep;
}

void require_valid(const Comodule& c)
{
    auto rep = validate(c);
    if (!rep.ok()) {
        std::string msg = "invalid comodule:";
        for (const auto& i : rep.issues)
            msg += fmt::format(" [{}: {}]", i.element, i.message);
        throw InvalidComodule(msg);
    }
}

std::vector<MonomialKey> coaction_monomials(const Comodule& c)
{
    std::vector<MonomialKey> out;
    for (const auto& terms : c.coaction)
        for (const auto& t : terms)
            if (!t.mon.is_one())
                out.push_back(t.mon);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

F2Matrix coaction_matrix(const Comodule& c, const MonomialKey& mon)
{
    F2Matrix p(c.dim(), c.dim());
    for (int j = 0; j < c.dim(); ++j)
        for (const auto& t : c.coaction[j])
            if (t.mon == mon)
                p.row[t.target].support.push_back(j);
    for (auto& r : p.row)
        std::sort(r.support.begin(), r.support.end());
    return p;
}

Comodule cofree(const GradedDims& dims, BidegreeWindow window)
{
    if (window.empty())
        throw EmptyWindow("cofree window is empty");
    bool any = false;
    for (const auto& [deg, count] : dims)
        if (count > 0)
            any = true;
    if (any && !window.bounded_above_p())
        throw Error("cofree window must be bounded above in p");

    struct Cogen
    {
        std::string label;
        Bidegree deg;
    };
    std::vector<Cogen> cogens;
    for (const auto& [deg, count] : dims)
        for (int k = 0; k < count; ++k)
            cogens.push_back({fmt::format("e{}", cogens.size()), deg});

    Comodule c;
    // basis element index per (cogen, monomial)
    std::map<std::pair<int, MonomialKey>, int> index;
    for (size_t ci = 0; ci < cogens.size(); ++ci) {
        for (int d = 0; cogens[ci].deg.p + 2 * d <= window.p_max; ++d) {
            for (const auto& m : enumerate_basis(AlgebraId::G, {2 * d, d})) {
                Bidegree deg = cogens[ci].deg + m.bidegree();
                if (!window.contains(deg))
                    continue;
                index[{static_cast<int>(ci), m}] = c.dim();
                c.basis.push_back({fmt::format("{}|{}", m.str(), cogens[ci].label), deg});
            }
        }
    }

    c.coaction.resize(c.basis.size());
    int dropped = 0;
    for (const auto& [key, j] : index) {
        const auto& [ci, m] = key;
        for (const auto& [m1, m2] : coproduct(AlgebraId::G, m).terms) {
            auto it = index.find({ci, m2});
            if (it == index.end()) {
                ++dropped;
                continue;
            }
            c.coaction[j].push_back({m1, it->second});
        }
    }
    c.dropped_terms = dropped;
    if (window.bounded_above_p())
        c.truncated_at_p = window.p_max;
    c.canonicalize();
    return c;
}

std::map<int, Comodule> cn_split(const Comodule& c)
{
    require_valid(c);
    std::map<int, Comodule> parts;
    std::map<int, int> where;  // basis index -> index within its part
    for (int j = 0; j < c.dim(); ++j) {
        auto& part = parts[c.basis[j].deg.cn()];
        where[j] = part.dim();
        part.basis.push_back(c.basis[j]);
        part.coaction.emplace_back();
    }
    for (int j = 0; j < c.dim(); ++j) {
        auto& part = parts[c.basis[j].deg.cn()];
        for (const auto& t : c.coaction[j])
            part.coaction[where[j]].push_back({t.mon, where[t.target]});
    }
    // canonical sub-order of a canonical order needs no resort, but keep the
    // invariant explicit
    for (auto& [cn, part] : parts)
        part.canonicalize();
    return parts;
}

Comodule direct_sum(const std::vector<Comodule>& parts)
{
    Comodule out;
    for (const auto& part : parts) {
        int offset = out.dim();
        for (const auto& e : part.basis) {
            if (out.find(e.label) >= 0)
                throw Error(fmt::format("direct_sum: duplicate label {}", e.label));
            out.basis.push_back(e);
        }
        for (const auto& terms : part.coaction) {
            out.coaction.emplace_back();
            for (const auto& t : terms)
                out.coaction.back().push_back({t.mon, t.target + offset});
        }
    }
    out.canonicalize();
    return out;
}

Comodule shift(const Comodule& c, Bidegree by)
{
    Comodule out = c;
    for (auto& e : out.basis)
        e.deg = e.deg + by;
    if (out.truncated_at_p)
        out.truncated_at_p = *out.truncated_at_p + by.p;
    return out;
}

SingleComodule regrade_heart(const Comodule& c)
{
    for (const auto& e : c.basis)
        if (e.deg.cn() != 0)
            throw NonZeroChowNovikov(fmt::format("element {} sits in Chow-Novikov degree {}", e.label, e.deg.cn()));
    SingleComodule out;
    for (const auto& e : c.basis)
        out.basis.emplace_back(e.label, e.deg.q);
    out.coaction = c.coaction;
    return out;
}

Comodule regrade_heart_inverse(const SingleComodule& c)
{
    Comodule out;
    for (const auto& [label, q] : c.basis)
        out.basis.push_back({label, {2 * q, q}});
    out.coaction = c.coaction;
    out.canonicalize();
    return out;
}

CompositionSeries composition_series(const Comodule& c)
{
    require_valid(c);
    const int n = c.dim();
    auto mons = coaction_monomials(c);
    std::vector<F2Matrix> pmats;
    for (const auto& m : mons)
        pmats.push_back(coaction_matrix(c, m));

    // column classes by bidegree, ascending (basis is canonical)
    std::vector<std::pair<Bidegree, std::vector<int>>> classes;
    for (int j = 0; j < n; ++j) {
        if (classes.empty() || classes.back().first != c.basis[j].deg)
            classes.push_back({c.basis[j].deg, {}});
        classes.back().second.push_back(j);
    }

    CompositionSeries series;
    std::vector<F2Vector> flag;
    RowSpace flag_space(n);

    auto flag_coords = [&](const F2Vector& y) {
        F2Matrix fmat(n, static_cast<int>(flag.size()));
        for (size_t i = 0; i < flag.size(); ++i)
            for (int r : flag[i].support)
                fmat.row[r].support.push_back(static_cast<int>(i));
        auto coords = preimage(fmat, y);
        if (!coords)
            throw InvalidComodule("composition_series: reduced coaction leaves the flag");
        return *coords;
    };

    while (static_cast<int>(flag.size()) < n) {
        bool progress = false;
        for (const auto& [deg, cols] : classes) {
            // kernel of the quotient reduced coaction on this degree slice
            F2Matrix a(static_cast<int>(mons.size()) * n, static_cast<int>(cols.size()));
            for (size_t jloc = 0; jloc < cols.size(); ++jloc)
                for (size_t mi = 0; mi < mons.size(); ++mi) {
                    auto y = flag_space.reduce(pmats[mi].apply(F2Vector::unit(cols[jloc])));
                    for (int r : y.support)
                        a.row[static_cast<int>(mi) * n + r].support.push_back(static_cast<int>(jloc));
                }
            for (auto& r : a.row)
                std::sort(r.support.begin(), r.support.end());

            for (const auto& k : kernel_basis(a)) {
                F2Vector v_full;
                for (int jloc : k.support)
                    v_full.support.push_back(cols[jloc]);
                auto v = flag_space.reduce(v_full);
                if (v.empty())
                    continue;

                std::vector<CoactionTerm> cocycle;
                for (size_t mi = 0; mi < mons.size(); ++mi) {
                    auto y = pmats[mi].apply(v);
                    if (y.empty())
                        continue;
                    for (int i : flag_coords(y).support)
                        cocycle.push_back({mons[mi], i});
                }
                std::sort(cocycle.begin(), cocycle.end());

                series.layers.push_back({deg, fmt::format("x{}", flag.size()), std::move(cocycle)});
                flag.push_back(v);
                flag_space.insert(v);
                progress = true;
            }
        }
        if (!progress)
            throw InvalidComodule("composition_series: no primitive in a nonzero comodule");
    }
    return series;
}

Comodule extension_from_cocycle(const Comodule& c, Bidegree shift_deg, const std::vector<CoactionTerm>& z, const std::string& label)
{
    require_valid(c);
    if (c.find(label) >= 0)
        throw Error(fmt::format("extension_from_cocycle: label {} already used", label));

    auto zred = z;
    reduce_terms(zred);
    for (const auto& t : zred) {
        if (t.target < 0 || t.target >= c.dim())
            throw NotACocycle("cocycle target out of range");
        if (t.mon.is_one())
            throw NotACocycle("cocycle term has a unit coefficient");
        if (!t.mon.rho.empty() || !t.mon.tau.empty())
            throw NotACocycle(fmt::format("cocycle monomial {} is not a G monomial", t.mon.str()));
        if (t.mon.bidegree() + c.basis[t.target].deg != shift_deg)
            throw NotACocycle(fmt::format("cocycle term {} (x) {} is not homogeneous of the extension bidegree", t.mon.str(), c.basis[t.target].label));
    }

    // d^1 z = (reduced coproduct into the bar slot) + (reduced coaction of c)
    std::vector<Triple> dz;
    for (const auto& t : zred) {
        for (const auto& [m1, m2] : reduced_coproduct(t.mon))
            dz.emplace_back(m1, m2, t.target);
        for (const auto& s : reduced_coaction(c, t.target))
            dz.emplace_back(t.mon, s.mon, s.target);
    }
    reduce_triples(dz);
    if (!dz.empty())
        throw NotACocycle(fmt::format("d z has {} surviving terms", dz.size()));

    Comodule out = c;
    out.basis.push_back({label, shift_deg});
    out.coaction.emplace_back();
    out.coaction.back().push_back({MonomialKey::one(), out.dim() - 1});
    for (const auto& t : zred)
        out.coaction.back().push_back(t);
    out.canonicalize();
    return out;
}

Comodule assemble_series(const CompositionSeries& series)
{
    Comodule out = Comodule::empty();
    for (size_t i = 0; i < series.layers.size(); ++i) {
        const auto& layer = series.layers[i];
        std::vector<CoactionTerm> z;
        for (const auto& t : layer.cocycle) {
            int idx = out.find(series.layers[t.target].label);
            if (idx < 0)
                throw Error("assemble_series: cocycle refers to a missing layer");
            z.push_back({t.mon, idx});
        }
        out = extension_from_cocycle(out, layer.deg, z, layer.label);
    }
    return out;
}

bool comodule_isomorphic(const Comodule& a, const Comodule& b, int max_dim)
{
    GradedDims da, db;
    for (const auto& e : a.basis)
        da[e.deg]++;
    for (const auto& e : b.basis)
        db[e.deg]++;
    if (da != db)
        return false;
    const int n = a.dim();
    if (n == 0)
        return true;

    // variables f_{i,j} (b-index, a-index) with matching bidegrees
    std::vector<std::pair<int, int>> vars;
    std::map<std::pair<int, int>, int> var_index;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (b.basis[i].deg == a.basis[j].deg) {
                var_index[{i, j}] = static_cast<int>(vars.size());
                vars.emplace_back(i, j);
            }

    auto mons = coaction_monomials(a);
    for (const auto& m : coaction_monomials(b))
        mons.push_back(m);
    std::sort(mons.begin(), mons.end());
    mons.erase(std::unique(mons.begin(), mons.end()), mons.end());

    // psi_b(f(a_j)) = (1 (x) f)(psi_a(a_j)), coefficientwise
    std::vector<F2Vector> rows;
    for (const auto& m : mons) {
        auto pa = coaction_matrix(a, m);
        auto pb = coaction_matrix(b, m);
        for (int ip = 0; ip < n; ++ip)
            for (int j = 0; j < n; ++j) {
                if (b.basis[ip].deg != a.basis[j].deg - m.bidegree())
                    continue;
                F2Vector row;
                for (int i = 0; i < n; ++i)
                    if (pb.get(ip, i))
                        row ^= F2Vector::unit(var_index.at({i, j}));
                for (int jp = 0; jp < n; ++jp)
                    if (pa.get(jp, j))
                        row ^= F2Vector::unit(var_index.at({ip, jp}));
                if (!row.empty())
                    rows.push_back(std::move(row));
            }
    }
    const int n_rows = static_cast<int>(rows.size());
    F2Matrix system(n_rows, static_cast<int>(vars.size()), std::move(rows));
    auto space = kernel_basis(system);
    int k = static_cast<int>(space.size());
    if (k > max_dim)
        throw Error(fmt::format("comodule_isomorphic: intertwiner space dimension {} exceeds budget {}", k, max_dim));

    // search the intertwiner space for an invertible element
    for (uint64_t mask = 1; mask < (uint64_t(1) << k); ++mask) {
        F2Vector f;
        for (int bit = 0; bit < k; ++bit)
            if ((mask >> bit) & 1u)
                f ^= space[bit];
        F2Matrix fm(n, n);
        for (int v : f.support)
            fm.row[vars[v].first].support.push_back(vars[v].second);
        for (auto& r : fm.row)
            std::sort(r.support.begin(), r.support.end());
        if (rank(fm) == n)
            return true;
    }
    return false;
}

}  // namespace isoext
