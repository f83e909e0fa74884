#include "isoext/cobar.hpp"

#include "isoext/errors.hpp"
#include "isoext/parallel.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace isoext {

namespace {

    int min_basis_p(const Comodule& c)
    {
        int m = 0;
        for (const auto& e : c.basis)
            m = std::min(m, e.deg.p);
        return m;
    }

}  // namespace

CobarComplex::CobarComplex(Comodule n, Comodule m, ChartBounds bounds) : n_(std::move(n)), m_(std::move(m)), bounds_(bounds)
{
    build_basis();
}

Bidegree CobarComplex::hom_degree(const CobarElem& e) const
{
    Bidegree d = m_.basis[e.m_idx].deg - n_.basis[e.n_idx].deg;
    for (const auto& w : e.word)
        d = d + w.bidegree();
    return d;
}

void CobarComplex::build_basis()
{
    // reduced-coaction transpose of n
    n_transpose_.assign(n_.dim(), {});
    for (int j = 0; j < n_.dim(); ++j)
        for (const auto& t : n_.coaction[j])
            if (!t.mon.is_one())
                n_transpose_[t.target].emplace_back(t.mon, j);

    max_word_p_ = 0;
    if (n_.dim() && m_.dim()) {
        int max_pn = 0, min_pm = 0;
        for (const auto& e : n_.basis)
            max_pn = std::max(max_pn, e.deg.p);
        min_pm = min_basis_p(m_);
        max_word_p_ = std::max(0, bounds_.max_t() + max_pn - min_pm);
    }

    // positive-degree G monomials up to the word degree cap
    for (int d = 1; 2 * d <= max_word_p_; ++d)
        for (const auto& mon : enumerate_basis(AlgebraId::G, {2 * d, d}))
            letters_.push_back(mon);

    const int max_level = bounds_.max_s + 1;
    basis_.assign(max_level + 1, {});
    if (n_.dim() == 0 || m_.dim() == 0)
        return;

    // words of length s with total degree <= cap, depth-first over letters
    std::vector<MonomialKey> word;
    auto emit = [this](const std::vector<MonomialKey>& w) {
        int s = static_cast<int>(w.size());
        for (int ni = 0; ni < n_.dim(); ++ni)
            for (int mi = 0; mi < m_.dim(); ++mi) {
                CobarElem e{ni, w, mi};
                Bidegree tu = hom_degree(e);
                if (tu.p > bounds_.max_t())
                    continue;
                if (tu.q < bounds_.u_min || tu.q > bounds_.u_max)
                    continue;
                basis_[s][tu].push_back(std::move(e));
            }
    };

    auto rec = [&](auto&& self, int used_p) -> void {
        emit(word);
        if (static_cast<int>(word.size()) == max_level)
            return;
        for (const auto& letter : letters_) {
            int p = letter.bidegree().p;
            if (used_p + p > max_word_p_)
                continue;
            word.push_back(letter);
            self(self, used_p + p);
            word.pop_back();
        }
    };
    rec(rec, 0);

    for (auto& level : basis_)
        for (auto& [tu, elems] : level)
            std::sort(elems.begin(), elems.end());
}

const std::vector<CobarElem>& CobarComplex::basis(int s, Bidegree tu) const
{
    static const std::vector<CobarElem> kEmpty;
    if (s < 0 || s >= static_cast<int>(basis_.size()))
        return kEmpty;
    auto it = basis_[s].find(tu);
    return it == basis_[s].end() ? kEmpty : it->second;
}

int CobarComplex::elem_index(int s, Bidegree tu, const CobarElem& e) const
{
    const auto& slice = basis(s, tu);
    auto it = std::lower_bound(slice.begin(), slice.end(), e);
    if (it == slice.end() || !(*it == e))
        return -1;
    return static_cast<int>(it - slice.begin());
}

F2Matrix CobarComplex::differential(int s, Bidegree tu) const
{
    const auto& cols = basis(s, tu);
    const auto& rows = basis(s + 1, tu);
    F2Matrix d(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    if (rows.empty() || cols.empty())
        return d;

    std::vector<std::vector<int>> by_row(rows.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        const auto& e = cols[c];
        std::vector<int> targets;

        // reduced coaction of n into the first bar slot
        for (const auto& [g, src] : n_transpose_[e.n_idx]) {
            CobarElem out{src, {}, e.m_idx};
            out.word.reserve(e.word.size() + 1);
            out.word.push_back(g);
            out.word.insert(out.word.end(), e.word.begin(), e.word.end());
            targets.push_back(elem_index(s + 1, tu, out));
        }
        // reduced coproduct expanding each bar slot
        for (size_t k = 0; k < e.word.size(); ++k)
            for (const auto& [g1, g2] : coproduct(AlgebraId::G, e.word[k]).terms) {
                if (g1.is_one() || g2.is_one())
                    continue;
                CobarElem out{e.n_idx, {}, e.m_idx};
                out.word.reserve(e.word.size() + 1);
                out.word.insert(out.word.end(), e.word.begin(), e.word.begin() + k);
                out.word.push_back(g1);
                out.word.push_back(g2);
                out.word.insert(out.word.end(), e.word.begin() + k + 1, e.word.end());
                targets.push_back(elem_index(s + 1, tu, out));
            }
        // reduced coaction of m appended to the last slot
        for (const auto& t : m_.coaction[e.m_idx]) {
            if (t.mon.is_one())
                continue;
            CobarElem out{e.n_idx, e.word, t.target};
            out.word.push_back(t.mon);
            targets.push_back(elem_index(s + 1, tu, out));
        }

        std::sort(targets.begin(), targets.end());
        for (size_t i = 0; i < targets.size();) {
            size_t j = i;
            while (j < targets.size() && targets[j] == targets[i])
                ++j;
            if ((j - i) % 2) {
                if (targets[i] < 0)
                    throw Error("cobar differential target missing from basis slice");
                by_row[targets[i]].push_back(static_cast<int>(c));
            }
            i = j;
        }
    }
    for (size_t r = 0; r < rows.size(); ++r)
        d.row[r] = F2Vector{std::move(by_row[r])};
    return d;
}

std::vector<Bidegree> CobarComplex::degrees(int s) const
{
    std::vector<Bidegree> out;
    if (s < 0 || s >= static_cast<int>(basis_.size()))
        return out;
    for (const auto& [tu, elems] : basis_[s])
        if (!elems.empty())
            out.push_back(tu);
    return out;
}

int certified_stem(const Comodule& n, const Comodule& m)
{
    int cert = kDegUnbounded;
    if (n.truncated_at_p)
        cert = -kDegUnbounded;  // truncations are certified in the second slot only
    if (m.truncated_at_p)
        cert = std::min(cert, *m.truncated_at_p - 1 - std::max(0, n.max_p()));
    return cert;
}

ExtChart cobar_ext(const Comodule& n, const Comodule& m, ChartBounds bounds, int threads)
{
    require_valid(n);
    require_valid(m);
    if (bounds.max_stem > certified_stem(n, m))
        throw WindowTooSmall(fmt::format("requested stems up to {} exceed the certified range {} of the truncated input; enlarge the cofree window", bounds.max_stem, certified_stem(n, m)));

    ExtChart chart;
    chart.bounds = bounds;
    chart.engine = "cobar";
    if (bounds.empty())
        return chart;

    CobarComplex complex(n, m, bounds);

    // one task per occupied (t,u) slice
    std::vector<Bidegree> slices;
    for (int s = 0; s <= bounds.max_s; ++s)
        for (const auto& tu : complex.degrees(s))
            slices.push_back(tu);
    std::sort(slices.begin(), slices.end());
    slices.erase(std::unique(slices.begin(), slices.end()), slices.end());

    std::vector<std::vector<std::pair<Tridegree, int>>> results(slices.size());
    parallel_for(static_cast<int>(slices.size()), threads, [&](int idx) {
        Bidegree tu = slices[idx];
        int rank_prev = 0;
        for (int s = 0; s <= bounds.max_s; ++s) {
            int dim_s = static_cast<int>(complex.basis(s, tu).size());
            int rank_s = dim_s ? rank(complex.differential(s, tu)) : 0;
            int h = dim_s - rank_s - rank_prev;
            Tridegree deg{s, tu.p, tu.q};
            if (h > 0 && bounds.contains(deg))
                results[idx].emplace_back(deg, h);
            rank_prev = rank_s;
        }
    });

    for (const auto& slice_dims : results)
        for (const auto& [deg, h] : slice_dims)
            chart.set(deg, h);
    return chart;
}

}  // namespace isoext
