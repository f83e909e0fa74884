#pragma once

#include "isoext/chart.hpp"
#include "isoext/comodule.hpp"

#include <map>
#include <vector>

namespace isoext {

/// Basis element n_idx^v (x) (word_1 | ... | word_s (x) m_idx) of the cobar
/// group Hom_F(N, Gbar^{(x)s} (x) M).
struct CobarElem
{
    int n_idx = 0;
    std::vector<MonomialKey> word;
    int m_idx = 0;
    auto operator<=>(const CobarElem&) const = default;
};

/// The cobar complex of a pair of finite comodules within chart bounds:
/// per filtration s, the basis grouped by Hom-bidegree (t,u), plus the
/// differentials d^s : C^s -> C^{s+1} slice by slice.
class CobarComplex
{
public:
    CobarComplex(Comodule n, Comodule m, ChartBounds bounds);

    const ChartBounds& bounds() const
    {
        return bounds_;
    }
    const Comodule& n() const
    {
        return n_;
    }
    const Comodule& m() const
    {
        return m_;
    }

    /// Hom-degree of an element: deg(word) + deg(m elt) - deg(n elt).
    Bidegree hom_degree(const CobarElem& e) const;

    /// Basis of C^s in Hom-degree (t,u), canonically ordered. s may exceed
    /// bounds.max_s by one (needed for the last cokernel rank).
    const std::vector<CobarElem>& basis(int s, Bidegree tu) const;

    /// Matrix of d^s from the (t,u) slice of C^s to the same slice of C^{s+1}.
    F2Matrix differential(int s, Bidegree tu) const;

    /// Hom-degrees occupied by C^s within bounds.
    std::vector<Bidegree> degrees(int s) const;

private:
    Comodule n_, m_;
    ChartBounds bounds_;
    int max_word_p_ = 0;
    std::vector<MonomialKey> letters_;  // positive-degree G monomials
    // transpose of the reduced coaction of n: for target index i, the list
    // of (letter, source index)
    std::vector<std::vector<std::pair<MonomialKey, int>>> n_transpose_;
    std::vector<std::map<Bidegree, std::vector<CobarElem>>> basis_;  // [s][t,u]

    void build_basis();
    int elem_index(int s, Bidegree tu, const CobarElem& e) const;
};

/// Ext chart of the pair: homology dimensions of the cobar complex within
/// bounds. Throws InvalidComodule and WindowTooSmall.
ExtChart cobar_ext(const Comodule& n, const Comodule& m, ChartBounds bounds, int threads = 1);

/// The padding gate for truncated cofree inputs: largest stem certified by
/// cobar_ext for this pair, or unbounded when nothing is truncated.
int certified_stem(const Comodule& n, const Comodule& m);

}  // namespace isoext
