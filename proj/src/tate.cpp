#include "isoext/tate.hpp"

#include "isoext/errors.hpp"
#include "isoext/hopf.hpp"

#include <algorithm>

namespace isoext {

namespace {

    void require_finite_above(const BidegreeWindow& w, const char* what)
    {
        if (!w.bounded_above_p())
            throw Error(std::string(what) + " window must be bounded above in p");
    }

}  // namespace

HModuleDims h_iso_dims(const Comodule& m, BidegreeWindow window)
{
    require_valid(m);
    HModuleDims out;
    if (m.dim() == 0)
        return out;
    require_finite_above(window, "h_iso_dims");

    int min_gen_p = m.basis.front().deg.p;
    for (const auto& e : m.basis) {
        out.generators[e.deg]++;
        min_gen_p = std::min(min_gen_p, e.deg.p);
    }

    auto rhos = monomials_up_to_p(AlgebraId::HPT, std::max(0, window.p_max - min_gen_p));
    for (const auto& [gdeg, count] : out.generators)
        for (const auto& h : rhos) {
            Bidegree d = gdeg + h.bidegree();
            if (window.contains(d))
                out.expanded[d] += count;
        }
    return out;
}

std::map<Bidegree, int> tate_hom_dims(const Comodule& mx, const Comodule& my, BidegreeWindow shift_window)
{
    require_valid(mx);
    require_valid(my);
    std::map<Bidegree, int> table;
    if (mx.dim() == 0 || my.dim() == 0)
        return table;
    require_finite_above(shift_window, "tate_hom_dims");

    int max_px = mx.basis.back().deg.p;
    int min_py = my.basis.front().deg.p;
    for (const auto& e : my.basis)
        min_py = std::min(min_py, e.deg.p);

    auto rhos = monomials_up_to_p(AlgebraId::HPT, std::max(0, shift_window.p_max + max_px - min_py));
    for (const auto& x : mx.basis)
        for (const auto& y : my.basis)
            for (const auto& h : rhos) {
                Bidegree slot = y.deg + h.bidegree();
                Bidegree shift = slot - x.deg;
                if (shift_window.contains(shift))
                    table[shift]++;
            }
    return table;
}

}  // namespace isoext
