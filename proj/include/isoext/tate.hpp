#pragma once

#include "isoext/comodule.hpp"

#include <map>

namespace isoext {

/// Isotropic homology dimensions of a comodule: free generators over the
/// homology of the point, plus the expanded F2-dimension table (tensor
/// with the exterior algebra on the rho classes) within a window.
struct HModuleDims
{
    std::map<Bidegree, int> generators;
    std::map<Bidegree, int> expanded;
};

HModuleDims h_iso_dims(const Comodule& m, BidegreeWindow window);

/// Graded dimensions of Hom_F(mx, HPT (x) my) by bidegree shift: the
/// hom-sets between the associated Tate motives. Coactions do not enter;
/// these are homs of free modules over the homology of the point.
std::map<Bidegree, int> tate_hom_dims(const Comodule& mx, const Comodule& my, BidegreeWindow shift_window);

}  // namespace isoext
