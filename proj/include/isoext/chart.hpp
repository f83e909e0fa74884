#pragma once

#include "isoext/grading.hpp"

#include <map>
#include <string>
#include <vector>

namespace isoext {

/// Certified region of an Ext chart: filtration 0..max_s, stem t-s up to
/// max_stem, optional weight window.
struct ChartBounds
{
    int max_s = 0;
    int max_stem = 0;
    int u_min = -kDegUnbounded;
    int u_max = kDegUnbounded;

    bool contains(Tridegree d) const
    {
        return d.s >= 0 && d.s <= max_s && d.t - d.s <= max_stem && d.u >= u_min && d.u <= u_max;
    }
    bool empty() const
    {
        return max_s < 0 || u_min > u_max;
    }
    /// Internal degree needed to certify every (s,t,u) in bounds.
    int max_t() const
    {
        return max_stem + max_s;
    }
    bool has_weight_window() const
    {
        return u_min > -kDegUnbounded || u_max < kDegUnbounded;
    }
};

/// Keyed table (s,t,u) -> dimension with optional generator labels.
struct ExtChart
{
    ChartBounds bounds;
    std::string engine;  // "cobar" or "resolution"
    std::map<Tridegree, int> dims;
    std::map<Tridegree, std::vector<std::string>> labels;

    int dim(Tridegree d) const
    {
        auto it = dims.find(d);
        return it == dims.end() ? 0 : it->second;
    }
    void set(Tridegree d, int value)
    {
        if (value < 0)
            value = 0;
        if (value)
            dims[d] = value;
        else
            dims.erase(d);
    }
    bool same_dims(const ExtChart& o) const
    {
        return dims == o.dims;
    }
};

/// TSV rendering: '#' header recording bounds and engine, then
/// s<TAB>t<TAB>u<TAB>dim lines sorted by (s,t,u).
std::string chart_tsv(const ExtChart& chart);

/// SVG rendering in Adams layout: x = t-s, y = s, one dot per dimension unit.
std::string chart_svg(const ExtChart& chart);

}  // namespace isoext
