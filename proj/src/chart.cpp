#include "isoext/chart.hpp"

#include <fmt/format.h>

namespace isoext {

std::string chart_tsv(const ExtChart& chart)
{
    std::string out;
    out += "# isoext ext chart\n";
    out += fmt::format("# engine: {}\n", chart.engine.empty() ? "unknown" : chart.engine);
    out += fmt::format("# bounds: max-s={} max-stem={}", chart.bounds.max_s, chart.bounds.max_stem);
    if (chart.bounds.has_weight_window()) {
        out += fmt::format(" weight=[{},{}]",
                           chart.bounds.u_min <= -kDegUnbounded ? std::string("-inf") : std::to_string(chart.bounds.u_min),
                           chart.bounds.u_max >= kDegUnbounded ? std::string("inf") : std::to_string(chart.bounds.u_max));
    }
    out += "\n# columns: s t u dim\n";
    for (const auto& [deg, dim] : chart.dims)
        if (dim > 0)
            out += fmt::format("{}\t{}\t{}\t{}\n", deg.s, deg.t, deg.u, dim);
    return out;
}

std::string chart_svg(const ExtChart& chart)
{
    int max_stem = 0, max_s = 0;
    for (const auto& [deg, dim] : chart.dims) {
        if (dim <= 0)
            continue;
        max_stem = std::max(max_stem, deg.stem());
        max_s = std::max(max_s, deg.s);
    }
    const int cell = 24;
    const int margin = 36;
    const int width = margin * 2 + cell * (max_stem + 1);
    const int height = margin * 2 + cell * (max_s + 1);

    std::string out;
    out += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\">\n", width, height);
    out += fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n", width, height);

    auto xpos = [&](int stem) { return margin + cell * stem + cell / 2; };
    auto ypos = [&](int s) { return height - margin - cell * s - cell / 2; };

    for (int stem = 0; stem <= max_stem; ++stem)
        out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"10\" text-anchor=\"middle\" fill=\"#888\">{}</text>\n", xpos(stem), height - margin / 3, stem);
    for (int s = 0; s <= max_s; ++s)
        out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"10\" text-anchor=\"middle\" fill=\"#888\">{}</text>\n", margin / 3, ypos(s) + 3, s);

    for (const auto& [deg, dim] : chart.dims) {
        if (dim <= 0)
            continue;
        // spread multiplicities horizontally inside the cell
        for (int k = 0; k < dim; ++k) {
            int dx = (dim == 1) ? 0 : (k * 10 / (dim - 1)) - 5;
            out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"black\"><title>s={} t={} u={}</title></circle>\n", xpos(deg.stem()) + dx, ypos(deg.s), deg.s, deg.t, deg.u);
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace isoext
