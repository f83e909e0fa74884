#include "isoext/builtins.hpp"

namespace isoext {

std::optional<BuiltinModule> builtin_module(const std::string& name, ChartBounds bounds)
{
    // one degree of padding beyond the certified stem bound
    const int window_p = std::max(0, bounds.max_stem) + 2;

    if (name == "sphere")
        return BuiltinModule{name, Comodule::sphere(), GeneratorSet::explicit_set({{Bidegree{0, 0}, 1}})};

    if (name == "mbp.cofree") {
        auto c = cofree(GradedDims{{Bidegree{0, 0}, 1}}, BidegreeWindow::up_to_p(window_p));
        return BuiltinModule{name, std::move(c), GeneratorSet::family_set(GeneratorSet::Family::GMonomials)};
    }

    if (name == "mbp2.cofree") {
        GradedDims dims;
        for (int d = 0; 2 * d <= window_p; ++d) {
            int count = static_cast<int>(enumerate_basis(AlgebraId::G, {2 * d, d}).size());
            if (count)
                dims[{2 * d, d}] = count;
        }
        auto c = cofree(dims, BidegreeWindow::up_to_p(window_p));
        return BuiltinModule{name, std::move(c), GeneratorSet::family_set(GeneratorSet::Family::GTensorG)};
    }

    return std::nullopt;
}

bool is_builtin_name(const std::string& name)
{
    return name == "sphere" || name == "mbp.cofree" || name == "mbp2.cofree";
}

}  // namespace isoext
