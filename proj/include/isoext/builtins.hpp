#pragma once

#include "isoext/chart.hpp"
#include "isoext/comodule.hpp"
#include "isoext/specseq.hpp"

#include <optional>
#include <string>

namespace isoext {

/// A named input: the comodule plus the generator-set description of the
/// (possibly infinite) object it truncates.
struct BuiltinModule
{
    std::string name;
    Comodule comodule;
    GeneratorSet gens;
};

/// Built-ins addressable from the CLI. Cofree built-ins are windowed with
/// one degree of padding past the certified stem range of `bounds`.
///   sphere       F2 in bidegree (0,0)
///   mbp.cofree   cofree on one cogenerator at (0,0)
///   mbp2.cofree  cofree on the graded dimensions of G
std::optional<BuiltinModule> builtin_module(const std::string& name, ChartBounds bounds);

bool is_builtin_name(const std::string& name);

}  // namespace isoext
