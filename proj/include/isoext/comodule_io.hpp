#pragma once

#include "isoext/comodule.hpp"

#include <string>

namespace isoext {

/// xi-exponent encoding used by the comodule and checkpoint formats:
/// "0" for the unit, otherwise "e1,e2,..." with trailing zeros trimmed.
std::string exponents_str(const MonomialKey& m);
MonomialKey monomial_from_exponents(const std::string& s);  // throws ParseError

/// Comodule text format: per basis element
///   elem <label> <p> <q>
///     act <xi-exponents> -> <target-label>
/// The counit term `act 0 -> <self>` may be omitted and is inserted on load.
Comodule parse_comodule(const std::string& text);
Comodule load_comodule(const std::string& path);
std::string serialize_comodule(const Comodule& c);

/// Write a file through a temp path and an atomic rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace isoext
