#pragma once

#include <string>

#include "spfilt/filtration.hpp"

namespace spfilt {

/// Poset text: '#' comment lines, "elem <label>" declarations and
/// "rel <a> <b>" for a < b. Labels match [A-Za-z0-9_.]+. Malformed lines
/// raise ParseError with the line number; relations over undeclared labels
/// raise UnknownLabel, likewise located.
PosetHandle parse_poset_text(const std::string& text);

/// Function text: one "val <label> <integer>" line per element, each element
/// exactly once. '#' comments allowed.
PosetHom parse_function_text(const std::string& text, PosetHandle poset);

/// Filtration text: one "<n>: <members>" line per window index, where
/// members is a comma list of labels, "@all" or "@empty". '#' comments
/// allowed. print_filtration emits the same shape over lo() .. hi()-1.
SpFiltration parse_filtration_text(const std::string& text, PosetHandle poset);
std::string print_filtration(const SpFiltration& phi);

/// "a,b", "@all" or "@empty" as a membership mask (not necessarily upper).
Subset parse_subset(const std::string& text, const PrimePoset& poset);

std::string print_function(const PosetHom& f);   // val lines, label-sorted
std::string display_function(const PosetHom& f); // "(a:0, b:1)", label-sorted
std::string print_upper(const UpperSet& set);    // comma list, @all or @empty

}  // namespace spfilt
