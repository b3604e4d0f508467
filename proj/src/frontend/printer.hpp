#pragma once

#include <string>
#include <vector>

#include "core/term.hpp"

namespace smltt {

// Closed terms; binders are named x0, x1, ... by de Bruijn level.
std::string printTerm(const TermP& t);
std::string printType(const TermP& t);

// `names` lists the enclosing context, outermost first.
std::string printWith(const TermP& t, const std::vector<std::string>& names, bool typePosition);

}  // namespace smltt
