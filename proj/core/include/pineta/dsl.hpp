#pragma once

#include "pineta/element.hpp"
#include "pineta/presentation.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pineta {

/// Parse a ring-presentation source.  Line-oriented; '/' may stand in for a
/// line break.  Directives:
///
///   generators: <name>:<degree>[, ...]
///   relations: <poly>[, ...]
///   orientation: <monomial>
///   top_degree: <n>          (optional, default 4)
///
/// Polynomials use + - * ^, parentheses and integer literals; whitespace is
/// insignificant.  Throws ParseError (with position) or ValidationError.
PresentationPtr parse_presentation(std::string_view text, std::string name = "");

/// Parse and evaluate an expression in the generators of a presentation.
RingElement parse_element(PresentationPtr p, std::string_view expr);

/// The presentations used by the built-in manifold families.
PresentationPtr builtin_presentation(std::string_view name);
std::vector<std::string> builtin_names();

inline constexpr std::string_view kCaseIPresentation = "caseI";
inline constexpr std::string_view kCaseIIPresentation = "caseII";

}  // namespace pineta
