#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "opforge/algebra/presentation.hpp"

namespace opforge {

/// Known ids: com, lie, ass, poisson, prelie, fm, plc, almost(com,lie).
std::vector<std::string> preset_names();
/// Throws Error on an unknown id.
Presentation preset(std::string_view id);

namespace relations {

inline constexpr const char* kAssociativity = "(a1 o a2) o a3 - a1 o (a2 o a3)";
inline constexpr const char* kJacobi = "[[a1, a2], a3] + [[a2, a3], a1] + [[a3, a1], a2]";
inline constexpr const char* kLeibniz = "[a1, a2 o a3] - [a1, a2] o a3 - a2 o [a1, a3]";

inline constexpr const char* kHertlingManin =
    "[a1 o a2, a3 o a4]"
    " - [a1 o a2, a3] o a4 - [a1 o a2, a4] o a3 - a1 o [a2, a3 o a4] - a2 o [a1, a3 o a4]"
    " + (a1 o a3) o [a2, a4] + (a2 o a3) o [a1, a4] + (a2 o a4) o [a1, a3] + (a1 o a4) o [a2, a3]";

/// Right-hand side of the Hertling-Manin relation solved for [a1 o a2, a3 o a4].
inline constexpr const char* kHertlingManinRhs =
    "[a1 o a2, a3] o a4 + [a1 o a2, a4] o a3 + a1 o [a2, a3 o a4] + a2 o [a1, a3 o a4]"
    " - (a1 o a3) o [a2, a4] - (a2 o a3) o [a1, a4] - (a2 o a4) o [a1, a3] - (a1 o a4) o [a2, a3]";

inline constexpr const char* kPreLie =
    "p(p(a1, a2), a3) - p(a1, p(a2, a3)) - p(p(a1, a3), a2) + p(a1, p(a3, a2))";

/// (a1 o a2).a3 = (a1.a3) o a2 + a1 o (a2.a3), with `p` for the dot.
inline constexpr const char* kPreLieCommutative = "p(a1 o a2, a3) - p(a1, a3) o a2 - a1 o p(a2, a3)";

/// The arity-3 relation between the symmetrized pre-Lie product and its
/// commutator.
inline constexpr const char* kR1 =
    "(a1 o a2) o a3 - a1 o (a2 o a3) - a1 o [a2, a3] - [a1, a2] o a3 - 2[a1, a3] o a2"
    " + [a1, a2 o a3] + [a1 o a2, a3] + [[a1, a3], a2]";

/// The arity-4 consequence of R1, transcribed term by term.
inline constexpr const char* kR2 =
    // bracket used once
    "-[a1 o a2, a3] o a4 - [a1 o a2, a4] o a3 + [a1, a4] o (a2 o a3) + [a1, a3] o (a2 o a4)"
    " - [a1, a3 o a4] o a2 + [a1 o a2, a3 o a4] + a1 o ([a2, a3] o a4) + a1 o ([a2, a4] o a3)"
    " - a1 o [a2, a3 o a4]"
    // twice
    " + [[a1, a3], a2] o a4 + [[a1, a4], a2] o a3 + 2[[a1, a4], a3] o a2"
    " + [a1, [a2, a3]] o a4 + [a1, [a2, a4]] o a3 + [a1, a4] o [a2, a3] + [a1, a3] o [a2, a4]"
    " + [a1, [a3, a4]] o a2 - [[a1, a4], a2 o a3] - [[a1, a3], a2 o a4] - [a1, [a2, a3] o a4]"
    " - [a1, [a2, a4] o a3]"
    // three times
    " - 2[[[a1, a4], a3], a2] - [[a1, a4], [a2, a3]] - [[a1, a3], [a2, a4]] - [[a1, [a3, a4]], a2]";

/// The bracket-once part of R2.
inline constexpr const char* kR2WeightOne =
    "-[a1 o a2, a3] o a4 - [a1 o a2, a4] o a3 + [a1, a4] o (a2 o a3) + [a1, a3] o (a2 o a4)"
    " - [a1, a3 o a4] o a2 + [a1 o a2, a3 o a4] + a1 o ([a2, a3] o a4) + a1 o ([a2, a4] o a3)"
    " - a1 o [a2, a3 o a4]";

}  // namespace relations

/// Generators `o` (symmetric, class X) and `b` (antisymmetric, weight 1,
/// class Y), shared by fm, poisson and the polarized pre-Lie signature.
std::vector<GeneratorSpec> product_bracket_generators();

}  // namespace opforge
