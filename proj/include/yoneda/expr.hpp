#pragma once

#include "yoneda/rep.hpp"

#include <string>
#include <vector>

namespace yoneda {

/// Evaluated module expression. A top-level sum(...) declares summand
/// structure; anything else is a single summand. Modules produced by dual()
/// and transpose() live over the opposite algebra, tracked in `alg`.
struct ModuleAtoms {
    AlgebraHandle alg;
    std::vector<std::string> labels;
    std::vector<RepHandle> reps;
};

/// Grammar: S(v) | P(v) | I(v) | sum(e1, ..., ek) | omega(n, e)
///        | cosyzygy(n, e) | dual(e) | transpose(e) | dtr(e)
///        | quotient(e, socle_component v) | <JSON module literal>
ModuleAtoms eval_module_expr(const AlgebraHandle& a, const std::string& expr);

/// Single module (sums are realized as direct sums).
RepHandle eval_module_single(const AlgebraHandle& a, const std::string& expr);

} // namespace yoneda
