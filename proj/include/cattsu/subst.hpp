#pragma once

#include "cattsu/syntax.hpp"

// Semantic (eager) substitution. Applying sigma maps a term over the target
// context to a term over sigma's ambient context:
//   - a variable is looked up positionally;
//   - a coherence keeps its bound context and cell type untouched and
//     composes its argument list with sigma.

namespace catt {

TyPtr apply_type(const TyPtr& t, const Sub& sigma);
TmPtr apply_term(const TmPtr& t, const Sub& sigma);

// compose(tau, sigma)[i] = tau[i] with sigma applied: first tau, then sigma.
Sub compose(const Sub& tau, const Sub& sigma);

Sub identity_sub(const CtxPtr& ctx);

}  // namespace catt
