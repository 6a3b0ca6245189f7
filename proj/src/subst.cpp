#include "cattsu/subst.hpp"

#include <stdexcept>

namespace catt {

TyPtr apply_type(const TyPtr& t, const Sub& sigma) {
  if (t->is_star()) return t;
  const ArrowTy& a = *t->arrow();
  return arrow(apply_type(a.base, sigma), apply_term(a.src, sigma), apply_term(a.tgt, sigma));
}

TmPtr apply_term(const TmPtr& t, const Sub& sigma) {
  if (const VarTm* v = t->var()) {
    if (v->level < 0 || static_cast<std::size_t>(v->level) >= sigma.size())
      throw std::out_of_range("apply_term: variable has no image");
    return sigma[v->level];
  }
  const CohTm& c = *t->coh();
  return coh(c.ctx, c.cell, compose(c.args, sigma));
}

Sub compose(const Sub& tau, const Sub& sigma) {
  Sub out;
  out.reserve(tau.size());
  for (const TmPtr& t : tau) out.push_back(apply_term(t, sigma));
  return out;
}

Sub identity_sub(const CtxPtr& ctx) {
  Sub out;
  out.reserve(ctx->size());
  for (std::size_t i = 0; i < ctx->size(); ++i)
    out.push_back(var(static_cast<int>(i), ctx->entries[i].name));
  return out;
}

}  // namespace catt
