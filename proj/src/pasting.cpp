#include "cattsu/pasting.hpp"

#include <stdexcept>

#include "cattsu/subst.hpp"

namespace catt {

DyckPtr dyck_leaf(std::string base_name) {
  auto d = std::make_shared<Dyck>();
  d->move = Dyck::Move::Leaf;
  d->excess = 0;
  d->ups = 0;
  d->ctx = make_ctx({CtxEntry{base_name, star()}});
  d->top = var(0, base_name);
  d->top_ty = star();
  return d;
}

DyckPtr dyck_up(const DyckPtr& prev, std::string y_name, std::string f_name) {
  auto d = std::make_shared<Dyck>();
  d->move = Dyck::Move::Up;
  d->rest = prev;
  d->excess = prev->excess + 1;
  d->ups = prev->ups + 1;
  d->y_level = static_cast<int>(prev->ctx->size());
  d->f_level = d->y_level + 1;
  TmPtr y = var(d->y_level, y_name);
  TyPtr f_ty = arrow(prev->top_ty, prev->top, y);
  std::vector<CtxEntry> entries = prev->ctx->entries;
  entries.push_back(CtxEntry{std::move(y_name), prev->top_ty});
  entries.push_back(CtxEntry{f_name, f_ty});
  d->ctx = make_ctx(std::move(entries));
  d->top = var(d->f_level, std::move(f_name));
  d->top_ty = f_ty;
  return d;
}

DyckPtr dyck_down(const DyckPtr& prev) {
  const ArrowTy* a = prev->top_ty->arrow();
  if (!a) throw std::logic_error("dyck_down: word already at excess 0");
  auto d = std::make_shared<Dyck>();
  d->move = Dyck::Move::Down;
  d->rest = prev;
  d->excess = prev->excess - 1;
  d->ups = prev->ups;
  d->ctx = prev->ctx;
  d->top = a->tgt;
  d->top_ty = a->base;
  return d;
}

PastingResult parse_pasting(const CtxPtr& ctx) {
  PastingResult res;
  if (ctx->size() == 0) {
    res.bad_position = 0;
    res.message = "empty context";
    return res;
  }
  if (!ctx->entries[0].ty->is_star()) {
    res.bad_position = 0;
    res.message = "context must start with a point";
    return res;
  }
  DyckPtr cur = dyck_leaf(ctx->entries[0].name);
  std::size_t i = 1;
  while (i < ctx->size()) {
    const TyPtr& y_ty = ctx->entries[i].ty;
    while (cur->top_ty->dim > y_ty->dim) cur = dyck_down(cur);
    if (!struct_eq(cur->top_ty, y_ty)) {
      res.bad_position = static_cast<int>(i);
      res.message = "entry does not continue the pasting scheme";
      return res;
    }
    if (i + 1 >= ctx->size()) {
      res.bad_position = static_cast<int>(ctx->size());
      res.message = "dangling target entry";
      return res;
    }
    TyPtr want_f = arrow(cur->top_ty, cur->top, var(static_cast<int>(i), ctx->entries[i].name));
    if (!struct_eq(ctx->entries[i + 1].ty, want_f)) {
      res.bad_position = static_cast<int>(i + 1);
      res.message = "entry is not a cell from the current top";
      return res;
    }
    cur = dyck_up(cur, ctx->entries[i].name, ctx->entries[i + 1].name);
    i += 2;
  }
  while (cur->excess > 0) cur = dyck_down(cur);
  res.word = cur;
  return res;
}

namespace {

// Linearize the snoc-chain from leaf to last move.
std::vector<const Dyck*> moves_of(const DyckPtr& d) {
  std::vector<const Dyck*> out;
  for (const Dyck* p = d.get(); p; p = p->rest.get()) out.push_back(p);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<int> peak_levels(const DyckPtr& d) {
  std::vector<const Dyck*> ms = moves_of(d);
  std::vector<int> out;
  for (std::size_t j = 0; j + 1 < ms.size(); ++j)
    if (ms[j]->move == Dyck::Move::Up && ms[j + 1]->move == Dyck::Move::Down)
      out.push_back(ms[j]->f_level);
  return out;
}

std::vector<int> locally_maximal(const DyckPtr& d) {
  if (d->move == Dyck::Move::Leaf) return {0};
  return peak_levels(d);
}

int peak_dim(const DyckPtr& d, int f_level) {
  for (const Dyck* p = d.get(); p; p = p->rest.get())
    if (p->move == Dyck::Move::Up && p->f_level == f_level) return p->excess;
  throw std::invalid_argument("peak_dim: no such peak");
}

namespace {

bool at_peak(const DyckPtr& d, int f_level) {
  return d->move == Dyck::Move::Down && d->rest->move == Dyck::Move::Up &&
         d->rest->f_level == f_level;
}

}  // namespace

DyckPtr excise(const DyckPtr& d, int f_level) {
  if (at_peak(d, f_level)) return d->rest->rest;
  switch (d->move) {
    case Dyck::Move::Up: {
      DyckPtr inner = excise(d->rest, f_level);
      return dyck_up(inner, d->ctx->entries[d->y_level].name, d->ctx->entries[d->f_level].name);
    }
    case Dyck::Move::Down:
      return dyck_down(excise(d->rest, f_level));
    case Dyck::Move::Leaf:
      throw std::invalid_argument("excise: no such peak");
  }
  throw std::logic_error("excise: unreachable");
}

Sub project(const DyckPtr& d, int f_level) {
  if (at_peak(d, f_level)) {
    const DyckPtr& inner = d->rest->rest;
    Sub s = identity_sub(inner->ctx);
    s.push_back(inner->top);
    s.push_back(canonical_identity(inner->top_ty, inner->top));
    return s;
  }
  switch (d->move) {
    case Dyck::Move::Up: {
      Sub s = project(d->rest, f_level);
      int dom_base = static_cast<int>(d->rest->ctx->size()) - 2;
      s.push_back(var(dom_base, d->ctx->entries[d->y_level].name));
      s.push_back(var(dom_base + 1, d->ctx->entries[d->f_level].name));
      return s;
    }
    case Dyck::Move::Down:
      return project(d->rest, f_level);
    case Dyck::Move::Leaf:
      throw std::invalid_argument("project: no such peak");
  }
  throw std::logic_error("project: unreachable");
}

Sub remove_args(const Sub& args, const DyckPtr& d, int f_level) {
  if (args.size() != d->ctx->size())
    throw std::invalid_argument("remove_args: argument count mismatch");
  if (at_peak(d, f_level)) return Sub(args.begin(), args.end() - 2);
  switch (d->move) {
    case Dyck::Move::Up: {
      Sub inner(args.begin(), args.end() - 2);
      Sub s = remove_args(inner, d->rest, f_level);
      s.push_back(args[args.size() - 2]);
      s.push_back(args[args.size() - 1]);
      return s;
    }
    case Dyck::Move::Down:
      return remove_args(args, d->rest, f_level);
    case Dyck::Move::Leaf:
      throw std::invalid_argument("remove_args: no such peak");
  }
  throw std::logic_error("remove_args: unreachable");
}

std::set<int> boundary_set(const CtxPtr& ctx, int k, bool target) {
  // A dimension-k variable is excluded when it occurs on the given side of a
  // (k+1)-cell's declared type: target-free for the source boundary,
  // source-free for the target boundary.
  std::set<int> blocked;
  for (const CtxEntry& e : ctx->entries) {
    if (e.ty->dim + 1 != k + 1) continue;
    const ArrowTy* a = e.ty->arrow();
    if (!a) continue;
    const TmPtr& side = target ? a->src : a->tgt;
    if (const VarTm* v = side->var()) blocked.insert(v->level);
  }
  std::set<int> out;
  for (std::size_t i = 0; i < ctx->size(); ++i) {
    int d = ctx->entries[i].ty->dim + 1;
    if (d < k || (d == k && !blocked.count(static_cast<int>(i))))
      out.insert(static_cast<int>(i));
  }
  return out;
}

Restriction restrict_context(const CtxPtr& ctx, const std::set<int>& keep) {
  Restriction r;
  r.level_map.assign(ctx->size(), -1);
  int next = 0;
  for (int lvl : keep) {
    if (lvl < 0 || static_cast<std::size_t>(lvl) >= ctx->size())
      throw std::out_of_range("restrict_context: level out of range");
    r.level_map[lvl] = next++;
  }
  std::vector<CtxEntry> entries;
  entries.reserve(keep.size());
  for (int lvl : keep) {
    entries.push_back(
        CtxEntry{ctx->entries[lvl].name, remap_type(ctx->entries[lvl].ty, r.level_map)});
    r.inclusion.push_back(var(lvl, ctx->entries[lvl].name));
  }
  r.ctx = make_ctx(std::move(entries));
  return r;
}

TmPtr remap_term(const TmPtr& t, const std::vector<int>& level_map) {
  if (const VarTm* v = t->var()) {
    if (v->level < 0 || static_cast<std::size_t>(v->level) >= level_map.size() ||
        level_map[v->level] < 0)
      throw std::out_of_range("remap_term: variable not in restriction");
    return var(level_map[v->level], v->name);
  }
  const CohTm& c = *t->coh();
  Sub args;
  args.reserve(c.args.size());
  for (const TmPtr& a : c.args) args.push_back(remap_term(a, level_map));
  return coh(c.ctx, c.cell, std::move(args));
}

TyPtr remap_type(const TyPtr& t, const std::vector<int>& level_map) {
  if (t->is_star()) return t;
  const ArrowTy& a = *t->arrow();
  return arrow(remap_type(a.base, level_map), remap_term(a.src, level_map),
               remap_term(a.tgt, level_map));
}

}  // namespace catt
