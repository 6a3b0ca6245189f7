#include "cattsu/syntax.hpp"

#include <sstream>
#include <stdexcept>

namespace catt {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // 64-bit FNV-ish combine; only needs to be stable within a process.
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t hash_ty(const Ty& t) {
  if (t.is_star()) return 0x5u;
  const ArrowTy& a = *t.arrow();
  std::uint64_t h = 0xa77u;
  h = mix(h, a.base->hash);
  h = mix(h, a.src->hash);
  h = mix(h, a.tgt->hash);
  return h;
}

std::uint64_t hash_tm(const Tm& t) {
  if (const VarTm* v = t.var()) return mix(0x7a1u, static_cast<std::uint64_t>(v->level));
  const CohTm& c = *t.coh();
  std::uint64_t h = 0xc0bu;
  h = mix(h, c.ctx->hash);
  h = mix(h, c.cell->hash);
  for (const TmPtr& a : c.args) h = mix(h, a->hash);
  return h;
}

}  // namespace

TyPtr star() {
  static const TyPtr s = [] {
    auto t = std::make_shared<Ty>();
    t->node = StarTy{};
    t->dim = -1;
    t->hash = hash_ty(*t);
    return t;
  }();
  return s;
}

TyPtr arrow(TyPtr base, TmPtr src, TmPtr tgt) {
  auto t = std::make_shared<Ty>();
  t->dim = base->dim + 1;
  t->node = ArrowTy{std::move(base), std::move(src), std::move(tgt)};
  t->hash = hash_ty(*t);
  return t;
}

TmPtr var(int level, std::string name) {
  auto t = std::make_shared<Tm>();
  t->node = VarTm{level, std::move(name)};
  t->hash = hash_tm(*t);
  return t;
}

TmPtr coh(CtxPtr ctx, TyPtr cell, Sub args) {
  auto t = std::make_shared<Tm>();
  t->node = CohTm{std::move(ctx), std::move(cell), std::move(args)};
  t->hash = hash_tm(*t);
  return t;
}

CtxPtr make_ctx(std::vector<CtxEntry> entries) {
  auto c = std::make_shared<Ctx>();
  c->entries = std::move(entries);
  std::uint64_t h = 0x11u;
  int dim = -1;
  for (const CtxEntry& e : c->entries) {
    h = mix(h, e.ty->hash);
    if (e.ty->dim + 1 > dim) dim = e.ty->dim + 1;
  }
  c->hash = h;
  c->dim = dim;
  return c;
}

CtxPtr ctx_snoc(const CtxPtr& ctx, std::string name, TyPtr ty) {
  std::vector<CtxEntry> entries = ctx ? ctx->entries : std::vector<CtxEntry>{};
  entries.push_back(CtxEntry{std::move(name), std::move(ty)});
  return make_ctx(std::move(entries));
}

std::uint64_t hash_of(const Sub& s) {
  std::uint64_t h = 0x50bu;
  for (const TmPtr& t : s) h = mix(h, t->hash);
  return h;
}

bool struct_eq(const TyPtr& a, const TyPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash) return false;
  if (a->is_star() != b->is_star()) return false;
  if (a->is_star()) return true;
  const ArrowTy& x = *a->arrow();
  const ArrowTy& y = *b->arrow();
  return struct_eq(x.base, y.base) && struct_eq(x.src, y.src) && struct_eq(x.tgt, y.tgt);
}

bool struct_eq(const TmPtr& a, const TmPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash) return false;
  const VarTm* va = a->var();
  const VarTm* vb = b->var();
  if (va || vb) return va && vb && va->level == vb->level;
  const CohTm& x = *a->coh();
  const CohTm& y = *b->coh();
  return struct_eq(x.ctx, y.ctx) && struct_eq(x.cell, y.cell) && struct_eq(x.args, y.args);
}

bool struct_eq(const CtxPtr& a, const CtxPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash || a->size() != b->size()) return false;
  for (std::size_t i = 0; i < a->size(); ++i)
    if (!struct_eq(a->entries[i].ty, b->entries[i].ty)) return false;
  return true;
}

bool struct_eq(const Sub& a, const Sub& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!struct_eq(a[i], b[i])) return false;
  return true;
}

int term_dim(const CtxPtr& ctx, const TmPtr& t) {
  if (const VarTm* v = t->var()) {
    if (v->level < 0 || static_cast<std::size_t>(v->level) >= ctx->size())
      throw std::out_of_range("term_dim: variable out of range");
    return ctx->entries[v->level].ty->dim + 1;
  }
  return t->coh()->cell->dim + 1;
}

namespace {

void collect_fv(const TmPtr& t, std::set<int>& out) {
  if (const VarTm* v = t->var()) {
    out.insert(v->level);
    return;
  }
  for (const TmPtr& a : t->coh()->args) collect_fv(a, out);
}

void collect_fv(const TyPtr& t, std::set<int>& out) {
  if (const ArrowTy* a = t->arrow()) {
    collect_fv(a->base, out);
    collect_fv(a->src, out);
    collect_fv(a->tgt, out);
  }
}

}  // namespace

std::set<int> free_vars(const TmPtr& t) {
  std::set<int> out;
  collect_fv(t, out);
  return out;
}

std::set<int> free_vars(const TyPtr& t) {
  std::set<int> out;
  collect_fv(t, out);
  return out;
}

std::set<int> free_vars(const Sub& s) {
  std::set<int> out;
  for (const TmPtr& t : s) collect_fv(t, out);
  return out;
}

std::set<int> support_close(const CtxPtr& ctx, std::set<int> vars) {
  // Levels only decrease through declared types, so one pass from the top
  // level downward reaches the fixpoint.
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    int lvl = *it;
    if (lvl < 0 || static_cast<std::size_t>(lvl) >= ctx->size())
      throw std::out_of_range("support_close: variable out of range");
    std::set<int> decl = free_vars(ctx->entries[lvl].ty);
    for (int d : decl) vars.insert(d);
    // rbegin stays valid for std::set inserts; restart if we inserted above
    // the cursor (cannot happen: declared types mention earlier levels only).
  }
  return vars;
}

std::set<int> support(const CtxPtr& ctx, const TmPtr& t) {
  return support_close(ctx, free_vars(t));
}

std::set<int> support(const CtxPtr& ctx, const TyPtr& t) {
  return support_close(ctx, free_vars(t));
}

CtxPtr disc_context(int n) {
  static std::vector<CtxPtr> cache;
  if (n < 0) throw std::invalid_argument("disc_context: negative dimension");
  while (static_cast<int>(cache.size()) <= n) {
    int k = static_cast<int>(cache.size());
    std::vector<CtxEntry> entries;
    if (k == 0) {
      entries.push_back({"d0", star()});
    } else {
      entries = cache[k - 1]->entries;
      entries.push_back({"d" + std::to_string(k - 1) + "'", sphere_type(k - 2)});
      entries.push_back({"d" + std::to_string(k), sphere_type(k - 1)});
    }
    cache.push_back(make_ctx(std::move(entries)));
  }
  return cache[n];
}

TyPtr sphere_type(int n) {
  static std::vector<TyPtr> cache;  // cache[k] = sphere_type(k-1)
  if (n < -1) throw std::invalid_argument("sphere_type: dimension < -1");
  while (static_cast<int>(cache.size()) <= n + 1) {
    int k = static_cast<int>(cache.size()) - 1;  // building sphere_type(k)
    if (k == -1) {
      cache.push_back(star());
    } else {
      cache.push_back(arrow(cache[k], var(2 * k, "d" + std::to_string(k)),
                            var(2 * k + 1, "d" + std::to_string(k) + "'")));
    }
  }
  return cache[n + 1];
}

TyPtr identity_cell(int n) {
  TmPtr top = var(2 * n, "d" + std::to_string(n));
  return arrow(sphere_type(n - 1), top, top);
}

TmPtr identity_coh(int n, Sub args) {
  return coh(disc_context(n), identity_cell(n), std::move(args));
}

bool is_identity(const TmPtr& t) { return identity_rank(t) >= 0; }

int identity_rank(const TmPtr& t) {
  const CohTm* c = t->coh();
  if (!c) return -1;
  if (c->ctx->size() % 2 == 0) return -1;
  int n = static_cast<int>(c->ctx->size()) / 2;
  if (!struct_eq(c->ctx, disc_context(n))) return -1;
  if (!struct_eq(c->cell, identity_cell(n))) return -1;
  return n;
}

Sub disc_sub(const TyPtr& a, const TmPtr& t) {
  Sub out;
  if (const ArrowTy* ar = a->arrow()) {
    out = disc_sub(ar->base, ar->src);
    out.push_back(ar->tgt);
  }
  out.push_back(t);
  return out;
}

TmPtr canonical_identity(const TyPtr& a, const TmPtr& t) {
  return identity_coh(a->dim + 1, disc_sub(a, t));
}

namespace {

void show_tm(std::ostream& os, const TmPtr& t);

void show_ty(std::ostream& os, const TyPtr& t) {
  if (t->is_star()) {
    os << "*";
    return;
  }
  const ArrowTy& a = *t->arrow();
  show_tm(os, a.src);
  os << " ->[";
  show_ty(os, a.base);
  os << "] ";
  show_tm(os, a.tgt);
}

void show_tm(std::ostream& os, const TmPtr& t) {
  if (const VarTm* v = t->var()) {
    if (!v->name.empty())
      os << v->name << "#" << v->level;
    else
      os << "#" << v->level;
    return;
  }
  const CohTm& c = *t->coh();
  os << "coh{" << c.ctx->size() << "}(";
  show_ty(os, c.cell);
  os << ")[";
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    if (i) os << ", ";
    show_tm(os, c.args[i]);
  }
  os << "]";
}

}  // namespace

std::string show(const TmPtr& t) {
  std::ostringstream os;
  show_tm(os, t);
  return os.str();
}

std::string show(const TyPtr& t) {
  std::ostringstream os;
  show_ty(os, t);
  return os.str();
}

std::string show(const CtxPtr& ctx) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ctx->size(); ++i) {
    os << "(" << ctx->entries[i].name << "#" << i << " : ";
    show_ty(os, ctx->entries[i].ty);
    os << ")";
  }
  return os.str();
}

std::string show(const Sub& s) {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ", ";
    show_tm(os, s[i]);
  }
  os << ">";
  return os.str();
}

int coherence_nodes(const TyPtr& t);

int coherence_nodes(const TmPtr& t) {
  if (t->var()) return 0;
  const CohTm& c = *t->coh();
  int n = 1 + coherence_nodes(c.cell);
  for (const TmPtr& a : c.args) n += coherence_nodes(a);
  return n;
}

int coherence_nodes(const TyPtr& t) {
  if (t->is_star()) return 0;
  const ArrowTy& a = *t->arrow();
  return coherence_nodes(a.base) + coherence_nodes(a.src) + coherence_nodes(a.tgt);
}

int node_count(const TmPtr& t) {
  if (t->var()) return 1;
  const CohTm& c = *t->coh();
  int n = 1 + node_count(c.cell);
  for (const TmPtr& a : c.args) n += node_count(a);
  return n;
}

int node_count(const TyPtr& t) {
  if (t->is_star()) return 1;
  const ArrowTy& a = *t->arrow();
  return 1 + node_count(a.base) + node_count(a.src) + node_count(a.tgt);
}

}  // namespace catt
