#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

// Core syntax for a globular dependent type theory with four syntactic
// classes: contexts, types, terms, and substitutions.
//
// Variables are de Bruijn levels: a variable is its position in the ambient
// context. Display names ride along as metadata and are ignored by equality
// and hashing, so alpha-equality is plain structural equality. Contexts only
// ever grow at the end, which makes weakening a no-op.
//
// All nodes are immutable and shared; every node carries a precomputed
// structural hash so equality checks and memo tables stay cheap.

namespace catt {

struct Ty;
struct Tm;
struct Ctx;
using TyPtr = std::shared_ptr<const Ty>;
using TmPtr = std::shared_ptr<const Tm>;
using CtxPtr = std::shared_ptr<const Ctx>;
using Sub = std::vector<TmPtr>;  // one entry per target-context variable

struct CtxEntry {
  std::string name;  // display only
  TyPtr ty;
};

struct Ctx {
  std::vector<CtxEntry> entries;
  std::uint64_t hash = 0;
  int dim = -1;  // max over entries of (dim of declared type) + 1

  std::size_t size() const { return entries.size(); }
  const CtxEntry& operator[](std::size_t i) const { return entries[i]; }
};

struct StarTy {};
struct ArrowTy {
  TyPtr base;
  TmPtr src;
  TmPtr tgt;
};

struct Ty {
  std::variant<StarTy, ArrowTy> node;
  int dim = -1;  // star = -1; arrow = base dim + 1
  std::uint64_t hash = 0;

  bool is_star() const { return std::holds_alternative<StarTy>(node); }
  const ArrowTy* arrow() const { return std::get_if<ArrowTy>(&node); }
};

struct VarTm {
  int level;
  std::string name;  // display only
};

// A coherence constructor: a bound pasting context, a cell type over it, and
// a substitution whose entries live in the ambient context.
struct CohTm {
  CtxPtr ctx;
  TyPtr cell;
  Sub args;
};

struct Tm {
  std::variant<VarTm, CohTm> node;
  std::uint64_t hash = 0;

  const VarTm* var() const { return std::get_if<VarTm>(&node); }
  const CohTm* coh() const { return std::get_if<CohTm>(&node); }
};

TyPtr star();
TyPtr arrow(TyPtr base, TmPtr src, TmPtr tgt);
TmPtr var(int level, std::string name = "");
TmPtr coh(CtxPtr ctx, TyPtr cell, Sub args);
CtxPtr make_ctx(std::vector<CtxEntry> entries);
CtxPtr ctx_snoc(const CtxPtr& ctx, std::string name, TyPtr ty);

std::uint64_t hash_of(const Sub& s);

bool struct_eq(const TyPtr& a, const TyPtr& b);
bool struct_eq(const TmPtr& a, const TmPtr& b);
bool struct_eq(const CtxPtr& a, const CtxPtr& b);
bool struct_eq(const Sub& a, const Sub& b);

// Dimension of a term: its inferred type's dimension + 1. For a coherence
// this is independent of the ambient context.
int term_dim(const CtxPtr& ctx, const TmPtr& t);

std::set<int> free_vars(const TmPtr& t);
std::set<int> free_vars(const TyPtr& t);
std::set<int> free_vars(const Sub& s);

// Downward closure of a variable set under declared types.
std::set<int> support_close(const CtxPtr& ctx, std::set<int> vars);
std::set<int> support(const CtxPtr& ctx, const TmPtr& t);
std::set<int> support(const CtxPtr& ctx, const TyPtr& t);

// Disc contexts and sphere types. disc_context(n) has 2n+1 entries; the top
// cell sits at level 2n and the k-dimensional pair at levels (2k, 2k+1).
// sphere_type(-1) is the base type; sphere_type(k) is the arrow between the
// level-2k and level-(2k+1) variables.
CtxPtr disc_context(int n);
TyPtr sphere_type(int n);

// The cell type of the n-dimensional identity coherence: top -> top over the
// n-disc, based on sphere_type(n-1).
TyPtr identity_cell(int n);
TmPtr identity_coh(int n, Sub args);

// Shape-only identity recognition: the head context is an n-disc and the
// cell type is the endo arrow on its top variable. Arguments are ignored.
bool is_identity(const TmPtr& t);
// If is_identity(t), the identity's dimension n; otherwise -1.
int identity_rank(const TmPtr& t);

// The substitution into disc_context(dim A + 1) classifying a cell t of type
// A: {star, t} = <t>, {s ->_B t', t} = <{B, s}, t', t>.
Sub disc_sub(const TyPtr& a, const TmPtr& t);

// The canonical identity on a cell t of type A.
TmPtr canonical_identity(const TyPtr& a, const TmPtr& t);

// Debug/raw display (level-based, no sugar). The frontend owns user-facing
// pretty printing.
std::string show(const TmPtr& t);
std::string show(const TyPtr& t);
std::string show(const CtxPtr& ctx);
std::string show(const Sub& s);

// Number of coherence constructors in the whole tree (cell types and
// substitution entries included; bound contexts are variable-only).
int coherence_nodes(const TmPtr& t);
// Size measure used by enumeration tests: Var = 1, Star = 1,
// Arrow = 1 + parts, Coherence = 1 + cell + args.
int node_count(const TmPtr& t);
int node_count(const TyPtr& t);

}  // namespace catt
