#pragma once

#include <optional>

#include "cattsu/syntax.hpp"

// Pasting contexts and their Dyck-word certificates.
//
// A Dyck word is a snoc-list of moves over a single base point:
//   leaf        -- the one-variable context (x : *)
//   up(d, y, f) -- extend with a fresh target y : ty(top) and a fresh cell
//                  f : top -> y one dimension up
//   down(d)     -- drop to the target of the current top cell
// A word is complete when its excess is 0. Complete words classify pasting
// contexts; each node caches the context it generates together with the
// current top cell and its type.
//
// A peak is an up-move immediately followed by a down-move; peak tops are
// exactly the locally maximal variables. excise removes a peak's two
// variables, project maps the full context into the excised one (sending the
// peak top to a canonical identity), and remove_args drops the corresponding
// entries of an argument list.

namespace catt {

struct Dyck;
using DyckPtr = std::shared_ptr<const Dyck>;

struct Dyck {
  enum class Move { Leaf, Up, Down };
  Move move = Move::Leaf;
  DyckPtr rest;       // preceding word (null for the leaf)
  int excess = 0;     // dimension of the current top cell
  int ups = 0;        // number of up-moves so far
  int y_level = -1;   // levels introduced by an up-move
  int f_level = -1;
  CtxPtr ctx;         // generated context
  TmPtr top;          // current top cell (always a variable term)
  TyPtr top_ty;       // its type
};

DyckPtr dyck_leaf(std::string base_name);
DyckPtr dyck_up(const DyckPtr& d, std::string y_name, std::string f_name);
DyckPtr dyck_down(const DyckPtr& d);

// Certifies a context as pasting; the deterministic left-to-right parse
// applies down-moves exactly as long as the next declared type forces them.
// On failure returns the offending entry position (or the context size when
// the word is left incomplete).
struct PastingResult {
  DyckPtr word;       // set on success
  int bad_position = -1;
  std::string message;
};
PastingResult parse_pasting(const CtxPtr& ctx);

// Peak top levels (f-levels) in context order; empty for the leaf word.
std::vector<int> peak_levels(const DyckPtr& d);
// Locally maximal variables: peak tops, except that the one-variable context
// has its base point as the unique locally maximal variable.
std::vector<int> locally_maximal(const DyckPtr& d);
// Dimension of the peak with top f_level.
int peak_dim(const DyckPtr& d, int f_level);

DyckPtr excise(const DyckPtr& d, int f_level);
// The substitution from the excised context that maps the full context's
// variables: both peak variables collapse onto the peak's base cell (target
// and canonical identity).
Sub project(const DyckPtr& d, int f_level);
// Drop an argument list's entries for the two excised variables.
Sub remove_args(const Sub& args, const DyckPtr& d, int f_level);

// k-dimensional boundary variable set: everything below dimension k plus the
// dimension-k variables free of the given side (target-free for the source
// boundary, source-free for the target boundary).
std::set<int> boundary_set(const CtxPtr& ctx, int k, bool target);

// Restriction of a context to a downward-closed variable set, with the
// inclusion substitution (ambient-context terms for each kept variable) and
// the old-level -> new-level map (-1 for dropped levels).
struct Restriction {
  CtxPtr ctx;
  Sub inclusion;
  std::vector<int> level_map;
};
Restriction restrict_context(const CtxPtr& ctx, const std::set<int>& keep);
TmPtr remap_term(const TmPtr& t, const std::vector<int>& level_map);
TyPtr remap_type(const TyPtr& t, const std::vector<int>& level_map);

}  // namespace catt
