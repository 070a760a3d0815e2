#pragma once

// Truncated graded sets, the substitution monoidal structures over the index
// categories N, P and F, clones and (non-)symmetric operads with direct
// axiom checkers, End-constructions, and Kan-extension transport along
// N -> P -> F.

#include <functional>
#include <map>

#include "catalg/moncat.hpp"

namespace catalg {

enum class GradedKind { N, P, F };

// Permutations in one-line 0-based notation, enumerated lexicographically.
std::vector<std::vector<int>> all_permutations(int n);
int permutation_index(const std::vector<int>& perm);
std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b);  // a after b
std::vector<int> invert_perm(const std::vector<int>& a);
// Block sum: acts as parts[i] inside the i-th block.
std::vector<int> block_sum_perm(const std::vector<std::vector<int>>& parts);
// Block shuffle for tau in S_k over target block sizes m[0..k-1]: the source
// is laid out as blocks (m[tau(0)], ..., m[tau(k-1)]) and block i of the
// source is sent identically onto block tau(i) of the target.
std::vector<int> block_permutation(const std::vector<int>& tau, const std::vector<int>& sizes);

// Ordered tuples of nonnegative integers with a given sum, entries <= cap,
// of a given length; and all such lengths 0..maxlen. Lexicographic.
std::vector<std::vector<int>> compositions_of(int sum, int length, int cap);

struct TruncGradedSet {
  GradedKind kind = GradedKind::N;
  int K = 0;
  std::vector<FinSetObj> level;  // 0..K
  // kind P: sym[n][perm index] is the action on level n
  std::vector<std::vector<FinFunction>> sym;
  // kind F: f_act[m][n][tuple index of u : [m]->[n]] : level m -> level n
  std::vector<std::vector<std::vector<FinFunction>>> f_act;

  int level_size(int n) const { return n <= K ? level[n].size() : 0; }
  const FinFunction& sym_action(int n, const std::vector<int>& perm) const;
  const FinFunction& f_action(int m, int n, const std::vector<int>& u) const;
};

Report validate_graded(const TruncGradedSet& X);

// The substitution unit for each index kind.
TruncGradedSet graded_unit(GradedKind kind, int K);

FinCategory index_category(GradedKind kind, int K);

// ---------------------------------------------------------------------------
// Substitution tensors

struct SubstTensor {
  TruncGradedSet set;  // Y ⊗ X, truncated at K
  // kind N only: true when a contribution with total arity above K was cut
  bool lossy = false;
  // Per level: generator keys and the class of each generator. Key encodings:
  //   N: [k, m_1..m_k, y, x_1..x_k]
  //   F: [k, y, t(0)..t(k-1)]                  (t : [k] -> X_n)
  //   P: [k, m_1..m_k, sigma index, y, x_1..x_k]
  std::vector<std::vector<std::vector<int>>> gen_key;
  std::vector<std::vector<int>> gen_class;

  int class_of_key(int n, const std::vector<int>& key) const;
};

SubstTensor subst_tensor(GradedKind kind, int K, const TruncGradedSet& Y,
                         const TruncGradedSet& X);

// Truncation-exactness probe: with inputs supplied at bound K+1, a component
// n <= K is certified exact when the bound-K and bound-(K+1) computations
// induce the same partition on bound-K generators and no class lives entirely
// above the bound.
bool subst_component_exact(GradedKind kind, int K, const TruncGradedSet& Ybig,
                           const TruncGradedSet& Xbig, int n);

// ---------------------------------------------------------------------------
// Clones

struct Clone {
  int K = 0;
  std::vector<FinSetObj> level;
  std::vector<std::vector<int>> proj;  // proj[n][i]
  // comp[k][n] flattened as phi * |T_n|^k + tuple index (big-endian);
  // may be left empty per (k,n) when `lazy` is set and the table is large
  std::vector<std::vector<std::vector<int>>> comp;
  std::function<int(int, int, int, const std::vector<int>&)> lazy;

  int compose(int k, int n, int phi, const std::vector<int>& thetas) const;
  bool has_table(int k, int n) const { return !comp[k][n].empty() || level[k].size() == 0; }
};

int tuple_index(const std::vector<int>& t, int base);

Report check_clone(const Clone& c);
// Deterministic stride-sampled variant for components whose full table would
// exceed the budget (used for End-clones at desk scale).
Report check_clone_sampled(const Clone& c, std::int64_t budget_per_law);

Clone initial_clone(int K);    // projections only
Clone pointed_clone(int K);    // one constant: T_n = {p_1..p_n, e}
// Presentation-free semilattice clone: T_n = nonempty subsets of {1..n},
// substitution = union of selected subsets.
Clone semilattice_clone(int K);

// End-clone of an object with chosen finite powers.
std::optional<Clone> end_clone(const FinCategory& C, int A, int K,
                               std::int64_t table_budget = 1 << 21);
// End-clone of a bare a-element set: levels are all functions a^n -> a.
Clone function_clone(int a, int K, std::int64_t table_budget = 1 << 21);

// ---------------------------------------------------------------------------
// Operads

struct NsOperad {
  int K = 0;
  std::vector<FinSetObj> level;
  int unit = -1;  // element of level 1
  // key = [k, n_1..n_k, phi, theta_1..theta_k]
  std::map<std::vector<int>, int> comp;

  int compose(int k, const std::vector<int>& ns, int phi, const std::vector<int>& thetas) const;
};

struct SymOperad {
  NsOperad op;
  std::vector<std::vector<FinFunction>> sym;  // per level, per permutation index
};

Report check_ns_operad(const NsOperad& T);
Report check_sym_operad(const SymOperad& T);

NsOperad trivial_ns_operad(int K);  // only the unit in arity 1
NsOperad pointed_ns_operad(int K);  // unit plus a single constant
// End-operad of an object in a monoidal category with chosen tensor powers.
NsOperad end_ns_operad(const FinMonoidalCat& M, int A, int K);

// ---------------------------------------------------------------------------
// Theories presented by graded data, and the clone correspondence

struct GradedTheory {
  TruncGradedSet T;  // kind F, actions derived from the clone structure
  int unit_elt = -1;
  // multiplication is the clone composition; kept as a reference copy
  Clone clone;
};

GradedTheory clone_to_theory(const Clone& c);
Clone theory_to_clone(const GradedTheory& t);

// Cross-validation of the monoid laws through the substitution tensor on
// certified components (the CA axioms are the exact primary check).
Report check_graded_theory(const GradedTheory& t);

// ---------------------------------------------------------------------------
// Kan transport along N -> P -> F

TruncGradedSet lan_n_to_p(const TruncGradedSet& X);
TruncGradedSet lan_p_to_f(const TruncGradedSet& X);

// Theory-level transport: free symmetrization and free clone structures on
// the transported graded sets (substitution formulas on class
// representatives).
SymOperad operad_to_symoperad(const NsOperad& T);
Clone symoperad_to_clone(const SymOperad& T);
Clone operad_to_clone(const NsOperad& T);  // the composite transport

// Strong-monoidality probe for the transports, instance-wise: the canonical
// map Lan Y ⊗ Lan X -> Lan(Y ⊗ X) is a bijection on every certified
// component.
Report check_lan_strong_monoidal_n_to_p(const TruncGradedSet& Y, const TruncGradedSet& X);
Report check_lan_strong_monoidal_p_to_f(const TruncGradedSet& Y, const TruncGradedSet& X);

}  // namespace catalg
