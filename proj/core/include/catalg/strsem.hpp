#pragma once

// Hat-theories (lax monoidal presheaves on a finite metatheory), the
// semantics functor, the structure functor via the end formula, the
// structure-semantics adjunction checked by explicit bijection, and the
// codensity-monad cross-check.

#include "catalg/metamodel.hpp"

namespace catalg {

struct HatTheory {
  MonPtr M;
  std::vector<FinSetObj> value;     // per M-object
  std::vector<FinFunction> action;  // per u : X -> Y, value[Y] -> value[X]
  int unit_elt = -1;                // in value[I]
  // mult[X][Y] : value[Y] x value[X] -> value[Y⊗X], flat y * |value[X]| + x
  std::vector<std::vector<FinFunction>> mult;

  int mul(int X, int Y, int y, int x) const {
    return mult[X][Y].map[y * value[X].size() + x];
  }
};

Report check_hat_theory(const HatTheory& P);

HatTheory embed_J(MonPtr M, const Theory& T);
// Whether the underlying presheaf is representable (the essential image of J).
bool hat_theory_representable(const HatTheory& P, int* representing = nullptr);

// Hat-theory morphisms P -> Q: presheaf maps preserving unit and mult.
std::vector<std::vector<FinFunction>> hat_theory_morphisms(const HatTheory& P,
                                                           const HatTheory& Q);

// ---------------------------------------------------------------------------
// Sem and Str

struct SliceObjectOverC {
  CatPtr apex;
  FinFunctor V;  // apex -> C
};

struct SemResult {
  ModelCategory models;
  // per model object, the family xi[X] : P(X) -> Phi_X(c, c)
  std::vector<std::vector<FinFunction>> xi_of;
};

SemResult sem(const HatTheory& P, const Metamodel& Phi);

// For P = J(T): Sem(P) is isomorphic to the model category of T, by the
// Yoneda collapse; the isomorphism is constructed and verified.
Report sem_yoneda_collapse(const HatTheory& P, const Theory& T, const Metamodel& Phi);

struct StrResult {
  HatTheory hat;
  // end families per M-object: family[X][k][a] = element of Phi_X(Va, Va)
  std::vector<std::vector<std::vector<int>>> family;
};

StrResult str(const SliceObjectOverC& V, const Metamodel& Phi);

// ---------------------------------------------------------------------------
// The adjunction

struct AdjunctionResult {
  Report report;
  int lhs_count = 0;  // hat-theory morphisms P -> Str(V)
  int rhs_count = 0;  // functors over C from V into Sem(P)
  int probes = 0;     // naturality probes executed
};

AdjunctionResult check_adjunction(const HatTheory& P, const SliceObjectOverC& V,
                                  const Metamodel& Phi);

// ---------------------------------------------------------------------------
// Codensity cross-check

struct CodensityResult {
  Report report;
  bool tractable = false;
  FinMonad monad;  // Ran_V V with its unit and multiplication
};

// Computes the codensity monad of V objectwise by the power/end formula,
// verifies Str(V) over the evaluation metamodel of [C,C] is representable and
// represented by it, with matching theory structure. Missing powers yield an
// "intractable" verdict in the report rather than an exception.
CodensityResult codensity_crosscheck(const SliceObjectOverC& V,
                                     std::int64_t ceiling = 100000);

}  // namespace catalg
