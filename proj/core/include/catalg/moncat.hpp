#pragma once

// Finite monoidal categories, theories (monoid objects), the endofunctor
// metatheory [C,C], cartesian monads and the slice metatheory C/S1, Day
// convolution on presheaves, and monoidal profunctors.

#include "catalg/fincat.hpp"
#include "catalg/prof.hpp"

namespace catalg {

struct FinMonoidalCat {
  CatPtr cat;
  std::vector<std::vector<int>> tensor_obj;  // [x][y] = x (tensor) y
  std::vector<std::vector<int>> tensor_mor;  // [f][g] = f (tensor) g
  int unit = -1;
  bool strict = true;
  // assoc[x][y][z] : (x⊗y)⊗z -> x⊗(y⊗z); identity tables when strict
  std::vector<std::vector<std::vector<int>>> assoc;
  std::vector<int> lunit;  // I⊗x -> x
  std::vector<int> runit;  // x⊗I -> x

  int tob(int x, int y) const { return tensor_obj[x][y]; }
  int tmor(int f, int g) const { return tensor_mor[f][g]; }
};

using MonPtr = std::shared_ptr<const FinMonoidalCat>;

// Fill identity coherence tables for a strict monoidal structure.
FinMonoidalCat make_strict_moncat(CatPtr cat, std::vector<std::vector<int>> tensor_obj,
                                  std::vector<std::vector<int>> tensor_mor, int unit);

Report validate_moncat(const FinMonoidalCat& M);

// Monoidal product of a list of objects, bracketed to the left:
// ((x1⊗x2)⊗x3)... ; empty list gives the unit.
int tensor_power_obj(const FinMonoidalCat& M, int x, int n);
int tensor_list_obj(const FinMonoidalCat& M, const std::vector<int>& xs);
// Canonical rebracketing iso A^{⊗(n1+...+nk)} -> (A^{⊗n1}) ⊗ ... ⊗ (A^{⊗nk})
// (left-bracketed outer product), built from associator components.
int rebracket_iso(const FinMonoidalCat& M, int x, const std::vector<int>& parts);

struct Theory {
  int carrier = -1;
  int e = -1;  // I -> T
  int m = -1;  // T⊗T -> T
};

Report check_theory(const FinMonoidalCat& M, const Theory& t);

// Morphisms of theories: carrier morphisms commuting with e and m.
std::vector<int> theory_morphisms(const FinMonoidalCat& M, const Theory& s, const Theory& t);

// ---------------------------------------------------------------------------
// The endofunctor metatheory [C,C]

struct EndoMonCat {
  FinMonoidalCat mon;
  FunctorCategory fc;
};

EndoMonCat endofunctor_moncat(CatPtr C, std::int64_t ceiling = 100000);

struct FinMonad {
  FinFunctor S;
  NatTransform eta;  // id_C => S
  NatTransform mu;   // S.S => S
};

Report check_monad(const FinMonad& T);
// The same laws through the moncat path: T as a Theory in [C,C].
Theory monad_as_theory(const EndoMonCat& E, const FinMonad& T);
FinMonad theory_as_monad(const EndoMonCat& E, const Theory& t);

// Cartesianness: S preserves pullbacks and eta/mu have pullback naturality
// squares. Pre: C has all pullbacks (reported as input error otherwise).
Report check_cartesian_monad(const FinCategory& C, const FinMonad& T);

// ---------------------------------------------------------------------------
// The slice metatheory C/S1 for a cartesian monad

struct SliceMonCat {
  FinMonoidalCat mon;
  CatPtr base;                      // C
  FinMonad monad;                   // S
  int terminal = -1;                // 1 in C
  std::vector<int> obj_mor;         // slice object -> morphism p : P -> S1 in C
  std::vector<int> mor_underlying;  // slice morphism -> morphism in C
  int slice_object_of(int p) const;
  int slice_morphism_of(int src_slice, int tgt_slice, int underlying) const;
};

// Pre: T cartesian and C has a terminal object; coherence isos are computed
// from pullback universality (least-id pullback witnesses).
SliceMonCat slice_moncat(CatPtr C, const FinMonad& T);

// The pseudo action (Q,q) * P of C/S1 on C (the pullback apex).
struct SliceAction {
  int apex;
  int to_q;   // apex -> Q
  int to_sp;  // apex -> S P
};
SliceAction slice_star(const SliceMonCat& S, int slice_obj, int P);

// ---------------------------------------------------------------------------
// Presheaves and Day convolution

struct Presheaf {
  CatPtr base;
  std::vector<FinSetObj> value;     // per object
  std::vector<FinFunction> action;  // per morphism u : X -> Y, value[Y] -> value[X]
};

Report validate_presheaf(const Presheaf& P);
Presheaf representable_presheaf(CatPtr C, int c);  // hom(-, c)

Presheaf day_unit(const FinMonoidalCat& M);

struct DayTensorResult {
  Presheaf sheaf;  // Q ⊗^ P
  // For witnesses: canonical representative of each class at each object Z:
  // (x, y, h in M(Z, y⊗x), q in Q(y), p in P(x)) stored as a flat tuple.
  std::vector<std::vector<std::array<int, 5>>> rep;  // [Z][class] = (x,y,h,q,p)
  // class lookup: flat index tables per Z
  std::vector<std::map<std::vector<int>, int>> cls;  // key (x,y,h,q,p)
};

DayTensorResult day_tensor(const FinMonoidalCat& M, const Presheaf& Q, const Presheaf& P);

// Witness for Q ⊗^ day_unit ≅ Q, with bijectivity verified by the caller.
std::vector<FinFunction> day_right_unit_witness(const FinMonoidalCat& M, const Presheaf& Q,
                                                const DayTensorResult& QI);

// ---------------------------------------------------------------------------
// Monoidal functors

enum class MonDir { lax, oplax, strong };

struct MonFunctor {
  MonDir dir = MonDir::lax;
  FinFunctor F;
  MonPtr srcM, tgtM;
  // lax/strong: unit_mor : I_N -> F I_M; oplax: F I_M -> I_N
  int unit_mor = -1;
  // lax/strong: bin[x][y] : F y ⊗ F x -> F(y⊗x); oplax: F(y⊗x) -> F y ⊗ F x
  std::vector<std::vector<int>> bin;
};

Report validate_monfunctor(const MonFunctor& F);
MonFunctor identity_monfunctor(MonPtr M);
// For a strong functor, the inverse structure morphisms (oplax direction).
int strong_unit_inverse(const MonFunctor& F);
int strong_bin_inverse(const MonFunctor& F, int x, int y);

// ---------------------------------------------------------------------------
// Monoidal profunctors (morphisms of metatheories)

struct MonProfunctor {
  MonPtr srcM;  // M
  MonPtr tgtN;  // N
  Profunctor H;  // M -|-> N, value[n][m]
  int unit_elt = -1;  // in H(I_N, I_M)
  // mult[np][mp][n][m] : H(n',m') x H(n,m) -> H(n'⊗n, m'⊗m); pairs flattened
  // as kp * |H(n,m)| + k.
  std::vector<std::vector<std::vector<std::vector<FinFunction>>>> mult;
};

Report validate_monprofunctor(const MonProfunctor& H);
MonProfunctor identity_monprof(MonPtr M);

struct MonCompositeProf {
  MonProfunctor mp;
  CompositeProf comp;  // underlying profunctor composite with class tables
};
MonCompositeProf compose_monprof(const MonProfunctor& K, const MonProfunctor& H);

MonProfunctor mon_rep_lower(const MonFunctor& F);  // F_* : M -|-> N (lax F)
MonProfunctor mon_rep_upper(const MonFunctor& F);  // F^* : N -|-> M (oplax/strong F)

// F_* -| F^* in the bicategory of metatheories: profunctor-level triangle
// identities plus monoidality of the unit and counit 2-cells.
Report check_mth_adjunction(const MonFunctor& F);

}  // namespace catalg
