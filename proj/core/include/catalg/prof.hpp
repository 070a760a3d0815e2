#pragma once

// Profunctors between finite categories and the pseudo double category PROF:
// identities, composites with explicit coherence witnesses, representable
// embeddings F_* and F^*, and square calculus.

#include <array>

#include "catalg/fincat.hpp"

namespace catalg {

// A profunctor H : A -|-> B, i.e. a functor B^op x A -> Set.
struct Profunctor {
  CatPtr source;  // A
  CatPtr target;  // B
  // value[b][a] = H(b, a)
  std::vector<std::vector<FinSetObj>> value;
  // lact[g][a] : H(tgt g, a) -> H(src g, a)  for g in B
  std::vector<std::vector<FinFunction>> lact;
  // ract[f][b] : H(b, src f) -> H(b, tgt f)  for f in A
  std::vector<std::vector<FinFunction>> ract;

  const FinSetObj& at(int b, int a) const { return value[b][a]; }
};

Report validate_profunctor(const Profunctor& H);

// The identity 1-cell: the hom bifunctor C(-,-).
Profunctor identity_prof(CatPtr C);

// Composite of K : B -|-> C with H : A -|-> B, elementwise a coend over B.
// Classes are stored by canonical least representative; the pair->class
// tables are kept so squares and witnesses can be pushed through.
struct CompositeProf {
  Profunctor prof;  // K . H : A -|-> C
  // class_of[c][a] maps the flat pair index to the class index; pairs are
  // flattened as offset[b] + k * |H(b,a)| + h.
  std::vector<std::vector<std::vector<int>>> class_of;
  std::vector<std::vector<std::vector<int>>> offset;  // [c][a][b]
  // canonical representative of each class: (b, k, h)
  std::vector<std::vector<std::vector<std::array<int, 3>>>> rep;

  int cls(int c, int a, int b, int k, int h, int hsize) const {
    return class_of[c][a][offset[c][a][b] + k * hsize + h];
  }
};

CompositeProf compose_prof(const Profunctor& K, const Profunctor& H);

// Unit coherence witnesses: componentwise bijections.
// right unitor: (H . I_A)(b,a) -> H(b,a);  left unitor: (I_B . H)(b,a) -> H(b,a)
struct ProfIso {
  std::vector<std::vector<FinFunction>> comp;  // per (b,a), must be bijections
};
ProfIso right_unitor(const Profunctor& H, const CompositeProf& HI);
ProfIso left_unitor(const Profunctor& H, const CompositeProf& IH);

// Associator witness ((K3.K2).K1) -> (K3.(K2.K1)) given all four composites.
ProfIso associator(const Profunctor& K3, const Profunctor& K2, const Profunctor& K1,
                   const CompositeProf& K32, const CompositeProf& K32_1,
                   const CompositeProf& K21, const CompositeProf& K3_21);

bool iso_is_bijective(const ProfIso& iso);

// Representable embeddings of a functor F : A -> B.
Profunctor rep_lower(const FinFunctor& F);  // F_*(b, a) = B(b, F a)
Profunctor rep_upper(const FinFunctor& F);  // F^*(a, b) = B(F a, b), a 1-cell B -|-> A

// Verify the adjunction F_* -| F^* via explicit unit/counit and the triangle
// identities composed with the coherence witnesses.
Report check_prof_adjunction(const FinFunctor& F);

// ---------------------------------------------------------------------------
// Squares of PROF

struct ProfSquare {
  Profunctor top;     // H  : A -|-> B
  Profunctor bottom;  // H' : A' -|-> B'
  FinFunctor left;    // F : A -> A'
  FinFunctor right;   // G : B -> B'
  // comp[b][a] : H(b,a) -> H'(G b, F a)
  std::vector<std::vector<FinFunction>> comp;
};

Report validate_square(const ProfSquare& s);

// Identity square on a profunctor (vertical identity).
ProfSquare vertical_identity(const Profunctor& H);
// Horizontal identity square on a functor F: from I_A to I_{A'} along (F, F).
ProfSquare horizontal_identity(const FinFunctor& F);
// Vertical composition: s above t is t; we follow "s after t": boundaries
// t : H -> H' along (F,G), s : H' -> H'' along (F',G').
ProfSquare vcompose_squares(const ProfSquare& s, const ProfSquare& t);
// Horizontal composition of beta : K -> K~ along (G,E) with alpha : H -> H~
// along (F,G); needs the source and target composites.
ProfSquare hcompose_squares(const ProfSquare& beta, const ProfSquare& alpha,
                            const CompositeProf& src, const CompositeProf& tgt);
bool same_square(const ProfSquare& a, const ProfSquare& b);

// Interchange on a 2x2 grid of squares; returns pass iff both evaluation
// orders agree elementwise.
Report check_interchange(const ProfSquare& a, const ProfSquare& b, const ProfSquare& ap,
                         const ProfSquare& bp);

}  // namespace catalg
