#pragma once

// Metamodels of a metatheory in a finite category, enrichments and oplax
// actions as the representable special cases, model-category enumeration,
// transport along morphisms of metatheories, and hom-categories of
// metamodels.
//
// Two metatheory flavours are supported. Finite monoidal categories given by
// tables carry fully tabulated metamodels. The truncated substitution
// metatheories over N/P/F are not materializable as finite monoidal
// categories (their object class is unbounded), so their standard metamodels
// over a concrete finite-set base are computed from the enrichment formula
// <A,B>_n = Set(A^n, B) on demand; model enumeration runs through the same
// interpretation pack either way.

#include "catalg/graded.hpp"
#include "catalg/moncat.hpp"
#include "catalg/prof.hpp"

namespace catalg {

// ---------------------------------------------------------------------------
// Tabulated metamodels over a finite metatheory

struct Metamodel {
  MonPtr M;
  CatPtr C;
  // value[X][A][B] = Phi_X(A, B)
  std::vector<std::vector<std::vector<FinSetObj>>> value;
  // actM[x : X->X'][A][B] : value[X'][A][B] -> value[X][A][B]
  std::vector<std::vector<std::vector<FinFunction>>> actM;
  // actA[f : A->A'][X][B] : value[X][A'][B] -> value[X][A][B]
  std::vector<std::vector<std::vector<FinFunction>>> actA;
  // actB[g : B->B'][X][A] : value[X][A][B] -> value[X][A][B']
  std::vector<std::vector<std::vector<FinFunction>>> actB;
  std::vector<int> unit;  // per C-object c: element of value[I][c][c]
  // mult[Y][X][A][B][Cc] : value[Y][B][Cc] x value[X][A][B] -> value[Y⊗X][A][Cc]
  std::vector<std::vector<std::vector<std::vector<std::vector<FinFunction>>>>> mult;

  int mul(int Y, int X, int A, int B, int Cc, int y, int x) const {
    return mult[Y][X][A][B][Cc].map[y * value[X][A][B].size() + x];
  }
};

Report check_metamodel(const Metamodel& P);

// The oplax-monoidal presentation (phi-dot, phi): unit components
// C(A,B) -> Phi_I(A,B) and coend components (Phi_Y . Phi_X)(A,C) ->
// Phi_{Y⊗X}(A,C); conversion both ways with the round trip verified.
struct MetamodelOplaxForm {
  // phi_dot[A][B] : hom ids in morphism order -> value[I][A][B]
  std::vector<std::vector<FinFunction>> phi_dot;
  // phi[Y][X][A][Cc] on coend classes of (Phi_Y . Phi_X)(A, Cc)
  std::vector<std::vector<std::vector<std::vector<FinFunction>>>> phi;
};
// Returns the converted form plus a report: fails when the mult data does
// not descend to the coend classes (the two presentations then disagree).
std::pair<MetamodelOplaxForm, Report> convert_presentations(const Metamodel& P);
// Back-conversion: rebuild mult from the oplax form and compare.
Report verify_presentation_roundtrip(const Metamodel& P, const MetamodelOplaxForm& F);

// ---------------------------------------------------------------------------
// Enrichments and oplax actions (tabulated)

struct Enrichment {
  MonPtr M;
  CatPtr C;
  std::vector<std::vector<int>> obj;  // <A,B> in M
  // mor[f][g] : <tgt f, src g> -> <src f, tgt g> in M
  std::vector<std::vector<int>> mor;
  std::vector<int> j;  // I -> <C,C>, per object
  // comp[A][B][Cc] : <B,Cc> ⊗ <A,B> -> <A,Cc>
  std::vector<std::vector<std::vector<int>>> comp;
};

Report validate_enrichment(const Enrichment& E);

struct OplaxAction {
  MonPtr M;
  CatPtr C;
  std::vector<std::vector<int>> star_obj;  // [X][A]
  // star_mor[x][f] : (src x)*(src f) -> (tgt x)*(tgt f)
  std::vector<std::vector<int>> star_mor;
  std::vector<int> eps;  // I*C -> C
  // delta[X][Y][A] : (Y⊗X)*A -> Y*(X*A)
  std::vector<std::vector<std::vector<int>>> delta;
};

Report validate_action(const OplaxAction& A);

Metamodel metamodel_from_enrichment(const Enrichment& E);
Metamodel metamodel_from_action(const OplaxAction& A);

// The evaluation action of [C,C] on C.
OplaxAction evaluation_action(MonPtr endoM, const EndoMonCat& E, CatPtr C);

// Representability extraction; on failure the report names the
// non-representable index.
struct ExtractedEnrichment {
  Enrichment enrichment;
  // chosen universal elements theta[A][B] in value[<A,B>][A][B]
  std::vector<std::vector<int>> theta;
};
std::pair<std::optional<ExtractedEnrichment>, Report> extract_enrichment(const Metamodel& P);

struct ExtractedAction {
  OplaxAction action;
  std::vector<std::vector<int>> theta;  // [X][A] in value[X][A][X*A]
};
std::pair<std::optional<ExtractedAction>, Report> extract_action(const Metamodel& P);

// Round-trip isomorphism check: the metamodel induced by the extracted
// structure is isomorphic to the original.
Report verify_enrichment_roundtrip(const Metamodel& P, const ExtractedEnrichment& E);
Report verify_action_roundtrip(const Metamodel& P, const ExtractedAction& A);

// A theory as a metamodel in the terminal base.
Metamodel theory_to_metamodel(MonPtr M, const Theory& T);

// ---------------------------------------------------------------------------
// Model categories

struct ModelCategory {
  CatPtr cat;
  FinFunctor U;  // the forgetful functor into the base
  std::vector<std::pair<int, int>> model_of;  // object -> (base object, xi index)
  std::vector<int> hom_of;                    // morphism -> base morphism
};

// The interpretation pack: everything model enumeration and the double-cone
// calculus need about (T, Phi), materialized over the base category.
struct TheoryInterpretation {
  CatPtr C;
  Profunctor PI, PT, PTT;  // Phi_I, Phi_T, Phi_{T⊗T} as endo-profunctors
  // act_e[A][B] : PT(A,B) -> PI(A,B);  act_m[A][B] : PT(A,B) -> PTT(A,B)
  std::vector<std::vector<FinFunction>> act_e, act_m;
  std::vector<int> unit;  // phi-bar-dot per object, element of PI(c,c)
  // mult[A][B][Cc] : PT(B,Cc) x PT(A,B) -> PTT(A,Cc)
  std::vector<std::vector<std::vector<FinFunction>>> mult;
  // phi_dot[A][B] : hom(A,B) (morphism order) -> PI(A,B)
  std::vector<std::vector<FinFunction>> phi_dot;

  int mul(int A, int B, int Cc, int y, int x) const {
    return mult[A][B][Cc].map[y * PT.value[A][B].size() + x];
  }
};

TheoryInterpretation interpret_theory(const Metamodel& P, const Theory& T);
ModelCategory enumerate_models(const TheoryInterpretation& ti);

// Forgetful-functor properties, checked exhaustively.
Report check_forgetful_properties(const ModelCategory& MC);

// ---------------------------------------------------------------------------
// Transport along morphisms of metatheories

// General coend formula (eqn of H acting on metamodels), tabulated flavour.
Metamodel apply_morphism(const MonProfunctor& H, const Metamodel& P);
// Exact reindex route for a strong monoidal functor: F^*(Phi).
Metamodel reindex_metamodel(const MonFunctor& F, const Metamodel& P);

struct CategoryIso {
  std::vector<int> on_obj;  // X objects -> Y objects
  bool valid = false;
};

// Models of F_*(T) with respect to Phi versus models of T with respect to
// F^*(Phi): both enumerated, an isomorphism over the base returned.
struct ModelComparison {
  ModelCategory lhs, rhs;
  CategoryIso iso;
  Report report;
};
ModelComparison compare_model_categories(const Theory& T, const MonFunctor& F,
                                         const Metamodel& P);

// Search for an isomorphism of categories commuting with the forgetful
// functors (exhaustive at desk scale).
CategoryIso find_iso_over_base(const ModelCategory& X, const ModelCategory& Y);

// ---------------------------------------------------------------------------
// Hom-categories of metamodels

struct MtModHom {
  FinCategory cat;  // objects: 1-cells (G, g); morphisms: 2-cells theta
  std::vector<FinFunctor> G_of;
  // g components per 1-cell: [X][A][B] function tables
  std::vector<std::vector<std::vector<std::vector<FinFunction>>>> g_of;
};

MtModHom mtmod_hom(const Metamodel& P1, const Metamodel& P2, std::int64_t ceiling = 100000);

// When P1 = theory_to_metamodel(T), the hom-category is isomorphic to the
// model category; the isomorphism is returned and verified.
struct MtModHomCollapse {
  MtModHom hom;
  ModelCategory models;
  CategoryIso iso;
  Report report;
};
MtModHomCollapse mtmod_hom_of_theory(MonPtr M, const Theory& T, const Metamodel& P2);

// ---------------------------------------------------------------------------
// S-operad semantics through the pseudo action of C/S1

OplaxAction slice_pseudo_action(const SliceMonCat& S, MonPtr sliceM);
ModelCategory soperad_semantics(const SliceMonCat& S, MonPtr sliceM, const Theory& T);

// ---------------------------------------------------------------------------
// Enrichment/action transpose

struct TransposeWitness {
  // unitW[X][c] : X -> <c, X*c> in M;  counitW[B][c] : <c,B>*c -> B in C
  std::vector<std::vector<int>> unitW;
  std::vector<std::vector<int>> counitW;
};

// Verifies the per-object adjunctions (-*c -| <c,->), then checks that
// transposition restricts to an isomorphism of model categories over C for
// the given theory.
struct TransposeResult {
  Report report;
  ModelCategory via_enrichment, via_action;
  CategoryIso iso;
};
TransposeResult check_transpose(const Enrichment& E, const OplaxAction& A,
                                const TransposeWitness& W, const Theory& T);

// ---------------------------------------------------------------------------
// Graded (substitution) metamodels over a concrete finite-set base

struct ConcreteCategory {
  FinCategory cat;
  std::vector<int> size;
  std::vector<std::vector<int>> func;  // per morphism, its function table
};
ConcreteCategory concrete_finset(const std::vector<int>& sizes);

// <A,B>_n = Set(A^n, B), as a truncated graded set of the requested kind.
TruncGradedSet concrete_hom_graded(GradedKind kind, int K, const ConcreteCategory& base, int A,
                                   int B);

// All graded-set morphisms X -> Y of the same kind (natural families).
std::vector<std::vector<std::vector<int>>> graded_homs(const TruncGradedSet& X,
                                                       const TruncGradedSet& Y);

// Interpretation packs for clones over F and operads over N, computed from
// the standard enrichment formulas.
TheoryInterpretation interpret_clone(const ConcreteCategory& base, const Clone& c);
TheoryInterpretation interpret_ns_operad(const ConcreteCategory& base, const NsOperad& T);

// Acceptance-style comparison: models of the transported clone versus models
// of the original operad over the same base, with an explicit isomorphism.
ModelComparison compare_clone_operad_models(const ConcreteCategory& base, const NsOperad& T);

// Graded analogue of mtmod_hom_of_theory: the hom from the theory metamodel
// into the standard graded metamodel, enumerated honestly over the probe
// diagram {I, T, T⊗T; e, m} and collapsed onto the model category.
MtModHomCollapse graded_hom_of_clone_theory(const ConcreteCategory& base, const Clone& c);

}  // namespace catalg
