#pragma once

// Vertical double cones over Phi(T) in the pseudo double category of
// categories and profunctors, and direct verification of the universal
// property of model categories.

#include "catalg/metamodel.hpp"

namespace catalg {

struct VerticalDoubleCone {
  CatPtr apex;
  FinFunctor V;  // apex -> C
  // v[a][a'] : hom_apex(a,a') -> Phi_T(Va, Va'), hom-sets in morphism order
  std::vector<std::vector<FinFunction>> v;
};

// Both cone equations, with the profunctor coherence witnesses inserted as
// drawn: the multiplication side factors the identity-composite through the
// inverse unitor class [(u, id)].
Report check_cone(const VerticalDoubleCone& cone, const TheoryInterpretation& ti);

struct CanonicalConeResult {
  ModelCategory models;
  VerticalDoubleCone cone;
};
CanonicalConeResult canonical_cone(const TheoryInterpretation& ti);

// The cone carried by an arbitrary candidate model category (its objects must
// be (object, xi) pairs tabulated in model_of).
VerticalDoubleCone cone_of_candidate(const ModelCategory& MC, const TheoryInterpretation& ti);

struct MediateResult {
  Report report;
  FinFunctor K;
  int mediator_count = 0;
};
// The proof-formula mediator K a = (Va, v_{a,a}(id)), K f = V f, plus
// uniqueness certified by exhaustive search over all functors into the
// candidate that satisfy the factorization equation.
MediateResult mediate(const VerticalDoubleCone& cone, const TheoryInterpretation& ti,
                      const ModelCategory& MC);

struct MediateSquareResult {
  Report report;
  // sigma[a][a'] maps H(a,a') to morphism indices of the model category
  std::vector<std::vector<FinFunction>> sigma;
  int candidate_count = 0;
};
// theta is a square H -> hom_C along (V, V'); the compatibility equation is
// checked first and violations are reported with their witness (a, a', x).
MediateSquareResult mediate_square(const Profunctor& H,
                                   const std::vector<std::vector<FinFunction>>& theta,
                                   const VerticalDoubleCone& c1, const VerticalDoubleCone& c2,
                                   const TheoryInterpretation& ti, const ModelCategory& MC);

struct UniversalityOptions {
  int max_apex_morphisms = 3;  // cone enumeration stays exhaustive only for tiny apexes
  bool probe_squares = true;
};

// For every cone enumerable from each test apex, clauses 2 and 3 of the
// universal property are verified with uniqueness against the candidate.
Report verify_universality(const TheoryInterpretation& ti, const ModelCategory& candidate,
                           const std::vector<CatPtr>& apexes,
                           const UniversalityOptions& opt = {});

// A deliberately enlarged candidate: one extra disconnected duplicate of an
// existing model. Universality must fail clause-2 uniqueness against it.
ModelCategory enlarge_with_disconnected_object(const ModelCategory& MC,
                                               const TheoryInterpretation& ti);

}  // namespace catalg
