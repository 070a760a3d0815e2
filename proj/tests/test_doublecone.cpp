#include <doctest.h>

#include "catalg/doublecone.hpp"
#include "catalg/strsem.hpp"
#include "support.hpp"

using namespace catalg;
using namespace catalg::testing;

namespace {

FinMonad const_monad(CatPtr C, int target) {
  FinMonad T;
  T.S.source = C;
  T.S.target = C;
  T.S.on_obj.assign(C->n_obj(), target);
  T.S.on_mor.assign(C->n_mor(), C->id_of(target));
  T.eta.source = identity_functor(C);
  T.eta.target = T.S;
  T.eta.comp.resize(C->n_obj());
  for (int c = 0; c < C->n_obj(); ++c) T.eta.comp[c] = C->hom(c, target).at(0);
  T.mu.source = compose_functors(T.S, T.S);
  T.mu.target = T.S;
  T.mu.comp.assign(C->n_obj(), C->id_of(target));
  return T;
}

TheoryInterpretation closure_interpretation(CatPtr two) {
  auto E = endofunctor_moncat(two);
  auto M = std::make_shared<FinMonoidalCat>(E.mon);
  auto act = evaluation_action(M, E, two);
  auto Phi = metamodel_from_action(act);
  auto T = monad_as_theory(E, const_monad(two, 1));
  return interpret_theory(Phi, T);
}

}  // namespace

TEST_CASE("cones") {
  auto two = std::make_shared<FinCategory>(chain_category(2));
  auto base = concrete_finset({1, 2});
  auto ti_clone = interpret_clone(base, pointed_clone(2));
  auto ti_closure = closure_interpretation(two);

  SUBCASE("the empty apex is vacuously a cone") {
    VerticalDoubleCone cone;
    cone.apex = std::make_shared<FinCategory>(empty_category());
    cone.V.source = cone.apex;
    cone.V.target = ti_clone.C;
    CHECK(check_cone(cone, ti_clone).ok());
  }

  SUBCASE("the canonical cone passes for both instances") {
    for (const auto* ti : {&ti_clone, &ti_closure}) {
      auto c = canonical_cone(*ti);
      CHECK(check_cone(c.cone, *ti).ok());
    }
  }

  SUBCASE("a perturbed component fails the multiplication equation") {
    auto c = canonical_cone(ti_clone);
    // perturb one nonempty off-diagonal component if possible
    bool perturbed = false;
    for (size_t i = 0; i < c.cone.v.size() && !perturbed; ++i)
      for (size_t j = 0; j < c.cone.v[i].size() && !perturbed; ++j) {
        auto& fn = c.cone.v[i][j];
        if (!fn.map.empty() && fn.tgt_size > 1) {
          fn.map[0] = (fn.map[0] + 1) % fn.tgt_size;
          perturbed = true;
        }
      }
    REQUIRE(perturbed);
    auto rep = check_cone(c.cone, ti_clone);
    CHECK(rep.verdict == Verdict::fail);
  }
}

TEST_CASE("mediators") {
  auto base = concrete_finset({1, 2});
  auto ti = interpret_clone(base, pointed_clone(2));
  auto canonical = canonical_cone(ti);

  SUBCASE("the canonical cone mediates to the identity") {
    auto m = mediate(canonical.cone, ti, canonical.models);
    CHECK(m.report.ok());
    CHECK(m.mediator_count == 1);
    CHECK(same_functor(m.K, identity_functor(canonical.models.cat)));
  }

  SUBCASE("a terminal apex picking a model mediates to its name") {
    auto one = std::make_shared<FinCategory>(terminal_category());
    for (size_t pick = 0; pick < canonical.models.model_of.size(); ++pick) {
      VerticalDoubleCone cone;
      cone.apex = one;
      cone.V = name_functor(one, ti.C, canonical.models.model_of[pick].first);
      cone.v.assign(1, std::vector<FinFunction>(1));
      FinFunction fn;
      fn.src_size = 1;
      fn.tgt_size = ti.PT.value[canonical.models.model_of[pick].first]
                              [canonical.models.model_of[pick].first].size();
      fn.map = {canonical.models.model_of[pick].second};
      cone.v[0][0] = fn;
      REQUIRE(check_cone(cone, ti).ok());
      auto m = mediate(cone, ti, canonical.models);
      CHECK(m.report.ok());
      CHECK(m.K.on_obj[0] == static_cast<int>(pick));
    }
  }

  SUBCASE("mediate_square with the identity profunctor and canonical data") {
    auto IH = identity_prof(canonical.models.cat);
    // theta = the canonical u square into hom_C
    int n = canonical.models.cat->n_obj();
    std::vector<std::vector<FinFunction>> theta(n, std::vector<FinFunction>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto homs = canonical.models.cat->hom(i, j);
        FinFunction fn;
        fn.src_size = static_cast<int>(homs.size());
        int ci = canonical.models.model_of[i].first;
        int cj = canonical.models.model_of[j].first;
        auto chom = ti.C->hom(ci, cj);
        fn.tgt_size = static_cast<int>(chom.size());
        for (int m : homs) {
          int u = canonical.models.hom_of[m];
          int pos = -1;
          for (size_t k = 0; k < chom.size(); ++k)
            if (chom[k] == u) pos = static_cast<int>(k);
          fn.map.push_back(pos);
        }
        theta[i][j] = fn;
      }
    auto ms = mediate_square(IH, theta, canonical.cone, canonical.cone, ti, canonical.models);
    CHECK(ms.report.ok());
    CHECK(ms.candidate_count == 1);
  }

  SUBCASE("theta violating the compatibility equation is rejected with a witness") {
    auto one = std::make_shared<FinCategory>(terminal_category());
    // two cones picking distinct models on the 2-element carrier
    std::vector<int> two_elt_models;
    for (size_t i = 0; i < canonical.models.model_of.size(); ++i)
      if (base.size[canonical.models.model_of[i].first] == 2)
        two_elt_models.push_back(static_cast<int>(i));
    REQUIRE(two_elt_models.size() == 2);
    auto mk_cone = [&](int model) {
      VerticalDoubleCone cone;
      cone.apex = one;
      cone.V = name_functor(one, ti.C, canonical.models.model_of[model].first);
      cone.v.assign(1, std::vector<FinFunction>(1));
      FinFunction fn;
      fn.src_size = 1;
      int c = canonical.models.model_of[model].first;
      fn.tgt_size = ti.PT.value[c][c].size();
      fn.map = {canonical.models.model_of[model].second};
      cone.v[0][0] = fn;
      return cone;
    };
    auto c1 = mk_cone(two_elt_models[0]);
    auto c2 = mk_cone(two_elt_models[1]);
    auto H = identity_prof(one);
    // theta = identity morphism of the carrier: swaps the distinct points, so
    // it is not a homomorphism between these two models
    std::vector<std::vector<FinFunction>> theta(1, std::vector<FinFunction>(1));
    int c = canonical.models.model_of[two_elt_models[0]].first;
    auto chom = ti.C->hom(c, c);
    FinFunction fn;
    fn.src_size = 1;
    fn.tgt_size = static_cast<int>(chom.size());
    int idpos = -1;
    for (size_t k = 0; k < chom.size(); ++k)
      if (chom[k] == ti.C->id_of(c)) idpos = static_cast<int>(k);
    fn.map = {idpos};
    theta[0][0] = fn;
    auto ms = mediate_square(H, theta, c1, c2, ti, canonical.models);
    CHECK(ms.report.verdict == Verdict::fail);
    bool witnessed = false;
    for (const auto& w : ms.report.witnesses)
      if (w.law == "square-compatibility") witnessed = true;
    CHECK(witnessed);
  }
}

TEST_CASE("universality") {
  auto two = std::make_shared<FinCategory>(chain_category(2));
  auto base = concrete_finset({1, 2});
  std::vector<CatPtr> apexes = {std::make_shared<FinCategory>(empty_category()),
                                std::make_shared<FinCategory>(terminal_category()),
                                std::make_shared<FinCategory>(walking_arrow_category())};

  SUBCASE("pointed clone instance passes") {
    auto ti = interpret_clone(base, pointed_clone(2));
    auto MC = enumerate_models(ti);
    CHECK(verify_universality(ti, MC, apexes).ok());
  }

  SUBCASE("closure monad instance passes") {
    auto ti = closure_interpretation(two);
    auto MC = enumerate_models(ti);
    CHECK(verify_universality(ti, MC, apexes).ok());
  }

  SUBCASE("the enlarged impostor fails clause-2 uniqueness") {
    auto ti = interpret_clone(base, pointed_clone(2));
    auto MC = enumerate_models(ti);
    auto fake = enlarge_with_disconnected_object(MC, ti);
    auto rep = verify_universality(ti, fake, apexes);
    CHECK(rep.verdict == Verdict::fail);
    bool uniq = false;
    for (const auto& w : rep.witnesses)
      if (w.law == "mediate-uniqueness") uniq = true;
    CHECK(uniq);
  }
}
