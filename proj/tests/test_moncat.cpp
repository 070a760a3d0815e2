#include <doctest.h>

#include "catalg/moncat.hpp"
#include "support.hpp"

using namespace catalg;
using namespace catalg::testing;

namespace {

// Join-monoidal structure on a poset category (tensor = least upper bound).
FinMonoidalCat poset_join_moncat(CatPtr P) {
  const auto& C = *P;
  int n = C.n_obj();
  std::vector<std::vector<int>> tob(n, std::vector<int>(n, -1));
  auto leq = [&](int a, int b) { return !C.hom(a, b).empty(); };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int j = 0; j < n; ++j) {
        if (!leq(x, j) || !leq(y, j)) continue;
        bool least = true;
        for (int k = 0; k < n; ++k)
          if (leq(x, k) && leq(y, k) && !leq(j, k)) least = false;
        if (least) {
          tob[x][y] = j;
          break;
        }
      }
      REQUIRE(tob[x][y] >= 0);
    }
  int m = C.n_mor();
  std::vector<std::vector<int>> tmor(m, std::vector<int>(m, -1));
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      tmor[f][g] = C.hom(tob[C.src(f)][C.src(g)], tob[C.tgt(f)][C.tgt(g)]).at(0);
  int unit = -1;  // bottom
  for (int x = 0; x < n; ++x) {
    bool bottom = true;
    for (int y = 0; y < n; ++y)
      if (!leq(x, y)) bottom = false;
    if (bottom) unit = x;
  }
  REQUIRE(unit >= 0);
  return make_strict_moncat(P, std::move(tob), std::move(tmor), unit);
}

FinMonad const_monad(CatPtr C, int target) {
  // The constant endofunctor at a top-like object with the forced structure.
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

FinMonad identity_monad(CatPtr C) {
  FinMonad T;
  T.S = identity_functor(C);
  T.eta = identity_nat(T.S);
  T.mu = identity_nat(T.S);
  return T;
}

}  // namespace

TEST_CASE("monoidal category validation") {
  auto two = std::make_shared<FinCategory>(chain_category(2));
  auto M = poset_join_moncat(two);
  CHECK(validate_moncat(M).ok());
  CHECK(M.unit == 0);
  CHECK(M.tob(1, 1) == 1);

  auto diamond = std::make_shared<FinCategory>(
      poset_category({{true, true, true, true},
                      {false, true, false, true},
                      {false, false, true, true},
                      {false, false, false, true}},
                     "diamond"));
  CHECK(validate_moncat(poset_join_moncat(diamond)).ok());
}

TEST_CASE("theories in poset metatheories") {
  auto two = std::make_shared<FinCategory>(chain_category(2));
  auto M = poset_join_moncat(two);
  // every object carries exactly one theory structure
  int count = 0;
  for (int T = 0; T < two->n_obj(); ++T) {
    auto es = two->hom(M.unit, T);
    auto ms = two->hom(M.tob(T, T), T);
    REQUIRE(es.size() == 1);
    REQUIRE(ms.size() == 1);
    Theory t{T, es[0], ms[0]};
    if (check_theory(M, t).ok()) ++count;
  }
  CHECK(count == 2);
}

TEST_CASE("theory violations are located") {
  // one-object monoidal category over Z2 (tensor of morphisms = addition)
  auto z2 = std::make_shared<FinCategory>(monoid_category({{0, 1}, {1, 0}}, 0, "Z2"));
  std::vector<std::vector<int>> tob = {{0}};
  std::vector<std::vector<int>> tmor = {{0, 1}, {1, 0}};
  auto M = make_strict_moncat(z2, tob, tmor, 0);
  REQUIRE(validate_moncat(M).ok());
  Theory good{0, 0, 0};
  CHECK(check_theory(M, good).ok());
  Theory flip{0, 1, 1};  // e = m = the nontrivial element: m+e = 0, laws hold
  CHECK(check_theory(M, flip).ok());
  Theory broken{0, 0, 1};  // unit diagrams fail
  auto rep = check_theory(M, broken);
  CHECK(rep.verdict == Verdict::fail);
  CHECK(rep.witnesses.size() >= 1);
}

TEST_CASE("endofunctor metatheory of the 2-chain") {
  auto two = std::make_shared<FinCategory>(chain_category(2));
  auto E = endofunctor_moncat(two);
  CHECK(E.mon.cat->n_obj() == 3);  // const0 <= id <= const1
  CHECK(validate_moncat(E.mon).ok());

  SUBCASE("identity monad is a theory both ways") {
    auto T = identity_monad(two);
    CHECK(check_monad(T).ok());
    auto t = monad_as_theory(E, T);
    CHECK(check_theory(E.mon, t).ok());
  }

  SUBCASE("const1 closure operator is a monad (a closure operator)") {
    auto T = const_monad(two, 1);
    CHECK(check_monad(T).ok());
    auto t = monad_as_theory(E, T);
    CHECK(check_theory(E.mon, t).ok());
    // two code paths, one truth: every [C,C] theory is a valid monad and back
    auto back = theory_as_monad(E, t);
    CHECK(check_monad(back).ok());
  }

  SUBCASE("const0 fails the monad laws") {
    FinMonad T;
    T.S.source = two;
    T.S.target = two;
    T.S.on_obj = {0, 0};
    T.S.on_mor.assign(two->n_mor(), two->id_of(0));
    // eta would need 1 <= 0; there is no natural transformation id => const0,
    // so typing itself fails
    T.eta.source = identity_functor(two);
    T.eta.target = T.S;
    T.eta.comp = {two->id_of(0), two->id_of(0)};  // wrong typing at object 1
    T.mu.source = compose_functors(T.S, T.S);
    T.mu.target = T.S;
    T.mu.comp.assign(2, two->id_of(0));
    CHECK(!check_monad(T).ok());
  }
}

TEST_CASE("two code paths, one truth: monad laws vs theory laws in [C,C]") {
  auto two = std::make_shared<FinCategory>(chain_category(2));
  auto E = endofunctor_moncat(two);
  // every candidate triple (S, eta, mu), valid or not, gets the same verdict
  // from the direct monad checker and from the monoid checker in [C,C]
  int agree = 0, candidates = 0;
  for (int S = 0; S < E.mon.cat->n_obj(); ++S)
    for (int e : E.mon.cat->hom(E.mon.unit, S))
      for (int m : E.mon.cat->hom(E.mon.tob(S, S), S)) {
        Theory t{S, e, m};
        auto monad = theory_as_monad(E, t);
        ++candidates;
        if (check_theory(E.mon, t).ok() == check_monad(monad).ok()) ++agree;
      }
  CHECK(candidates > 0);
  CHECK(agree == candidates);
}

TEST_CASE("cartesian monads") {
  auto two = std::make_shared<FinCategory>(chain_category(2));

  SUBCASE("identity monad is cartesian") {
    CHECK(check_cartesian_monad(*two, identity_monad(two)).ok());
  }

  SUBCASE("const1 closure monad: eta is not cartesian") {
    auto rep = check_cartesian_monad(*two, const_monad(two, 1));
    CHECK(rep.verdict == Verdict::fail);
    bool eta_witness = false;
    for (auto& w : rep.witnesses)
      if (w.law == "eta-cartesian") eta_witness = true;
    CHECK(eta_witness);
  }

  SUBCASE("category lacking pullbacks is an input error") {
    // "vee" poset flipped: 0 >= 1, 0 >= 2 has cospans with no pullback
    std::vector<std::vector<bool>> le = {
        {true, true, true}, {false, true, false}, {false, false, true}};
    auto vee = std::make_shared<FinCategory>(poset_category(le, "vee"));
    // cospan 1 -> ? <- 2 has no common lower bound in the flipped poset; in
    // this orientation (0 below 1 and 2) pullback of 1 <= ? is fine, but the
    // poset has no top so some cospans do not even exist; build one that
    // lacks a pullback: the 2-element discrete poset with a cospan cannot be
    // formed, so use the "wedge" 1 >= 0 <= 2 with cospan at missing top.
    // Simplest: discrete 2 objects has no products but also no cospans; use
    // the 4-element "N" poset instead: a <= c, b <= c, b <= d with cospan
    // (a <= c, b <= c) whose pullback (meet of a,b) does not exist.
    std::vector<std::vector<bool>> le2 = {{true, false, true, false},
                                          {false, true, true, true},
                                          {false, false, true, false},
                                          {false, false, false, true}};
    auto N = std::make_shared<FinCategory>(poset_category(le2, "Nposet"));
    REQUIRE(validate_category(*N).ok());
    auto rep = check_cartesian_monad(*N, identity_monad(N));
    CHECK(rep.verdict == Verdict::input_error);
  }
}

TEST_CASE("slice metatheory C/S1") {
  SUBCASE("S = identity on the 2-chain: tensor is the meet") {
    auto two = std::make_shared<FinCategory>(chain_category(2));
    auto S = slice_moncat(two, identity_monad(two));
    CHECK(S.mon.cat->n_obj() == 2);  // morphisms into 1: (0<=1), id_1
    CHECK(validate_moncat(S.mon).ok());
    // identify the slice objects by their source
    int obj0 = -1, obj1 = -1;
    for (size_t i = 0; i < S.obj_mor.size(); ++i) {
      if (two->src(S.obj_mor[i]) == 0) obj0 = static_cast<int>(i);
      if (two->src(S.obj_mor[i]) == 1) obj1 = static_cast<int>(i);
    }
    CHECK(S.mon.tob(obj0, obj1) == obj0);  // 0 AND 1 = 0
    CHECK(S.mon.tob(obj1, obj1) == obj1);
    CHECK(S.mon.unit == obj1);  // eta_1 = id_1
  }

  SUBCASE("S = identity on the diamond: product-like tensor") {
    auto diamond = std::make_shared<FinCategory>(
        poset_category({{true, true, true, true},
                        {false, true, false, true},
                        {false, false, true, true},
                        {false, false, false, true}},
                       "diamond"));
    auto S = slice_moncat(diamond, identity_monad(diamond));
    CHECK(S.mon.cat->n_obj() == 4);
    CHECK(validate_moncat(S.mon).ok());
    // tensor of the objects over a and b is their meet 0
    int oa = -1, ob = -1;
    for (size_t i = 0; i < S.obj_mor.size(); ++i) {
      if (diamond->src(S.obj_mor[i]) == 1) oa = static_cast<int>(i);
      if (diamond->src(S.obj_mor[i]) == 2) ob = static_cast<int>(i);
    }
    int meet = S.mon.tob(oa, ob);
    CHECK(diamond->src(S.obj_mor[meet]) == 0);
  }

  SUBCASE("monoid objects in C/1 for the 2-chain match brute force") {
    auto two = std::make_shared<FinCategory>(chain_category(2));
    auto S = slice_moncat(two, identity_monad(two));
    int found = 0;
    Theory the_theory;
    for (int T = 0; T < S.mon.cat->n_obj(); ++T)
      for (int e : S.mon.cat->hom(S.mon.unit, T))
        for (int m : S.mon.cat->hom(S.mon.tob(T, T), T))
          if (check_theory(S.mon, Theory{T, e, m}).ok()) {
            ++found;
            the_theory = Theory{T, e, m};
          }
    // brute force: internal meet-monoids = objects x with 1 <= x: only x = 1
    CHECK(found == 1);
    CHECK(two->src(S.obj_mor[the_theory.carrier]) == 1);
  }
}

TEST_CASE("Day convolution") {
  SUBCASE("2-chain with join: y(1) tensor y(1) is y(1)") {
    auto two = std::make_shared<FinCategory>(chain_category(2));
    auto M = poset_join_moncat(two);
    auto y1 = representable_presheaf(two, 1);
    auto r = day_tensor(M, y1, y1);
    CHECK(validate_presheaf(r.sheaf).ok());
    // y(1)(x) = hom(x,1) is a singleton for every x; so is the convolution
    CHECK(r.sheaf.value[0].size() == 1);
    CHECK(r.sheaf.value[1].size() == 1);
  }

  SUBCASE("discrete group: convolution counts pairs") {
    // Z2 as a discrete monoidal category on objects {g0, g1}
    auto disc = std::make_shared<FinCategory>(
        poset_category({{true, false}, {false, true}}, "Z2disc"));
    std::vector<std::vector<int>> tob = {{0, 1}, {1, 0}};
    std::vector<std::vector<int>> tmor(2, std::vector<int>(2));
    for (int f = 0; f < 2; ++f)
      for (int g = 0; g < 2; ++g) tmor[f][g] = disc->id_of(tob[f][g]);
    auto M = make_strict_moncat(disc, tob, tmor, 0);
    REQUIRE(validate_moncat(M).ok());
    Presheaf Q{disc, {}, {}};
    Q.value.resize(2);
    Q.value[0].elems = {"q0", "q1"};
    Q.value[1].elems = {"q2"};
    Q.action = {identity_function(2), identity_function(1)};
    Presheaf P{disc, {}, {}};
    P.value.resize(2);
    P.value[0].elems = {"p0"};
    P.value[1].elems = {"p1", "p2", "p3"};
    P.action = {identity_function(1), identity_function(3)};
    auto r = day_tensor(M, Q, P);
    CHECK(r.sheaf.value[0].size() == 2 * 1 + 1 * 3);  // y+x = 0
    CHECK(r.sheaf.value[1].size() == 2 * 3 + 1 * 1);  // y+x = 1
  }

  SUBCASE("unit law witness is a bijection") {
    auto two = std::make_shared<FinCategory>(chain_category(2));
    auto M = poset_join_moncat(two);
    auto Q = representable_presheaf(two, 1);
    auto QI = day_tensor(M, Q, day_unit(M));
    auto wit = day_right_unit_witness(M, Q, QI);
    for (auto& fn : wit) CHECK(is_bijection(fn));
  }
}

TEST_CASE("monoidal functors and profunctors") {
  auto two = std::make_shared<FinCategory>(chain_category(2));
  auto three = std::make_shared<FinCategory>(chain_category(3));
  auto M2 = std::make_shared<FinMonoidalCat>(poset_join_moncat(two));
  auto M3 = std::make_shared<FinMonoidalCat>(poset_join_moncat(three));

  SUBCASE("identity monoidal functor and profunctor validate") {
    CHECK(validate_monfunctor(identity_monfunctor(M2)).ok());
    CHECK(validate_monprofunctor(identity_monprof(M2)).ok());
  }

  SUBCASE("composition unit law: K . id has the cardinalities of K") {
    auto I = identity_monprof(M2);
    auto KI = compose_monprof(I, I);
    CHECK(validate_monprofunctor(KI.mp).ok());
    for (int b = 0; b < 2; ++b)
      for (int a = 0; a < 2; ++a)
        CHECK(KI.mp.H.value[b][a].size() == I.H.value[b][a].size());
  }

  SUBCASE("inclusion 2-chain -> 3-chain is strong monoidal with F_* -| F^*") {
    MonFunctor F;
    F.dir = MonDir::strong;
    F.F.source = two;
    F.F.target = three;
    F.F.on_obj = {0, 2};
    F.F.on_mor.resize(two->n_mor());
    for (int m = 0; m < two->n_mor(); ++m)
      F.F.on_mor[m] = three->hom(F.F.on_obj[two->src(m)], F.F.on_obj[two->tgt(m)]).at(0);
    F.srcM = M2;
    F.tgtM = M3;
    F.unit_mor = three->id_of(0);
    F.bin.assign(2, std::vector<int>(2));
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        F.bin[x][y] = three->id_of(M3->tob(F.F.on_obj[y], F.F.on_obj[x]));
    REQUIRE(validate_monfunctor(F).ok());
    auto L = mon_rep_lower(F);
    CHECK(validate_monprofunctor(L).ok());
    auto U = mon_rep_upper(F);
    CHECK(validate_monprofunctor(U).ok());
    CHECK(check_mth_adjunction(F).ok());
  }

  SUBCASE("identity: F_* and F^* are the identity monoidal profunctor") {
    auto F = identity_monfunctor(M2);
    auto L = mon_rep_lower(F);
    auto I = identity_monprof(M2);
    for (int b = 0; b < 2; ++b)
      for (int a = 0; a < 2; ++a) CHECK(L.H.value[b][a].elems == I.H.value[b][a].elems);
    CHECK(L.unit_elt == I.unit_elt);
  }
}

TEST_CASE("rebracketing isos") {
  auto three = std::make_shared<FinCategory>(chain_category(3));
  auto M = poset_join_moncat(three);
  // strict poset case: all rebracketing isos are identities
  int r = rebracket_iso(M, 1, {2, 1});
  CHECK(three->src(r) == three->tgt(r));
  CHECK(r == three->id_of(tensor_power_obj(M, 1, 3)));
}
