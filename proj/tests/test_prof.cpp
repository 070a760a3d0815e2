#include <doctest.h>

#include "catalg/prof.hpp"
#include "support.hpp"

using namespace catalg;
using namespace catalg::testing;

TEST_CASE("identity profunctor") {
  SUBCASE("terminal category: singleton at the unique pair") {
    auto C = std::make_shared<FinCategory>(terminal_category());
    auto H = identity_prof(C);
    CHECK(validate_profunctor(H).ok());
    CHECK(H.value[0][0].size() == 1);
  }
  SUBCASE("walking arrow: values read off the hom-sets") {
    auto C = std::make_shared<FinCategory>(walking_arrow_category());
    auto H = identity_prof(C);
    CHECK(validate_profunctor(H).ok());
    CHECK(H.value[0][0].size() == 1);
    CHECK(H.value[0][1].size() == 1);
    CHECK(H.value[1][0].size() == 0);
    CHECK(H.value[1][1].size() == 1);
  }
  SUBCASE("any C: value(b,a) equals hom(b,a) elementwise") {
    for (auto C : shape_pool()) {
      auto H = identity_prof(C);
      REQUIRE(validate_profunctor(H).ok());
      for (int b = 0; b < C->n_obj(); ++b)
        for (int a = 0; a < C->n_obj(); ++a)
          REQUIRE(H.value[b][a].size() == static_cast<int>(C->hom(b, a).size()));
    }
  }
}

TEST_CASE("profunctor composition") {
  SUBCASE("discrete middle: |K.H| is a sum of products") {
    // A = C = 1, B = discrete 2; |K(*,b_i)| = (2,1), |H(b_i,*)| = (1,2)
    auto one = std::make_shared<FinCategory>(terminal_category());
    auto B = std::make_shared<FinCategory>(
        poset_category({{true, false}, {false, true}}, "disc2"));
    Profunctor H;  // 1 -|-> B
    H.source = one;
    H.target = B;
    H.value.assign(2, std::vector<FinSetObj>(1));
    H.value[0][0].elems = {"h0"};
    H.value[1][0].elems = {"h1", "h2"};
    H.lact.assign(B->n_mor(), std::vector<FinFunction>(1));
    for (int g = 0; g < B->n_mor(); ++g)
      H.lact[g][0] = identity_function(H.value[B->src(g)][0].size());
    H.ract.assign(1, std::vector<FinFunction>(2));
    for (int b = 0; b < 2; ++b) H.ract[0][b] = identity_function(H.value[b][0].size());
    REQUIRE(validate_profunctor(H).ok());

    Profunctor K;  // B -|-> 1
    K.source = B;
    K.target = one;
    K.value.assign(1, std::vector<FinSetObj>(2));
    K.value[0][0].elems = {"k0", "k1"};
    K.value[0][1].elems = {"k2"};
    K.lact.assign(1, std::vector<FinFunction>(2));
    for (int b = 0; b < 2; ++b) K.lact[0][b] = identity_function(K.value[0][b].size());
    K.ract.assign(B->n_mor(), std::vector<FinFunction>(1));
    for (int g = 0; g < B->n_mor(); ++g)
      K.ract[g][0] = identity_function(K.value[0][B->src(g)].size());
    REQUIRE(validate_profunctor(K).ok());

    auto KH = compose_prof(K, H);
    CHECK(validate_profunctor(KH.prof).ok());
    CHECK(KH.prof.value[0][0].size() == 2 * 1 + 1 * 2);
  }

  SUBCASE("unit laws hold with bijective witnesses") {
    for (auto C : shape_pool()) {
      auto H = identity_prof(C);  // also a generic profunctor C -|-> C
      auto HI = compose_prof(H, identity_prof(C));
      auto IH = compose_prof(identity_prof(C), H);
      auto run = right_unitor(H, HI);
      auto lun = left_unitor(H, IH);
      REQUIRE(iso_is_bijective(run));
      REQUIRE(iso_is_bijective(lun));
      for (int b = 0; b < C->n_obj(); ++b)
        for (int a = 0; a < C->n_obj(); ++a) {
          REQUIRE(HI.prof.value[b][a].size() == H.value[b][a].size());
          REQUIRE(IH.prof.value[b][a].size() == H.value[b][a].size());
        }
    }
  }

  SUBCASE("composite over the walking arrow matches the coend oracle") {
    auto B = std::make_shared<FinCategory>(walking_arrow_category());
    // K = H = the hom profunctor; (K.H)(b,a) should be the coend of
    // K(b,-) x H(-,a), checked against the naive coequalizer.
    auto H = identity_prof(B);
    auto KH = compose_prof(H, H);
    REQUIRE(validate_profunctor(KH.prof).ok());
    for (int c = 0; c < 2; ++c)
      for (int a = 0; a < 2; ++a) {
        BiDiagram D;
        D.shape = B;
        int nb = 2;
        D.value.assign(nb, std::vector<FinSetObj>(nb));
        for (int bm = 0; bm < nb; ++bm)
          for (int bp = 0; bp < nb; ++bp)
            for (const auto& ke : H.value[c][bp].elems)
              for (const auto& he : H.value[bm][a].elems)
                D.value[bm][bp].elems.push_back("(" + ke + "," + he + ")");
        D.left.assign(B->n_mor(), std::vector<FinFunction>(nb));
        D.right.assign(B->n_mor(), std::vector<FinFunction>(nb));
        for (int g = 0; g < B->n_mor(); ++g) {
          int s = B->src(g), t = B->tgt(g);
          for (int bp = 0; bp < nb; ++bp) {
            FinFunction fn;
            int kn = H.value[c][bp].size();
            fn.src_size = kn * H.value[t][a].size();
            fn.tgt_size = kn * H.value[s][a].size();
            fn.map.resize(fn.src_size);
            for (int k = 0; k < kn; ++k)
              for (int h = 0; h < H.value[t][a].size(); ++h)
                fn.map[k * H.value[t][a].size() + h] =
                    k * H.value[s][a].size() + H.lact[g][a].map[h];
            D.left[g][bp] = fn;
          }
          for (int bm = 0; bm < nb; ++bm) {
            FinFunction fn;
            int hs = H.value[bm][a].size();
            fn.src_size = H.value[c][s].size() * hs;
            fn.tgt_size = H.value[c][t].size() * hs;
            fn.map.resize(fn.src_size);
            for (int k = 0; k < H.value[c][s].size(); ++k)
              for (int h = 0; h < hs; ++h) fn.map[k * hs + h] = H.ract[g][c].map[k] * hs + h;
            D.right[g][bm] = fn;
          }
        }
        auto oracle = naive_coequalizer(D);
        REQUIRE(KH.prof.value[c][a].size() == oracle.n_classes);
      }
  }
}

TEST_CASE("representable embeddings") {
  auto C = std::make_shared<FinCategory>(walking_arrow_category());

  SUBCASE("identity functor gives the identity profunctor") {
    auto F = identity_functor(C);
    auto L = rep_lower(F);
    auto I = identity_prof(C);
    for (int b = 0; b < 2; ++b)
      for (int a = 0; a < 2; ++a) CHECK(L.value[b][a].elems == I.value[b][a].elems);
  }

  SUBCASE("name of an object: F_*(x,*) = C(x, c)") {
    auto one = std::make_shared<FinCategory>(terminal_category());
    auto F = name_functor(one, C, 1);  // picks b
    auto L = rep_lower(F);
    CHECK(L.value[0][0].size() == 1);  // C(a,b)
    CHECK(L.value[1][0].size() == 1);  // C(b,b)
    CHECK(validate_profunctor(L).ok());
  }

  SUBCASE("adjunction triangle identities for ! : walking-arrow -> 1") {
    auto one = std::make_shared<FinCategory>(terminal_category());
    auto F = bang_functor(C, one);
    auto rep = check_prof_adjunction(F);
    CHECK(rep.ok());
  }

  SUBCASE("adjunction for every functor in a small corpus") {
    auto two = std::make_shared<FinCategory>(chain_category(2));
    auto three = std::make_shared<FinCategory>(chain_category(3));
    // inclusion 2-chain -> 3-chain at the bottom
    FinFunctor inc;
    inc.source = two;
    inc.target = three;
    inc.on_obj = {0, 1};
    inc.on_mor.resize(two->n_mor());
    for (int m = 0; m < two->n_mor(); ++m)
      inc.on_mor[m] = three->hom(two->src(m), two->tgt(m))[0];
    REQUIRE(validate_functor(inc).ok());
    CHECK(check_prof_adjunction(inc).ok());
    CHECK(check_prof_adjunction(identity_functor(three)).ok());
  }
}

TEST_CASE("squares") {
  auto C = std::make_shared<FinCategory>(walking_arrow_category());
  auto I = identity_prof(C);

  SUBCASE("vertical identity on horizontal identity equals horizontal identity of identity") {
    auto vid = vertical_identity(I);
    auto hid = horizontal_identity(identity_functor(C));
    CHECK(same_square(vid, hid));
  }

  SUBCASE("interchange on a 2x2 grid of identity squares") {
    auto s = vertical_identity(I);
    CHECK(check_interchange(s, s, s, s).ok());
  }

  SUBCASE("interchange on a nontrivial grid") {
    // squares built from functor action: F = swap-free endofunctor on 2-chain
    auto two = std::make_shared<FinCategory>(chain_category(2));
    FinFunctor c1{two, two, {1, 1}, {two->id_of(1), two->id_of(1), two->id_of(1)}};
    REQUIRE(validate_functor(c1).ok());
    auto sq = horizontal_identity(c1);  // I -> I along (c1, c1)
    REQUIRE(validate_square(sq).ok());
    CHECK(check_interchange(sq, sq, horizontal_identity(identity_functor(two)),
                            horizontal_identity(identity_functor(two)))
              .ok());
  }

  SUBCASE("pentagon-style associativity coherence on a triple") {
    auto H = identity_prof(C);
    auto K21 = compose_prof(H, H);
    auto K32 = compose_prof(H, H);
    auto K32_1 = compose_prof(K32.prof, H);
    auto K3_21 = compose_prof(H, K21.prof);
    auto a = associator(H, H, H, K32, K32_1, K21, K3_21);
    CHECK(iso_is_bijective(a));
  }
}

namespace {

// an associativity witness as a square along identity functors
ProfSquare iso_as_square(const Profunctor& src, const Profunctor& tgt, const ProfIso& iso) {
  ProfSquare s;
  s.top = src;
  s.bottom = tgt;
  s.left = identity_functor(src.source);
  s.right = identity_functor(src.target);
  s.comp = iso.comp;
  return s;
}

ProfSquare compose_iso_squares(const ProfSquare& s2, const ProfSquare& s1) {
  return vcompose_squares(s2, s1);
}

}  // namespace

TEST_CASE("pentagon coherence of the composition witnesses") {
  auto C = std::make_shared<FinCategory>(chain_category(2));
  auto A = identity_prof(C), B = identity_prof(C), Cc = identity_prof(C), D = identity_prof(C);
  auto BA = compose_prof(B, A);
  auto CB = compose_prof(Cc, B);
  auto DC = compose_prof(D, Cc);
  auto DC_B = compose_prof(DC.prof, B);
  auto D_CB = compose_prof(D, CB.prof);
  auto CB_A = compose_prof(CB.prof, A);
  auto C_BA = compose_prof(Cc, BA.prof);
  auto DCB_A = compose_prof(DC_B.prof, A);   // ((DC)B)A
  auto D_CB__A = compose_prof(D_CB.prof, A); // (D(CB))A
  auto D__CB_A = compose_prof(D, CB_A.prof); // D((CB)A)
  auto D__C_BA = compose_prof(D, C_BA.prof); // D(C(BA))
  auto DC__BA = compose_prof(DC.prof, BA.prof);  // (DC)(BA)

  // route one: ((DC)B)A -> (DC)(BA) -> D(C(BA))
  auto a1 = associator(DC.prof, B, A, DC_B, DCB_A, BA, DC__BA);
  auto a2 = associator(D, Cc, BA.prof, DC, DC__BA, C_BA, D__C_BA);
  // route two: ((DC)B)A -> (D(CB))A -> D((CB)A) -> D(C(BA))
  auto b1iso = associator(D, Cc, B, DC, DC_B, CB, D_CB);
  auto b1 = hcompose_squares(iso_as_square(DC_B.prof, D_CB.prof, b1iso), vertical_identity(A),
                             DCB_A, D_CB__A);
  auto b2 = associator(D, CB.prof, A, D_CB, D_CB__A, CB_A, D__CB_A);
  auto b3iso = associator(Cc, B, A, CB, CB_A, BA, C_BA);
  auto b3 = hcompose_squares(vertical_identity(D), iso_as_square(CB_A.prof, C_BA.prof, b3iso),
                             D__CB_A, D__C_BA);

  auto route1 = compose_iso_squares(iso_as_square(DC__BA.prof, D__C_BA.prof, a2),
                                    iso_as_square(DCB_A.prof, DC__BA.prof, a1));
  auto route2 = compose_iso_squares(b3, compose_iso_squares(
                                            iso_as_square(D_CB__A.prof, D__CB_A.prof, b2), b1));
  CHECK(same_square(route1, route2));
}
