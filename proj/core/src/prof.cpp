#include "catalg/prof.hpp"

#include <array>
#include <cassert>

namespace catalg {

Report validate_profunctor(const Profunctor& H) {
  Report rep;
  const auto& A = *H.source;
  const auto& B = *H.target;
  if (static_cast<int>(H.value.size()) != B.n_obj() ||
      static_cast<int>(H.lact.size()) != B.n_mor() ||
      static_cast<int>(H.ract.size()) != A.n_mor()) {
    rep.input_error("profunctor-tables", "table size mismatch");
    return rep;
  }
  for (int b = 0; b < B.n_obj(); ++b)
    if (static_cast<int>(H.value[b].size()) != A.n_obj()) {
      rep.input_error("profunctor-tables", "value row size mismatch");
      return rep;
    }
  for (int b = 0; b < B.n_obj(); ++b)
    for (int a = 0; a < A.n_obj(); ++a) {
      if (H.lact[B.id_of(b)][a].map != identity_function(H.value[b][a].size()).map)
        rep.fail("prof-left-id", B.objects[b] + " at " + A.objects[a]);
      if (H.ract[A.id_of(a)][b].map != identity_function(H.value[b][a].size()).map)
        rep.fail("prof-right-id", A.objects[a] + " at " + B.objects[b]);
    }
  for (int g2 = 0; g2 < B.n_mor(); ++g2)
    for (int g1 = 0; g1 < B.n_mor(); ++g1) {
      if (!B.composable(g2, g1)) continue;
      int g21 = B.compose(g2, g1);
      for (int a = 0; a < A.n_obj(); ++a) {
        auto lhs = H.lact[g21][a];
        auto rhs = compose_functions(H.lact[g1][a], H.lact[g2][a]);
        if (lhs.map != rhs.map)
          rep.fail("prof-left-comp", "(" + B.morphisms[g2].id + "," + B.morphisms[g1].id + ")");
      }
    }
  for (int f2 = 0; f2 < A.n_mor(); ++f2)
    for (int f1 = 0; f1 < A.n_mor(); ++f1) {
      if (!A.composable(f2, f1)) continue;
      int f21 = A.compose(f2, f1);
      for (int b = 0; b < B.n_obj(); ++b) {
        auto lhs = H.ract[f21][b];
        auto rhs = compose_functions(H.ract[f2][b], H.ract[f1][b]);
        if (lhs.map != rhs.map)
          rep.fail("prof-right-comp", "(" + A.morphisms[f2].id + "," + A.morphisms[f1].id + ")");
      }
    }
  for (int g = 0; g < B.n_mor(); ++g)
    for (int f = 0; f < A.n_mor(); ++f) {
      auto lhs = compose_functions(H.ract[f][B.src(g)], H.lact[g][A.src(f)]);
      auto rhs = compose_functions(H.lact[g][A.tgt(f)], H.ract[f][B.tgt(g)]);
      if (lhs.map != rhs.map)
        rep.fail("prof-bifunctor", "(" + B.morphisms[g].id + "," + A.morphisms[f].id + ")");
    }
  return rep;
}

Profunctor identity_prof(CatPtr C) {
  auto D = hom_bidiagram(C);
  Profunctor H;
  H.source = C;
  H.target = C;
  H.value = std::move(D.value);
  H.lact = std::move(D.left);
  H.ract = std::move(D.right);
  return H;
}

CompositeProf compose_prof(const Profunctor& K, const Profunctor& H) {
  // K : B -|-> C, H : A -|-> B.
  assert(K.source.get() == H.target.get() || K.source->objects == H.target->objects);
  CatPtr A = H.source;
  CatPtr B = H.target;
  CatPtr C = K.target;
  int na = A->n_obj(), nb = B->n_obj(), nc = C->n_obj();

  CompositeProf out;
  out.prof.source = A;
  out.prof.target = C;
  out.prof.value.assign(nc, std::vector<FinSetObj>(na));
  out.class_of.assign(nc, std::vector<std::vector<int>>(na));
  out.offset.assign(nc, std::vector<std::vector<int>>(na, std::vector<int>(nb + 1, 0)));
  out.rep.assign(nc, std::vector<std::vector<std::array<int, 3>>>(na));

  for (int c = 0; c < nc; ++c)
    for (int a = 0; a < na; ++a) {
      // BiDiagram over B: D(b-, b+) = K(c, b+) x H(b-, a)
      BiDiagram D;
      D.shape = B;
      D.value.assign(nb, std::vector<FinSetObj>(nb));
      for (int bm = 0; bm < nb; ++bm)
        for (int bp = 0; bp < nb; ++bp)
          for (const auto& ke : K.value[c][bp].elems)
            for (const auto& he : H.value[bm][a].elems)
              D.value[bm][bp].elems.push_back("(" + ke + "," + he + ")");
      D.left.assign(B->n_mor(), std::vector<FinFunction>(nb));
      D.right.assign(B->n_mor(), std::vector<FinFunction>(nb));
      for (int g = 0; g < B->n_mor(); ++g) {
        int s = B->src(g), t = B->tgt(g);
        for (int bp = 0; bp < nb; ++bp) {
          FinFunction fn;
          int kn = K.value[c][bp].size();
          int hs = H.value[t][a].size();
          fn.src_size = kn * hs;
          fn.tgt_size = kn * H.value[s][a].size();
          fn.map.resize(fn.src_size);
          for (int k = 0; k < kn; ++k)
            for (int h = 0; h < hs; ++h)
              fn.map[k * hs + h] = k * H.value[s][a].size() + H.lact[g][a].map[h];
          D.left[g][bp] = fn;
        }
        for (int bm = 0; bm < nb; ++bm) {
          FinFunction fn;
          int hs = H.value[bm][a].size();
          int ks = K.value[c][s].size();
          fn.src_size = ks * hs;
          fn.tgt_size = K.value[c][t].size() * hs;
          fn.map.resize(fn.src_size);
          for (int k = 0; k < ks; ++k)
            for (int h = 0; h < hs; ++h) fn.map[k * hs + h] = K.ract[g][c].map[k] * hs + h;
          D.right[g][bm] = fn;
        }
      }
      auto ce = coend(D);
      out.prof.value[c][a] = ce.set;
      auto& off = out.offset[c][a];
      for (int b = 0; b < nb; ++b)
        off[b + 1] = off[b] + K.value[c][b].size() * H.value[b][a].size();
      out.class_of[c][a].assign(off[nb], -1);
      for (int b = 0; b < nb; ++b) {
        int hs = H.value[b][a].size();
        for (int k = 0; k < K.value[c][b].size(); ++k)
          for (int h = 0; h < hs; ++h)
            out.class_of[c][a][off[b] + k * hs + h] = ce.proj[b].map[k * hs + h];
      }
      out.rep[c][a].resize(ce.set.size());
      for (int cl = 0; cl < ce.set.size(); ++cl) {
        auto [b, flat] = ce.class_rep[cl];
        int hs = H.value[b][a].size();
        out.rep[c][a][cl] = std::array<int, 3>{b, flat / hs, flat % hs};
      }
    }

  out.prof.lact.assign(C->n_mor(), std::vector<FinFunction>(na));
  for (int g = 0; g < C->n_mor(); ++g) {
    int s = C->src(g), t = C->tgt(g);
    for (int a = 0; a < na; ++a) {
      FinFunction fn;
      fn.src_size = out.prof.value[t][a].size();
      fn.tgt_size = out.prof.value[s][a].size();
      for (int cl = 0; cl < fn.src_size; ++cl) {
        auto [b, k, h] = out.rep[t][a][cl];
        int k2 = K.lact[g][b].map[k];
        fn.map.push_back(out.cls(s, a, b, k2, h, H.value[b][a].size()));
      }
      out.prof.lact[g][a] = fn;
    }
  }
  out.prof.ract.assign(A->n_mor(), std::vector<FinFunction>(nc));
  for (int f = 0; f < A->n_mor(); ++f) {
    int s = A->src(f), t = A->tgt(f);
    for (int c = 0; c < nc; ++c) {
      FinFunction fn;
      fn.src_size = out.prof.value[c][s].size();
      fn.tgt_size = out.prof.value[c][t].size();
      for (int cl = 0; cl < fn.src_size; ++cl) {
        auto [b, k, h] = out.rep[c][s][cl];
        int h2 = H.ract[f][b].map[h];
        fn.map.push_back(out.cls(c, t, b, k, h2, H.value[b][t].size()));
      }
      out.prof.ract[f][c] = fn;
    }
  }
  return out;
}

ProfIso right_unitor(const Profunctor& H, const CompositeProf& HI) {
  const auto& A = *H.source;
  const auto& B = *H.target;
  ProfIso iso;
  iso.comp.assign(B.n_obj(), std::vector<FinFunction>(A.n_obj()));
  for (int b = 0; b < B.n_obj(); ++b)
    for (int a = 0; a < A.n_obj(); ++a) {
      FinFunction fn;
      fn.src_size = HI.prof.value[b][a].size();
      fn.tgt_size = H.value[b][a].size();
      for (int cl = 0; cl < fn.src_size; ++cl) {
        auto [ap, k, u] = HI.rep[b][a][cl];
        int umor = A.hom(ap, a)[u];
        fn.map.push_back(H.ract[umor][b].map[k]);
      }
      iso.comp[b][a] = fn;
    }
  return iso;
}

ProfIso left_unitor(const Profunctor& H, const CompositeProf& IH) {
  const auto& A = *H.source;
  const auto& B = *H.target;
  ProfIso iso;
  iso.comp.assign(B.n_obj(), std::vector<FinFunction>(A.n_obj()));
  for (int b = 0; b < B.n_obj(); ++b)
    for (int a = 0; a < A.n_obj(); ++a) {
      FinFunction fn;
      fn.src_size = IH.prof.value[b][a].size();
      fn.tgt_size = H.value[b][a].size();
      for (int cl = 0; cl < fn.src_size; ++cl) {
        auto [bp, v, k] = IH.rep[b][a][cl];
        int vmor = B.hom(b, bp)[v];
        fn.map.push_back(H.lact[vmor][a].map[k]);
      }
      iso.comp[b][a] = fn;
    }
  return iso;
}

ProfIso associator(const Profunctor& K3, const Profunctor& K2, const Profunctor& K1,
                   const CompositeProf& K32, const CompositeProf& K32_1,
                   const CompositeProf& K21, const CompositeProf& K3_21) {
  const auto& A = *K1.source;
  const auto& D = *K3.target;
  ProfIso iso;
  iso.comp.assign(D.n_obj(), std::vector<FinFunction>(A.n_obj()));
  for (int d = 0; d < D.n_obj(); ++d)
    for (int a = 0; a < A.n_obj(); ++a) {
      FinFunction fn;
      fn.src_size = K32_1.prof.value[d][a].size();
      fn.tgt_size = K3_21.prof.value[d][a].size();
      for (int cl = 0; cl < fn.src_size; ++cl) {
        auto [b, p, h] = K32_1.rep[d][a][cl];
        auto [c, k3, k2] = K32.rep[d][b][p];
        int q = K21.cls(c, a, b, k2, h, K1.value[b][a].size());
        fn.map.push_back(K3_21.cls(d, a, c, k3, q, K21.prof.value[c][a].size()));
      }
      iso.comp[d][a] = fn;
    }
  return iso;
}

bool iso_is_bijective(const ProfIso& iso) {
  for (const auto& row : iso.comp)
    for (const auto& fn : row)
      if (!is_bijection(fn)) return false;
  return true;
}

Profunctor rep_lower(const FinFunctor& F) {
  const auto& A = *F.source;
  const auto& B = *F.target;
  Profunctor H;
  H.source = F.source;
  H.target = F.target;
  H.value.assign(B.n_obj(), std::vector<FinSetObj>(A.n_obj()));
  for (int b = 0; b < B.n_obj(); ++b)
    for (int a = 0; a < A.n_obj(); ++a)
      for (int m : B.hom(b, F.on_obj[a])) H.value[b][a].elems.push_back(B.morphisms[m].id);
  H.lact.assign(B.n_mor(), std::vector<FinFunction>(A.n_obj()));
  for (int g = 0; g < B.n_mor(); ++g)
    for (int a = 0; a < A.n_obj(); ++a) {
      FinFunction fn;
      fn.src_size = H.value[B.tgt(g)][a].size();
      fn.tgt_size = H.value[B.src(g)][a].size();
      for (int m : B.hom(B.tgt(g), F.on_obj[a]))
        fn.map.push_back(H.value[B.src(g)][a].index_of(B.morphisms[B.compose(m, g)].id));
      H.lact[g][a] = fn;
    }
  H.ract.assign(A.n_mor(), std::vector<FinFunction>(B.n_obj()));
  for (int f = 0; f < A.n_mor(); ++f)
    for (int b = 0; b < B.n_obj(); ++b) {
      FinFunction fn;
      fn.src_size = H.value[b][A.src(f)].size();
      fn.tgt_size = H.value[b][A.tgt(f)].size();
      for (int m : B.hom(b, F.on_obj[A.src(f)]))
        fn.map.push_back(H.value[b][A.tgt(f)].index_of(B.morphisms[B.compose(F.on_mor[f], m)].id));
      H.ract[f][b] = fn;
    }
  return H;
}

Profunctor rep_upper(const FinFunctor& F) {
  const auto& A = *F.source;
  const auto& B = *F.target;
  Profunctor H;
  H.source = F.target;  // B
  H.target = F.source;  // A
  H.value.assign(A.n_obj(), std::vector<FinSetObj>(B.n_obj()));
  for (int a = 0; a < A.n_obj(); ++a)
    for (int b = 0; b < B.n_obj(); ++b)
      for (int m : B.hom(F.on_obj[a], b)) H.value[a][b].elems.push_back(B.morphisms[m].id);
  H.lact.assign(A.n_mor(), std::vector<FinFunction>(B.n_obj()));
  for (int f = 0; f < A.n_mor(); ++f)
    for (int b = 0; b < B.n_obj(); ++b) {
      FinFunction fn;
      fn.src_size = H.value[A.tgt(f)][b].size();
      fn.tgt_size = H.value[A.src(f)][b].size();
      for (int m : B.hom(F.on_obj[A.tgt(f)], b))
        fn.map.push_back(H.value[A.src(f)][b].index_of(B.morphisms[B.compose(m, F.on_mor[f])].id));
      H.lact[f][b] = fn;
    }
  H.ract.assign(B.n_mor(), std::vector<FinFunction>(A.n_obj()));
  for (int g = 0; g < B.n_mor(); ++g)
    for (int a = 0; a < A.n_obj(); ++a) {
      FinFunction fn;
      fn.src_size = H.value[a][B.src(g)].size();
      fn.tgt_size = H.value[a][B.tgt(g)].size();
      for (int m : B.hom(F.on_obj[a], B.src(g)))
        fn.map.push_back(H.value[a][B.tgt(g)].index_of(B.morphisms[B.compose(g, m)].id));
      H.ract[g][a] = fn;
    }
  return H;
}

// ---------------------------------------------------------------------------
// Squares

Report validate_square(const ProfSquare& s) {
  Report rep;
  const auto& A = *s.top.source;
  const auto& B = *s.top.target;
  for (int b = 0; b < B.n_obj(); ++b)
    for (int a = 0; a < A.n_obj(); ++a) {
      const auto& fn = s.comp[b][a];
      if (fn.src_size != s.top.value[b][a].size() ||
          fn.tgt_size != s.bottom.value[s.right.on_obj[b]][s.left.on_obj[a]].size()) {
        rep.input_error("square-typing",
                        "component at (" + B.objects[b] + "," + A.objects[a] + ") mistyped");
        return rep;
      }
    }
  for (int g = 0; g < B.n_mor(); ++g)
    for (int a = 0; a < A.n_obj(); ++a) {
      auto lhs = compose_functions(s.comp[B.src(g)][a], s.top.lact[g][a]);
      auto rhs =
          compose_functions(s.bottom.lact[s.right.on_mor[g]][s.left.on_obj[a]], s.comp[B.tgt(g)][a]);
      if (lhs.map != rhs.map)
        rep.fail("square-naturality-left", B.morphisms[g].id + " at " + A.objects[a]);
    }
  for (int f = 0; f < A.n_mor(); ++f)
    for (int b = 0; b < B.n_obj(); ++b) {
      auto lhs = compose_functions(s.comp[b][A.tgt(f)], s.top.ract[f][b]);
      auto rhs =
          compose_functions(s.bottom.ract[s.left.on_mor[f]][s.right.on_obj[b]], s.comp[b][A.src(f)]);
      if (lhs.map != rhs.map)
        rep.fail("square-naturality-right", A.morphisms[f].id + " at " + B.objects[b]);
    }
  return rep;
}

ProfSquare vertical_identity(const Profunctor& H) {
  ProfSquare s;
  s.top = H;
  s.bottom = H;
  s.left = identity_functor(H.source);
  s.right = identity_functor(H.target);
  s.comp.assign(H.target->n_obj(), std::vector<FinFunction>(H.source->n_obj()));
  for (int b = 0; b < H.target->n_obj(); ++b)
    for (int a = 0; a < H.source->n_obj(); ++a)
      s.comp[b][a] = identity_function(H.value[b][a].size());
  return s;
}

ProfSquare horizontal_identity(const FinFunctor& F) {
  ProfSquare s;
  s.top = identity_prof(F.source);
  s.bottom = identity_prof(F.target);
  s.left = F;
  s.right = F;
  const auto& A = *F.source;
  const auto& Ap = *F.target;
  s.comp.assign(A.n_obj(), std::vector<FinFunction>(A.n_obj()));
  for (int b = 0; b < A.n_obj(); ++b)
    for (int a = 0; a < A.n_obj(); ++a) {
      FinFunction fn;
      fn.src_size = s.top.value[b][a].size();
      fn.tgt_size = s.bottom.value[F.on_obj[b]][F.on_obj[a]].size();
      for (int m : A.hom(b, a))
        fn.map.push_back(
            s.bottom.value[F.on_obj[b]][F.on_obj[a]].index_of(Ap.morphisms[F.on_mor[m]].id));
      s.comp[b][a] = fn;
    }
  return s;
}

ProfSquare vcompose_squares(const ProfSquare& s, const ProfSquare& t) {
  ProfSquare r;
  r.top = t.top;
  r.bottom = s.bottom;
  r.left = compose_functors(s.left, t.left);
  r.right = compose_functors(s.right, t.right);
  int nb = static_cast<int>(t.comp.size());
  r.comp.assign(nb, {});
  for (int b = 0; b < nb; ++b) {
    int na = static_cast<int>(t.comp[b].size());
    r.comp[b].resize(na);
    for (int a = 0; a < na; ++a)
      r.comp[b][a] = compose_functions(s.comp[t.right.on_obj[b]][t.left.on_obj[a]], t.comp[b][a]);
  }
  return r;
}

ProfSquare hcompose_squares(const ProfSquare& beta, const ProfSquare& alpha,
                            const CompositeProf& src, const CompositeProf& tgt) {
  ProfSquare r;
  r.top = src.prof;
  r.bottom = tgt.prof;
  r.left = alpha.left;
  r.right = beta.right;
  const auto& A = *alpha.top.source;
  const auto& C = *beta.top.target;
  r.comp.assign(C.n_obj(), std::vector<FinFunction>(A.n_obj()));
  for (int c = 0; c < C.n_obj(); ++c)
    for (int a = 0; a < A.n_obj(); ++a) {
      FinFunction fn;
      fn.src_size = src.prof.value[c][a].size();
      fn.tgt_size = tgt.prof.value[beta.right.on_obj[c]][alpha.left.on_obj[a]].size();
      for (int cl = 0; cl < fn.src_size; ++cl) {
        auto [b, k, h] = src.rep[c][a][cl];
        int k2 = beta.comp[c][b].map[k];
        int h2 = alpha.comp[b][a].map[h];
        int b2 = alpha.right.on_obj[b];
        int hsize = alpha.bottom.value[b2][alpha.left.on_obj[a]].size();
        fn.map.push_back(tgt.cls(beta.right.on_obj[c], alpha.left.on_obj[a], b2, k2, h2, hsize));
      }
      r.comp[c][a] = fn;
    }
  return r;
}

bool same_square(const ProfSquare& a, const ProfSquare& b) {
  if (a.comp.size() != b.comp.size()) return false;
  for (size_t i = 0; i < a.comp.size(); ++i) {
    if (a.comp[i].size() != b.comp[i].size()) return false;
    for (size_t j = 0; j < a.comp[i].size(); ++j)
      if (a.comp[i][j].map != b.comp[i][j].map) return false;
  }
  return true;
}

Report check_interchange(const ProfSquare& a, const ProfSquare& b, const ProfSquare& ap,
                         const ProfSquare& bp) {
  Report rep;
  auto row_top_src = compose_prof(b.top, a.top);
  auto row_top_tgt = compose_prof(b.bottom, a.bottom);
  auto row_bot_tgt = compose_prof(bp.bottom, ap.bottom);
  auto ba = hcompose_squares(b, a, row_top_src, row_top_tgt);
  auto bpap = hcompose_squares(bp, ap, row_top_tgt, row_bot_tgt);
  auto lhs = vcompose_squares(bpap, ba);
  auto va = vcompose_squares(ap, a);
  auto vb = vcompose_squares(bp, b);
  auto rhs = hcompose_squares(vb, va, row_top_src, row_bot_tgt);
  if (!same_square(lhs, rhs)) rep.fail("interchange", "two evaluation orders differ");
  return rep;
}

// ---------------------------------------------------------------------------
// The adjunction F_* -| F^*

Report check_prof_adjunction(const FinFunctor& F) {
  Report rep;
  const auto& A = *F.source;
  const auto& B = *F.target;
  Profunctor L = rep_lower(F);
  Profunctor U = rep_upper(F);
  Profunctor IA = identity_prof(F.source);
  Profunctor IB = identity_prof(F.target);
  auto UL = compose_prof(U, L);  // F^* . F_* : A -|-> A
  auto LU = compose_prof(L, U);  // F_* . F^* : B -|-> B

  ProfSquare eta;
  eta.top = IA;
  eta.bottom = UL.prof;
  eta.left = identity_functor(F.source);
  eta.right = identity_functor(F.source);
  eta.comp.assign(A.n_obj(), std::vector<FinFunction>(A.n_obj()));
  for (int ap = 0; ap < A.n_obj(); ++ap)
    for (int a = 0; a < A.n_obj(); ++a) {
      FinFunction fn;
      fn.src_size = IA.value[ap][a].size();
      fn.tgt_size = UL.prof.value[ap][a].size();
      for (int u : A.hom(ap, a)) {
        int b = F.on_obj[ap];
        int k = U.value[ap][b].index_of(B.morphisms[B.id_of(b)].id);
        int h = L.value[b][a].index_of(B.morphisms[F.on_mor[u]].id);
        fn.map.push_back(UL.cls(ap, a, b, k, h, L.value[b][a].size()));
      }
      eta.comp[ap][a] = fn;
    }
  rep.absorb(validate_square(eta));

  ProfSquare eps;
  eps.top = LU.prof;
  eps.bottom = IB;
  eps.left = identity_functor(F.target);
  eps.right = identity_functor(F.target);
  eps.comp.assign(B.n_obj(), std::vector<FinFunction>(B.n_obj()));
  for (int bp = 0; bp < B.n_obj(); ++bp)
    for (int b = 0; b < B.n_obj(); ++b) {
      FinFunction fn;
      fn.src_size = LU.prof.value[bp][b].size();
      fn.tgt_size = IB.value[bp][b].size();
      fn.map.assign(fn.src_size, -1);
      for (int a = 0; a < A.n_obj(); ++a) {
        auto ks = B.hom(bp, F.on_obj[a]);
        auto hs = B.hom(F.on_obj[a], b);
        for (size_t k = 0; k < ks.size(); ++k)
          for (size_t h = 0; h < hs.size(); ++h) {
            int cl = LU.cls(bp, b, a, static_cast<int>(k), static_cast<int>(h),
                            static_cast<int>(hs.size()));
            int val = IB.value[bp][b].index_of(B.morphisms[B.compose(hs[h], ks[k])].id);
            if (fn.map[cl] >= 0 && fn.map[cl] != val)
              rep.fail("counit-well-defined", "class at (" + B.objects[bp] + "," + B.objects[b] +
                                                  ") has inconsistent composites");
            fn.map[cl] = val;
          }
      }
      eps.comp[bp][b] = fn;
    }
  if (!rep.ok()) return rep;
  rep.absorb(validate_square(eps));
  if (!rep.ok()) return rep;

  // triangle on F_*: lunitor . (eps.1) . assoc^{-1} . (1.eta) . runitor^{-1} = id
  {
    auto LI = compose_prof(L, IA);
    auto L_UL = compose_prof(L, UL.prof);
    auto LU_L = compose_prof(LU.prof, L);
    auto IB_L = compose_prof(IB, L);
    auto run = right_unitor(L, LI);
    auto one_eta = hcompose_squares(vertical_identity(L), eta, LI, L_UL);
    auto assoc = associator(L, U, L, LU, LU_L, UL, L_UL);
    auto eps_one = hcompose_squares(eps, vertical_identity(L), LU_L, IB_L);
    auto lun = left_unitor(L, IB_L);
    if (!iso_is_bijective(run) || !iso_is_bijective(lun) || !iso_is_bijective(assoc))
      rep.fail("coherence-witness", "unit/associativity witness not bijective");
    for (int b = 0; b < B.n_obj() && rep.ok(); ++b)
      for (int a = 0; a < A.n_obj(); ++a) {
        std::vector<int> run_inv(run.comp[b][a].tgt_size, -1);
        for (int i = 0; i < run.comp[b][a].src_size; ++i) run_inv[run.comp[b][a].map[i]] = i;
        std::vector<int> assoc_inv(assoc.comp[b][a].tgt_size, -1);
        for (int i = 0; i < assoc.comp[b][a].src_size; ++i) assoc_inv[assoc.comp[b][a].map[i]] = i;
        for (int x = 0; x < L.value[b][a].size(); ++x) {
          int v = run_inv[x];
          v = one_eta.comp[b][a].map[v];
          v = assoc_inv[v];
          v = eps_one.comp[b][a].map[v];
          v = lun.comp[b][a].map[v];
          if (v != x) {
            rep.fail("triangle-lower", "fails at element " + L.value[b][a].elems[x] + " of F_*(" +
                                           B.objects[b] + "," + A.objects[a] + ")");
            break;
          }
        }
      }
  }

  // triangle on F^*: runitor . (1.eps) . assoc . (eta.1) . lunitor^{-1} = id
  {
    auto IA_U = compose_prof(IA, U);
    auto UL_U = compose_prof(UL.prof, U);
    auto U_LU = compose_prof(U, LU.prof);
    auto U_IB = compose_prof(U, IB);
    auto lun = left_unitor(U, IA_U);
    auto eta_one = hcompose_squares(eta, vertical_identity(U), IA_U, UL_U);
    auto assoc = associator(U, L, U, UL, UL_U, LU, U_LU);
    auto one_eps = hcompose_squares(vertical_identity(U), eps, U_LU, U_IB);
    auto run = right_unitor(U, U_IB);
    if (!iso_is_bijective(run) || !iso_is_bijective(lun) || !iso_is_bijective(assoc))
      rep.fail("coherence-witness", "unit/associativity witness not bijective");
    for (int a = 0; a < A.n_obj() && rep.ok(); ++a)
      for (int b = 0; b < B.n_obj(); ++b) {
        std::vector<int> lun_inv(lun.comp[a][b].tgt_size, -1);
        for (int i = 0; i < lun.comp[a][b].src_size; ++i) lun_inv[lun.comp[a][b].map[i]] = i;
        for (int x = 0; x < U.value[a][b].size(); ++x) {
          int v = lun_inv[x];
          v = eta_one.comp[a][b].map[v];
          v = assoc.comp[a][b].map[v];
          v = one_eps.comp[a][b].map[v];
          v = run.comp[a][b].map[v];
          if (v != x) {
            rep.fail("triangle-upper", "fails at element " + U.value[a][b].elems[x] + " of F^*(" +
                                           A.objects[a] + "," + B.objects[b] + ")");
            break;
          }
        }
      }
  }
  return rep;
}

}  // namespace catalg
