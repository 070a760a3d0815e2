#include "catalg/moncat.hpp"

#include <cassert>
#include <stdexcept>

namespace catalg {

FinMonoidalCat make_strict_moncat(CatPtr cat, std::vector<std::vector<int>> tensor_obj,
                                  std::vector<std::vector<int>> tensor_mor, int unit) {
  FinMonoidalCat M;
  M.cat = cat;
  M.tensor_obj = std::move(tensor_obj);
  M.tensor_mor = std::move(tensor_mor);
  M.unit = unit;
  M.strict = true;
  int n = cat->n_obj();
  M.assoc.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) M.assoc[x][y][z] = cat->id_of(M.tob(M.tob(x, y), z));
  M.lunit.resize(n);
  M.runit.resize(n);
  for (int x = 0; x < n; ++x) {
    M.lunit[x] = cat->id_of(M.tob(unit, x));
    M.runit[x] = cat->id_of(M.tob(x, unit));
  }
  return M;
}

Report validate_moncat(const FinMonoidalCat& M) {
  Report rep;
  const auto& C = *M.cat;
  int n = C.n_obj(), m = C.n_mor();
  if (static_cast<int>(M.tensor_obj.size()) != n || static_cast<int>(M.tensor_mor.size()) != m ||
      M.unit < 0 || M.unit >= n) {
    rep.input_error("moncat-tables", "tensor table size mismatch");
    return rep;
  }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      int fg = M.tmor(f, g);
      if (fg < 0 || fg >= m || C.src(fg) != M.tob(C.src(f), C.src(g)) ||
          C.tgt(fg) != M.tob(C.tgt(f), C.tgt(g))) {
        rep.input_error("tensor-typing", "tensor of (" + C.morphisms[f].id + "," +
                                             C.morphisms[g].id + ") mistyped");
        return rep;
      }
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (M.tmor(C.id_of(x), C.id_of(y)) != C.id_of(M.tob(x, y)))
        rep.fail("tensor-identity", "(" + C.objects[x] + "," + C.objects[y] + ")");
  for (int f2 = 0; f2 < m; ++f2)
    for (int f1 = 0; f1 < m; ++f1) {
      if (!C.composable(f2, f1)) continue;
      for (int g2 = 0; g2 < m; ++g2)
        for (int g1 = 0; g1 < m; ++g1) {
          if (!C.composable(g2, g1)) continue;
          if (M.tmor(C.compose(f2, f1), C.compose(g2, g1)) !=
              C.compose(M.tmor(f2, g2), M.tmor(f1, g1)))
            rep.fail("tensor-interchange",
                     "(" + C.morphisms[f2].id + "," + C.morphisms[f1].id + ";" +
                         C.morphisms[g2].id + "," + C.morphisms[g1].id + ")");
        }
    }
  for (int x = 0; x < n; ++x) {
    int l = M.lunit[x], r = M.runit[x];
    if (C.src(l) != M.tob(M.unit, x) || C.tgt(l) != x || !C.is_iso(l))
      rep.fail("lunit", C.objects[x]);
    if (C.src(r) != M.tob(x, M.unit) || C.tgt(r) != x || !C.is_iso(r))
      rep.fail("runit", C.objects[x]);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int a = M.assoc[x][y][z];
        if (C.src(a) != M.tob(M.tob(x, y), z) || C.tgt(a) != M.tob(x, M.tob(y, z)) ||
            !C.is_iso(a))
          rep.fail("assoc-typing",
                   "(" + C.objects[x] + "," + C.objects[y] + "," + C.objects[z] + ")");
      }
  if (!rep.ok()) return rep;
  for (int f = 0; f < m; ++f) {
    if (C.compose(M.lunit[C.tgt(f)], M.tmor(C.id_of(M.unit), f)) !=
        C.compose(f, M.lunit[C.src(f)]))
      rep.fail("lunit-naturality", C.morphisms[f].id);
    if (C.compose(M.runit[C.tgt(f)], M.tmor(f, C.id_of(M.unit))) !=
        C.compose(f, M.runit[C.src(f)]))
      rep.fail("runit-naturality", C.morphisms[f].id);
  }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      for (int h = 0; h < m; ++h) {
        int lhs = C.compose(M.assoc[C.tgt(f)][C.tgt(g)][C.tgt(h)], M.tmor(M.tmor(f, g), h));
        int rhs = C.compose(M.tmor(f, M.tmor(g, h)), M.assoc[C.src(f)][C.src(g)][C.src(h)]);
        if (lhs != rhs)
          rep.fail("assoc-naturality", "(" + C.morphisms[f].id + "," + C.morphisms[g].id + "," +
                                           C.morphisms[h].id + ")");
      }
  for (int w = 0; w < n; ++w)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int lhs = C.compose(M.assoc[w][x][M.tob(y, z)], M.assoc[M.tob(w, x)][y][z]);
          int rhs =
              C.compose(M.tmor(C.id_of(w), M.assoc[x][y][z]),
                        C.compose(M.assoc[w][M.tob(x, y)][z], M.tmor(M.assoc[w][x][y], C.id_of(z))));
          if (lhs != rhs)
            rep.fail("pentagon", "(" + C.objects[w] + "," + C.objects[x] + "," + C.objects[y] +
                                     "," + C.objects[z] + ")");
        }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int lhs = C.compose(M.tmor(C.id_of(x), M.lunit[y]), M.assoc[x][M.unit][y]);
      int rhs = M.tmor(M.runit[x], C.id_of(y));
      if (lhs != rhs) rep.fail("triangle", "(" + C.objects[x] + "," + C.objects[y] + ")");
    }
  return rep;
}

int tensor_power_obj(const FinMonoidalCat& M, int x, int n) {
  if (n == 0) return M.unit;
  int acc = x;
  for (int i = 1; i < n; ++i) acc = M.tob(acc, x);
  return acc;
}

int tensor_list_obj(const FinMonoidalCat& M, const std::vector<int>& xs) {
  if (xs.empty()) return M.unit;
  int acc = xs[0];
  for (size_t i = 1; i < xs.size(); ++i) acc = M.tob(acc, xs[i]);
  return acc;
}

namespace {

// Canonical iso x^{(m+k)} -> x^{m} ⊗ x^{k} (powers left-bracketed).
int split_last_iso(const FinMonoidalCat& M, int x, int m, int k) {
  const auto& C = *M.cat;
  int xm = tensor_power_obj(M, x, m);
  if (k == 0) return *C.inverse(M.runit[xm]);
  if (k == 1) return C.id_of(M.tob(xm, x));
  int inner = split_last_iso(M, x, m, k - 1);
  int xk1 = tensor_power_obj(M, x, k - 1);
  int step1 = M.tmor(inner, C.id_of(x));
  int step2 = M.assoc[xm][xk1][x];
  return C.compose(step2, step1);
}

}  // namespace

int rebracket_iso(const FinMonoidalCat& M, int x, const std::vector<int>& parts) {
  const auto& C = *M.cat;
  if (parts.empty()) return C.id_of(M.unit);
  if (parts.size() == 1) return C.id_of(tensor_power_obj(M, x, parts[0]));
  int total = 0;
  for (int p : parts) total += p;
  std::vector<int> front(parts.begin(), parts.end() - 1);
  int ftotal = total - parts.back();
  int s = split_last_iso(M, x, ftotal, parts.back());
  int rec = rebracket_iso(M, x, front);
  int xk = tensor_power_obj(M, x, parts.back());
  return C.compose(M.tmor(rec, C.id_of(xk)), s);
}

Report check_theory(const FinMonoidalCat& M, const Theory& t) {
  Report rep;
  const auto& C = *M.cat;
  if (t.carrier < 0 || t.carrier >= C.n_obj() || t.e < 0 || t.e >= C.n_mor() || t.m < 0 ||
      t.m >= C.n_mor()) {
    rep.input_error("theory-typing", "carrier or structure out of range");
    return rep;
  }
  int T = t.carrier;
  if (C.src(t.e) != M.unit || C.tgt(t.e) != T) {
    rep.input_error("theory-typing", "e is not I -> T");
    return rep;
  }
  if (C.src(t.m) != M.tob(T, T) || C.tgt(t.m) != T) {
    rep.input_error("theory-typing", "m is not T⊗T -> T");
    return rep;
  }
  if (C.compose(t.m, M.tmor(t.e, C.id_of(T))) != M.lunit[T])
    rep.fail("monoid-left-unit", "m(e⊗T) != lunit");
  if (C.compose(t.m, M.tmor(C.id_of(T), t.e)) != M.runit[T])
    rep.fail("monoid-right-unit", "m(T⊗e) != runit");
  int lhs = C.compose(t.m, M.tmor(t.m, C.id_of(T)));
  int rhs = C.compose(t.m, C.compose(M.tmor(C.id_of(T), t.m), M.assoc[T][T][T]));
  if (lhs != rhs) rep.fail("monoid-associativity", "m(m⊗T) != m(T⊗m)assoc");
  return rep;
}

std::vector<int> theory_morphisms(const FinMonoidalCat& M, const Theory& s, const Theory& t) {
  const auto& C = *M.cat;
  std::vector<int> out;
  for (int h : C.hom(s.carrier, t.carrier)) {
    if (C.compose(h, s.e) != t.e) continue;
    if (C.compose(h, s.m) != C.compose(t.m, M.tmor(h, h))) continue;
    out.push_back(h);
  }
  return out;
}

// ---------------------------------------------------------------------------
// [C,C]

EndoMonCat endofunctor_moncat(CatPtr C, std::int64_t ceiling) {
  EndoMonCat out;
  out.fc = functor_category(C, C, ceiling);
  int n = out.fc.cat->n_obj();
  int m = out.fc.cat->n_mor();
  std::vector<std::vector<int>> tob(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      tob[i][j] =
          out.fc.index_of_functor(compose_functors(out.fc.functor_of[i], out.fc.functor_of[j]));
  std::vector<std::vector<int>> tmor(m, std::vector<int>(m, -1));
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t)
      tmor[s][t] = out.fc.index_of_nat(hcompose_nats(out.fc.nat_of[s], out.fc.nat_of[t]));
  int unit = out.fc.index_of_functor(identity_functor(C));
  out.mon = make_strict_moncat(out.fc.cat, std::move(tob), std::move(tmor), unit);
  return out;
}

Report check_monad(const FinMonad& T) {
  Report rep;
  rep.absorb(validate_functor(T.S));
  rep.absorb(validate_nat(T.eta));
  rep.absorb(validate_nat(T.mu));
  if (!rep.ok()) return rep;
  const auto& C = *T.S.source;
  if (!same_functor(T.eta.source, identity_functor(T.S.source)) ||
      !same_functor(T.eta.target, T.S)) {
    rep.input_error("monad-typing", "eta is not id => S");
    return rep;
  }
  auto SS = compose_functors(T.S, T.S);
  if (!same_functor(T.mu.source, SS) || !same_functor(T.mu.target, T.S)) {
    rep.input_error("monad-typing", "mu is not S.S => S");
    return rep;
  }
  for (int c = 0; c < C.n_obj(); ++c) {
    int Sc = T.S.on_obj[c];
    if (C.compose(T.mu.comp[c], T.eta.comp[Sc]) != C.id_of(Sc))
      rep.fail("monad-left-unit", C.objects[c]);
    if (C.compose(T.mu.comp[c], T.S.on_mor[T.eta.comp[c]]) != C.id_of(Sc))
      rep.fail("monad-right-unit", C.objects[c]);
    if (C.compose(T.mu.comp[c], T.mu.comp[Sc]) !=
        C.compose(T.mu.comp[c], T.S.on_mor[T.mu.comp[c]]))
      rep.fail("monad-associativity", C.objects[c]);
  }
  return rep;
}

Theory monad_as_theory(const EndoMonCat& E, const FinMonad& T) {
  Theory t;
  t.carrier = E.fc.index_of_functor(T.S);
  t.e = E.fc.index_of_nat(T.eta);
  t.m = E.fc.index_of_nat(T.mu);
  return t;
}

FinMonad theory_as_monad(const EndoMonCat& E, const Theory& t) {
  FinMonad T;
  T.S = E.fc.functor_of[t.carrier];
  T.eta = E.fc.nat_of[t.e];
  T.mu = E.fc.nat_of[t.m];
  return T;
}

Report check_cartesian_monad(const FinCategory& C, const FinMonad& T) {
  Report rep;
  rep.absorb(check_monad(T));
  if (!rep.ok()) return rep;
  std::vector<std::vector<std::optional<PullbackWitness>>> pb(
      C.n_mor(), std::vector<std::optional<PullbackWitness>>(C.n_mor()));
  for (int f = 0; f < C.n_mor(); ++f)
    for (int g = 0; g < C.n_mor(); ++g) {
      if (C.tgt(f) != C.tgt(g)) continue;
      pb[f][g] = pullback(C, f, g);
      if (!pb[f][g]) {
        rep.input_error("missing-pullback",
                        "no pullback of (" + C.morphisms[f].id + "," + C.morphisms[g].id + ")");
        return rep;
      }
    }
  for (int f = 0; f < C.n_mor(); ++f)
    for (int g = 0; g < C.n_mor(); ++g) {
      if (C.tgt(f) != C.tgt(g)) continue;
      const auto& w = *pb[f][g];
      if (!is_pullback_square(C, T.S.on_mor[f], T.S.on_mor[g], T.S.on_obj[w.apex],
                              T.S.on_mor[w.to_x], T.S.on_mor[w.to_y]))
        rep.fail("pullback-preservation",
                 "S image of pullback of (" + C.morphisms[f].id + "," + C.morphisms[g].id + ")");
    }
  for (int f = 0; f < C.n_mor(); ++f) {
    int a = C.src(f), b = C.tgt(f);
    if (!is_pullback_square(C, T.S.on_mor[f], T.eta.comp[b], a, T.eta.comp[a], f))
      rep.fail("eta-cartesian", C.morphisms[f].id);
    int SSa = T.S.on_obj[T.S.on_obj[a]];
    if (!is_pullback_square(C, T.S.on_mor[f], T.mu.comp[b], SSa, T.mu.comp[a],
                            T.S.on_mor[T.S.on_mor[f]]))
      rep.fail("mu-cartesian", C.morphisms[f].id);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Slice metatheory

int SliceMonCat::slice_object_of(int p) const {
  for (size_t i = 0; i < obj_mor.size(); ++i)
    if (obj_mor[i] == p) return static_cast<int>(i);
  return -1;
}

int SliceMonCat::slice_morphism_of(int src_slice, int tgt_slice, int underlying) const {
  const auto& S = *mon.cat;
  for (int m = 0; m < S.n_mor(); ++m)
    if (S.src(m) == src_slice && S.tgt(m) == tgt_slice && mor_underlying[m] == underlying)
      return m;
  return -1;
}

SliceMonCat slice_moncat(CatPtr C, const FinMonad& T) {
  SliceMonCat out;
  out.base = C;
  out.monad = T;
  auto term = terminal_object(*C);
  if (!term) throw std::runtime_error("slice_moncat: no terminal object");
  out.terminal = *term;
  int S1 = T.S.on_obj[out.terminal];

  auto cat = std::make_shared<FinCategory>();
  cat->name = C->name + "/S1";
  for (int p = 0; p < C->n_mor(); ++p)
    if (C->tgt(p) == S1) {
      out.obj_mor.push_back(p);
      cat->objects.push_back("(" + C->morphisms[p].id + ")");
    }
  int nobj = static_cast<int>(out.obj_mor.size());
  for (int i = 0; i < nobj; ++i)
    for (int j = 0; j < nobj; ++j) {
      int pi = out.obj_mor[i], pj = out.obj_mor[j];
      for (int h : C->hom(C->src(pi), C->src(pj)))
        if (C->compose(pj, h) == pi) {
          Mor m;
          m.id = C->morphisms[h].id + ":" + std::to_string(i) + ">" + std::to_string(j);
          m.src = i;
          m.tgt = j;
          cat->morphisms.push_back(m);
          out.mor_underlying.push_back(h);
        }
    }
  cat->identity.assign(nobj, -1);
  for (int m = 0; m < cat->n_mor(); ++m)
    if (cat->src(m) == cat->tgt(m) &&
        out.mor_underlying[m] == C->id_of(C->src(out.obj_mor[cat->src(m)])))
      cat->identity[cat->src(m)] = m;
  cat->compose_table.assign(cat->n_mor(), std::vector<int>(cat->n_mor(), -1));
  for (int g = 0; g < cat->n_mor(); ++g)
    for (int f = 0; f < cat->n_mor(); ++f) {
      if (cat->morphisms[f].tgt != cat->morphisms[g].src) continue;
      int comp = C->compose(out.mor_underlying[g], out.mor_underlying[f]);
      for (int r = 0; r < cat->n_mor(); ++r)
        if (cat->src(r) == cat->src(f) && cat->tgt(r) == cat->tgt(g) &&
            out.mor_underlying[r] == comp) {
          cat->compose_table[g][f] = r;
          break;
        }
    }
  out.mon.cat = cat;

  auto bang = [&](int P) { return C->hom(P, out.terminal).at(0); };
  struct TensorData {
    PullbackWitness w;
    int obj = -1;
  };
  std::vector<std::vector<TensorData>> td(nobj, std::vector<TensorData>(nobj));
  out.mon.tensor_obj.assign(nobj, std::vector<int>(nobj, -1));
  for (int x = 0; x < nobj; ++x)
    for (int y = 0; y < nobj; ++y) {
      int q = out.obj_mor[x], p = out.obj_mor[y];
      int P = C->src(p);
      int sbang = T.S.on_mor[bang(P)];
      auto w = pullback(*C, q, sbang);
      if (!w) throw std::runtime_error("slice_moncat: missing pullback");
      int tmor_obj = C->compose(T.mu.comp[out.terminal], C->compose(T.S.on_mor[p], w->to_y));
      td[x][y].w = *w;
      for (int i = 0; i < nobj; ++i)
        if (out.obj_mor[i] == tmor_obj) td[x][y].obj = i;
      assert(td[x][y].obj >= 0);
      out.mon.tensor_obj[x][y] = td[x][y].obj;
    }
  out.mon.tensor_mor.assign(cat->n_mor(), std::vector<int>(cat->n_mor(), -1));
  for (int u = 0; u < cat->n_mor(); ++u)
    for (int v = 0; v < cat->n_mor(); ++v) {
      int x1 = cat->src(u), x2 = cat->tgt(u);
      int y1 = cat->src(v), y2 = cat->tgt(v);
      const auto& w1 = td[x1][y1].w;
      const auto& w2 = td[x2][y2].w;
      int uC = out.mor_underlying[u], vC = out.mor_underlying[v];
      int leg_q = C->compose(uC, w1.to_x);
      int leg_sp = C->compose(T.S.on_mor[vC], w1.to_y);
      int q2 = out.obj_mor[x2], p2 = out.obj_mor[y2];
      int sbang2 = T.S.on_mor[bang(C->src(p2))];
      auto med = pullback_pair(*C, q2, sbang2, w2, leg_q, leg_sp);
      if (!med) throw std::runtime_error("slice_moncat: tensor of morphisms has no mediator");
      int sm = out.slice_morphism_of(td[x1][y1].obj, td[x2][y2].obj, *med);
      assert(sm >= 0);
      out.mon.tensor_mor[u][v] = sm;
    }
  int eta1 = T.eta.comp[out.terminal];
  out.mon.unit = -1;
  for (int i = 0; i < nobj; ++i)
    if (out.obj_mor[i] == eta1) out.mon.unit = i;
  assert(out.mon.unit >= 0);
  out.mon.strict = false;

  auto unique_with_legs = [&](int A, int B,
                              const std::vector<std::pair<int, int>>& legs) -> int {
    int found = -1, cnt = 0;
    for (int h : C->hom(A, B)) {
      bool ok = true;
      for (auto& [bl, al] : legs)
        if (C->compose(bl, h) != al) ok = false;
      if (ok) {
        ++cnt;
        found = h;
      }
    }
    if (cnt != 1) throw std::runtime_error("slice_moncat: coherence mediator not unique");
    return found;
  };

  out.mon.lunit.resize(nobj);
  out.mon.runit.resize(nobj);
  for (int y = 0; y < nobj; ++y) {
    int p = out.obj_mor[y];
    int P = C->src(p);
    const auto& w = td[out.mon.unit][y].w;
    int A = w.apex;
    int lam = unique_with_legs(A, P, {{T.eta.comp[P], w.to_y}, {bang(P), w.to_x}});
    int sl = out.slice_morphism_of(td[out.mon.unit][y].obj, y, lam);
    assert(sl >= 0);
    out.mon.lunit[y] = sl;
    const auto& w2 = td[y][out.mon.unit].w;
    int rho = w2.to_x;
    int sr = out.slice_morphism_of(td[y][out.mon.unit].obj, y, rho);
    assert(sr >= 0);
    out.mon.runit[y] = sr;
  }
  out.mon.assoc.assign(nobj, std::vector<std::vector<int>>(nobj, std::vector<int>(nobj, -1)));
  for (int x = 0; x < nobj; ++x)
    for (int y = 0; y < nobj; ++y)
      for (int z = 0; z < nobj; ++z) {
        int p = out.obj_mor[z];
        int P = C->src(p);
        const auto& wxy = td[x][y].w;
        const auto& wA = td[out.mon.tensor_obj[x][y]][z].w;
        int A = wA.apex;
        int aR = C->compose(wxy.to_x, wA.to_x);
        int aSQ = C->compose(wxy.to_y, wA.to_x);
        int aSP = wA.to_y;
        const auto& wyz = td[y][z].w;
        const auto& wB = td[x][out.mon.tensor_obj[y][z]].w;
        int B = wB.apex;
        int bR = wB.to_x;
        int bSQ = C->compose(T.S.on_mor[wyz.to_x], wB.to_y);
        int bSP = C->compose(T.mu.comp[P], C->compose(T.S.on_mor[wyz.to_y], wB.to_y));
        int alpha = unique_with_legs(A, B, {{bR, aR}, {bSQ, aSQ}, {bSP, aSP}});
        int lhs_obj = out.mon.tensor_obj[out.mon.tensor_obj[x][y]][z];
        int rhs_obj = out.mon.tensor_obj[x][out.mon.tensor_obj[y][z]];
        int sa = out.slice_morphism_of(lhs_obj, rhs_obj, alpha);
        if (sa < 0) throw std::runtime_error("slice_moncat: associator is not a slice morphism");
        out.mon.assoc[x][y][z] = sa;
      }
  return out;
}

SliceAction slice_star(const SliceMonCat& S, int slice_obj, int P) {
  const auto& C = *S.base;
  int q = S.obj_mor[slice_obj];
  int bang = C.hom(P, S.terminal).at(0);
  auto w = pullback(C, q, S.monad.S.on_mor[bang]);
  if (!w) throw std::runtime_error("slice_star: missing pullback");
  return {w->apex, w->to_x, w->to_y};
}

// ---------------------------------------------------------------------------
// Presheaves and Day convolution

Report validate_presheaf(const Presheaf& P) {
  Report rep;
  const auto& C = *P.base;
  if (static_cast<int>(P.value.size()) != C.n_obj() ||
      static_cast<int>(P.action.size()) != C.n_mor()) {
    rep.input_error("presheaf-tables", "table size mismatch");
    return rep;
  }
  for (int u = 0; u < C.n_mor(); ++u) {
    if (P.action[u].src_size != P.value[C.tgt(u)].size() ||
        P.action[u].tgt_size != P.value[C.src(u)].size()) {
      rep.input_error("presheaf-typing", "action of " + C.morphisms[u].id + " mistyped");
      return rep;
    }
  }
  for (int c = 0; c < C.n_obj(); ++c)
    if (P.action[C.id_of(c)].map != identity_function(P.value[c].size()).map)
      rep.fail("presheaf-identity", C.objects[c]);
  for (int v = 0; v < C.n_mor(); ++v)
    for (int u = 0; u < C.n_mor(); ++u) {
      if (!C.composable(v, u)) continue;
      auto lhs = P.action[C.compose(v, u)];
      auto rhs = compose_functions(P.action[u], P.action[v]);
      if (lhs.map != rhs.map)
        rep.fail("presheaf-functoriality", "(" + C.morphisms[v].id + "," + C.morphisms[u].id + ")");
    }
  return rep;
}

Presheaf representable_presheaf(CatPtr C, int c) {
  Presheaf P;
  P.base = C;
  P.value.resize(C->n_obj());
  for (int x = 0; x < C->n_obj(); ++x)
    for (int m : C->hom(x, c)) P.value[x].elems.push_back(C->morphisms[m].id);
  P.action.resize(C->n_mor());
  for (int u = 0; u < C->n_mor(); ++u) {
    FinFunction fn;
    fn.src_size = P.value[C->tgt(u)].size();
    fn.tgt_size = P.value[C->src(u)].size();
    for (int m : C->hom(C->tgt(u), c))
      fn.map.push_back(P.value[C->src(u)].index_of(C->morphisms[C->compose(m, u)].id));
    P.action[u] = fn;
  }
  return P;
}

Presheaf day_unit(const FinMonoidalCat& M) { return representable_presheaf(M.cat, M.unit); }

DayTensorResult day_tensor(const FinMonoidalCat& M, const Presheaf& Q, const Presheaf& P) {
  const auto& C = *M.cat;
  int n = C.n_obj();
  auto shape = std::make_shared<FinCategory>(product_category(C, C));
  DayTensorResult out;
  out.sheaf.base = M.cat;
  out.sheaf.value.resize(n);
  out.sheaf.action.resize(C.n_mor());
  out.rep.resize(n);
  out.cls.resize(n);

  auto contra_size = [&](int X, int Y) { return Q.value[Y].size() * P.value[X].size(); };

  for (int Z = 0; Z < n; ++Z) {
    BiDiagram D;
    D.shape = shape;
    int ns = shape->n_obj();
    D.value.assign(ns, std::vector<FinSetObj>(ns));
    for (int bm = 0; bm < ns; ++bm) {
      int Xm = bm / n, Ym = bm % n;
      for (int bp = 0; bp < ns; ++bp) {
        int Xp = bp / n, Yp = bp % n;
        for (int q = 0; q < Q.value[Ym].size(); ++q)
          for (int p = 0; p < P.value[Xm].size(); ++p)
            for (int h : C.hom(Z, M.tob(Yp, Xp)))
              D.value[bm][bp].elems.push_back("(" + Q.value[Ym].elems[q] + "," +
                                              P.value[Xm].elems[p] + ";" + C.morphisms[h].id +
                                              ")");
      }
    }
    D.left.assign(shape->n_mor(), std::vector<FinFunction>(ns));
    D.right.assign(shape->n_mor(), std::vector<FinFunction>(ns));
    for (int gm = 0; gm < shape->n_mor(); ++gm) {
      int f = gm / C.n_mor(), g = gm % C.n_mor();
      int s = shape->src(gm), t = shape->tgt(gm);
      int Xs = s / n, Ys = s % n;
      int Xt = t / n, Yt = t % n;
      for (int bp = 0; bp < ns; ++bp) {
        int Xp = bp / n, Yp = bp % n;
        int hs = static_cast<int>(C.hom(Z, M.tob(Yp, Xp)).size());
        FinFunction fn;
        fn.src_size = contra_size(Xt, Yt) * hs;
        fn.tgt_size = contra_size(Xs, Ys) * hs;
        fn.map.resize(fn.src_size);
        for (int q = 0; q < Q.value[Yt].size(); ++q)
          for (int p = 0; p < P.value[Xt].size(); ++p)
            for (int h = 0; h < hs; ++h) {
              int q2 = Q.action[g].map[q];
              int p2 = P.action[f].map[p];
              fn.map[(q * P.value[Xt].size() + p) * hs + h] =
                  (q2 * P.value[Xs].size() + p2) * hs + h;
            }
        D.left[gm][bp] = fn;
      }
      for (int bm = 0; bm < ns; ++bm) {
        int Xm = bm / n, Ym = bm % n;
        int cs = contra_size(Xm, Ym);
        auto hs_src = C.hom(Z, M.tob(Ys, Xs));
        auto hs_tgt = C.hom(Z, M.tob(Yt, Xt));
        FinFunction fn;
        fn.src_size = cs * static_cast<int>(hs_src.size());
        fn.tgt_size = cs * static_cast<int>(hs_tgt.size());
        fn.map.resize(fn.src_size);
        for (int cp = 0; cp < cs; ++cp)
          for (size_t h = 0; h < hs_src.size(); ++h) {
            int h2 = C.compose(M.tmor(g, f), hs_src[h]);
            int h2i = -1;
            for (size_t k = 0; k < hs_tgt.size(); ++k)
              if (hs_tgt[k] == h2) h2i = static_cast<int>(k);
            fn.map[cp * hs_src.size() + h] = cp * static_cast<int>(hs_tgt.size()) + h2i;
          }
        D.right[gm][bm] = fn;
      }
    }
    auto res = coend(D);
    out.sheaf.value[Z] = res.set;
    out.rep[Z].resize(res.set.size());
    for (int cl = 0; cl < res.set.size(); ++cl) {
      auto [pc, flat] = res.class_rep[cl];
      int X = pc / n, Y = pc % n;
      int hs = static_cast<int>(C.hom(Z, M.tob(Y, X)).size());
      int cp = flat / hs, h = flat % hs;
      int q = cp / P.value[X].size(), p = cp % P.value[X].size();
      out.rep[Z][cl] = std::array<int, 5>{X, Y, h, q, p};
    }
    for (int pc = 0; pc < shape->n_obj(); ++pc) {
      int X = pc / n, Y = pc % n;
      int hs = static_cast<int>(C.hom(Z, M.tob(Y, X)).size());
      for (int q = 0; q < Q.value[Y].size(); ++q)
        for (int p = 0; p < P.value[X].size(); ++p)
          for (int h = 0; h < hs; ++h)
            out.cls[Z][{X, Y, h, q, p}] = res.proj[pc].map[(q * P.value[X].size() + p) * hs + h];
    }
  }
  for (int z = 0; z < C.n_mor(); ++z) {
    int Zs = C.src(z), Zt = C.tgt(z);
    FinFunction fn;
    fn.src_size = out.sheaf.value[Zt].size();
    fn.tgt_size = out.sheaf.value[Zs].size();
    for (int cl = 0; cl < fn.src_size; ++cl) {
      auto [X, Y, h, q, p] = out.rep[Zt][cl];
      auto homs = C.hom(Zt, M.tob(Y, X));
      int h2 = C.compose(homs[h], z);
      auto src_homs = C.hom(Zs, M.tob(Y, X));
      int h2i = -1;
      for (size_t k = 0; k < src_homs.size(); ++k)
        if (src_homs[k] == h2) h2i = static_cast<int>(k);
      fn.map.push_back(out.cls[Zs].at({X, Y, h2i, q, p}));
    }
    out.sheaf.action[z] = fn;
  }
  return out;
}

std::vector<FinFunction> day_right_unit_witness(const FinMonoidalCat& M, const Presheaf& Q,
                                                const DayTensorResult& QI) {
  const auto& C = *M.cat;
  std::vector<FinFunction> out(C.n_obj());
  for (int Z = 0; Z < C.n_obj(); ++Z) {
    FinFunction fn;
    fn.src_size = QI.sheaf.value[Z].size();
    fn.tgt_size = Q.value[Z].size();
    for (int cl = 0; cl < fn.src_size; ++cl) {
      auto [X, Y, h, q, u] = QI.rep[Z][cl];
      int umor = C.hom(X, M.unit)[u];
      int hmor = C.hom(Z, M.tob(Y, X))[h];
      int comp = C.compose(M.runit[Y], C.compose(M.tmor(C.id_of(Y), umor), hmor));
      fn.map.push_back(Q.action[comp].map[q]);
    }
    out[Z] = fn;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Monoidal functors

Report validate_monfunctor(const MonFunctor& F) {
  Report rep;
  rep.absorb(validate_functor(F.F));
  if (!rep.ok()) return rep;
  const auto& M = *F.srcM;
  const auto& N = *F.tgtM;
  const auto& D = *N.cat;
  bool lax = F.dir != MonDir::oplax;
  int n = M.cat->n_obj();
  if (lax) {
    if (D.src(F.unit_mor) != N.unit || D.tgt(F.unit_mor) != F.F.on_obj[M.unit]) {
      rep.input_error("monfunctor-unit", "unit structure mistyped");
      return rep;
    }
  } else {
    if (D.src(F.unit_mor) != F.F.on_obj[M.unit] || D.tgt(F.unit_mor) != N.unit) {
      rep.input_error("monfunctor-unit", "unit structure mistyped");
      return rep;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int b = F.bin[x][y];
      int from = N.tob(F.F.on_obj[y], F.F.on_obj[x]);
      int to = F.F.on_obj[M.tob(y, x)];
      if (!lax) std::swap(from, to);
      if (D.src(b) != from || D.tgt(b) != to) {
        rep.input_error("monfunctor-bin", "binary structure mistyped at (" + M.cat->objects[x] +
                                              "," + M.cat->objects[y] + ")");
        return rep;
      }
      if (F.dir == MonDir::strong && !D.is_iso(b))
        rep.fail("monfunctor-strong", "binary structure not invertible at (" + M.cat->objects[x] +
                                          "," + M.cat->objects[y] + ")");
    }
  if (F.dir == MonDir::strong && !D.is_iso(F.unit_mor))
    rep.fail("monfunctor-strong", "unit structure not invertible");
  if (!rep.ok()) return rep;

  for (int f = 0; f < M.cat->n_mor(); ++f)
    for (int g = 0; g < M.cat->n_mor(); ++g) {
      int xs = M.cat->src(f), xt = M.cat->tgt(f);
      int ys = M.cat->src(g), yt = M.cat->tgt(g);
      if (lax) {
        int lhs = D.compose(F.bin[xt][yt], N.tmor(F.F.on_mor[g], F.F.on_mor[f]));
        int rhs = D.compose(F.F.on_mor[M.tmor(g, f)], F.bin[xs][ys]);
        if (lhs != rhs)
          rep.fail("monfunctor-bin-naturality",
                   "(" + M.cat->morphisms[f].id + "," + M.cat->morphisms[g].id + ")");
      } else {
        int lhs = D.compose(N.tmor(F.F.on_mor[g], F.F.on_mor[f]), F.bin[xs][ys]);
        int rhs = D.compose(F.bin[xt][yt], F.F.on_mor[M.tmor(g, f)]);
        if (lhs != rhs)
          rep.fail("monfunctor-bin-naturality",
                   "(" + M.cat->morphisms[f].id + "," + M.cat->morphisms[g].id + ")");
      }
    }
  if (!rep.ok()) return rep;

  if (lax) {
    for (int x = 0; x < n; ++x) {
      int FX = F.F.on_obj[x];
      int lhs = D.compose(F.F.on_mor[M.lunit[x]],
                          D.compose(F.bin[x][M.unit], N.tmor(F.unit_mor, D.id_of(FX))));
      if (lhs != N.lunit[FX]) rep.fail("monfunctor-left-unit", M.cat->objects[x]);
      int rhs = D.compose(F.F.on_mor[M.runit[x]],
                          D.compose(F.bin[M.unit][x], N.tmor(D.id_of(FX), F.unit_mor)));
      if (rhs != N.runit[FX]) rep.fail("monfunctor-right-unit", M.cat->objects[x]);
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int FX = F.F.on_obj[x], FY = F.F.on_obj[y], FZ = F.F.on_obj[z];
          int route1 =
              D.compose(F.bin[M.tob(y, x)][z],
                        D.compose(N.tmor(D.id_of(FZ), F.bin[x][y]), N.assoc[FZ][FY][FX]));
          int route2 =
              D.compose(F.F.on_mor[M.assoc[z][y][x]],
                        D.compose(F.bin[x][M.tob(z, y)], N.tmor(F.bin[y][z], D.id_of(FX))));
          if (route1 != route2)
            rep.fail("monfunctor-hexagon", "(" + M.cat->objects[x] + "," + M.cat->objects[y] +
                                               "," + M.cat->objects[z] + ")");
        }
  } else {
    for (int x = 0; x < n; ++x) {
      int FX = F.F.on_obj[x];
      int lhs =
          D.compose(N.lunit[FX], D.compose(N.tmor(F.unit_mor, D.id_of(FX)), F.bin[x][M.unit]));
      if (lhs != F.F.on_mor[M.lunit[x]]) rep.fail("monfunctor-left-unit", M.cat->objects[x]);
      int rhs =
          D.compose(N.runit[FX], D.compose(N.tmor(D.id_of(FX), F.unit_mor), F.bin[M.unit][x]));
      if (rhs != F.F.on_mor[M.runit[x]]) rep.fail("monfunctor-right-unit", M.cat->objects[x]);
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int FX = F.F.on_obj[x], FY = F.F.on_obj[y], FZ = F.F.on_obj[z];
          int route1 =
              D.compose(N.assoc[FZ][FY][FX],
                        D.compose(N.tmor(F.bin[y][z], D.id_of(FX)), F.bin[x][M.tob(z, y)]));
          int route2 =
              D.compose(N.tmor(D.id_of(FZ), F.bin[x][y]),
                        D.compose(F.bin[M.tob(y, x)][z], F.F.on_mor[M.assoc[z][y][x]]));
          if (route1 != route2)
            rep.fail("monfunctor-hexagon", "(" + M.cat->objects[x] + "," + M.cat->objects[y] +
                                               "," + M.cat->objects[z] + ")");
        }
  }
  return rep;
}

MonFunctor identity_monfunctor(MonPtr M) {
  MonFunctor F;
  F.dir = MonDir::strong;
  F.F = identity_functor(M->cat);
  F.srcM = M;
  F.tgtM = M;
  F.unit_mor = M->cat->id_of(M->unit);
  int n = M->cat->n_obj();
  F.bin.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) F.bin[x][y] = M->cat->id_of(M->tob(y, x));
  return F;
}

int strong_unit_inverse(const MonFunctor& F) {
  auto inv = F.tgtM->cat->inverse(F.unit_mor);
  assert(inv);
  return *inv;
}

int strong_bin_inverse(const MonFunctor& F, int x, int y) {
  auto inv = F.tgtM->cat->inverse(F.bin[x][y]);
  assert(inv);
  return *inv;
}

// ---------------------------------------------------------------------------
// Monoidal profunctors

Report validate_monprofunctor(const MonProfunctor& H) {
  Report rep;
  rep.absorb(validate_profunctor(H.H));
  if (!rep.ok()) return rep;
  const auto& M = *H.srcM;
  const auto& N = *H.tgtN;
  int nm = M.cat->n_obj(), nn = N.cat->n_obj();
  if (H.unit_elt < 0 || H.unit_elt >= H.H.value[N.unit][M.unit].size()) {
    rep.input_error("monprof-unit", "unit element out of range");
    return rep;
  }
  auto val = [&](int nsl, int msl) -> const FinSetObj& { return H.H.value[nsl][msl]; };
  auto mul = [&](int np, int mp, int nsl, int msl, int kp, int k) {
    return H.mult[np][mp][nsl][msl].map[kp * val(nsl, msl).size() + k];
  };
  for (int np = 0; np < nn; ++np)
    for (int mp = 0; mp < nm; ++mp)
      for (int nsl = 0; nsl < nn; ++nsl)
        for (int msl = 0; msl < nm; ++msl) {
          const auto& fn = H.mult[np][mp][nsl][msl];
          if (fn.src_size != val(np, mp).size() * val(nsl, msl).size() ||
              fn.tgt_size != val(N.tob(np, nsl), M.tob(mp, msl)).size()) {
            rep.input_error("monprof-mult", "mistyped mult component");
            return rep;
          }
        }
  // naturality of mult in all four slots
  for (int np = 0; np < nn; ++np)
    for (int mp = 0; mp < nm; ++mp)
      for (int nsl = 0; nsl < nn; ++nsl)
        for (int msl = 0; msl < nm; ++msl)
          for (int kp = 0; kp < val(np, mp).size(); ++kp)
            for (int k = 0; k < val(nsl, msl).size(); ++k) {
              int cls = mul(np, mp, nsl, msl, kp, k);
              for (int g = 0; g < N.cat->n_mor(); ++g) {
                if (N.cat->tgt(g) == np) {
                  int lhs = H.H.lact[N.tmor(g, N.cat->id_of(nsl))][M.tob(mp, msl)].map[cls];
                  int rhs = mul(N.cat->src(g), mp, nsl, msl, H.H.lact[g][mp].map[kp], k);
                  if (lhs != rhs)
                    rep.fail("monprof-mult-naturality", "N' " + N.cat->morphisms[g].id);
                }
                if (N.cat->tgt(g) == nsl) {
                  int lhs = H.H.lact[N.tmor(N.cat->id_of(np), g)][M.tob(mp, msl)].map[cls];
                  int rhs = mul(np, mp, N.cat->src(g), msl, kp, H.H.lact[g][msl].map[k]);
                  if (lhs != rhs)
                    rep.fail("monprof-mult-naturality", "N " + N.cat->morphisms[g].id);
                }
              }
              for (int f = 0; f < M.cat->n_mor(); ++f) {
                if (M.cat->src(f) == mp) {
                  int lhs = H.H.ract[M.tmor(f, M.cat->id_of(msl))][N.tob(np, nsl)].map[cls];
                  int rhs = mul(np, M.cat->tgt(f), nsl, msl, H.H.ract[f][np].map[kp], k);
                  if (lhs != rhs)
                    rep.fail("monprof-mult-naturality", "M' " + M.cat->morphisms[f].id);
                }
                if (M.cat->src(f) == msl) {
                  int lhs = H.H.ract[M.tmor(M.cat->id_of(mp), f)][N.tob(np, nsl)].map[cls];
                  int rhs = mul(np, mp, nsl, M.cat->tgt(f), kp, H.H.ract[f][nsl].map[k]);
                  if (lhs != rhs)
                    rep.fail("monprof-mult-naturality", "M " + M.cat->morphisms[f].id);
                }
              }
            }
  if (!rep.ok()) return rep;
  for (int nsl = 0; nsl < nn; ++nsl)
    for (int msl = 0; msl < nm; ++msl)
      for (int k = 0; k < val(nsl, msl).size(); ++k) {
        int got = mul(N.unit, M.unit, nsl, msl, H.unit_elt, k);
        int lam_n = N.lunit[nsl];
        int lam_m_inv = *M.cat->inverse(M.lunit[msl]);
        int want = H.H.ract[lam_m_inv][N.tob(N.unit, nsl)].map[H.H.lact[lam_n][msl].map[k]];
        if (got != want)
          rep.fail("monprof-left-unit", "(" + N.cat->objects[nsl] + "," + M.cat->objects[msl] + ")");
        int got2 = mul(nsl, msl, N.unit, M.unit, k, H.unit_elt);
        int rho_n = N.runit[nsl];
        int rho_m_inv = *M.cat->inverse(M.runit[msl]);
        int want2 = H.H.ract[rho_m_inv][N.tob(nsl, N.unit)].map[H.H.lact[rho_n][msl].map[k]];
        if (got2 != want2)
          rep.fail("monprof-right-unit",
                   "(" + N.cat->objects[nsl] + "," + M.cat->objects[msl] + ")");
      }
  for (int n2 = 0; n2 < nn; ++n2)
    for (int m2 = 0; m2 < nm; ++m2)
      for (int n1 = 0; n1 < nn; ++n1)
        for (int m1 = 0; m1 < nm; ++m1)
          for (int n0 = 0; n0 < nn; ++n0)
            for (int m0 = 0; m0 < nm; ++m0)
              for (int z = 0; z < val(n2, m2).size(); ++z)
                for (int y = 0; y < val(n1, m1).size(); ++y)
                  for (int x = 0; x < val(n0, m0).size(); ++x) {
                    int left =
                        mul(N.tob(n2, n1), M.tob(m2, m1), n0, m0, mul(n2, m2, n1, m1, z, y), x);
                    int inner = mul(n1, m1, n0, m0, y, x);
                    int right = mul(n2, m2, N.tob(n1, n0), M.tob(m1, m0), z, inner);
                    int aN = N.assoc[n2][n1][n0];
                    int aM_inv = *M.cat->inverse(M.assoc[m2][m1][m0]);
                    int moved = H.H.ract[aM_inv][N.tob(N.tob(n2, n1), n0)]
                                    .map[H.H.lact[aN][M.tob(m2, M.tob(m1, m0))].map[right]];
                    if (left != moved)
                      rep.fail("monprof-associativity",
                               "(" + N.cat->objects[n2] + "," + N.cat->objects[n1] + "," +
                                   N.cat->objects[n0] + ")");
                  }
  return rep;
}

MonProfunctor identity_monprof(MonPtr M) {
  MonProfunctor H;
  H.srcM = M;
  H.tgtN = M;
  H.H = identity_prof(M->cat);
  const auto& C = *M->cat;
  H.unit_elt = H.H.value[M->unit][M->unit].index_of(C.morphisms[C.id_of(M->unit)].id);
  int n = C.n_obj();
  H.mult.assign(n, std::vector<std::vector<std::vector<FinFunction>>>(
                       n, std::vector<std::vector<FinFunction>>(n, std::vector<FinFunction>(n))));
  for (int np = 0; np < n; ++np)
    for (int mp = 0; mp < n; ++mp)
      for (int nsl = 0; nsl < n; ++nsl)
        for (int msl = 0; msl < n; ++msl) {
          FinFunction fn;
          fn.src_size = H.H.value[np][mp].size() * H.H.value[nsl][msl].size();
          fn.tgt_size = H.H.value[M->tob(np, nsl)][M->tob(mp, msl)].size();
          auto homs_p = C.hom(np, mp);
          auto homs = C.hom(nsl, msl);
          for (size_t kp = 0; kp < homs_p.size(); ++kp)
            for (size_t k = 0; k < homs.size(); ++k) {
              int t = M->tmor(homs_p[kp], homs[k]);
              fn.map.push_back(
                  H.H.value[M->tob(np, nsl)][M->tob(mp, msl)].index_of(C.morphisms[t].id));
            }
          H.mult[np][mp][nsl][msl] = fn;
        }
  return H;
}

MonCompositeProf compose_monprof(const MonProfunctor& K, const MonProfunctor& H) {
  MonCompositeProf out;
  out.comp = compose_prof(K.H, H.H);
  out.mp.srcM = H.srcM;
  out.mp.tgtN = K.tgtN;
  out.mp.H = out.comp.prof;
  const auto& M = *H.srcM;
  const auto& N = *H.tgtN;
  const auto& L = *K.tgtN;
  out.mp.unit_elt = out.comp.cls(L.unit, M.unit, N.unit, K.unit_elt, H.unit_elt,
                                 H.H.value[N.unit][M.unit].size());
  int nl = L.cat->n_obj(), nm = M.cat->n_obj();
  out.mp.mult.assign(nl, std::vector<std::vector<std::vector<FinFunction>>>(
                             nm, std::vector<std::vector<FinFunction>>(
                                     nl, std::vector<FinFunction>(nm))));
  for (int lp = 0; lp < nl; ++lp)
    for (int mp = 0; mp < nm; ++mp)
      for (int l = 0; l < nl; ++l)
        for (int m = 0; m < nm; ++m) {
          FinFunction fn;
          int sl = out.mp.H.value[l][m].size();
          fn.src_size = out.mp.H.value[lp][mp].size() * sl;
          fn.tgt_size = out.mp.H.value[L.tob(lp, l)][M.tob(mp, m)].size();
          fn.map.resize(fn.src_size);
          for (int cp = 0; cp < out.mp.H.value[lp][mp].size(); ++cp)
            for (int c = 0; c < sl; ++c) {
              auto [np, kp, hp] = out.comp.rep[lp][mp][cp];
              auto [n0, k0, h0] = out.comp.rep[l][m][c];
              int kk = K.mult[lp][np][l][n0].map[kp * K.H.value[l][n0].size() + k0];
              int hh = H.mult[np][mp][n0][m].map[hp * H.H.value[n0][m].size() + h0];
              fn.map[cp * sl + c] = out.comp.cls(L.tob(lp, l), M.tob(mp, m), N.tob(np, n0), kk, hh,
                                                 H.H.value[N.tob(np, n0)][M.tob(mp, m)].size());
            }
          out.mp.mult[lp][mp][l][m] = fn;
        }
  return out;
}

MonProfunctor mon_rep_lower(const MonFunctor& F) {
  MonProfunctor H;
  H.srcM = F.srcM;
  H.tgtN = F.tgtM;
  H.H = rep_lower(F.F);
  const auto& M = *F.srcM;
  const auto& N = *F.tgtM;
  const auto& D = *N.cat;
  H.unit_elt = H.H.value[N.unit][M.unit].index_of(D.morphisms[F.unit_mor].id);
  int nm = M.cat->n_obj(), nn = N.cat->n_obj();
  H.mult.assign(nn, std::vector<std::vector<std::vector<FinFunction>>>(
                        nm, std::vector<std::vector<FinFunction>>(nn,
                                                                  std::vector<FinFunction>(nm))));
  for (int np = 0; np < nn; ++np)
    for (int mp = 0; mp < nm; ++mp)
      for (int nsl = 0; nsl < nn; ++nsl)
        for (int msl = 0; msl < nm; ++msl) {
          FinFunction fn;
          auto homs_p = D.hom(np, F.F.on_obj[mp]);
          auto homs = D.hom(nsl, F.F.on_obj[msl]);
          fn.src_size = static_cast<int>(homs_p.size() * homs.size());
          fn.tgt_size = H.H.value[N.tob(np, nsl)][M.tob(mp, msl)].size();
          for (size_t kp = 0; kp < homs_p.size(); ++kp)
            for (size_t k = 0; k < homs.size(); ++k) {
              int t = D.compose(F.bin[msl][mp], N.tmor(homs_p[kp], homs[k]));
              fn.map.push_back(
                  H.H.value[N.tob(np, nsl)][M.tob(mp, msl)].index_of(D.morphisms[t].id));
            }
          H.mult[np][mp][nsl][msl] = fn;
        }
  return H;
}

MonProfunctor mon_rep_upper(const MonFunctor& F) {
  MonProfunctor H;
  H.srcM = F.tgtM;  // the profunctor runs N -|-> M
  H.tgtN = F.srcM;
  H.H = rep_upper(F.F);
  const auto& M = *F.srcM;
  const auto& N = *F.tgtM;
  const auto& D = *N.cat;
  int unit_inv = F.dir == MonDir::oplax ? F.unit_mor : strong_unit_inverse(F);
  H.unit_elt = H.H.value[M.unit][N.unit].index_of(D.morphisms[unit_inv].id);
  int nm = M.cat->n_obj(), nn = N.cat->n_obj();
  H.mult.assign(nm, std::vector<std::vector<std::vector<FinFunction>>>(
                        nn, std::vector<std::vector<FinFunction>>(nm,
                                                                  std::vector<FinFunction>(nn))));
  for (int mp = 0; mp < nm; ++mp)
    for (int np = 0; np < nn; ++np)
      for (int msl = 0; msl < nm; ++msl)
        for (int nsl = 0; nsl < nn; ++nsl) {
          FinFunction fn;
          auto homs_p = D.hom(F.F.on_obj[mp], np);
          auto homs = D.hom(F.F.on_obj[msl], nsl);
          fn.src_size = static_cast<int>(homs_p.size() * homs.size());
          fn.tgt_size = H.H.value[M.tob(mp, msl)][N.tob(np, nsl)].size();
          int binv = F.dir == MonDir::oplax ? F.bin[msl][mp] : strong_bin_inverse(F, msl, mp);
          for (size_t kp = 0; kp < homs_p.size(); ++kp)
            for (size_t k = 0; k < homs.size(); ++k) {
              int t = D.compose(N.tmor(homs_p[kp], homs[k]), binv);
              fn.map.push_back(
                  H.H.value[M.tob(mp, msl)][N.tob(np, nsl)].index_of(D.morphisms[t].id));
            }
          H.mult[mp][np][msl][nsl] = fn;
        }
  return H;
}

Report check_mth_adjunction(const MonFunctor& F) {
  Report rep;
  if (F.dir != MonDir::strong) {
    rep.input_error("mth-adjunction", "F must be strong monoidal");
    return rep;
  }
  rep.absorb(validate_monfunctor(F));
  if (!rep.ok()) return rep;
  rep.absorb(check_prof_adjunction(F.F));
  if (!rep.ok()) return rep;

  auto L = mon_rep_lower(F);
  auto U = mon_rep_upper(F);
  auto UL = compose_monprof(U, L);
  auto LU = compose_monprof(L, U);
  auto IN = identity_monprof(F.tgtM);
  const auto& M = *F.srcM;
  const auto& N = *F.tgtM;
  const auto& CM = *M.cat;
  const auto& CN = *N.cat;

  auto eta_at = [&](int ap, int a, int u) {
    int b = F.F.on_obj[ap];
    int k = U.H.value[ap][b].index_of(CN.morphisms[CN.id_of(b)].id);
    int h = L.H.value[b][a].index_of(CN.morphisms[F.F.on_mor[u]].id);
    return UL.comp.cls(ap, a, b, k, h, L.H.value[b][a].size());
  };
  {
    int u = CM.id_of(M.unit);
    if (eta_at(M.unit, M.unit, u) != UL.mp.unit_elt)
      rep.fail("eta-monoidal-unit", "unit element not preserved");
  }
  for (int ap = 0; ap < CM.n_obj(); ++ap)
    for (int a = 0; a < CM.n_obj(); ++a)
      for (int u : CM.hom(ap, a))
        for (int bp = 0; bp < CM.n_obj(); ++bp)
          for (int b = 0; b < CM.n_obj(); ++b)
            for (int v : CM.hom(bp, b)) {
              int lhs = eta_at(M.tob(ap, bp), M.tob(a, b), M.tmor(u, v));
              int eu = eta_at(ap, a, u);
              int ev = eta_at(bp, b, v);
              int rhs = UL.mp.mult[ap][a][bp][b].map[eu * UL.mp.H.value[bp][b].size() + ev];
              if (lhs != rhs)
                rep.fail("eta-monoidal-mult", CM.morphisms[u].id + "," + CM.morphisms[v].id);
            }
  auto eps_at = [&](int bp, int b, int cl) {
    auto [a, k, h] = LU.comp.rep[bp][b][cl];
    int km = CN.morphism_index(L.H.value[bp][a].elems[k]);
    int hm = CN.morphism_index(U.H.value[a][b].elems[h]);
    return IN.H.value[bp][b].index_of(CN.morphisms[CN.compose(hm, km)].id);
  };
  if (eps_at(N.unit, N.unit, LU.mp.unit_elt) !=
      IN.H.value[N.unit][N.unit].index_of(CN.morphisms[CN.id_of(N.unit)].id))
    rep.fail("eps-monoidal-unit", "unit element not preserved");
  for (int bp = 0; bp < CN.n_obj(); ++bp)
    for (int b = 0; b < CN.n_obj(); ++b)
      for (int cp = 0; cp < LU.mp.H.value[bp][b].size(); ++cp)
        for (int dp = 0; dp < CN.n_obj(); ++dp)
          for (int d = 0; d < CN.n_obj(); ++d)
            for (int c = 0; c < LU.mp.H.value[dp][d].size(); ++c) {
              int prod = LU.mp.mult[bp][b][dp][d].map[cp * LU.mp.H.value[dp][d].size() + c];
              int lhs = eps_at(N.tob(bp, dp), N.tob(b, d), prod);
              int e1 = eps_at(bp, b, cp);
              int e2 = eps_at(dp, d, c);
              int m1 = CN.morphism_index(IN.H.value[bp][b].elems[e1]);
              int m2 = CN.morphism_index(IN.H.value[dp][d].elems[e2]);
              int rhs =
                  IN.H.value[N.tob(bp, dp)][N.tob(b, d)].index_of(CN.morphisms[N.tmor(m1, m2)].id);
              if (lhs != rhs)
                rep.fail("eps-monoidal-mult",
                         "at (" + CN.objects[bp] + "," + CN.objects[b] + ")");
            }
  return rep;
}

}  // namespace catalg
