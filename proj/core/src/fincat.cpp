#include "catalg/fincat.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace catalg {

// ---------------------------------------------------------------------------
// Reports

void Report::absorb(const Report& r) {
  if (r.verdict == Verdict::input_error) verdict = Verdict::input_error;
  else if (r.verdict == Verdict::fail && verdict == Verdict::pass) verdict = Verdict::fail;
  witnesses.insert(witnesses.end(), r.witnesses.begin(), r.witnesses.end());
}

std::string Report::to_text() const {
  std::ostringstream os;
  switch (verdict) {
    case Verdict::pass: os << "pass"; break;
    case Verdict::fail: os << "fail"; break;
    case Verdict::input_error: os << "input-error"; break;
  }
  for (const auto& w : witnesses) os << "\n  " << w.law << ": " << w.detail;
  return os.str();
}

// ---------------------------------------------------------------------------
// FinCategory

int FinCategory::compose(int g, int f) const {
  assert(composable(g, f));
  int r = compose_table[g][f];
  assert(r >= 0);
  return r;
}

std::vector<int> FinCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (int m = 0; m < n_mor(); ++m)
    if (morphisms[m].src == a && morphisms[m].tgt == b) out.push_back(m);
  return out;
}

int FinCategory::object_index(const std::string& id) const {
  for (int i = 0; i < n_obj(); ++i)
    if (objects[i] == id) return i;
  return -1;
}

int FinCategory::morphism_index(const std::string& id) const {
  for (int i = 0; i < n_mor(); ++i)
    if (morphisms[i].id == id) return i;
  return -1;
}

bool FinCategory::is_iso(int m) const { return inverse(m).has_value(); }

std::optional<int> FinCategory::inverse(int m) const {
  int a = src(m), b = tgt(m);
  for (int n : hom(b, a))
    if (compose(n, m) == id_of(a) && compose(m, n) == id_of(b)) return n;
  return std::nullopt;
}

Report validate_category(const FinCategory& C) {
  Report rep;
  // Structural checks first; ill-formed ids and tables are input errors,
  // distinct from law violations.
  {
    std::set<std::string> seen;
    for (const auto& o : C.objects) {
      if (o.empty()) rep.input_error("object-id", "empty object id");
      if (!seen.insert(o).second) rep.input_error("object-id", "duplicate object id '" + o + "'");
    }
  }
  {
    std::set<std::string> seen;
    for (const auto& m : C.morphisms) {
      if (m.id.empty()) rep.input_error("morphism-id", "empty morphism id");
      if (!seen.insert(m.id).second)
        rep.input_error("morphism-id", "duplicate morphism id '" + m.id + "'");
      if (m.src < 0 || m.src >= C.n_obj() || m.tgt < 0 || m.tgt >= C.n_obj())
        rep.input_error("morphism-typing", "morphism '" + m.id + "' has out-of-range endpoints");
    }
  }
  if (static_cast<int>(C.identity.size()) != C.n_obj())
    rep.input_error("identity-table", "identity table size mismatch");
  if (static_cast<int>(C.compose_table.size()) != C.n_mor())
    rep.input_error("compose-table", "compose table row count mismatch");
  else
    for (const auto& row : C.compose_table)
      if (static_cast<int>(row.size()) != C.n_mor())
        rep.input_error("compose-table", "compose table column count mismatch");
  if (rep.verdict == Verdict::input_error) return rep;

  for (int a = 0; a < C.n_obj(); ++a) {
    int i = C.identity[a];
    if (i < 0 || i >= C.n_mor() || C.src(i) != a || C.tgt(i) != a)
      rep.input_error("identity-typing", "identity of '" + C.objects[a] + "' is not an endomorphism");
  }
  for (int g = 0; g < C.n_mor(); ++g)
    for (int f = 0; f < C.n_mor(); ++f) {
      int r = C.compose_table[g][f];
      if (C.composable(g, f)) {
        if (r < 0)
          rep.input_error("compose-total",
                          "compose(" + C.morphisms[g].id + ", " + C.morphisms[f].id + ") undefined");
        else if (C.src(r) != C.src(f) || C.tgt(r) != C.tgt(g))
          rep.input_error("compose-typing",
                          "compose(" + C.morphisms[g].id + ", " + C.morphisms[f].id + ") lands outside hom");
      } else if (r >= 0) {
        rep.input_error("compose-domain",
                        "compose defined on non-composable pair (" + C.morphisms[g].id + ", " +
                            C.morphisms[f].id + ")");
      }
    }
  if (rep.verdict == Verdict::input_error) return rep;

  // Law checks: every violated identity/associativity instance is listed.
  for (int f = 0; f < C.n_mor(); ++f) {
    int a = C.src(f), b = C.tgt(f);
    if (C.compose(C.id_of(b), f) != f)
      rep.fail("identity-law", "compose(id_" + C.objects[b] + ", " + C.morphisms[f].id + ") != " +
                                   C.morphisms[f].id);
    if (C.compose(f, C.id_of(a)) != f)
      rep.fail("identity-law", "compose(" + C.morphisms[f].id + ", id_" + C.objects[a] + ") != " +
                                   C.morphisms[f].id);
  }
  for (int h = 0; h < C.n_mor(); ++h)
    for (int g = 0; g < C.n_mor(); ++g) {
      if (!C.composable(h, g)) continue;
      for (int f = 0; f < C.n_mor(); ++f) {
        if (!C.composable(g, f)) continue;
        if (C.compose(h, C.compose(g, f)) != C.compose(C.compose(h, g), f))
          rep.fail("associativity",
                   "(" + C.morphisms[h].id + ", " + C.morphisms[g].id + ", " + C.morphisms[f].id + ")");
      }
    }
  return rep;
}

FinCategory opposite_category(const FinCategory& C) {
  FinCategory op = C;
  op.name = C.name.empty() ? "op" : C.name + "^op";
  for (auto& m : op.morphisms) std::swap(m.src, m.tgt);
  for (int g = 0; g < C.n_mor(); ++g)
    for (int f = 0; f < C.n_mor(); ++f) op.compose_table[g][f] = C.compose_table[f][g];
  return op;
}

FinCategory product_category(const FinCategory& C, const FinCategory& D) {
  FinCategory P;
  P.name = "(" + C.name + "x" + D.name + ")";
  for (int c = 0; c < C.n_obj(); ++c)
    for (int d = 0; d < D.n_obj(); ++d)
      P.objects.push_back("(" + C.objects[c] + "," + D.objects[d] + ")");
  for (int f = 0; f < C.n_mor(); ++f)
    for (int g = 0; g < D.n_mor(); ++g) {
      Mor m;
      m.id = "(" + C.morphisms[f].id + "," + D.morphisms[g].id + ")";
      m.src = product_obj(D, C.src(f), D.src(g));
      m.tgt = product_obj(D, C.tgt(f), D.tgt(g));
      P.morphisms.push_back(m);
    }
  P.identity.resize(P.n_obj());
  for (int c = 0; c < C.n_obj(); ++c)
    for (int d = 0; d < D.n_obj(); ++d)
      P.identity[product_obj(D, c, d)] = product_mor(D, C.id_of(c), D.id_of(d));
  P.compose_table.assign(P.n_mor(), std::vector<int>(P.n_mor(), -1));
  for (int f2 = 0; f2 < C.n_mor(); ++f2)
    for (int g2 = 0; g2 < D.n_mor(); ++g2)
      for (int f1 = 0; f1 < C.n_mor(); ++f1)
        for (int g1 = 0; g1 < D.n_mor(); ++g1) {
          if (!C.composable(f2, f1) || !D.composable(g2, g1)) continue;
          P.compose_table[product_mor(D, f2, g2)][product_mor(D, f1, g1)] =
              product_mor(D, C.compose(f2, f1), D.compose(g2, g1));
        }
  return P;
}

FinCategory terminal_category() {
  FinCategory C;
  C.name = "1";
  C.objects = {"*"};
  C.morphisms = {{"id_*", 0, 0}};
  C.identity = {0};
  C.compose_table = {{0}};
  return C;
}

FinCategory walking_arrow_category() {
  FinCategory C;
  C.name = "2";
  C.objects = {"a", "b"};
  C.morphisms = {{"id_a", 0, 0}, {"id_b", 1, 1}, {"f", 0, 1}};
  C.identity = {0, 1};
  C.compose_table.assign(3, std::vector<int>(3, -1));
  C.compose_table[0][0] = 0;
  C.compose_table[1][1] = 1;
  C.compose_table[2][0] = 2;  // f . id_a
  C.compose_table[1][2] = 2;  // id_b . f
  return C;
}

FinCategory empty_category() {
  FinCategory C;
  C.name = "0";
  return C;
}

FinCategory chain_category(int n) {
  FinCategory C;
  C.name = "chain" + std::to_string(n);
  for (int i = 0; i < n; ++i) C.objects.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      C.morphisms.push_back({"le_" + std::to_string(i) + "_" + std::to_string(j), i, j});
  C.identity.resize(n);
  for (int m = 0; m < C.n_mor(); ++m)
    if (C.src(m) == C.tgt(m)) C.identity[C.src(m)] = m;
  C.compose_table.assign(C.n_mor(), std::vector<int>(C.n_mor(), -1));
  for (int g = 0; g < C.n_mor(); ++g)
    for (int f = 0; f < C.n_mor(); ++f)
      if (C.composable(g, f)) {
        auto h = C.hom(C.src(f), C.tgt(g));
        assert(h.size() == 1);
        C.compose_table[g][f] = h[0];
      }
  return C;
}

// ---------------------------------------------------------------------------
// Functors / naturals

Report validate_functor(const FinFunctor& F) {
  Report rep;
  const auto& C = *F.source;
  const auto& D = *F.target;
  if (static_cast<int>(F.on_obj.size()) != C.n_obj() ||
      static_cast<int>(F.on_mor.size()) != C.n_mor()) {
    rep.input_error("functor-tables", "table size mismatch");
    return rep;
  }
  for (int c = 0; c < C.n_obj(); ++c)
    if (F.on_obj[c] < 0 || F.on_obj[c] >= D.n_obj()) {
      rep.input_error("functor-tables", "object image out of range");
      return rep;
    }
  for (int f = 0; f < C.n_mor(); ++f) {
    int m = F.on_mor[f];
    if (m < 0 || m >= D.n_mor()) {
      rep.input_error("functor-tables", "morphism image out of range");
      return rep;
    }
    if (D.src(m) != F.on_obj[C.src(f)] || D.tgt(m) != F.on_obj[C.tgt(f)])
      rep.fail("functor-typing", "image of '" + C.morphisms[f].id + "' has wrong endpoints");
  }
  if (!rep.ok()) return rep;
  for (int c = 0; c < C.n_obj(); ++c)
    if (F.on_mor[C.id_of(c)] != D.id_of(F.on_obj[c]))
      rep.fail("functor-identity", "identity of '" + C.objects[c] + "' not preserved");
  for (int g = 0; g < C.n_mor(); ++g)
    for (int f = 0; f < C.n_mor(); ++f)
      if (C.composable(g, f))
        if (F.on_mor[C.compose(g, f)] != D.compose(F.on_mor[g], F.on_mor[f]))
          rep.fail("functor-composition",
                   "(" + C.morphisms[g].id + ", " + C.morphisms[f].id + ") not preserved");
  return rep;
}

FinFunctor identity_functor(CatPtr C) {
  FinFunctor F;
  F.source = C;
  F.target = C;
  F.on_obj.resize(C->n_obj());
  F.on_mor.resize(C->n_mor());
  for (int i = 0; i < C->n_obj(); ++i) F.on_obj[i] = i;
  for (int i = 0; i < C->n_mor(); ++i) F.on_mor[i] = i;
  return F;
}

FinFunctor compose_functors(const FinFunctor& G, const FinFunctor& F) {
  FinFunctor H;
  H.source = F.source;
  H.target = G.target;
  H.on_obj.resize(F.on_obj.size());
  H.on_mor.resize(F.on_mor.size());
  for (size_t i = 0; i < F.on_obj.size(); ++i) H.on_obj[i] = G.on_obj[F.on_obj[i]];
  for (size_t i = 0; i < F.on_mor.size(); ++i) H.on_mor[i] = G.on_mor[F.on_mor[i]];
  return H;
}

FinFunctor bang_functor(CatPtr C, CatPtr terminal) {
  FinFunctor F;
  F.source = C;
  F.target = terminal;
  F.on_obj.assign(C->n_obj(), 0);
  F.on_mor.assign(C->n_mor(), 0);
  return F;
}

FinFunctor name_functor(CatPtr terminal, CatPtr C, int c) {
  FinFunctor F;
  F.source = terminal;
  F.target = C;
  F.on_obj = {c};
  F.on_mor = {C->id_of(c)};
  return F;
}

bool same_functor(const FinFunctor& F, const FinFunctor& G) {
  return F.on_obj == G.on_obj && F.on_mor == G.on_mor;
}

Report validate_nat(const NatTransform& t) {
  Report rep;
  const auto& C = *t.source.source;
  const auto& D = *t.source.target;
  if (static_cast<int>(t.comp.size()) != C.n_obj()) {
    rep.input_error("nat-components", "component count mismatch");
    return rep;
  }
  for (int c = 0; c < C.n_obj(); ++c) {
    int m = t.comp[c];
    if (m < 0 || m >= D.n_mor()) {
      rep.input_error("nat-components", "component out of range");
      return rep;
    }
    if (D.src(m) != t.source.on_obj[c] || D.tgt(m) != t.target.on_obj[c])
      rep.fail("nat-typing", "component at '" + C.objects[c] + "' has wrong endpoints");
  }
  if (!rep.ok()) return rep;
  for (int f = 0; f < C.n_mor(); ++f) {
    int a = C.src(f), b = C.tgt(f);
    // t_b . F f = G f . t_a
    if (D.compose(t.comp[b], t.source.on_mor[f]) != D.compose(t.target.on_mor[f], t.comp[a]))
      rep.fail("naturality", "square at '" + C.morphisms[f].id + "' does not commute");
  }
  return rep;
}

NatTransform identity_nat(const FinFunctor& F) {
  NatTransform t;
  t.source = F;
  t.target = F;
  t.comp.resize(F.on_obj.size());
  for (size_t c = 0; c < F.on_obj.size(); ++c) t.comp[c] = F.target->id_of(F.on_obj[c]);
  return t;
}

NatTransform vcompose_nats(const NatTransform& s, const NatTransform& t) {
  NatTransform r;
  r.source = t.source;
  r.target = s.target;
  r.comp.resize(t.comp.size());
  const auto& D = *t.source.target;
  for (size_t c = 0; c < t.comp.size(); ++c) r.comp[c] = D.compose(s.comp[c], t.comp[c]);
  return r;
}

NatTransform hcompose_nats(const NatTransform& s, const NatTransform& t) {
  // t : F => F' : C -> D,  s : G => G' : D -> E;  (s * t) : G.F => G'.F'
  NatTransform r;
  r.source = compose_functors(s.source, t.source);
  r.target = compose_functors(s.target, t.target);
  const auto& E = *s.source.target;
  r.comp.resize(t.comp.size());
  for (size_t c = 0; c < t.comp.size(); ++c) {
    // s_{F'c} . G(t_c)
    int gtc = s.source.on_mor[t.comp[c]];
    int sfc = s.comp[t.target.on_obj[c]];
    r.comp[c] = E.compose(sfc, gtc);
  }
  return r;
}

NatTransform whisker_left(const FinFunctor& G, const NatTransform& t) {
  return hcompose_nats(identity_nat(G), t);
}

NatTransform whisker_right(const NatTransform& s, const FinFunctor& F) {
  return hcompose_nats(s, identity_nat(F));
}

bool same_nat(const NatTransform& a, const NatTransform& b) { return a.comp == b.comp; }

// ---------------------------------------------------------------------------
// Finite sets

int FinSetObj::index_of(const std::string& id) const {
  for (int i = 0; i < size(); ++i)
    if (elems[i] == id) return i;
  return -1;
}

Report validate_function(const FinFunction& f) {
  Report rep;
  if (static_cast<int>(f.map.size()) != f.src_size)
    rep.input_error("function-total", "mapping table size mismatch");
  for (int v : f.map)
    if (v < 0 || v >= f.tgt_size) rep.input_error("function-range", "value out of target");
  return rep;
}

FinFunction identity_function(int n) {
  FinFunction f;
  f.src_size = f.tgt_size = n;
  f.map.resize(n);
  for (int i = 0; i < n; ++i) f.map[i] = i;
  return f;
}

FinFunction compose_functions(const FinFunction& g, const FinFunction& f) {
  assert(f.tgt_size == g.src_size);
  FinFunction h;
  h.src_size = f.src_size;
  h.tgt_size = g.tgt_size;
  h.map.resize(f.src_size);
  for (int i = 0; i < f.src_size; ++i) h.map[i] = g.map[f.map[i]];
  return h;
}

bool is_bijection(const FinFunction& f) {
  if (f.src_size != f.tgt_size) return false;
  std::vector<bool> hit(f.tgt_size, false);
  for (int v : f.map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

// ---------------------------------------------------------------------------
// BiDiagrams

Report validate_bidiagram(const BiDiagram& D) {
  Report rep;
  const auto& S = *D.shape;
  int n = S.n_obj(), m = S.n_mor();
  if (static_cast<int>(D.value.size()) != n ||
      static_cast<int>(D.left.size()) != m ||
      static_cast<int>(D.right.size()) != m) {
    rep.input_error("bidiagram-tables", "table size mismatch");
    return rep;
  }
  for (int b = 0; b < n; ++b)
    if (static_cast<int>(D.value[b].size()) != n) {
      rep.input_error("bidiagram-tables", "value row size mismatch");
      return rep;
    }
  for (int g = 0; g < m; ++g)
    for (int a = 0; a < n; ++a) {
      const auto& fn = D.left[g][a];
      if (fn.src_size != D.value[S.tgt(g)][a].size() || fn.tgt_size != D.value[S.src(g)][a].size())
        rep.input_error("bidiagram-left", "left action at (" + S.morphisms[g].id + "," +
                                              S.objects[a] + ") mistyped");
    }
  for (int f = 0; f < m; ++f)
    for (int b = 0; b < n; ++b) {
      const auto& fn = D.right[f][b];
      if (fn.src_size != D.value[b][S.src(f)].size() || fn.tgt_size != D.value[b][S.tgt(f)].size())
        rep.input_error("bidiagram-right", "right action at (" + S.morphisms[f].id + "," +
                                               S.objects[b] + ") mistyped");
    }
  if (rep.verdict == Verdict::input_error) return rep;

  // Functoriality of both actions.
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      if (D.left[S.id_of(b)][a].map != identity_function(D.value[b][a].size()).map)
        rep.fail("bidiagram-left-id", "left action of id_" + S.objects[b] + " at " + S.objects[a]);
      if (D.right[S.id_of(a)][b].map != identity_function(D.value[b][a].size()).map)
        rep.fail("bidiagram-right-id", "right action of id_" + S.objects[a] + " at " + S.objects[b]);
    }
  for (int g2 = 0; g2 < m; ++g2)
    for (int g1 = 0; g1 < m; ++g1) {
      if (!S.composable(g2, g1)) continue;
      int g21 = S.compose(g2, g1);
      for (int a = 0; a < n; ++a) {
        // contravariant: D(g2.g1, a) = D(g1,a) . D(g2,a)... careful:
        // left[g] : D(tgt g, -) -> D(src g, -); for g21 : s -> t,
        // left[g21] = left[g1] . left[g2] with g1 : s->mid, g2 : mid->t.
        auto lhs = D.left[g21][a];
        auto rhs = compose_functions(D.left[g1][a], D.left[g2][a]);
        if (lhs.map != rhs.map)
          rep.fail("bidiagram-left-comp",
                   "(" + S.morphisms[g2].id + "," + S.morphisms[g1].id + ") at " + S.objects[a]);
      }
      for (int b = 0; b < n; ++b) {
        auto lhs = D.right[g21][b];
        auto rhs = compose_functions(D.right[g2][b], D.right[g1][b]);
        if (lhs.map != rhs.map)
          rep.fail("bidiagram-right-comp",
                   "(" + S.morphisms[g2].id + "," + S.morphisms[g1].id + ") at " + S.objects[b]);
      }
    }
  // Actions commute (bifunctor law).
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      auto lhs = compose_functions(D.right[f][S.src(g)], D.left[g][S.src(f)]);
      auto rhs = compose_functions(D.left[g][S.tgt(f)], D.right[f][S.tgt(g)]);
      if (lhs.map != rhs.map)
        rep.fail("bidiagram-bifunctor",
                 "actions along (" + S.morphisms[g].id + "," + S.morphisms[f].id + ") do not commute");
    }
  return rep;
}

BiDiagram hom_bidiagram(CatPtr C) {
  BiDiagram D;
  D.shape = C;
  int n = C->n_obj(), m = C->n_mor();
  D.value.assign(n, std::vector<FinSetObj>(n));
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      for (int h : C->hom(b, a)) D.value[b][a].elems.push_back(C->morphisms[h].id);
  auto hom_index = [&](int b, int a, int h) {
    return D.value[b][a].index_of(C->morphisms[h].id);
  };
  D.left.assign(m, std::vector<FinFunction>(n));
  D.right.assign(m, std::vector<FinFunction>(n));
  for (int g = 0; g < m; ++g)
    for (int a = 0; a < n; ++a) {
      // precompose with g : b -> b' maps C(b', a) -> C(b, a)
      FinFunction fn;
      fn.src_size = D.value[C->tgt(g)][a].size();
      fn.tgt_size = D.value[C->src(g)][a].size();
      for (int h : C->hom(C->tgt(g), a)) fn.map.push_back(hom_index(C->src(g), a, C->compose(h, g)));
      D.left[g][a] = fn;
    }
  for (int f = 0; f < m; ++f)
    for (int b = 0; b < n; ++b) {
      // postcompose with f : a -> a' maps C(b, a) -> C(b, a')
      FinFunction fn;
      fn.src_size = D.value[b][C->src(f)].size();
      fn.tgt_size = D.value[b][C->tgt(f)].size();
      for (int h : C->hom(b, C->src(f))) fn.map.push_back(hom_index(b, C->tgt(f), C->compose(f, h)));
      D.right[f][b] = fn;
    }
  return D;
}

namespace {

// Union-find with least-index representative extraction.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

CoendResult coend(const BiDiagram& D) {
  const auto& S = *D.shape;
  int n = S.n_obj();
  // Flatten the diagonal ⨿_c D(c,c).
  std::vector<int> offset(n + 1, 0);
  for (int c = 0; c < n; ++c) offset[c + 1] = offset[c] + D.value[c][c].size();
  int total = offset[n];
  UnionFind uf(total);
  for (int f = 0; f < S.n_mor(); ++f) {
    int c = S.src(f), cp = S.tgt(f);
    // x in D(c', c): glue left[f](x) in D(c,c) with right[f](x) in D(c',c').
    int cnt = D.value[cp][c].size();
    for (int x = 0; x < cnt; ++x) {
      int lhs = offset[c] + D.left[f][c].map[x];
      int rhs = offset[cp] + D.right[f][cp].map[x];
      uf.unite(lhs, rhs);
    }
  }
  // Canonical representative per class: least (object id, element id)
  // lexicographically.
  std::vector<std::pair<int, int>> flat_of(total);
  for (int c = 0; c < n; ++c)
    for (int x = 0; x < D.value[c][c].size(); ++x) flat_of[offset[c] + x] = {c, x};
  std::map<int, std::pair<std::string, std::string>> best;  // root -> (obj id, elem id)
  std::map<int, std::pair<int, int>> best_idx;
  for (int i = 0; i < total; ++i) {
    int r = uf.find(i);
    auto [c, x] = flat_of[i];
    std::pair<std::string, std::string> key = {S.objects[c], D.value[c][c].elems[x]};
    auto it = best.find(r);
    if (it == best.end() || key < it->second) {
      best[r] = key;
      best_idx[r] = {c, x};
    }
  }
  // Classes ordered by their canonical representative.
  std::vector<std::pair<std::pair<std::string, std::string>, int>> ordered;
  for (auto& [r, key] : best) ordered.push_back({key, r});
  std::sort(ordered.begin(), ordered.end());
  CoendResult out;
  std::map<int, int> class_of_root;
  for (auto& [key, r] : ordered) {
    class_of_root[r] = out.set.size();
    out.set.elems.push_back(key.first + ":" + key.second);
    out.class_rep.push_back(best_idx[r]);
  }
  out.proj.resize(n);
  for (int c = 0; c < n; ++c) {
    FinFunction p;
    p.src_size = D.value[c][c].size();
    p.tgt_size = out.set.size();
    for (int x = 0; x < p.src_size; ++x) p.map.push_back(class_of_root[uf.find(offset[c] + x)]);
    out.proj[c] = p;
  }
  return out;
}

EndResult end(const BiDiagram& D) {
  const auto& S = *D.shape;
  int n = S.n_obj();
  EndResult out;
  out.proj.resize(n);
  for (int c = 0; c < n; ++c) {
    out.proj[c].src_size = 0;  // filled after enumeration
    out.proj[c].tgt_size = D.value[c][c].size();
  }
  // Enumerate the product lexicographically and filter by naturality.
  std::vector<int> sizes(n);
  for (int c = 0; c < n; ++c) sizes[c] = D.value[c][c].size();
  std::vector<int> x(n, 0);
  bool any_empty = false;
  for (int c = 0; c < n; ++c)
    if (sizes[c] == 0) any_empty = true;
  auto natural = [&](const std::vector<int>& fam) {
    for (int f = 0; f < S.n_mor(); ++f) {
      int c = S.src(f), cp = S.tgt(f);
      // D(c, f)(x_c) = D(f, c')(x_{c'}) in D(c, c')
      if (D.right[f][c].map[fam[c]] != D.left[f][cp].map[fam[cp]]) return false;
    }
    return true;
  };
  if (!any_empty) {
    // n == 0 falls through to a single empty family "[]"
    while (true) {
      if (natural(x)) {
        std::string id = "[";
        for (int c = 0; c < n; ++c) {
          if (c) id += ",";
          id += D.value[c][c].elems[x[c]];
        }
        id += "]";
        out.set.elems.push_back(id);
        out.family.push_back(x);
      }
      int k = n - 1;
      while (k >= 0 && x[k] + 1 == sizes[k]) {
        x[k] = 0;
        --k;
      }
      if (k < 0) break;
      ++x[k];
    }
  }
  for (int c = 0; c < n; ++c) {
    out.proj[c].src_size = out.set.size();
    out.proj[c].map.clear();
    for (const auto& fam : out.family) out.proj[c].map.push_back(fam[c]);
  }
  return out;
}

Report validate_bidiagram_map(const BiDiagram& D, const BiDiagram& E, const BiDiagramMap& m) {
  Report rep;
  const auto& S = *D.shape;
  int n = S.n_obj();
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      const auto& fn = m.comp[b][a];
      if (fn.src_size != D.value[b][a].size() || fn.tgt_size != E.value[b][a].size())
        rep.input_error("map-typing", "component mistyped at (" + S.objects[b] + "," + S.objects[a] + ")");
    }
  if (rep.verdict == Verdict::input_error) return rep;
  for (int g = 0; g < S.n_mor(); ++g)
    for (int a = 0; a < n; ++a) {
      auto lhs = compose_functions(m.comp[S.src(g)][a], D.left[g][a]);
      auto rhs = compose_functions(E.left[g][a], m.comp[S.tgt(g)][a]);
      if (lhs.map != rhs.map) rep.fail("map-left-naturality", S.morphisms[g].id);
    }
  for (int f = 0; f < S.n_mor(); ++f)
    for (int b = 0; b < n; ++b) {
      auto lhs = compose_functions(m.comp[b][S.tgt(f)], D.right[f][b]);
      auto rhs = compose_functions(E.right[f][b], m.comp[b][S.src(f)]);
      if (lhs.map != rhs.map) rep.fail("map-right-naturality", S.morphisms[f].id);
    }
  return rep;
}

FinFunction coend_map(const BiDiagram& D, const BiDiagram& E, const BiDiagramMap& m,
                      const CoendResult& cD, const CoendResult& cE) {
  FinFunction fn;
  fn.src_size = cD.set.size();
  fn.tgt_size = cE.set.size();
  fn.map.resize(fn.src_size, -1);
  for (int k = 0; k < fn.src_size; ++k) {
    auto [c, x] = cD.class_rep[k];
    fn.map[k] = cE.proj[c].map[m.comp[c][c].map[x]];
  }
  return fn;
}

FinFunction end_map(const BiDiagram& D, const BiDiagram& E, const BiDiagramMap& m,
                    const EndResult& eD, const EndResult& eE) {
  FinFunction fn;
  fn.src_size = eD.set.size();
  fn.tgt_size = eE.set.size();
  int n = static_cast<int>(eD.proj.size());
  for (const auto& fam : eD.family) {
    std::vector<int> img(n);
    for (int c = 0; c < n; ++c) img[c] = m.comp[c][c].map[fam[c]];
    int found = -1;
    for (size_t j = 0; j < eE.family.size(); ++j)
      if (eE.family[j] == img) {
        found = static_cast<int>(j);
        break;
      }
    assert(found >= 0);
    fn.map.push_back(found);
  }
  return fn;
}

// ---------------------------------------------------------------------------
// Limits

bool cone_commutes(const FinCategory& C, const FinFunctor& D, const Cone& cone) {
  const auto& S = *D.source;
  for (int s = 0; s < S.n_obj(); ++s) {
    int leg = cone.legs[s];
    if (C.src(leg) != cone.apex || C.tgt(leg) != D.on_obj[s]) return false;
  }
  for (int f = 0; f < S.n_mor(); ++f)
    if (C.compose(D.on_mor[f], cone.legs[S.src(f)]) != cone.legs[S.tgt(f)]) return false;
  return true;
}

namespace {

// All commuting cones with the given apex, in lexicographic leg order.
std::vector<Cone> cones_from(const FinCategory& C, const FinFunctor& D, int apex) {
  const auto& S = *D.source;
  int ns = S.n_obj();
  std::vector<std::vector<int>> cand(ns);
  for (int s = 0; s < ns; ++s) cand[s] = C.hom(apex, D.on_obj[s]);
  std::vector<Cone> out;
  std::vector<int> pick(ns, 0);
  for (int s = 0; s < ns; ++s)
    if (cand[s].empty()) return out;
  if (ns == 0) {
    Cone c;
    c.apex = apex;
    out.push_back(c);
    return out;
  }
  while (true) {
    Cone c;
    c.apex = apex;
    c.legs.resize(ns);
    for (int s = 0; s < ns; ++s) c.legs[s] = cand[s][pick[s]];
    if (cone_commutes(C, D, c)) out.push_back(c);
    int k = ns - 1;
    while (k >= 0 && pick[k] + 1 == static_cast<int>(cand[k].size())) {
      pick[k] = 0;
      --k;
    }
    if (k < 0) break;
    ++pick[k];
  }
  return out;
}

int count_mediators(const FinCategory& C, const FinFunctor& D, const Cone& lim, const Cone& cone,
                    int* found) {
  const auto& S = *D.source;
  int cnt = 0;
  for (int w : C.hom(cone.apex, lim.apex)) {
    bool ok = true;
    for (int s = 0; s < S.n_obj() && ok; ++s)
      if (C.compose(lim.legs[s], w) != cone.legs[s]) ok = false;
    if (ok) {
      ++cnt;
      if (found) *found = w;
    }
  }
  return cnt;
}

}  // namespace

bool is_limit(const FinCategory& C, const FinFunctor& D, const Cone& cand) {
  if (!cone_commutes(C, D, cand)) return false;
  for (int apex = 0; apex < C.n_obj(); ++apex)
    for (const auto& cone : cones_from(C, D, apex))
      if (count_mediators(C, D, cand, cone, nullptr) != 1) return false;
  return true;
}

std::optional<LimitWitness> limit(const FinCategory& C, const FinFunctor& D) {
  for (int apex = 0; apex < C.n_obj(); ++apex)
    for (const auto& cone : cones_from(C, D, apex))
      if (is_limit(C, D, cone)) {
        LimitWitness w;
        w.cone = cone;
        return w;
      }
  return std::nullopt;
}

std::optional<int> mediate_cone(const FinCategory& C, const FinFunctor& D, const LimitWitness& w,
                                const Cone& cone) {
  if (!cone_commutes(C, D, cone)) return std::nullopt;
  int found = -1;
  if (count_mediators(C, D, w.cone, cone, &found) >= 1) return found;
  return std::nullopt;
}

namespace {

// Discrete shape with n objects mapped to the same target object A.
std::pair<CatPtr, FinFunctor> discrete_diagram(const FinCategory& C, int A, int n) {
  auto shape = std::make_shared<FinCategory>();
  shape->name = "discrete" + std::to_string(n);
  for (int i = 0; i < n; ++i) shape->objects.push_back("d" + std::to_string(i));
  for (int i = 0; i < n; ++i) shape->morphisms.push_back({"id_d" + std::to_string(i), i, i});
  shape->identity.resize(n);
  for (int i = 0; i < n; ++i) shape->identity[i] = i;
  shape->compose_table.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) shape->compose_table[i][i] = i;
  FinFunctor D;
  D.source = shape;
  D.target = CatPtr(&C, [](const FinCategory*) {});  // non-owning view
  D.on_obj.assign(n, A);
  D.on_mor.assign(n, C.id_of(A));
  return {shape, D};
}

}  // namespace

std::optional<PowerWitness> finite_power(const FinCategory& C, int A, int n) {
  if (n == 1) {
    PowerWitness w;
    w.power = A;
    w.projections = {C.id_of(A)};
    return w;
  }
  auto [shape, D] = discrete_diagram(C, A, n);
  auto lw = limit(C, D);
  if (!lw) return std::nullopt;
  PowerWitness w;
  w.power = lw->cone.apex;
  w.projections = lw->cone.legs;
  return w;
}

std::optional<int> power_pair(const FinCategory& C, const PowerWitness& w, int X,
                              const std::vector<int>& tuple) {
  int n = static_cast<int>(w.projections.size());
  for (int u : C.hom(X, w.power)) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (C.compose(w.projections[i], u) != tuple[i]) ok = false;
    if (ok) return u;
  }
  return std::nullopt;
}

std::optional<PullbackWitness> pullback(const FinCategory& C, int f, int g) {
  // shape: x --u--> z <--v-- y
  auto shape = std::make_shared<FinCategory>();
  shape->name = "cospan";
  shape->objects = {"x", "y", "z"};
  shape->morphisms = {{"id_x", 0, 0}, {"id_y", 1, 1}, {"id_z", 2, 2}, {"u", 0, 2}, {"v", 1, 2}};
  shape->identity = {0, 1, 2};
  shape->compose_table.assign(5, std::vector<int>(5, -1));
  shape->compose_table[0][0] = 0;
  shape->compose_table[1][1] = 1;
  shape->compose_table[2][2] = 2;
  shape->compose_table[3][0] = 3;
  shape->compose_table[2][3] = 3;
  shape->compose_table[4][1] = 4;
  shape->compose_table[2][4] = 4;
  FinFunctor D;
  D.source = shape;
  D.target = CatPtr(&C, [](const FinCategory*) {});
  D.on_obj = {C.src(f), C.src(g), C.tgt(f)};
  D.on_mor = {C.id_of(C.src(f)), C.id_of(C.src(g)), C.id_of(C.tgt(f)), f, g};
  auto lw = limit(C, D);
  if (!lw) return std::nullopt;
  PullbackWitness w;
  w.apex = lw->cone.apex;
  w.to_x = lw->cone.legs[0];
  w.to_y = lw->cone.legs[1];
  return w;
}

std::optional<int> pullback_pair(const FinCategory& C, int f, int g, const PullbackWitness& w,
                                 int u, int v) {
  if (C.compose(f, u) != C.compose(g, v)) return std::nullopt;
  int W = C.src(u);
  for (int h : C.hom(W, w.apex))
    if (C.compose(w.to_x, h) == u && C.compose(w.to_y, h) == v) return h;
  return std::nullopt;
}

bool is_pullback_square(const FinCategory& C, int f, int g, int W, int p, int q) {
  // p : W -> src f,  q : W -> src g,  f.p = g.q required.
  if (C.src(p) != W || C.src(q) != W) return false;
  if (C.tgt(p) != C.src(f) || C.tgt(q) != C.src(g)) return false;
  if (C.compose(f, p) != C.compose(g, q)) return false;
  for (int V = 0; V < C.n_obj(); ++V)
    for (int u : C.hom(V, C.src(f)))
      for (int v : C.hom(V, C.src(g))) {
        if (C.compose(f, u) != C.compose(g, v)) continue;
        int cnt = 0;
        for (int h : C.hom(V, W))
          if (C.compose(p, h) == u && C.compose(q, h) == v) ++cnt;
        if (cnt != 1) return false;
      }
  return true;
}

std::optional<int> terminal_object(const FinCategory& C) {
  for (int t = 0; t < C.n_obj(); ++t) {
    bool ok = true;
    for (int x = 0; x < C.n_obj() && ok; ++x)
      if (C.hom(x, t).size() != 1) ok = false;
    if (ok) return t;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Functor categories

int FunctorCategory::index_of_functor(const FinFunctor& F) const {
  for (size_t i = 0; i < functor_of.size(); ++i)
    if (same_functor(functor_of[i], F)) return static_cast<int>(i);
  return -1;
}

int FunctorCategory::index_of_nat(const NatTransform& t) const {
  for (size_t i = 0; i < nat_of.size(); ++i)
    if (same_functor(nat_of[i].source, t.source) && same_functor(nat_of[i].target, t.target) &&
        nat_of[i].comp == t.comp)
      return static_cast<int>(i);
  return -1;
}

std::int64_t functor_count_bound(const FinCategory& C, const FinCategory& D) {
  std::int64_t n = 1;
  for (int i = 0; i < C.n_obj(); ++i) {
    n *= D.n_obj();
    if (n > (std::int64_t(1) << 40)) return n;
  }
  return n;
}

FunctorCategory functor_category(CatPtr C, CatPtr D, std::int64_t ceiling) {
  if (functor_count_bound(*C, *D) > ceiling)
    throw SizeCeilingError{"functor category [" + C->name + "," + D->name +
                           "] exceeds the size ceiling of " + std::to_string(ceiling)};

  FunctorCategory out;
  // Enumerate all functors: object assignment outer loop (lexicographic),
  // then morphism assignments generator-free by brute force over tables.
  int nco = C->n_obj();
  std::vector<int> oass(nco, 0);
  std::vector<FinFunctor> functors;
  auto try_mor_assignments = [&](const std::vector<int>& on_obj) {
    // candidates per morphism
    int ncm = C->n_mor();
    std::vector<std::vector<int>> cand(ncm);
    for (int f = 0; f < ncm; ++f) {
      if (C->src(f) == C->tgt(f) && C->id_of(C->src(f)) == f) {
        cand[f] = {D->id_of(on_obj[C->src(f)])};
      } else {
        cand[f] = D->hom(on_obj[C->src(f)], on_obj[C->tgt(f)]);
      }
      if (cand[f].empty()) return;
    }
    std::vector<int> pick(ncm, 0);
    while (true) {
      FinFunctor F;
      F.source = C;
      F.target = D;
      F.on_obj = on_obj;
      F.on_mor.resize(ncm);
      for (int f = 0; f < ncm; ++f) F.on_mor[f] = cand[f][pick[f]];
      if (validate_functor(F).ok()) functors.push_back(F);
      int k = ncm - 1;
      while (k >= 0 && pick[k] + 1 == static_cast<int>(cand[k].size())) {
        pick[k] = 0;
        --k;
      }
      if (k < 0) break;
      ++pick[k];
    }
    if (ncm == 0) {
      FinFunctor F;
      F.source = C;
      F.target = D;
      F.on_obj = on_obj;
      functors.push_back(F);
    }
  };
  if (nco == 0) {
    FinFunctor F;
    F.source = C;
    F.target = D;
    functors.push_back(F);
  } else {
    while (true) {
      try_mor_assignments(oass);
      int k = nco - 1;
      while (k >= 0 && oass[k] + 1 == D->n_obj()) {
        oass[k] = 0;
        --k;
      }
      if (k < 0) break;
      ++oass[k];
    }
  }

  auto cat = std::make_shared<FinCategory>();
  cat->name = "[" + C->name + "," + D->name + "]";
  auto sig = [&](const FinFunctor& F) {
    std::string s = "F[";
    for (size_t i = 0; i < F.on_obj.size(); ++i) {
      if (i) s += ",";
      s += D->objects[F.on_obj[i]];
    }
    s += "|";
    for (size_t i = 0; i < F.on_mor.size(); ++i) {
      if (i) s += ",";
      s += D->morphisms[F.on_mor[i]].id;
    }
    s += "]";
    return s;
  };
  for (const auto& F : functors) cat->objects.push_back(sig(F));
  out.functor_of = functors;

  // Natural transformations between every ordered pair of functors.
  std::vector<NatTransform> nats;
  for (size_t i = 0; i < functors.size(); ++i)
    for (size_t j = 0; j < functors.size(); ++j) {
      const auto& F = functors[i];
      const auto& G = functors[j];
      std::vector<std::vector<int>> cand(nco);
      bool feasible = true;
      for (int c = 0; c < nco && feasible; ++c) {
        cand[c] = D->hom(F.on_obj[c], G.on_obj[c]);
        if (cand[c].empty()) feasible = false;
      }
      if (!feasible) continue;
      if (nco == 0) {
        NatTransform t;
        t.source = F;
        t.target = G;
        nats.push_back(t);
        continue;
      }
      std::vector<int> pick(nco, 0);
      while (true) {
        NatTransform t;
        t.source = F;
        t.target = G;
        t.comp.resize(nco);
        for (int c = 0; c < nco; ++c) t.comp[c] = cand[c][pick[c]];
        if (validate_nat(t).ok()) nats.push_back(t);
        int k = nco - 1;
        while (k >= 0 && pick[k] + 1 == static_cast<int>(cand[k].size())) {
          pick[k] = 0;
          --k;
        }
        if (k < 0) break;
        ++pick[k];
      }
    }
  for (size_t t = 0; t < nats.size(); ++t) {
    Mor m;
    int srci = -1, tgti = -1;
    for (size_t i = 0; i < functors.size(); ++i) {
      if (same_functor(functors[i], nats[t].source)) srci = static_cast<int>(i);
      if (same_functor(functors[i], nats[t].target)) tgti = static_cast<int>(i);
    }
    std::string cs = "n[";
    for (size_t c = 0; c < nats[t].comp.size(); ++c) {
      if (c) cs += ",";
      cs += D->morphisms[nats[t].comp[c]].id;
    }
    cs += "]";
    m.id = cs + ":" + std::to_string(srci) + ">" + std::to_string(tgti);
    m.src = srci;
    m.tgt = tgti;
    cat->morphisms.push_back(m);
  }
  out.nat_of = nats;
  cat->identity.resize(cat->n_obj(), -1);
  for (size_t i = 0; i < functors.size(); ++i) {
    NatTransform idn = identity_nat(functors[i]);
    for (size_t t = 0; t < nats.size(); ++t)
      if (cat->morphisms[t].src == static_cast<int>(i) &&
          cat->morphisms[t].tgt == static_cast<int>(i) && nats[t].comp == idn.comp)
        cat->identity[i] = static_cast<int>(t);
  }
  cat->compose_table.assign(cat->n_mor(), std::vector<int>(cat->n_mor(), -1));
  for (int s = 0; s < cat->n_mor(); ++s)
    for (int t = 0; t < cat->n_mor(); ++t) {
      if (cat->morphisms[t].tgt != cat->morphisms[s].src) continue;
      NatTransform comp = vcompose_nats(nats[s], nats[t]);
      for (int r = 0; r < cat->n_mor(); ++r)
        if (cat->morphisms[r].src == cat->morphisms[t].src &&
            cat->morphisms[r].tgt == cat->morphisms[s].tgt && nats[r].comp == comp.comp) {
          cat->compose_table[s][t] = r;
          break;
        }
    }
  out.cat = cat;
  return out;
}

// ---------------------------------------------------------------------------
// Helpers

std::string canonical_pair_id(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

std::vector<std::vector<int>> all_tuples(int arity, int base) {
  std::vector<std::vector<int>> out;
  if (arity == 0) {
    out.push_back({});
    return out;
  }
  if (base == 0) return out;
  std::vector<int> t(arity, 0);
  while (true) {
    out.push_back(t);
    int k = arity - 1;
    while (k >= 0 && t[k] + 1 == base) {
      t[k] = 0;
      --k;
    }
    if (k < 0) break;
    ++t[k];
  }
  return out;
}

}  // namespace catalg
