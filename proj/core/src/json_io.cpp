#include "catalg/json_io.hpp"

#include <set>

namespace catalg {

namespace {

[[noreturn]] void bad(const std::string& what) { throw JsonError{what}; }

int need_obj(const FinCategory& C, const std::string& id) {
  int i = C.object_index(id);
  if (i < 0) bad("unknown object id '" + id + "'");
  return i;
}

int need_mor(const FinCategory& C, const std::string& id) {
  int i = C.morphism_index(id);
  if (i < 0) bad("unknown morphism id '" + id + "'");
  return i;
}

}  // namespace

FinCategory category_from_json(const Json& j) {
  FinCategory C;
  if (!j.contains("objects") || !j.contains("morphisms")) bad("category needs objects/morphisms");
  std::set<std::string> seen;
  for (const auto& o : j.at("objects")) {
    std::string id = o.get<std::string>();
    if (!seen.insert(id).second) bad("duplicate object id '" + id + "'");
    C.objects.push_back(id);
  }
  std::set<std::string> mseen;
  for (const auto& m : j.at("morphisms")) {
    Mor mor;
    mor.id = m.at("id").get<std::string>();
    if (!mseen.insert(mor.id).second) bad("duplicate morphism id '" + mor.id + "'");
    mor.src = need_obj(C, m.at("src").get<std::string>());
    mor.tgt = need_obj(C, m.at("tgt").get<std::string>());
    C.morphisms.push_back(mor);
  }
  C.identity.assign(C.n_obj(), -1);
  for (auto it = j.at("identity").begin(); it != j.at("identity").end(); ++it)
    C.identity[need_obj(C, it.key())] = need_mor(C, it.value().get<std::string>());
  for (int c = 0; c < C.n_obj(); ++c)
    if (C.identity[c] < 0) bad("missing identity for object '" + C.objects[c] + "'");
  C.compose_table.assign(C.n_mor(), std::vector<int>(C.n_mor(), -1));
  for (const auto& e : j.at("compose")) {
    int after = need_mor(C, e.at("after").get<std::string>());
    int before = need_mor(C, e.at("before").get<std::string>());
    int equals = need_mor(C, e.at("equals").get<std::string>());
    C.compose_table[after][before] = equals;
  }
  if (j.contains("name")) C.name = j.at("name").get<std::string>();
  return C;
}

Json category_to_json(const FinCategory& C) {
  Json j;
  j["objects"] = C.objects;
  j["morphisms"] = Json::array();
  for (const auto& m : C.morphisms)
    j["morphisms"].push_back({{"id", m.id}, {"src", C.objects[m.src]}, {"tgt", C.objects[m.tgt]}});
  Json idj = Json::object();
  for (int c = 0; c < C.n_obj(); ++c) idj[C.objects[c]] = C.morphisms[C.identity[c]].id;
  j["identity"] = idj;
  j["compose"] = Json::array();
  for (int g = 0; g < C.n_mor(); ++g)
    for (int f = 0; f < C.n_mor(); ++f)
      if (C.compose_table[g][f] >= 0)
        j["compose"].push_back({{"after", C.morphisms[g].id},
                                {"before", C.morphisms[f].id},
                                {"equals", C.morphisms[C.compose_table[g][f]].id}});
  if (!C.name.empty()) j["name"] = C.name;
  return j;
}

FinFunctor functor_from_json(const Json& j, CatPtr source, CatPtr target) {
  FinFunctor F;
  F.source = source;
  F.target = target;
  F.on_obj.assign(source->n_obj(), -1);
  for (auto it = j.at("on_objects").begin(); it != j.at("on_objects").end(); ++it)
    F.on_obj[need_obj(*source, it.key())] = need_obj(*target, it.value().get<std::string>());
  F.on_mor.assign(source->n_mor(), -1);
  for (auto it = j.at("on_morphisms").begin(); it != j.at("on_morphisms").end(); ++it)
    F.on_mor[need_mor(*source, it.key())] = need_mor(*target, it.value().get<std::string>());
  for (int c = 0; c < source->n_obj(); ++c)
    if (F.on_obj[c] < 0) bad("functor misses object '" + source->objects[c] + "'");
  for (int m = 0; m < source->n_mor(); ++m)
    if (F.on_mor[m] < 0) bad("functor misses morphism '" + source->morphisms[m].id + "'");
  return F;
}

NatTransform nat_from_json(const Json& j, const FinFunctor& F, const FinFunctor& G) {
  NatTransform t;
  t.source = F;
  t.target = G;
  t.comp.assign(F.source->n_obj(), -1);
  for (auto it = j.at("components").begin(); it != j.at("components").end(); ++it)
    t.comp[need_obj(*F.source, it.key())] = need_mor(*F.target, it.value().get<std::string>());
  for (int c = 0; c < F.source->n_obj(); ++c)
    if (t.comp[c] < 0) bad("natural transformation misses a component");
  return t;
}

FinMonoidalCat moncat_from_json(const Json& j) {
  auto cat = std::make_shared<FinCategory>(category_from_json(j.at("category")));
  FinMonoidalCat M;
  M.cat = cat;
  int n = cat->n_obj();
  M.tensor_obj.assign(n, std::vector<int>(n, -1));
  for (auto x = j.at("tensor_obj").begin(); x != j.at("tensor_obj").end(); ++x)
    for (auto y = x.value().begin(); y != x.value().end(); ++y)
      M.tensor_obj[need_obj(*cat, x.key())][need_obj(*cat, y.key())] =
          need_obj(*cat, y.value().get<std::string>());
  int m = cat->n_mor();
  M.tensor_mor.assign(m, std::vector<int>(m, -1));
  for (auto x = j.at("tensor_mor").begin(); x != j.at("tensor_mor").end(); ++x)
    for (auto y = x.value().begin(); y != x.value().end(); ++y)
      M.tensor_mor[need_mor(*cat, x.key())][need_mor(*cat, y.key())] =
          need_mor(*cat, y.value().get<std::string>());
  M.unit = need_obj(*cat, j.at("unit").get<std::string>());
  M.strict = j.value("strict", true);
  if (M.strict && !j.contains("assoc")) {
    auto filled = make_strict_moncat(cat, M.tensor_obj, M.tensor_mor, M.unit);
    M.assoc = filled.assoc;
    M.lunit = filled.lunit;
    M.runit = filled.runit;
  } else {
    M.assoc.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, -1)));
    for (auto x = j.at("assoc").begin(); x != j.at("assoc").end(); ++x)
      for (auto y = x.value().begin(); y != x.value().end(); ++y)
        for (auto z = y.value().begin(); z != y.value().end(); ++z)
          M.assoc[need_obj(*cat, x.key())][need_obj(*cat, y.key())][need_obj(*cat, z.key())] =
              need_mor(*cat, z.value().get<std::string>());
    M.lunit.assign(n, -1);
    for (auto x = j.at("lunit").begin(); x != j.at("lunit").end(); ++x)
      M.lunit[need_obj(*cat, x.key())] = need_mor(*cat, x.value().get<std::string>());
    M.runit.assign(n, -1);
    for (auto x = j.at("runit").begin(); x != j.at("runit").end(); ++x)
      M.runit[need_obj(*cat, x.key())] = need_mor(*cat, x.value().get<std::string>());
  }
  return M;
}

Theory theory_from_json(const Json& j, const FinMonoidalCat& M) {
  Theory t;
  t.carrier = need_obj(*M.cat, j.at("carrier").get<std::string>());
  t.e = need_mor(*M.cat, j.at("e").get<std::string>());
  t.m = need_mor(*M.cat, j.at("m").get<std::string>());
  return t;
}

FinMonad monad_from_json(const Json& j, CatPtr C) {
  FinMonad T;
  T.S = functor_from_json(j.at("S"), C, C);
  T.eta = nat_from_json(j.at("eta"), identity_functor(C), T.S);
  T.mu = nat_from_json(j.at("mu"), compose_functors(T.S, T.S), T.S);
  return T;
}

Profunctor profunctor_from_json(const Json& j, CatPtr source, CatPtr target) {
  Profunctor H;
  H.source = source;
  H.target = target;
  int nb = target->n_obj(), na = source->n_obj();
  H.value.assign(nb, std::vector<FinSetObj>(na));
  for (auto b = j.at("value").begin(); b != j.at("value").end(); ++b)
    for (auto a = b.value().begin(); a != b.value().end(); ++a) {
      auto& cell = H.value[need_obj(*target, b.key())][need_obj(*source, a.key())];
      std::set<std::string> seen;
      for (const auto& e : a.value()) {
        std::string id = e.get<std::string>();
        if (!seen.insert(id).second) bad("duplicate element id '" + id + "'");
        cell.elems.push_back(id);
      }
    }
  H.lact.assign(target->n_mor(), std::vector<FinFunction>(na));
  for (int g = 0; g < target->n_mor(); ++g)
    for (int a = 0; a < na; ++a) {
      H.lact[g][a].src_size = H.value[target->tgt(g)][a].size();
      H.lact[g][a].tgt_size = H.value[target->src(g)][a].size();
      H.lact[g][a].map.assign(H.lact[g][a].src_size, -1);
    }
  for (auto g = j.at("left_action").begin(); g != j.at("left_action").end(); ++g) {
    int gi = need_mor(*target, g.key());
    for (auto a = g.value().begin(); a != g.value().end(); ++a) {
      int ai = need_obj(*source, a.key());
      for (auto e = a.value().begin(); e != a.value().end(); ++e) {
        int from = H.value[target->tgt(gi)][ai].index_of(e.key());
        int to = H.value[target->src(gi)][ai].index_of(e.value().get<std::string>());
        if (from < 0 || to < 0) bad("left action references unknown elements");
        H.lact[gi][ai].map[from] = to;
      }
    }
  }
  H.ract.assign(source->n_mor(), std::vector<FinFunction>(nb));
  for (int f = 0; f < source->n_mor(); ++f)
    for (int b = 0; b < nb; ++b) {
      H.ract[f][b].src_size = H.value[b][source->src(f)].size();
      H.ract[f][b].tgt_size = H.value[b][source->tgt(f)].size();
      H.ract[f][b].map.assign(H.ract[f][b].src_size, -1);
    }
  for (auto f = j.at("right_action").begin(); f != j.at("right_action").end(); ++f) {
    int fi = need_mor(*source, f.key());
    for (auto b = f.value().begin(); b != f.value().end(); ++b) {
      int bi = need_obj(*target, b.key());
      for (auto e = b.value().begin(); e != b.value().end(); ++e) {
        int from = H.value[bi][source->src(fi)].index_of(e.key());
        int to = H.value[bi][source->tgt(fi)].index_of(e.value().get<std::string>());
        if (from < 0 || to < 0) bad("right action references unknown elements");
        H.ract[fi][bi].map[from] = to;
      }
    }
  }
  for (const auto& rows : H.lact)
    for (const auto& fn : rows)
      for (int v : fn.map)
        if (v < 0) bad("left action is not total");
  for (const auto& rows : H.ract)
    for (const auto& fn : rows)
      for (int v : fn.map)
        if (v < 0) bad("right action is not total");
  return H;
}

TruncGradedSet gradedset_from_json(const Json& j) {
  TruncGradedSet X;
  X.K = j.at("K").get<int>();
  std::string kind = j.value("kind", "N");
  X.kind = kind == "F" ? GradedKind::F : kind == "P" ? GradedKind::P : GradedKind::N;
  X.level.resize(X.K + 1);
  int n = 0;
  for (const auto& lv : j.at("levels")) {
    if (n > X.K) bad("more levels than K+1");
    std::set<std::string> seen;
    for (const auto& e : lv) {
      std::string id = e.get<std::string>();
      if (!seen.insert(id).second) bad("duplicate element id '" + id + "'");
      X.level[n].elems.push_back(id);
    }
    ++n;
  }
  if (X.kind == GradedKind::P) {
    X.sym.resize(X.K + 1);
    for (int lv = 0; lv <= X.K; ++lv) {
      auto perms = all_permutations(lv);
      X.sym[lv].assign(perms.size(), identity_function(X.level[lv].size()));
    }
    if (j.contains("sym_actions")) {
      // sym_actions: {level: {"perm one-line": {elem: elem}}}
      for (auto lv = j.at("sym_actions").begin(); lv != j.at("sym_actions").end(); ++lv) {
        int n2 = std::stoi(lv.key());
        for (auto p = lv.value().begin(); p != lv.value().end(); ++p) {
          // parse "2,1" style one-line permutations (1-based)
          std::vector<int> perm;
          std::string s = p.key();
          size_t pos = 0;
          while (pos < s.size()) {
            size_t comma = s.find(',', pos);
            if (comma == std::string::npos) comma = s.size();
            perm.push_back(std::stoi(s.substr(pos, comma - pos)) - 1);
            pos = comma + 1;
          }
          FinFunction fn = identity_function(X.level[n2].size());
          for (auto e = p.value().begin(); e != p.value().end(); ++e) {
            int from = X.level[n2].index_of(e.key());
            int to = X.level[n2].index_of(e.value().get<std::string>());
            if (from < 0 || to < 0) bad("sym action references unknown elements");
            fn.map[from] = to;
          }
          X.sym[n2][permutation_index(perm)] = fn;
        }
      }
    }
  }
  if (X.kind == GradedKind::F) {
    if (!j.contains("f_actions")) bad("kind F needs f_actions");
    X.f_act.assign(X.K + 1, std::vector<std::vector<FinFunction>>(X.K + 1));
    for (int m = 0; m <= X.K; ++m)
      for (int lv = 0; lv <= X.K; ++lv)
        for (const auto& u : all_tuples(m, lv)) {
          (void)u;
          FinFunction fn;
          fn.src_size = X.level[m].size();
          fn.tgt_size = X.level[lv].size();
          fn.map.assign(fn.src_size, -1);
          X.f_act[m][lv].push_back(fn);
        }
    // f_actions: {"m>n:u1,u2,..": {elem: elem}} with 1-based u entries
    for (auto a = j.at("f_actions").begin(); a != j.at("f_actions").end(); ++a) {
      std::string key = a.key();
      auto gt = key.find('>');
      auto colon = key.find(':');
      int m = std::stoi(key.substr(0, gt));
      int lv = std::stoi(key.substr(gt + 1, colon - gt - 1));
      std::vector<int> u;
      std::string rest = key.substr(colon + 1);
      size_t pos = 0;
      while (pos < rest.size()) {
        size_t comma = rest.find(',', pos);
        if (comma == std::string::npos) comma = rest.size();
        u.push_back(std::stoi(rest.substr(pos, comma - pos)) - 1);
        pos = comma + 1;
      }
      auto& fn = X.f_act[m][lv][tuple_index(u, lv)];
      for (auto e = a.value().begin(); e != a.value().end(); ++e) {
        int from = X.level[m].index_of(e.key());
        int to = X.level[lv].index_of(e.value().get<std::string>());
        if (from < 0 || to < 0) bad("f action references unknown elements");
        fn.map[from] = to;
      }
    }
    for (int m = 0; m <= X.K; ++m)
      for (int lv = 0; lv <= X.K; ++lv)
        for (auto& fn : X.f_act[m][lv])
          for (int v : fn.map)
            if (v < 0) bad("f action is not total");
  }
  return X;
}

Json gradedset_to_json(const TruncGradedSet& X) {
  Json j;
  j["K"] = X.K;
  j["kind"] = X.kind == GradedKind::F ? "F" : X.kind == GradedKind::P ? "P" : "N";
  j["levels"] = Json::array();
  for (const auto& lv : X.level) j["levels"].push_back(lv.elems);
  return j;
}

Clone clone_from_json(const Json& j) {
  auto X = gradedset_from_json(j);
  Clone c;
  c.K = X.K;
  c.level = X.level;
  c.proj.assign(c.K + 1, {});
  int n = 0;
  for (const auto& lv : j.at("projections")) {
    for (const auto& p : lv) {
      int idx = c.level[n].index_of(p.get<std::string>());
      if (idx < 0) bad("unknown projection element");
      c.proj[n].push_back(idx);
    }
    ++n;
  }
  c.comp.assign(c.K + 1, std::vector<std::vector<int>>(c.K + 1));
  for (int k = 0; k <= c.K; ++k)
    for (int lv = 0; lv <= c.K; ++lv) {
      if (c.level[k].size() == 0) continue;
      if (k > 0 && c.level[lv].size() == 0) continue;
      std::int64_t sz = c.level[k].size();
      for (int i = 0; i < k; ++i) sz *= c.level[lv].size();
      c.comp[k][lv].assign(sz, -1);
    }
  // compose: [{"k","n","phi","args":[...],"equals"}]
  for (const auto& e : j.at("compose")) {
    int k = e.at("k").get<int>();
    int lv = e.at("n").get<int>();
    int phi = c.level[k].index_of(e.at("phi").get<std::string>());
    std::vector<int> thetas;
    for (const auto& th : e.at("args")) thetas.push_back(c.level[lv].index_of(th.get<std::string>()));
    int eq = c.level[lv].index_of(e.at("equals").get<std::string>());
    if (phi < 0 || eq < 0) bad("compose entry references unknown elements");
    std::int64_t base = c.level[lv].size();
    std::int64_t idx = phi;
    for (int i = 0; i < k; ++i) idx = idx * base + thetas[i];
    c.comp[k][lv][idx] = eq;
  }
  for (int k = 0; k <= c.K; ++k)
    for (int lv = 0; lv <= c.K; ++lv)
      for (int v : c.comp[k][lv])
        if (v < 0) bad("clone composition is not total");
  return c;
}

Json clone_to_json(const Clone& c) {
  Json j;
  j["K"] = c.K;
  j["kind"] = "F";
  j["levels"] = Json::array();
  for (const auto& lv : c.level) j["levels"].push_back(lv.elems);
  j["projections"] = Json::array();
  for (int n = 0; n <= c.K; ++n) {
    Json row = Json::array();
    for (int i : c.proj[n]) row.push_back(c.level[n].elems[i]);
    j["projections"].push_back(row);
  }
  j["compose"] = Json::array();
  for (int k = 0; k <= c.K; ++k)
    for (int n = 0; n <= c.K; ++n) {
      if (c.level[k].size() == 0) continue;
      if (k > 0 && c.level[n].size() == 0) continue;
      for (int phi = 0; phi < c.level[k].size(); ++phi) {
        std::vector<int> sizes(k, c.level[n].size());
        std::vector<int> th(k, 0);
        while (true) {
          Json e;
          e["k"] = k;
          e["n"] = n;
          e["phi"] = c.level[k].elems[phi];
          Json args = Json::array();
          for (int i = 0; i < k; ++i) args.push_back(c.level[n].elems[th[i]]);
          e["args"] = args;
          e["equals"] = c.level[n].elems[c.compose(k, n, phi, th)];
          j["compose"].push_back(e);
          int i = k - 1;
          while (i >= 0 && th[i] + 1 == sizes[i]) {
            th[i] = 0;
            --i;
          }
          if (i < 0) break;
          ++th[i];
        }
      }
    }
  return j;
}

NsOperad nsoperad_from_json(const Json& j) {
  NsOperad T;
  T.K = j.at("K").get<int>();
  T.level.resize(T.K + 1);
  int n = 0;
  for (const auto& lv : j.at("levels")) {
    for (const auto& e : lv) T.level[n].elems.push_back(e.get<std::string>());
    ++n;
  }
  T.unit = T.level[1].index_of(j.at("unit").get<std::string>());
  if (T.unit < 0) bad("unknown unit element");
  for (const auto& e : j.at("compose")) {
    int k = e.at("k").get<int>();
    std::vector<int> ns;
    for (const auto& v : e.at("arities")) ns.push_back(v.get<int>());
    int phi = T.level[k].index_of(e.at("phi").get<std::string>());
    std::vector<int> thetas;
    for (size_t i = 0; i < ns.size(); ++i)
      thetas.push_back(T.level[ns[i]].index_of(e.at("args")[i].get<std::string>()));
    int total = 0;
    for (int v : ns) total += v;
    int eq = T.level[total].index_of(e.at("equals").get<std::string>());
    if (phi < 0 || eq < 0) bad("operad compose entry references unknown elements");
    std::vector<int> key = {k};
    key.insert(key.end(), ns.begin(), ns.end());
    key.push_back(phi);
    key.insert(key.end(), thetas.begin(), thetas.end());
    T.comp[key] = eq;
  }
  return T;
}

Json nsoperad_to_json(const NsOperad& T) {
  Json j;
  j["K"] = T.K;
  j["kind"] = "N";
  j["levels"] = Json::array();
  for (const auto& lv : T.level) j["levels"].push_back(lv.elems);
  j["unit"] = T.level[1].elems[T.unit];
  j["compose"] = Json::array();
  for (const auto& [key, val] : T.comp) {
    int k = key[0];
    Json e;
    e["k"] = k;
    Json ar = Json::array();
    int total = 0;
    for (int i = 0; i < k; ++i) {
      ar.push_back(key[1 + i]);
      total += key[1 + i];
    }
    e["arities"] = ar;
    e["phi"] = T.level[k].elems[key[1 + k]];
    Json args = Json::array();
    for (int i = 0; i < k; ++i) args.push_back(T.level[key[1 + i]].elems[key[2 + k + i]]);
    e["args"] = args;
    e["equals"] = T.level[total].elems[val];
    j["compose"].push_back(e);
  }
  return j;
}

Metamodel metamodel_from_json(const Json& j, MonPtr M, CatPtr C) {
  Metamodel P;
  P.M = M;
  P.C = C;
  const auto& MC = *M->cat;
  int nm = MC.n_obj(), nc = C->n_obj();
  P.value.assign(nm, std::vector<std::vector<FinSetObj>>(nc, std::vector<FinSetObj>(nc)));
  for (auto x = j.at("value").begin(); x != j.at("value").end(); ++x)
    for (auto a = x.value().begin(); a != x.value().end(); ++a)
      for (auto b = a.value().begin(); b != a.value().end(); ++b) {
        auto& cell =
            P.value[need_obj(MC, x.key())][need_obj(*C, a.key())][need_obj(*C, b.key())];
        for (const auto& e : b.value()) cell.elems.push_back(e.get<std::string>());
      }
  // actions are given elementwise: actM/{morphism}/{A}/{B}/{elem: elem} etc.
  P.actM.assign(MC.n_mor(), std::vector<std::vector<FinFunction>>(nc, std::vector<FinFunction>(nc)));
  for (int x = 0; x < MC.n_mor(); ++x)
    for (int a = 0; a < nc; ++a)
      for (int b = 0; b < nc; ++b) {
        P.actM[x][a][b].src_size = P.value[MC.tgt(x)][a][b].size();
        P.actM[x][a][b].tgt_size = P.value[MC.src(x)][a][b].size();
        P.actM[x][a][b].map.assign(P.actM[x][a][b].src_size, -1);
      }
  for (auto x = j.at("actM").begin(); x != j.at("actM").end(); ++x) {
    int xi = need_mor(MC, x.key());
    for (auto a = x.value().begin(); a != x.value().end(); ++a) {
      int ai = need_obj(*C, a.key());
      for (auto b = a.value().begin(); b != a.value().end(); ++b) {
        int bi = need_obj(*C, b.key());
        for (auto e = b.value().begin(); e != b.value().end(); ++e) {
          int from = P.value[MC.tgt(xi)][ai][bi].index_of(e.key());
          int to = P.value[MC.src(xi)][ai][bi].index_of(e.value().get<std::string>());
          if (from < 0 || to < 0) bad("actM references unknown elements");
          P.actM[xi][ai][bi].map[from] = to;
        }
      }
    }
  }
  P.actA.assign(C->n_mor(), std::vector<std::vector<FinFunction>>(nm, std::vector<FinFunction>(nc)));
  P.actB.assign(C->n_mor(), std::vector<std::vector<FinFunction>>(nm, std::vector<FinFunction>(nc)));
  for (int f = 0; f < C->n_mor(); ++f)
    for (int x = 0; x < nm; ++x) {
      for (int b = 0; b < nc; ++b) {
        P.actA[f][x][b].src_size = P.value[x][C->tgt(f)][b].size();
        P.actA[f][x][b].tgt_size = P.value[x][C->src(f)][b].size();
        P.actA[f][x][b].map.assign(P.actA[f][x][b].src_size, -1);
      }
      for (int a = 0; a < nc; ++a) {
        P.actB[f][x][a].src_size = P.value[x][a][C->src(f)].size();
        P.actB[f][x][a].tgt_size = P.value[x][a][C->tgt(f)].size();
        P.actB[f][x][a].map.assign(P.actB[f][x][a].src_size, -1);
      }
    }
  for (auto f = j.at("actA").begin(); f != j.at("actA").end(); ++f) {
    int fi = need_mor(*C, f.key());
    for (auto x = f.value().begin(); x != f.value().end(); ++x) {
      int xi = need_obj(MC, x.key());
      for (auto b = x.value().begin(); b != x.value().end(); ++b) {
        int bi = need_obj(*C, b.key());
        for (auto e = b.value().begin(); e != b.value().end(); ++e) {
          int from = P.value[xi][C->tgt(fi)][bi].index_of(e.key());
          int to = P.value[xi][C->src(fi)][bi].index_of(e.value().get<std::string>());
          if (from < 0 || to < 0) bad("actA references unknown elements");
          P.actA[fi][xi][bi].map[from] = to;
        }
      }
    }
  }
  for (auto f = j.at("actB").begin(); f != j.at("actB").end(); ++f) {
    int fi = need_mor(*C, f.key());
    for (auto x = f.value().begin(); x != f.value().end(); ++x) {
      int xi = need_obj(MC, x.key());
      for (auto a = x.value().begin(); a != x.value().end(); ++a) {
        int ai = need_obj(*C, a.key());
        for (auto e = a.value().begin(); e != a.value().end(); ++e) {
          int from = P.value[xi][ai][C->src(fi)].index_of(e.key());
          int to = P.value[xi][ai][C->tgt(fi)].index_of(e.value().get<std::string>());
          if (from < 0 || to < 0) bad("actB references unknown elements");
          P.actB[fi][xi][ai].map[from] = to;
        }
      }
    }
  }
  P.unit.assign(nc, -1);
  for (auto c = j.at("unit").begin(); c != j.at("unit").end(); ++c) {
    int ci = need_obj(*C, c.key());
    P.unit[ci] = P.value[M->unit][ci][ci].index_of(c.value().get<std::string>());
    if (P.unit[ci] < 0) bad("unit references an unknown element");
  }
  P.mult.assign(nm, std::vector<std::vector<std::vector<std::vector<FinFunction>>>>(
                        nm, std::vector<std::vector<std::vector<FinFunction>>>(
                                nc, std::vector<std::vector<FinFunction>>(
                                        nc, std::vector<FinFunction>(nc)))));
  for (int Y = 0; Y < nm; ++Y)
    for (int X = 0; X < nm; ++X)
      for (int a = 0; a < nc; ++a)
        for (int b = 0; b < nc; ++b)
          for (int c = 0; c < nc; ++c) {
            auto& fn = P.mult[Y][X][a][b][c];
            fn.src_size = P.value[Y][b][c].size() * P.value[X][a][b].size();
            fn.tgt_size = P.value[M->tob(Y, X)][a][c].size();
            fn.map.assign(fn.src_size, -1);
          }
  // mult: [{"Y","X","A","B","C","y","x","equals"}]
  for (const auto& e : j.at("mult")) {
    int Y = need_obj(MC, e.at("Y").get<std::string>());
    int X = need_obj(MC, e.at("X").get<std::string>());
    int a = need_obj(*C, e.at("A").get<std::string>());
    int b = need_obj(*C, e.at("B").get<std::string>());
    int c = need_obj(*C, e.at("C").get<std::string>());
    int y = P.value[Y][b][c].index_of(e.at("y").get<std::string>());
    int x = P.value[X][a][b].index_of(e.at("x").get<std::string>());
    int eq = P.value[M->tob(Y, X)][a][c].index_of(e.at("equals").get<std::string>());
    if (y < 0 || x < 0 || eq < 0) bad("mult entry references unknown elements");
    P.mult[Y][X][a][b][c].map[y * P.value[X][a][b].size() + x] = eq;
  }
  for (auto& l1 : P.mult)
    for (auto& l2 : l1)
      for (auto& l3 : l2)
        for (auto& l4 : l3)
          for (auto& fn : l4)
            for (int v : fn.map)
              if (v < 0) bad("mult is not total");
  return P;
}

HatTheory hattheory_from_json(const Json& j, MonPtr M) {
  HatTheory P;
  P.M = M;
  const auto& MC = *M->cat;
  int nm = MC.n_obj();
  P.value.resize(nm);
  for (auto x = j.at("value").begin(); x != j.at("value").end(); ++x) {
    int xi = need_obj(MC, x.key());
    for (const auto& e : x.value()) P.value[xi].elems.push_back(e.get<std::string>());
  }
  P.action.resize(MC.n_mor());
  for (int u = 0; u < MC.n_mor(); ++u) {
    P.action[u].src_size = P.value[MC.tgt(u)].size();
    P.action[u].tgt_size = P.value[MC.src(u)].size();
    P.action[u].map.assign(P.action[u].src_size, -1);
  }
  for (auto u = j.at("action").begin(); u != j.at("action").end(); ++u) {
    int ui = need_mor(MC, u.key());
    for (auto e = u.value().begin(); e != u.value().end(); ++e) {
      int from = P.value[MC.tgt(ui)].index_of(e.key());
      int to = P.value[MC.src(ui)].index_of(e.value().get<std::string>());
      if (from < 0 || to < 0) bad("hat action references unknown elements");
      P.action[ui].map[from] = to;
    }
  }
  P.unit_elt = P.value[M->unit].index_of(j.at("unit").get<std::string>());
  if (P.unit_elt < 0) bad("hat unit references an unknown element");
  P.mult.assign(nm, std::vector<FinFunction>(nm));
  for (int X = 0; X < nm; ++X)
    for (int Y = 0; Y < nm; ++Y) {
      auto& fn = P.mult[X][Y];
      fn.src_size = P.value[Y].size() * P.value[X].size();
      fn.tgt_size = P.value[M->tob(Y, X)].size();
      fn.map.assign(fn.src_size, -1);
    }
  for (const auto& e : j.at("mult")) {
    int X = need_obj(MC, e.at("X").get<std::string>());
    int Y = need_obj(MC, e.at("Y").get<std::string>());
    int y = P.value[Y].index_of(e.at("y").get<std::string>());
    int x = P.value[X].index_of(e.at("x").get<std::string>());
    int eq = P.value[M->tob(Y, X)].index_of(e.at("equals").get<std::string>());
    if (y < 0 || x < 0 || eq < 0) bad("hat mult references unknown elements");
    P.mult[X][Y].map[y * P.value[X].size() + x] = eq;
  }
  for (auto& row : P.mult)
    for (auto& fn : row)
      for (int v : fn.map)
        if (v < 0) bad("hat mult is not total");
  return P;
}

Json report_to_json(const Report& r) {
  Json j;
  j["verdict"] = r.verdict == Verdict::pass ? "pass"
                 : r.verdict == Verdict::fail ? "fail"
                                              : "input-error";
  j["witnesses"] = Json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back({{"law", w.law}, {"detail", w.detail}});
  return j;
}

std::string report_to_text(const Report& r) { return r.to_text(); }

}  // namespace catalg
