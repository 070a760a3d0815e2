#pragma once

// Shared corpus builders and independent oracles for the test suites.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "catalg/fincat.hpp"

namespace catalg::testing {

// ---------------------------------------------------------------------------
// Categories

// Full subcategory of finite sets on the given sizes. Objects are named
// "s<size>#<i>"; morphism tables are all functions. Keep sizes small: the
// morphism count is sum over (a,b) of b^a.
struct ConcreteCat {
  FinCategory cat;
  std::vector<int> size;                 // per object
  std::vector<std::vector<int>> func;    // per morphism, the function table
};

inline ConcreteCat finset_fragment(const std::vector<int>& sizes) {
  ConcreteCat out;
  out.cat.name = "finset";
  for (size_t i = 0; i < sizes.size(); ++i) {
    out.cat.objects.push_back("s" + std::to_string(sizes[i]) + "#" + std::to_string(i));
    out.size.push_back(sizes[i]);
  }
  int n = static_cast<int>(sizes.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (const auto& t : all_tuples(sizes[a], sizes[b])) {
        Mor m;
        m.id = "f" + std::to_string(a) + ">" + std::to_string(b) + "[";
        for (size_t k = 0; k < t.size(); ++k) {
          if (k) m.id += ",";
          m.id += std::to_string(t[k]);
        }
        m.id += "]";
        m.src = a;
        m.tgt = b;
        out.cat.morphisms.push_back(m);
        out.func.push_back(t);
      }
    }
  out.cat.identity.assign(n, -1);
  for (int m = 0; m < out.cat.n_mor(); ++m) {
    if (out.cat.src(m) != out.cat.tgt(m)) continue;
    bool is_id = true;
    for (size_t k = 0; k < out.func[m].size(); ++k)
      if (out.func[m][k] != static_cast<int>(k)) is_id = false;
    if (is_id) out.cat.identity[out.cat.src(m)] = m;
  }
  int M = out.cat.n_mor();
  out.cat.compose_table.assign(M, std::vector<int>(M, -1));
  // index morphisms by (src,tgt,table) for composition lookup
  std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> lookup;
  for (int m = 0; m < M; ++m)
    lookup[{{out.cat.src(m), out.cat.tgt(m)}, out.func[m]}] = m;
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f) {
      if (!out.cat.composable(g, f)) continue;
      std::vector<int> t(out.func[f].size());
      for (size_t k = 0; k < t.size(); ++k) t[k] = out.func[g][out.func[f][k]];
      out.cat.compose_table[g][f] = lookup.at({{out.cat.src(f), out.cat.tgt(g)}, t});
    }
  return out;
}

// A finite monoid presented as a one-object category.
inline FinCategory monoid_category(const std::vector<std::vector<int>>& mult, int unit,
                                   const std::string& name = "monoid") {
  FinCategory C;
  C.name = name;
  C.objects = {"*"};
  int n = static_cast<int>(mult.size());
  for (int i = 0; i < n; ++i) C.morphisms.push_back({"m" + std::to_string(i), 0, 0});
  C.identity = {unit};
  C.compose_table.assign(n, std::vector<int>(n, -1));
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) C.compose_table[g][f] = mult[g][f];
  return C;
}

// The poset category of an arbitrary preorder matrix (le[a][b] == a <= b).
inline FinCategory poset_category(const std::vector<std::vector<bool>>& le,
                                  const std::string& name = "poset") {
  FinCategory C;
  C.name = name;
  int n = static_cast<int>(le.size());
  for (int i = 0; i < n; ++i) C.objects.push_back("p" + std::to_string(i));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (le[a][b]) C.morphisms.push_back({"le" + std::to_string(a) + "_" + std::to_string(b), a, b});
  C.identity.assign(n, -1);
  for (int m = 0; m < C.n_mor(); ++m)
    if (C.src(m) == C.tgt(m)) C.identity[C.src(m)] = m;
  C.compose_table.assign(C.n_mor(), std::vector<int>(C.n_mor(), -1));
  for (int g = 0; g < C.n_mor(); ++g)
    for (int f = 0; f < C.n_mor(); ++f)
      if (C.composable(g, f)) C.compose_table[g][f] = C.hom(C.src(f), C.tgt(g))[0];
  return C;
}

// Random poset on n elements: reflexive-transitive closure of a random DAG
// under the natural order (edges only i -> j for i < j).
inline FinCategory random_poset(int n, std::mt19937& rng) {
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < n; ++i) le[i][i] = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) le[i][j] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  return poset_category(le, "rposet");
}

// A small pool of valid categories with <= 4 objects used for randomized
// corpora: posets, cyclic monoids, an idempotent monoid, products.
inline std::vector<CatPtr> shape_pool() {
  std::vector<CatPtr> out;
  out.push_back(std::make_shared<FinCategory>(terminal_category()));
  out.push_back(std::make_shared<FinCategory>(walking_arrow_category()));
  out.push_back(std::make_shared<FinCategory>(chain_category(3)));
  // Z/2 as a one-object category
  out.push_back(std::make_shared<FinCategory>(monoid_category({{0, 1}, {1, 0}}, 0, "Z2")));
  // idempotent monoid {1, e} with e*e = e
  out.push_back(std::make_shared<FinCategory>(monoid_category({{0, 1}, {1, 1}}, 0, "idem")));
  // three-element cyclic monoid {1, a, a^2}, a^3 = a^2 (non-group)
  out.push_back(std::make_shared<FinCategory>(
      monoid_category({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, 0, "cyc3")));
  // discrete two objects
  {
    std::vector<std::vector<bool>> le = {{true, false}, {false, true}};
    out.push_back(std::make_shared<FinCategory>(poset_category(le, "disc2")));
  }
  // "vee" poset: 0 <= 1, 0 <= 2
  {
    std::vector<std::vector<bool>> le = {
        {true, true, true}, {false, true, false}, {false, false, true}};
    out.push_back(std::make_shared<FinCategory>(poset_category(le, "vee")));
  }
  // diamond lattice 0 <= a,b <= 1
  {
    std::vector<std::vector<bool>> le = {{true, true, true, true},
                                         {false, true, false, true},
                                         {false, false, true, true},
                                         {false, false, false, true}};
    out.push_back(std::make_shared<FinCategory>(poset_category(le, "diamond")));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random BiDiagrams
//
// Sums of "representable rectangles" D(b,a) = sum_i C(b, x_i) x C(y_i, a);
// functorial by construction, nontrivial actions.

inline BiDiagram representable_sum_bidiagram(CatPtr C, const std::vector<std::pair<int, int>>& pairs) {
  const auto& S = *C;
  int n = S.n_obj(), m = S.n_mor();
  BiDiagram D;
  D.shape = C;
  D.value.assign(n, std::vector<FinSetObj>(n));
  // element = (i, h : b -> x_i, k : y_i -> a), named deterministically
  struct Elem {
    int i, h, k;
  };
  std::vector<std::vector<std::vector<Elem>>> elems(n, std::vector<std::vector<Elem>>(n));
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      for (size_t i = 0; i < pairs.size(); ++i)
        for (int h : S.hom(b, pairs[i].first))
          for (int k : S.hom(pairs[i].second, a)) {
            elems[b][a].push_back({static_cast<int>(i), h, k});
            D.value[b][a].elems.push_back("e" + std::to_string(i) + "(" + S.morphisms[h].id + ";" +
                                          S.morphisms[k].id + ")");
          }
  auto index_of = [&](int b, int a, int i, int h, int k) {
    for (size_t t = 0; t < elems[b][a].size(); ++t)
      if (elems[b][a][t].i == i && elems[b][a][t].h == h && elems[b][a][t].k == k)
        return static_cast<int>(t);
    return -1;
  };
  D.left.assign(m, std::vector<FinFunction>(n));
  D.right.assign(m, std::vector<FinFunction>(n));
  for (int g = 0; g < m; ++g)
    for (int a = 0; a < n; ++a) {
      FinFunction fn;
      fn.src_size = D.value[S.tgt(g)][a].size();
      fn.tgt_size = D.value[S.src(g)][a].size();
      for (const auto& e : elems[S.tgt(g)][a])
        fn.map.push_back(index_of(S.src(g), a, e.i, S.compose(e.h, g), e.k));
      D.left[g][a] = fn;
    }
  for (int f = 0; f < m; ++f)
    for (int b = 0; b < n; ++b) {
      FinFunction fn;
      fn.src_size = D.value[b][S.src(f)].size();
      fn.tgt_size = D.value[b][S.tgt(f)].size();
      for (const auto& e : elems[b][S.src(f)])
        fn.map.push_back(index_of(b, S.tgt(f), e.i, e.h, S.compose(f, e.k)));
      D.right[f][b] = fn;
    }
  return D;
}

inline BiDiagram random_bidiagram(CatPtr C, std::mt19937& rng) {
  std::uniform_int_distribution<int> npairs(0, 3);
  std::uniform_int_distribution<int> obj(0, C->n_obj() - 1);
  int k = npairs(rng);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) pairs.push_back({obj(rng), obj(rng)});
  if (pairs.empty()) pairs.push_back({obj(rng), obj(rng)});
  return representable_sum_bidiagram(C, pairs);
}

// ---------------------------------------------------------------------------
// Independent oracles

// Naive coequalizer: collect all relation pairs on the flattened diagonal
// and close under reflexivity-symmetry-transitivity with a fixpoint loop.
// Returns the partition as class index per flattened element, classes ordered
// by least flattened index, plus the flattened offsets.
struct NaiveCoeq {
  std::vector<int> offset;     // per object
  std::vector<int> class_of;   // per flattened element
  int n_classes = 0;
};

inline NaiveCoeq naive_coequalizer(const BiDiagram& D) {
  const auto& S = *D.shape;
  int n = S.n_obj();
  NaiveCoeq out;
  out.offset.assign(n + 1, 0);
  for (int c = 0; c < n; ++c) out.offset[c + 1] = out.offset[c] + D.value[c][c].size();
  int total = out.offset[n];
  std::vector<std::vector<bool>> rel(total, std::vector<bool>(total, false));
  for (int i = 0; i < total; ++i) rel[i][i] = true;
  for (int f = 0; f < S.n_mor(); ++f) {
    int c = S.src(f), cp = S.tgt(f);
    for (int x = 0; x < D.value[cp][c].size(); ++x) {
      int u = out.offset[c] + D.left[f][c].map[x];
      int v = out.offset[cp] + D.right[f][cp].map[x];
      rel[u][v] = rel[v][u] = true;
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < total; ++i)
      for (int j = 0; j < total; ++j)
        if (rel[i][j])
          for (int k = 0; k < total; ++k)
            if (rel[j][k] && !rel[i][k]) {
              rel[i][k] = true;
              changed = true;
            }
  }
  out.class_of.assign(total, -1);
  for (int i = 0; i < total; ++i) {
    if (out.class_of[i] >= 0) continue;
    for (int j = 0; j < total; ++j)
      if (rel[i][j]) out.class_of[j] = out.n_classes;
    ++out.n_classes;
  }
  return out;
}

// Naive end: recursively extend partial families, pruning on violated
// naturality as soon as both endpoints are chosen.
inline std::vector<std::vector<int>> naive_end_families(const BiDiagram& D) {
  const auto& S = *D.shape;
  int n = S.n_obj();
  std::vector<std::vector<int>> out;
  std::vector<int> fam(n, -1);
  auto consistent = [&](int upto) {
    for (int f = 0; f < S.n_mor(); ++f) {
      int c = S.src(f), cp = S.tgt(f);
      if (c > upto || cp > upto) continue;
      if (D.right[f][c].map[fam[c]] != D.left[f][cp].map[fam[cp]]) return false;
    }
    return true;
  };
  std::function<void(int)> rec = [&](int c) {
    if (c == n) {
      out.push_back(fam);
      return;
    }
    for (int x = 0; x < D.value[c][c].size(); ++x) {
      fam[c] = x;
      if (consistent(c)) rec(c + 1);
    }
    fam[c] = -1;
  };
  rec(0);
  return out;
}

}  // namespace catalg::testing
