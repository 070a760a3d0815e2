#include "catalg/graded.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace catalg {

// ---------------------------------------------------------------------------
// Permutation helpers

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int permutation_index(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  int rank = 0;
  std::vector<int> factorial(n + 1, 1);
  for (int i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * i;
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = 0; j < perm[i]; ++j)
      if (!used[j]) ++smaller;
    rank += smaller * factorial[n - 1 - i];
    used[perm[i]] = true;
  }
  return rank;
}

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(b.size());
  for (size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

std::vector<int> invert_perm(const std::vector<int>& a) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<int>(i);
  return out;
}

std::vector<int> block_sum_perm(const std::vector<std::vector<int>>& parts) {
  std::vector<int> out;
  int off = 0;
  for (const auto& p : parts) {
    for (int v : p) out.push_back(off + v);
    off += static_cast<int>(p.size());
  }
  return out;
}

std::vector<int> block_permutation(const std::vector<int>& tau, const std::vector<int>& sizes) {
  int k = static_cast<int>(tau.size());
  std::vector<int> tgt_off(k, 0);
  for (int i = 1; i < k; ++i) tgt_off[i] = tgt_off[i - 1] + sizes[i - 1];
  std::vector<int> out;
  for (int i = 0; i < k; ++i) {
    int b = tau[i];
    for (int j = 0; j < sizes[b]; ++j) out.push_back(tgt_off[b] + j);
  }
  return out;
}

std::vector<std::vector<int>> compositions_of(int sum, int length, int cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(length, 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == length) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    for (int v = 0; v <= std::min(rem, cap); ++v) {
      cur[pos] = v;
      rec(pos + 1, rem - v);
    }
  };
  rec(0, sum);
  return out;
}

int tuple_index(const std::vector<int>& t, int base) {
  int idx = 0;
  for (int v : t) idx = idx * base + v;
  return idx;
}

// Enumerate all index tuples of the given per-slot sizes (big-endian
// lexicographic, last index fastest). Invokes fn on each tuple.
namespace {
template <typename Fn>
void for_each_mixed_tuple(const std::vector<int>& sizes, Fn&& fn) {
  int k = static_cast<int>(sizes.size());
  for (int s : sizes)
    if (s == 0) return;
  std::vector<int> t(k, 0);
  while (true) {
    fn(t);
    int i = k - 1;
    while (i >= 0 && t[i] + 1 == sizes[i]) {
      t[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++t[i];
  }
}

std::int64_t int_pow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}
}  // namespace

// ---------------------------------------------------------------------------
// TruncGradedSet

const FinFunction& TruncGradedSet::sym_action(int n, const std::vector<int>& perm) const {
  return sym[n][permutation_index(perm)];
}

const FinFunction& TruncGradedSet::f_action(int m, int n, const std::vector<int>& u) const {
  return f_act[m][n][tuple_index(u, n)];
}

Report validate_graded(const TruncGradedSet& X) {
  Report rep;
  if (static_cast<int>(X.level.size()) != X.K + 1) {
    rep.input_error("graded-levels", "level count mismatch");
    return rep;
  }
  if (X.kind == GradedKind::P) {
    if (static_cast<int>(X.sym.size()) != X.K + 1) {
      rep.input_error("graded-sym", "sym action table missing");
      return rep;
    }
    for (int n = 0; n <= X.K; ++n) {
      auto perms = all_permutations(n);
      if (X.sym[n].size() != perms.size()) {
        rep.input_error("graded-sym", "sym table at level " + std::to_string(n));
        return rep;
      }
      std::vector<int> idp(n);
      std::iota(idp.begin(), idp.end(), 0);
      if (X.sym[n][permutation_index(idp)].map != identity_function(X.level[n].size()).map)
        rep.fail("sym-identity", "level " + std::to_string(n));
      for (const auto& a : perms)
        for (const auto& b : perms) {
          auto ab = compose_perm(a, b);
          auto lhs = X.sym[n][permutation_index(ab)];
          auto rhs =
              compose_functions(X.sym[n][permutation_index(a)], X.sym[n][permutation_index(b)]);
          if (lhs.map != rhs.map) rep.fail("sym-functoriality", "level " + std::to_string(n));
        }
    }
  }
  if (X.kind == GradedKind::F) {
    if (static_cast<int>(X.f_act.size()) != X.K + 1) {
      rep.input_error("graded-f", "action table missing");
      return rep;
    }
    for (int n = 0; n <= X.K; ++n) {
      std::vector<int> idt(n);
      std::iota(idt.begin(), idt.end(), 0);
      if (X.f_act[n][n][tuple_index(idt, std::max(1, n))].map !=
          identity_function(X.level[n].size()).map)
        rep.fail("f-identity", "level " + std::to_string(n));
    }
    for (int m = 0; m <= X.K; ++m)
      for (int n = 0; n <= X.K; ++n)
        for (const auto& u : all_tuples(m, n))
          for (int l = 0; l <= X.K; ++l)
            for (const auto& v : all_tuples(n, l)) {
              std::vector<int> vu(m);
              for (int i = 0; i < m; ++i) vu[i] = v[u[i]];
              auto lhs = X.f_action(m, l, vu);
              auto rhs = compose_functions(X.f_action(n, l, v), X.f_action(m, n, u));
              if (lhs.map != rhs.map)
                rep.fail("f-functoriality",
                         std::to_string(m) + "->" + std::to_string(n) + "->" + std::to_string(l));
            }
  }
  return rep;
}

TruncGradedSet graded_unit(GradedKind kind, int K) {
  TruncGradedSet I;
  I.kind = kind;
  I.K = K;
  I.level.resize(K + 1);
  switch (kind) {
    case GradedKind::N:
      if (K >= 1) I.level[1].elems = {"*"};
      break;
    case GradedKind::P: {
      if (K >= 1) I.level[1].elems = {"*"};
      I.sym.resize(K + 1);
      for (int n = 0; n <= K; ++n) {
        auto perms = all_permutations(n);
        I.sym[n].assign(perms.size(), identity_function(I.level[n].size()));
      }
      break;
    }
    case GradedKind::F: {
      for (int n = 0; n <= K; ++n)
        for (int i = 0; i < n; ++i) I.level[n].elems.push_back("<" + std::to_string(i + 1) + ">");
      I.f_act.assign(K + 1, std::vector<std::vector<FinFunction>>(K + 1));
      for (int m = 0; m <= K; ++m)
        for (int n = 0; n <= K; ++n)
          for (const auto& u : all_tuples(m, n)) {
            FinFunction fn;
            fn.src_size = m;
            fn.tgt_size = n;
            fn.map = u;
            I.f_act[m][n].push_back(fn);
          }
      break;
    }
  }
  return I;
}

FinCategory index_category(GradedKind kind, int K) {
  FinCategory C;
  C.name = (kind == GradedKind::N ? "N" : kind == GradedKind::P ? "P" : "F");
  C.name += "<=" + std::to_string(K);
  for (int n = 0; n <= K; ++n) C.objects.push_back("[" + std::to_string(n) + "]");
  std::vector<std::vector<int>> tables;
  for (int m = 0; m <= K; ++m)
    for (int n = 0; n <= K; ++n) {
      if (kind != GradedKind::F && m != n) continue;
      for (const auto& t : all_tuples(m, n)) {
        bool keep = true;
        if (kind != GradedKind::F) {
          std::vector<bool> hit(n, false);
          for (int v : t) {
            if (hit[v]) keep = false;
            hit[v] = true;
          }
          if (kind == GradedKind::N)
            for (int i = 0; i < m; ++i)
              if (t[i] != i) keep = false;
        }
        if (!keep) continue;
        Mor mor;
        std::string id = "u" + std::to_string(m) + ">" + std::to_string(n) + "[";
        for (size_t i = 0; i < t.size(); ++i) {
          if (i) id += ",";
          id += std::to_string(t[i] + 1);
        }
        id += "]";
        mor.id = id;
        mor.src = m;
        mor.tgt = n;
        C.morphisms.push_back(mor);
        tables.push_back(t);
      }
    }
  C.identity.assign(C.n_obj(), -1);
  for (int m = 0; m < C.n_mor(); ++m) {
    if (C.src(m) != C.tgt(m)) continue;
    bool is_id = true;
    for (size_t i = 0; i < tables[m].size(); ++i)
      if (tables[m][i] != static_cast<int>(i)) is_id = false;
    if (is_id) C.identity[C.src(m)] = m;
  }
  C.compose_table.assign(C.n_mor(), std::vector<int>(C.n_mor(), -1));
  for (int g = 0; g < C.n_mor(); ++g)
    for (int f = 0; f < C.n_mor(); ++f) {
      if (!C.composable(g, f)) continue;
      std::vector<int> t(tables[f].size());
      for (size_t i = 0; i < t.size(); ++i) t[i] = tables[g][tables[f][i]];
      for (int r = 0; r < C.n_mor(); ++r)
        if (C.src(r) == C.src(f) && C.tgt(r) == C.tgt(g) && tables[r] == t) {
          C.compose_table[g][f] = r;
          break;
        }
    }
  return C;
}

// ---------------------------------------------------------------------------
// Substitution tensors

namespace {

struct KeyUnionFind {
  std::map<std::vector<int>, int> id_of;
  std::vector<std::vector<int>> key_of;
  std::vector<int> parent;
  int add(const std::vector<int>& key) {
    auto it = id_of.find(key);
    if (it != id_of.end()) return it->second;
    int id = static_cast<int>(key_of.size());
    id_of[key] = id;
    key_of.push_back(key);
    parent.push_back(id);
    return id;
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
  // canonical classes ordered by least key; returns class per generator
  std::pair<std::vector<std::vector<int>>, std::vector<int>> classes() {
    std::map<int, std::vector<int>> best;
    for (size_t g = 0; g < key_of.size(); ++g) {
      int r = find(static_cast<int>(g));
      auto it = best.find(r);
      if (it == best.end() || key_of[g] < it->second) best[r] = key_of[g];
    }
    std::vector<std::pair<std::vector<int>, int>> ordered;
    for (auto& [r, key] : best) ordered.push_back({key, r});
    std::sort(ordered.begin(), ordered.end());
    std::map<int, int> cls;
    std::vector<std::vector<int>> reps;
    for (auto& [key, r] : ordered) {
      cls[r] = static_cast<int>(reps.size());
      reps.push_back(key);
    }
    std::vector<int> gen_cls(key_of.size());
    for (size_t g = 0; g < key_of.size(); ++g) gen_cls[g] = cls[find(static_cast<int>(g))];
    return {reps, gen_cls};
  }
};

std::string render_key_n(const TruncGradedSet& Y, const TruncGradedSet& X,
                         const std::vector<int>& key) {
  int k = key[0];
  std::ostringstream os;
  os << Y.level[k].elems[key[1 + k]] << "(";
  for (int i = 0; i < k; ++i) {
    if (i) os << ",";
    os << X.level[key[1 + i]].elems[key[2 + k + i]];
  }
  os << ")";
  return os.str();
}

std::string render_key_f(const TruncGradedSet& Y, const TruncGradedSet& X, int n,
                         const std::vector<int>& key) {
  int k = key[0];
  std::ostringstream os;
  os << Y.level[k].elems[key[1]] << "(";
  for (int i = 0; i < k; ++i) {
    if (i) os << ",";
    os << X.level[n].elems[key[2 + i]];
  }
  os << ")";
  return os.str();
}

std::string render_key_p(const TruncGradedSet& Y, const TruncGradedSet& X,
                         const std::vector<int>& key) {
  int k = key[0];
  int n = 0;
  for (int i = 0; i < k; ++i) n += key[1 + i];
  auto perms = all_permutations(n);
  std::ostringstream os;
  os << "s[";
  const auto& sigma = perms[key[1 + k]];
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (i) os << ",";
    os << sigma[i] + 1;
  }
  os << "]" << Y.level[k].elems[key[2 + k]] << "(";
  for (int i = 0; i < k; ++i) {
    if (i) os << ",";
    os << X.level[key[1 + i]].elems[key[3 + k + i]];
  }
  os << ")";
  return os.str();
}

}  // namespace

int SubstTensor::class_of_key(int n, const std::vector<int>& key) const {
  for (size_t g = 0; g < gen_key[n].size(); ++g)
    if (gen_key[n][g] == key) return gen_class[n][g];
  return -1;
}

SubstTensor subst_tensor(GradedKind kind, int K, const TruncGradedSet& Y,
                         const TruncGradedSet& X) {
  SubstTensor out;
  out.set.kind = kind;
  out.set.K = K;
  out.set.level.resize(K + 1);
  out.gen_key.resize(K + 1);
  out.gen_class.resize(K + 1);

  if (kind == GradedKind::N) {
    for (int k = 0; k <= K && !out.lossy; ++k) {
      if (Y.level_size(k) == 0) continue;
      for (int total = K + 1; total <= k * K && !out.lossy; ++total)
        for (const auto& mvec : compositions_of(total, k, K)) {
          bool ok = true;
          for (int mi : mvec)
            if (X.level_size(mi) == 0) ok = false;
          if (ok) {
            out.lossy = true;
            break;
          }
        }
    }
    for (int n = 0; n <= K; ++n) {
      for (int k = 0; k <= K; ++k) {
        if (Y.level_size(k) == 0) continue;
        for (const auto& mvec : compositions_of(n, k, K)) {
          std::vector<int> sizes(k);
          bool ok = true;
          for (int i = 0; i < k; ++i) {
            sizes[i] = X.level_size(mvec[i]);
            if (sizes[i] == 0) ok = false;
          }
          if (!ok) continue;
          for_each_mixed_tuple(sizes, [&](const std::vector<int>& xt) {
            for (int y = 0; y < Y.level_size(k); ++y) {
              std::vector<int> key = {k};
              key.insert(key.end(), mvec.begin(), mvec.end());
              key.push_back(y);
              key.insert(key.end(), xt.begin(), xt.end());
              out.gen_key[n].push_back(key);
            }
          });
        }
      }
      std::sort(out.gen_key[n].begin(), out.gen_key[n].end());
      out.gen_class[n].resize(out.gen_key[n].size());
      for (size_t g = 0; g < out.gen_key[n].size(); ++g) {
        out.gen_class[n][g] = static_cast<int>(g);
        out.set.level[n].elems.push_back(render_key_n(Y, X, out.gen_key[n][g]));
      }
    }
    return out;
  }

  if (kind == GradedKind::F) {
    for (int n = 0; n <= K; ++n) {
      KeyUnionFind uf;
      int xn = X.level_size(n);
      for (int k = 0; k <= K; ++k)
        for (int y = 0; y < Y.level_size(k); ++y)
          for (const auto& t : all_tuples(k, xn)) {
            std::vector<int> key = {k, y};
            key.insert(key.end(), t.begin(), t.end());
            uf.add(key);
          }
      for (int a = 0; a <= K; ++a) {
        if (Y.level_size(a) == 0) continue;
        for (int ap = 0; ap <= K; ++ap)
          for (const auto& u : all_tuples(a, ap))
            for (int y = 0; y < Y.level_size(a); ++y) {
              int yu = Y.f_action(a, ap, u).map[y];
              for (const auto& tp : all_tuples(ap, xn)) {
                std::vector<int> lhs = {ap, yu};
                lhs.insert(lhs.end(), tp.begin(), tp.end());
                std::vector<int> tu(a);
                for (int i = 0; i < a; ++i) tu[i] = tp[u[i]];
                std::vector<int> rhs = {a, y};
                rhs.insert(rhs.end(), tu.begin(), tu.end());
                uf.unite(uf.add(lhs), uf.add(rhs));
              }
            }
      }
      auto [reps, gcls] = uf.classes();
      for (const auto& key : reps)
        out.set.level[n].elems.push_back(render_key_f(Y, X, n, key));
      out.gen_key[n] = uf.key_of;
      out.gen_class[n] = gcls;
    }
    out.set.f_act.assign(K + 1, std::vector<std::vector<FinFunction>>(K + 1));
    for (int n = 0; n <= K; ++n)
      for (int np = 0; np <= K; ++np)
        for (const auto& v : all_tuples(n, np)) {
          FinFunction fn;
          fn.src_size = out.set.level[n].size();
          fn.tgt_size = out.set.level[np].size();
          fn.map.assign(fn.src_size, -1);
          for (size_t g = 0; g < out.gen_key[n].size(); ++g) {
            const auto& key = out.gen_key[n][g];
            int k = key[0];
            std::vector<int> t2(k);
            for (int i = 0; i < k; ++i) t2[i] = X.f_action(n, np, v).map[key[2 + i]];
            std::vector<int> key2 = {k, key[1]};
            key2.insert(key2.end(), t2.begin(), t2.end());
            fn.map[out.gen_class[n][g]] = out.class_of_key(np, key2);
          }
          out.set.f_act[n][np].push_back(fn);
        }
    return out;
  }

  // kind P
  for (int n = 0; n <= K; ++n) {
    KeyUnionFind uf;
    auto perms_n = all_permutations(n);
    for (int k = 0; k <= K; ++k) {
      if (Y.level_size(k) == 0) continue;
      for (const auto& mvec : compositions_of(n, k, K)) {
        std::vector<int> sizes(k);
        bool ok = true;
        for (int i = 0; i < k; ++i) {
          sizes[i] = X.level_size(mvec[i]);
          if (sizes[i] == 0) ok = false;
        }
        if (!ok) continue;
        for_each_mixed_tuple(sizes, [&](const std::vector<int>& xt) {
          for (size_t s = 0; s < perms_n.size(); ++s)
            for (int y = 0; y < Y.level_size(k); ++y) {
              std::vector<int> key = {k};
              key.insert(key.end(), mvec.begin(), mvec.end());
              key.push_back(static_cast<int>(s));
              key.push_back(y);
              key.insert(key.end(), xt.begin(), xt.end());
              uf.add(key);
            }
        });
      }
    }
    auto keys = uf.key_of;
    for (const auto& key : keys) {
      int k = key[0];
      std::vector<int> mvec(key.begin() + 1, key.begin() + 1 + k);
      int sidx = key[1 + k];
      int y = key[2 + k];
      std::vector<int> xs(key.begin() + 3 + k, key.end());
      const auto& sigma = perms_n[sidx];
      for (int slot = 0; slot < k; ++slot)
        for (const auto& u : all_permutations(mvec[slot])) {
          std::vector<std::vector<int>> parts;
          for (int i = 0; i < k; ++i) {
            if (i == slot)
              parts.push_back(u);
            else {
              std::vector<int> idp(mvec[i]);
              std::iota(idp.begin(), idp.end(), 0);
              parts.push_back(idp);
            }
          }
          auto sigma2 = compose_perm(sigma, block_sum_perm(parts));
          std::vector<int> lhs = {k};
          lhs.insert(lhs.end(), mvec.begin(), mvec.end());
          lhs.push_back(permutation_index(sigma2));
          lhs.push_back(y);
          lhs.insert(lhs.end(), xs.begin(), xs.end());
          std::vector<int> xs2 = xs;
          xs2[slot] = X.sym[mvec[slot]][permutation_index(u)].map[xs[slot]];
          std::vector<int> rhs = {k};
          rhs.insert(rhs.end(), mvec.begin(), mvec.end());
          rhs.push_back(sidx);
          rhs.push_back(y);
          rhs.insert(rhs.end(), xs2.begin(), xs2.end());
          uf.unite(uf.add(lhs), uf.add(rhs));
        }
      for (const auto& tau : all_permutations(k)) {
        int ytau = Y.sym[k][permutation_index(tau)].map[y];
        std::vector<int> lhs = {k};
        lhs.insert(lhs.end(), mvec.begin(), mvec.end());
        lhs.push_back(sidx);
        lhs.push_back(ytau);
        lhs.insert(lhs.end(), xs.begin(), xs.end());
        std::vector<int> m2(k), xs2(k);
        for (int i = 0; i < k; ++i) {
          m2[i] = mvec[tau[i]];
          xs2[i] = xs[tau[i]];
        }
        auto sigma2 = compose_perm(sigma, block_permutation(tau, mvec));
        std::vector<int> rhs = {k};
        rhs.insert(rhs.end(), m2.begin(), m2.end());
        rhs.push_back(permutation_index(sigma2));
        rhs.push_back(y);
        rhs.insert(rhs.end(), xs2.begin(), xs2.end());
        uf.unite(uf.add(lhs), uf.add(rhs));
      }
    }
    auto [reps, gcls] = uf.classes();
    for (const auto& key : reps) out.set.level[n].elems.push_back(render_key_p(Y, X, key));
    out.gen_key[n] = uf.key_of;
    out.gen_class[n] = gcls;
  }
  out.set.sym.resize(K + 1);
  for (int n = 0; n <= K; ++n) {
    auto perms_n = all_permutations(n);
    for (const auto& s0 : perms_n) {
      FinFunction fn;
      fn.src_size = out.set.level[n].size();
      fn.tgt_size = out.set.level[n].size();
      fn.map.assign(fn.src_size, -1);
      for (size_t g = 0; g < out.gen_key[n].size(); ++g) {
        const auto& key = out.gen_key[n][g];
        int k = key[0];
        auto sigma = perms_n[key[1 + k]];
        auto key2 = key;
        key2[1 + k] = permutation_index(compose_perm(s0, sigma));
        fn.map[out.gen_class[n][g]] = out.class_of_key(n, key2);
      }
      out.set.sym[n].push_back(fn);
    }
  }
  return out;
}

namespace {

TruncGradedSet truncate_graded(const TruncGradedSet& X, int K) {
  TruncGradedSet out;
  out.kind = X.kind;
  out.K = K;
  out.level.assign(X.level.begin(), X.level.begin() + K + 1);
  if (X.kind == GradedKind::P) out.sym.assign(X.sym.begin(), X.sym.begin() + K + 1);
  if (X.kind == GradedKind::F) {
    out.f_act.assign(K + 1, std::vector<std::vector<FinFunction>>(K + 1));
    for (int m = 0; m <= K; ++m)
      for (int n = 0; n <= K; ++n) out.f_act[m][n] = X.f_act[m][n];
  }
  return out;
}

}  // namespace

bool subst_component_exact(GradedKind kind, int K, const TruncGradedSet& Ybig,
                           const TruncGradedSet& Xbig, int n) {
  assert(Ybig.K >= K + 1 && Xbig.K >= K + 1);
  auto small = subst_tensor(kind, K, truncate_graded(Ybig, K), truncate_graded(Xbig, K));
  auto big = subst_tensor(kind, K + 1, truncate_graded(Ybig, K + 1), truncate_graded(Xbig, K + 1));
  if (kind == GradedKind::N) {
    auto sk = small.gen_key[n];
    auto bk = big.gen_key[n];
    std::sort(sk.begin(), sk.end());
    std::sort(bk.begin(), bk.end());
    return sk == bk;
  }
  std::map<std::vector<int>, int> big_class;
  std::map<int, bool> class_has_small;
  for (size_t g = 0; g < big.gen_key[n].size(); ++g) {
    big_class[big.gen_key[n][g]] = big.gen_class[n][g];
    if (big.gen_key[n][g][0] <= K) class_has_small[big.gen_class[n][g]] = true;
  }
  for (int c = 0; c < big.set.level[n].size(); ++c)
    if (!class_has_small.count(c)) return false;
  std::map<int, int> small_to_big, big_to_small;
  for (size_t g = 0; g < small.gen_key[n].size(); ++g) {
    auto it = big_class.find(small.gen_key[n][g]);
    if (it == big_class.end()) return false;
    int sc = small.gen_class[n][g], bc = it->second;
    auto i1 = small_to_big.find(sc);
    if (i1 == small_to_big.end())
      small_to_big[sc] = bc;
    else if (i1->second != bc)
      return false;
    auto i2 = big_to_small.find(bc);
    if (i2 == big_to_small.end())
      big_to_small[bc] = sc;
    else if (i2->second != sc)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Clones

int Clone::compose(int k, int n, int phi, const std::vector<int>& thetas) const {
  if (!comp[k][n].empty()) {
    int base = level[n].size();
    std::int64_t idx = phi * int_pow(base, k) + tuple_index(thetas, base);
    return comp[k][n][idx];
  }
  assert(lazy);
  return lazy(k, n, phi, thetas);
}

namespace {

std::int64_t comp_table_size(const std::vector<FinSetObj>& level, int k, int n) {
  std::int64_t sz = level[k].size();
  for (int i = 0; i < k; ++i) {
    sz *= level[n].size();
    if (sz > (std::int64_t(1) << 40)) return sz;
  }
  return sz;
}

Clone make_tabled_clone(int K, std::vector<FinSetObj> levels, std::vector<std::vector<int>> proj,
                        std::function<int(int, int, int, const std::vector<int>&)> comp_fn,
                        std::int64_t budget = 1 << 21) {
  Clone c;
  c.K = K;
  c.level = std::move(levels);
  c.proj = std::move(proj);
  c.comp.assign(K + 1, std::vector<std::vector<int>>(K + 1));
  bool any_lazy = false;
  for (int k = 0; k <= K; ++k)
    for (int n = 0; n <= K; ++n) {
      if (c.level[k].size() == 0) continue;
      if (k > 0 && c.level[n].size() == 0) continue;
      std::int64_t sz = comp_table_size(c.level, k, n);
      if (sz > budget) {
        any_lazy = true;
        continue;
      }
      c.comp[k][n].reserve(sz);
      for (int phi = 0; phi < c.level[k].size(); ++phi) {
        if (k == 0) {
          c.comp[k][n].push_back(comp_fn(k, n, phi, {}));
          continue;
        }
        std::vector<int> sizes(k, c.level[n].size());
        for_each_mixed_tuple(sizes, [&](const std::vector<int>& thetas) {
          c.comp[k][n].push_back(comp_fn(k, n, phi, thetas));
        });
      }
    }
  if (any_lazy) c.lazy = comp_fn;
  return c;
}

}  // namespace

Report check_clone(const Clone& c) {
  Report rep;
  int K = c.K;
  for (int n = 0; n <= K; ++n) {
    if (static_cast<int>(c.proj[n].size()) != n) {
      rep.input_error("clone-proj", "projection count at level " + std::to_string(n));
      return rep;
    }
    for (int i = 0; i < n; ++i)
      if (c.proj[n][i] < 0 || c.proj[n][i] >= c.level[n].size()) {
        rep.input_error("clone-proj", "projection out of range");
        return rep;
      }
  }
  for (int k = 0; k <= K; ++k)
    for (int n = 0; n <= K; ++n) {
      if (c.level[n].size() == 0 && k > 0) continue;
      for (int j = 0; j < k; ++j)
        for (const auto& thetas : all_tuples(k, c.level[n].size()))
          if (c.compose(k, n, c.proj[k][j], thetas) != thetas[j])
            rep.fail("CA1", "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                " j=" + std::to_string(j + 1));
    }
  for (int n = 0; n <= K; ++n)
    for (int t = 0; t < c.level[n].size(); ++t)
      if (c.compose(n, n, t, c.proj[n]) != t)
        rep.fail("CA2", "n=" + std::to_string(n) + " theta=" + c.level[n].elems[t]);
  for (int l = 0; l <= K; ++l)
    for (int k = 0; k <= K; ++k)
      for (int n = 0; n <= K; ++n) {
        if (c.level[l].size() == 0) continue;
        if (l > 0 && c.level[k].size() == 0) continue;
        if (k > 0 && c.level[n].size() == 0) continue;
        for (int psi = 0; psi < c.level[l].size(); ++psi)
          for (const auto& phis : all_tuples(l, c.level[k].size()))
            for (const auto& thetas : all_tuples(k, c.level[n].size())) {
              std::vector<int> inner(l);
              for (int i = 0; i < l; ++i) inner[i] = c.compose(k, n, phis[i], thetas);
              int lhs = c.compose(l, n, psi, inner);
              int rhs = c.compose(k, n, c.compose(l, k, psi, phis), thetas);
              if (lhs != rhs)
                rep.fail("CA3", "l=" + std::to_string(l) + " k=" + std::to_string(k) +
                                    " n=" + std::to_string(n) + " psi=" + c.level[l].elems[psi]);
            }
      }
  return rep;
}

Report check_clone_sampled(const Clone& c, std::int64_t budget_per_law) {
  Report rep;
  int K = c.K;
  auto sampled_tuples = [&](int arity, int base, std::int64_t budget) {
    std::vector<std::vector<int>> out;
    if (arity == 0) {
      out.push_back({});
      return out;
    }
    if (base == 0) return out;
    std::int64_t total = int_pow(base, arity);
    std::int64_t stride = std::max<std::int64_t>(1, total / std::max<std::int64_t>(1, budget));
    if (stride > 1 && stride % base == 0) ++stride;  // avoid sampling a coset
    for (std::int64_t idx = 0; idx < total; idx += stride) {
      std::vector<int> t(arity);
      std::int64_t v = idx;
      for (int i = arity - 1; i >= 0; --i) {
        t[i] = static_cast<int>(v % base);
        v /= base;
      }
      out.push_back(t);
    }
    return out;
  };
  for (int k = 0; k <= K; ++k)
    for (int n = 0; n <= K; ++n) {
      if (c.level[n].size() == 0 && k > 0) continue;
      auto tuples = sampled_tuples(k, c.level[n].size(),
                                   budget_per_law / std::max(1, k * c.level[k].size()));
      for (int j = 0; j < k; ++j)
        for (const auto& thetas : tuples)
          if (c.compose(k, n, c.proj[k][j], thetas) != thetas[j])
            rep.fail("CA1", "k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  for (int n = 0; n <= K; ++n)
    for (int t = 0; t < c.level[n].size(); ++t)
      if (c.compose(n, n, t, c.proj[n]) != t) rep.fail("CA2", "n=" + std::to_string(n));
  for (int l = 0; l <= K; ++l)
    for (int k = 0; k <= K; ++k)
      for (int n = 0; n <= K; ++n) {
        if (c.level[l].size() == 0) continue;
        if (l > 0 && c.level[k].size() == 0) continue;
        if (k > 0 && c.level[n].size() == 0) continue;
        auto psis = sampled_tuples(1, c.level[l].size(), 8);
        auto phis_s = sampled_tuples(l, c.level[k].size(), 8);
        auto thetas_s = sampled_tuples(k, c.level[n].size(),
                                       budget_per_law / (8 * 8 + 1));
        for (const auto& psiv : psis)
          for (const auto& phis : phis_s)
            for (const auto& thetas : thetas_s) {
              int psi = psiv[0];
              std::vector<int> inner(l);
              for (int i = 0; i < l; ++i) inner[i] = c.compose(k, n, phis[i], thetas);
              int lhs = c.compose(l, n, psi, inner);
              int rhs = c.compose(k, n, c.compose(l, k, psi, phis), thetas);
              if (lhs != rhs) rep.fail("CA3", "sampled instance");
            }
      }
  return rep;
}

Clone initial_clone(int K) {
  std::vector<FinSetObj> levels(K + 1);
  std::vector<std::vector<int>> proj(K + 1);
  for (int n = 0; n <= K; ++n)
    for (int i = 0; i < n; ++i) {
      levels[n].elems.push_back("p" + std::to_string(i + 1));
      proj[n].push_back(i);
    }
  auto comp = [](int, int, int phi, const std::vector<int>& thetas) { return thetas[phi]; };
  return make_tabled_clone(K, levels, proj, comp);
}

Clone pointed_clone(int K) {
  std::vector<FinSetObj> levels(K + 1);
  std::vector<std::vector<int>> proj(K + 1);
  for (int n = 0; n <= K; ++n) {
    for (int i = 0; i < n; ++i) {
      levels[n].elems.push_back("p" + std::to_string(i + 1));
      proj[n].push_back(i);
    }
    levels[n].elems.push_back("e");
  }
  auto comp = [](int k, int n, int phi, const std::vector<int>& thetas) {
    if (phi < k) return thetas[phi];
    return n;  // the constant at level n
  };
  return make_tabled_clone(K, levels, proj, comp);
}

Clone semilattice_clone(int K) {
  std::vector<FinSetObj> levels(K + 1);
  std::vector<std::vector<int>> proj(K + 1);
  for (int n = 0; n <= K; ++n) {
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::string id = "{";
      bool first = true;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) {
          if (!first) id += ",";
          id += std::to_string(i + 1);
          first = false;
        }
      id += "}";
      levels[n].elems.push_back(id);
    }
    for (int i = 0; i < n; ++i) proj[n].push_back((1 << i) - 1);
  }
  auto comp = [](int, int, int phi, const std::vector<int>& thetas) {
    int mask_phi = phi + 1;
    int result = 0;
    for (size_t j = 0; j < thetas.size(); ++j)
      if (mask_phi & (1 << j)) result |= thetas[j] + 1;
    return result - 1;
  };
  return make_tabled_clone(K, levels, proj, comp);
}

std::optional<Clone> end_clone(const FinCategory& C, int A, int K, std::int64_t table_budget) {
  std::vector<PowerWitness> powers(K + 1);
  for (int n = 0; n <= K; ++n) {
    auto w = finite_power(C, A, n);
    if (!w) return std::nullopt;
    powers[n] = *w;
  }
  std::vector<FinSetObj> levels(K + 1);
  std::vector<std::vector<int>> homs(K + 1);
  std::vector<std::vector<int>> proj(K + 1);
  for (int n = 0; n <= K; ++n) {
    homs[n] = C.hom(powers[n].power, A);
    for (int m : homs[n]) levels[n].elems.push_back(C.morphisms[m].id);
    for (int i = 0; i < n; ++i) {
      int idx = -1;
      for (size_t t = 0; t < homs[n].size(); ++t)
        if (homs[n][t] == powers[n].projections[i]) idx = static_cast<int>(t);
      proj[n].push_back(idx);
    }
  }
  auto Cc = std::make_shared<FinCategory>(C);
  auto pw = std::make_shared<std::vector<PowerWitness>>(powers);
  auto hm = std::make_shared<std::vector<std::vector<int>>>(homs);
  auto comp = [Cc, pw, hm](int k, int n, int phi, const std::vector<int>& thetas) {
    const auto& hn = (*hm)[n];
    const auto& hk = (*hm)[k];
    std::vector<int> tuple(k);
    for (int i = 0; i < k; ++i) tuple[i] = hn[thetas[i]];
    auto u = power_pair(*Cc, (*pw)[k], (*pw)[n].power, tuple);
    assert(u);
    int res = Cc->compose(hk[phi], *u);
    for (size_t t = 0; t < hn.size(); ++t)
      if (hn[t] == res) return static_cast<int>(t);
    return -1;
  };
  return make_tabled_clone(K, levels, proj, comp, table_budget);
}

Clone function_clone(int a, int K, std::int64_t table_budget) {
  std::vector<FinSetObj> levels(K + 1);
  std::vector<std::vector<int>> proj(K + 1);
  for (int n = 0; n <= K; ++n) {
    std::int64_t dom = int_pow(a, n);
    std::int64_t cnt = int_pow(a, static_cast<int>(dom));
    for (std::int64_t g = 0; g < cnt; ++g) {
      std::string digits(dom, '0');
      std::int64_t v = g;
      for (std::int64_t t = dom - 1; t >= 0; --t) {
        digits[t] = static_cast<char>('0' + v % a);
        v /= a;
      }
      levels[n].elems.push_back("g[" + digits + "]");
    }
    for (int i = 0; i < n; ++i) {
      std::int64_t g = 0;
      for (std::int64_t t = 0; t < dom; ++t) {
        std::int64_t v = t;
        int digit = 0;
        for (int pos = n - 1; pos >= 0; --pos) {
          if (pos == i) digit = static_cast<int>(v % a);
          v /= a;
        }
        g = g * a + digit;
      }
      proj[n].push_back(static_cast<int>(g));
    }
  }
  auto comp = [a](int k, int n, int phi, const std::vector<int>& thetas) {
    std::int64_t dom_n = int_pow(a, n);
    std::int64_t dom_k = int_pow(a, k);
    auto value_at = [a](std::int64_t g, std::int64_t dom, std::int64_t t) {
      for (std::int64_t i = dom - 1; i > t; --i) g /= a;
      return static_cast<int>(g % a);
    };
    std::int64_t result = 0;
    for (std::int64_t t = 0; t < dom_n; ++t) {
      std::int64_t inner = 0;
      for (int i = 0; i < k; ++i) inner = inner * a + value_at(thetas[i], dom_n, t);
      result = result * a + value_at(phi, dom_k, inner);
    }
    return static_cast<int>(result);
  };
  return make_tabled_clone(K, levels, proj, comp, table_budget);
}

// ---------------------------------------------------------------------------
// Operads

int NsOperad::compose(int k, const std::vector<int>& ns, int phi,
                      const std::vector<int>& thetas) const {
  std::vector<int> key = {k};
  key.insert(key.end(), ns.begin(), ns.end());
  key.push_back(phi);
  key.insert(key.end(), thetas.begin(), thetas.end());
  auto it = comp.find(key);
  assert(it != comp.end());
  return it->second;
}

namespace {

template <typename Fn>
void for_each_operad_instance(const NsOperad& T, Fn&& fn) {
  for (int k = 0; k <= T.K; ++k) {
    if (T.level[k].size() == 0) continue;
    for (int total = 0; total <= T.K; ++total)
      for (const auto& ns : compositions_of(total, k, T.K)) {
        std::vector<int> sizes(k);
        bool ok = true;
        for (int i = 0; i < k; ++i) {
          sizes[i] = T.level[ns[i]].size();
          if (sizes[i] == 0) ok = false;
        }
        if (!ok) continue;
        if (k == 0) {
          for (int phi = 0; phi < T.level[0].size(); ++phi)
            fn(0, ns, phi, std::vector<int>{}, total);
          continue;
        }
        for_each_mixed_tuple(sizes, [&](const std::vector<int>& th) {
          for (int phi = 0; phi < T.level[k].size(); ++phi) fn(k, ns, phi, th, total);
        });
      }
  }
}

}  // namespace

Report check_ns_operad(const NsOperad& T) {
  Report rep;
  if (T.K < 1 || T.unit < 0 || T.unit >= T.level[1].size()) {
    rep.input_error("operad-unit", "unit element missing");
    return rep;
  }
  std::size_t expected = 0;
  for_each_operad_instance(T, [&](int k, const std::vector<int>& ns, int phi,
                                  const std::vector<int>& th, int total) {
    ++expected;
    std::vector<int> key = {k};
    key.insert(key.end(), ns.begin(), ns.end());
    key.push_back(phi);
    key.insert(key.end(), th.begin(), th.end());
    auto it = T.comp.find(key);
    if (it == T.comp.end())
      rep.input_error("operad-comp", "missing composition instance");
    else if (it->second < 0 || it->second >= T.level[total].size())
      rep.input_error("operad-comp", "composition value out of range");
  });
  if (T.comp.size() != expected)
    rep.input_error("operad-comp", "composition family has extra entries");
  if (!rep.ok()) return rep;
  for (int n = 0; n <= T.K; ++n)
    for (int t = 0; t < T.level[n].size(); ++t)
      if (T.compose(1, {n}, T.unit, {t}) != t) rep.fail("NA1", "n=" + std::to_string(n));
  for (int n = 0; n <= T.K; ++n)
    for (int t = 0; t < T.level[n].size(); ++t) {
      std::vector<int> ones(n, 1), units(n, T.unit);
      if (T.compose(n, ones, t, units) != t) rep.fail("NA2", "n=" + std::to_string(n));
    }
  // NA3 over all in-bound double substitutions
  for_each_operad_instance(T, [&](int l, const std::vector<int>& ks, int psi,
                                  const std::vector<int>& phis, int ksum) {
    // choose arities and elements for the inner layer
    std::function<void(int, int, std::vector<std::vector<int>>&, std::vector<std::vector<int>>&)>
        rec = [&](int i, int rem, std::vector<std::vector<int>>& ns_acc,
                  std::vector<std::vector<int>>& th_acc) {
          if (i == l) {
            std::vector<int> inner(l), inner_ar(l);
            for (int i2 = 0; i2 < l; ++i2) {
              inner[i2] = T.compose(ks[i2], ns_acc[i2], phis[i2], th_acc[i2]);
              inner_ar[i2] = 0;
              for (int v : ns_acc[i2]) inner_ar[i2] += v;
            }
            int lhs = T.compose(l, inner_ar, psi, inner);
            std::vector<int> flat_ns, flat_th;
            for (int i2 = 0; i2 < l; ++i2) {
              flat_ns.insert(flat_ns.end(), ns_acc[i2].begin(), ns_acc[i2].end());
              flat_th.insert(flat_th.end(), th_acc[i2].begin(), th_acc[i2].end());
            }
            int rhs = T.compose(ksum, flat_ns, T.compose(l, ks, psi, phis), flat_th);
            if (lhs != rhs) rep.fail("NA3", "l=" + std::to_string(l));
            return;
          }
          for (int s = 0; s <= rem; ++s)
            for (const auto& nsi : compositions_of(s, ks[i], T.K)) {
              std::vector<int> sizes(ks[i]);
              bool ok = true;
              for (int j = 0; j < ks[i]; ++j) {
                sizes[j] = T.level[nsi[j]].size();
                if (sizes[j] == 0) ok = false;
              }
              if (!ok) continue;
              ns_acc[i] = nsi;
              if (ks[i] == 0) {
                th_acc[i] = {};
                rec(i + 1, rem - s, ns_acc, th_acc);
                continue;
              }
              for_each_mixed_tuple(sizes, [&](const std::vector<int>& th) {
                th_acc[i] = th;
                rec(i + 1, rem - s, ns_acc, th_acc);
              });
            }
        };
    std::vector<std::vector<int>> ns_acc(l), th_acc(l);
    rec(0, T.K, ns_acc, th_acc);
  });
  return rep;
}

Report check_sym_operad(const SymOperad& T) {
  Report rep;
  rep.absorb(check_ns_operad(T.op));
  if (!rep.ok()) return rep;
  int K = T.op.K;
  for (int n = 0; n <= K; ++n) {
    auto perms = all_permutations(n);
    if (T.sym[n].size() != perms.size()) {
      rep.input_error("sym-actions", "table at level " + std::to_string(n));
      return rep;
    }
    std::vector<int> idp(n);
    std::iota(idp.begin(), idp.end(), 0);
    if (T.sym[n][permutation_index(idp)].map != identity_function(T.op.level[n].size()).map)
      rep.fail("sym-identity", "level " + std::to_string(n));
    for (const auto& s1 : perms)
      for (const auto& s2 : perms) {
        auto lhs = T.sym[n][permutation_index(compose_perm(s1, s2))];
        auto rhs =
            compose_functions(T.sym[n][permutation_index(s1)], T.sym[n][permutation_index(s2)]);
        if (lhs.map != rhs.map) rep.fail("sym-functoriality", "level " + std::to_string(n));
      }
  }
  if (!rep.ok()) return rep;
  for_each_operad_instance(T.op, [&](int k, const std::vector<int>& ns, int phi,
                                     const std::vector<int>& th, int total) {
    int base = T.op.compose(k, ns, phi, th);
    for (int slot = 0; slot < k; ++slot)
      for (const auto& u : all_permutations(ns[slot])) {
        std::vector<int> th2 = th;
        th2[slot] = T.sym[ns[slot]][permutation_index(u)].map[th[slot]];
        std::vector<std::vector<int>> parts;
        for (int i = 0; i < k; ++i) {
          if (i == slot)
            parts.push_back(u);
          else {
            std::vector<int> idp(ns[i]);
            std::iota(idp.begin(), idp.end(), 0);
            parts.push_back(idp);
          }
        }
        int lhs = T.op.compose(k, ns, phi, th2);
        int rhs = T.sym[total][permutation_index(block_sum_perm(parts))].map[base];
        if (lhs != rhs) rep.fail("sym-equivariance-factor", "level " + std::to_string(total));
      }
    for (const auto& tau : all_permutations(k)) {
      std::vector<int> ns2(k), th2(k);
      for (int i = 0; i < k; ++i) {
        ns2[i] = ns[tau[i]];
        th2[i] = th[tau[i]];
      }
      int lhs = T.op.compose(k, ns, T.sym[k][permutation_index(tau)].map[phi], th);
      int rhs = T.sym[total][permutation_index(block_permutation(tau, ns))]
                    .map[T.op.compose(k, ns2, phi, th2)];
      if (lhs != rhs) rep.fail("sym-equivariance-block", "level " + std::to_string(total));
    }
  });
  return rep;
}

NsOperad trivial_ns_operad(int K) {
  NsOperad T;
  T.K = K;
  T.level.resize(K + 1);
  T.level[1].elems = {"id"};
  T.unit = 0;
  T.comp[{1, 1, 0, 0}] = 0;
  return T;
}

NsOperad pointed_ns_operad(int K) {
  NsOperad T;
  T.K = K;
  T.level.resize(K + 1);
  T.level[0].elems = {"e"};
  T.level[1].elems = {"id"};
  T.unit = 0;
  T.comp[{0, 0}] = 0;
  T.comp[{1, 0, 0, 0}] = 0;
  T.comp[{1, 1, 0, 0}] = 0;
  return T;
}

NsOperad end_ns_operad(const FinMonoidalCat& M, int A, int K) {
  const auto& C = *M.cat;
  NsOperad T;
  T.K = K;
  T.level.resize(K + 1);
  std::vector<std::vector<int>> homs(K + 1);
  for (int n = 0; n <= K; ++n) {
    homs[n] = C.hom(tensor_power_obj(M, A, n), A);
    for (int m : homs[n]) T.level[n].elems.push_back(C.morphisms[m].id);
  }
  T.unit = -1;
  for (size_t t = 0; t < homs[1].size(); ++t)
    if (homs[1][t] == C.id_of(A)) T.unit = static_cast<int>(t);
  assert(T.unit >= 0);
  for_each_operad_instance(
      T, [&](int k, const std::vector<int>& ns, int phi, const std::vector<int>& th, int total) {
        int r = rebracket_iso(M, A, ns);
        int folded;
        if (k == 0)
          folded = C.id_of(M.unit);
        else {
          folded = homs[ns[0]][th[0]];
          for (int i = 1; i < k; ++i) folded = M.tmor(folded, homs[ns[i]][th[i]]);
        }
        int res = C.compose(homs[k][phi], C.compose(folded, r));
        int idx = -1;
        for (size_t t = 0; t < homs[total].size(); ++t)
          if (homs[total][t] == res) idx = static_cast<int>(t);
        std::vector<int> key = {k};
        key.insert(key.end(), ns.begin(), ns.end());
        key.push_back(phi);
        key.insert(key.end(), th.begin(), th.end());
        T.comp[key] = idx;
      });
  return T;
}

// ---------------------------------------------------------------------------
// Clone correspondence

GradedTheory clone_to_theory(const Clone& c) {
  GradedTheory t;
  t.clone = c;
  t.unit_elt = c.K >= 1 ? c.proj[1][0] : -1;
  t.T.kind = GradedKind::F;
  t.T.K = c.K;
  t.T.level = c.level;
  t.T.f_act.assign(c.K + 1, std::vector<std::vector<FinFunction>>(c.K + 1));
  for (int m = 0; m <= c.K; ++m)
    for (int n = 0; n <= c.K; ++n)
      for (const auto& u : all_tuples(m, n)) {
        FinFunction fn;
        fn.src_size = c.level[m].size();
        fn.tgt_size = c.level[n].size();
        std::vector<int> picks(m);
        for (int i = 0; i < m; ++i) picks[i] = c.proj[n][u[i]];
        for (int theta = 0; theta < c.level[m].size(); ++theta)
          fn.map.push_back(c.compose(m, n, theta, picks));
        t.T.f_act[m][n].push_back(fn);
      }
  return t;
}

Clone theory_to_clone(const GradedTheory& t) {
  Clone c;
  c.K = t.T.K;
  c.level = t.T.level;
  c.proj.assign(c.K + 1, {});
  for (int n = 0; n <= c.K; ++n)
    for (int i = 0; i < n; ++i)
      c.proj[n].push_back(t.T.f_action(1, n, {i}).map[t.unit_elt]);
  c.comp = t.clone.comp;
  c.lazy = t.clone.lazy;
  return c;
}

Report check_graded_theory(const GradedTheory& t) {
  Report rep;
  rep.absorb(validate_graded(t.T));
  if (!rep.ok()) return rep;
  const auto& c = t.clone;
  auto TT = subst_tensor(GradedKind::F, t.T.K, t.T, t.T);
  for (int n = 0; n <= t.T.K; ++n) {
    std::vector<int> value_of_class(TT.set.level[n].size(), -1);
    for (size_t g = 0; g < TT.gen_key[n].size(); ++g) {
      const auto& key = TT.gen_key[n][g];
      int k = key[0];
      std::vector<int> thetas(key.begin() + 2, key.end());
      int val = c.compose(k, n, key[1], thetas);
      int cl = TT.gen_class[n][g];
      if (value_of_class[cl] >= 0 && value_of_class[cl] != val)
        rep.fail("mult-descends",
                 "level " + std::to_string(n) + " class " + TT.set.level[n].elems[cl]);
      value_of_class[cl] = val;
    }
  }
  // left unit law through I ⊗ T; exact at every bound because each generator
  // collapses to one at outer index 1
  auto I = graded_unit(GradedKind::F, t.T.K);
  auto IT = subst_tensor(GradedKind::F, t.T.K, I, t.T);
  for (int n = 0; n <= t.T.K; ++n)
    for (size_t g = 0; g < IT.gen_key[n].size(); ++g) {
      const auto& key = IT.gen_key[n][g];
      int k = key[0];
      int pick = key[1];
      std::vector<int> thetas(key.begin() + 2, key.end());
      int lam = thetas[pick];
      int mval = c.compose(k, n, c.proj[k][pick], thetas);
      if (lam != mval) rep.fail("unit-law", "level " + std::to_string(n));
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Kan transport

TruncGradedSet lan_n_to_p(const TruncGradedSet& X) {
  TruncGradedSet out;
  out.kind = GradedKind::P;
  out.K = X.K;
  out.level.resize(X.K + 1);
  out.sym.resize(X.K + 1);
  for (int n = 0; n <= X.K; ++n) {
    auto perms = all_permutations(n);
    for (size_t s = 0; s < perms.size(); ++s)
      for (int x = 0; x < X.level_size(n); ++x) {
        std::string id = "s[";
        for (size_t i = 0; i < perms[s].size(); ++i) {
          if (i) id += ",";
          id += std::to_string(perms[s][i] + 1);
        }
        id += "]" + X.level[n].elems[x];
        out.level[n].elems.push_back(id);
      }
    int xs = X.level_size(n);
    for (const auto& s0 : perms) {
      FinFunction fn;
      fn.src_size = static_cast<int>(perms.size()) * xs;
      fn.tgt_size = fn.src_size;
      fn.map.resize(fn.src_size);
      for (size_t s = 0; s < perms.size(); ++s)
        for (int x = 0; x < xs; ++x)
          fn.map[s * xs + x] = permutation_index(compose_perm(s0, perms[s])) * xs + x;
      out.sym[n].push_back(fn);
    }
  }
  return out;
}

namespace {

std::vector<int> decode_tuple(std::int64_t idx, int len, int base) {
  std::vector<int> t(len);
  for (int i = len - 1; i >= 0; --i) {
    t[i] = base > 0 ? static_cast<int>(idx % base) : 0;
    if (base > 0) idx /= base;
  }
  return t;
}

}  // namespace

TruncGradedSet lan_p_to_f(const TruncGradedSet& X) {
  TruncGradedSet out;
  out.kind = GradedKind::F;
  out.K = X.K;
  out.level.resize(X.K + 1);
  int K = X.K;
  std::vector<std::vector<std::vector<int>>> gen_key(K + 1);
  std::vector<std::vector<int>> gen_class(K + 1);
  std::vector<std::map<std::vector<int>, int>> cls_of(K + 1);
  for (int n = 0; n <= K; ++n) {
    KeyUnionFind uf;
    for (int m = 0; m <= K; ++m) {
      if (X.level_size(m) == 0) continue;
      for (const auto& u : all_tuples(m, n))
        for (int x = 0; x < X.level_size(m); ++x)
          uf.add({m, tuple_index(u, n), x});
    }
    for (int m = 0; m <= K; ++m) {
      if (X.level_size(m) == 0) continue;
      for (const auto& u : all_tuples(m, n))
        for (const auto& sigma : all_permutations(m))
          for (int x = 0; x < X.level_size(m); ++x) {
            std::vector<int> us(m);
            for (int i = 0; i < m; ++i) us[i] = u[sigma[i]];
            uf.unite(uf.add({m, tuple_index(us, n), x}),
                     uf.add({m, tuple_index(u, n),
                             X.sym[m][permutation_index(sigma)].map[x]}));
          }
    }
    auto [reps, gcls] = uf.classes();
    for (const auto& key : reps) {
      int m = key[0];
      auto u = decode_tuple(key[1], m, n);
      std::string id = "[u(";
      for (int i = 0; i < m; ++i) {
        if (i) id += ",";
        id += std::to_string(u[i] + 1);
      }
      id += ");" + X.level[m].elems[key[2]] + "]";
      out.level[n].elems.push_back(id);
    }
    gen_key[n] = uf.key_of;
    gen_class[n] = gcls;
    for (size_t g = 0; g < uf.key_of.size(); ++g) cls_of[n][uf.key_of[g]] = gcls[g];
  }
  out.f_act.assign(K + 1, std::vector<std::vector<FinFunction>>(K + 1));
  for (int n = 0; n <= K; ++n)
    for (int np = 0; np <= K; ++np)
      for (const auto& v : all_tuples(n, np)) {
        FinFunction fn;
        fn.src_size = out.level[n].size();
        fn.tgt_size = out.level[np].size();
        fn.map.assign(fn.src_size, -1);
        for (size_t g = 0; g < gen_key[n].size(); ++g) {
          const auto& key = gen_key[n][g];
          int m = key[0];
          auto u = decode_tuple(key[1], m, n);
          std::vector<int> vu(m);
          for (int i = 0; i < m; ++i) vu[i] = v[u[i]];
          fn.map[gen_class[n][g]] = cls_of[np].at({m, tuple_index(vu, np), key[2]});
        }
        out.f_act[n][np].push_back(fn);
      }
  return out;
}

SymOperad operad_to_symoperad(const NsOperad& T) {
  SymOperad out;
  out.op.K = T.K;
  out.op.level.resize(T.K + 1);
  for (int n = 0; n <= T.K; ++n) {
    auto perms = all_permutations(n);
    for (size_t s = 0; s < perms.size(); ++s)
      for (int x = 0; x < T.level[n].size(); ++x) {
        std::string id = "s[";
        for (size_t i = 0; i < perms[s].size(); ++i) {
          if (i) id += ",";
          id += std::to_string(perms[s][i] + 1);
        }
        id += "]" + T.level[n].elems[x];
        out.op.level[n].elems.push_back(id);
      }
  }
  out.op.unit = T.unit;  // (identity permutation, unit)
  auto decode = [&](int n, int flat) {
    int xs = T.level[n].size();
    return std::pair<int, int>{flat / xs, flat % xs};
  };
  for_each_operad_instance(out.op, [&](int k, const std::vector<int>& ns, int phi_flat,
                                       const std::vector<int>& th_flat, int total) {
    auto perms_k = all_permutations(k);
    auto [sidx, phi] = decode(k, phi_flat);
    const auto& sigma = perms_k[sidx];
    std::vector<int> ns_perm(k), theta_perm(k);
    std::vector<std::vector<int>> parts(k);
    for (int i = 0; i < k; ++i) {
      auto [ri, ti] = decode(ns[sigma[i]], th_flat[sigma[i]]);
      ns_perm[i] = ns[sigma[i]];
      theta_perm[i] = ti;
      parts[i] = all_permutations(ns[sigma[i]])[ri];
    }
    auto res_perm = compose_perm(block_permutation(sigma, ns), block_sum_perm(parts));
    int inner = T.compose(k, ns_perm, phi, theta_perm);
    int res = permutation_index(res_perm) * T.level[total].size() + inner;
    std::vector<int> key = {k};
    key.insert(key.end(), ns.begin(), ns.end());
    key.push_back(phi_flat);
    key.insert(key.end(), th_flat.begin(), th_flat.end());
    out.op.comp[key] = res;
  });
  out.sym.resize(T.K + 1);
  for (int n = 0; n <= T.K; ++n) {
    auto perms = all_permutations(n);
    int xs = T.level[n].size();
    for (const auto& s0 : perms) {
      FinFunction fn;
      fn.src_size = static_cast<int>(perms.size()) * xs;
      fn.tgt_size = fn.src_size;
      fn.map.resize(fn.src_size);
      for (size_t s = 0; s < perms.size(); ++s)
        for (int x = 0; x < xs; ++x)
          fn.map[s * xs + x] = permutation_index(compose_perm(s0, perms[s])) * xs + x;
      out.sym[n].push_back(fn);
    }
  }
  return out;
}

Clone operad_to_clone(const NsOperad& T) {
  int K = T.K;
  std::vector<FinSetObj> levels(K + 1);
  std::vector<std::vector<int>> proj(K + 1);
  auto keys = std::make_shared<std::vector<std::vector<std::vector<int>>>>(K + 1);
  auto index = std::make_shared<std::vector<std::map<std::vector<int>, int>>>(K + 1);
  for (int n = 0; n <= K; ++n) {
    for (int m = 0; m <= K; ++m) {
      if (T.level[m].size() == 0) continue;
      for (const auto& u : all_tuples(m, n))
        for (int x = 0; x < T.level[m].size(); ++x) {
          std::vector<int> key = {m};
          key.insert(key.end(), u.begin(), u.end());
          key.push_back(x);
          (*index)[n][key] = static_cast<int>((*keys)[n].size());
          (*keys)[n].push_back(key);
          std::string id = "[(";
          for (int i = 0; i < m; ++i) {
            if (i) id += ",";
            id += std::to_string(u[i] + 1);
          }
          id += ");" + T.level[m].elems[x] + "]";
          levels[n].elems.push_back(id);
        }
    }
    for (int i = 0; i < n; ++i) proj[n].push_back((*index)[n].at({1, i, T.unit}));
  }
  auto Tptr = std::make_shared<NsOperad>(T);
  auto comp_fn = [keys, index, Tptr](int k, int n, int phi, const std::vector<int>& thetas) {
    const auto& pk = (*keys)[k][phi];
    int a = pk[0];
    std::vector<int> u(pk.begin() + 1, pk.begin() + 1 + a);
    int x = pk[1 + a];
    std::vector<int> arities, ys, w;
    for (int i = 0; i < a; ++i) {
      const auto& tk = (*keys)[n][thetas[u[i]]];
      int b = tk[0];
      arities.push_back(b);
      ys.push_back(tk[1 + b]);
      for (int j = 0; j < b; ++j) w.push_back(tk[1 + j]);
    }
    int inner = Tptr->compose(a, arities, x, ys);
    int total = 0;
    for (int v : arities) total += v;
    std::vector<int> key = {total};
    key.insert(key.end(), w.begin(), w.end());
    key.push_back(inner);
    return (*index)[n].at(key);
  };
  return make_tabled_clone(K, levels, proj, comp_fn);
}

Clone symoperad_to_clone(const SymOperad& T) {
  int K = T.op.K;
  std::vector<FinSetObj> levels(K + 1);
  std::vector<std::vector<int>> proj(K + 1);
  auto cls = std::make_shared<std::vector<std::map<std::vector<int>, int>>>(K + 1);
  auto rep_of = std::make_shared<std::vector<std::vector<std::vector<int>>>>(K + 1);
  for (int n = 0; n <= K; ++n) {
    KeyUnionFind uf;
    for (int m = 0; m <= K; ++m) {
      if (T.op.level[m].size() == 0) continue;
      for (const auto& u : all_tuples(m, n))
        for (int x = 0; x < T.op.level[m].size(); ++x) {
          std::vector<int> key = {m};
          key.insert(key.end(), u.begin(), u.end());
          key.push_back(x);
          uf.add(key);
        }
    }
    auto snapshot = uf.key_of;
    for (const auto& key : snapshot) {
      int m = key[0];
      std::vector<int> u(key.begin() + 1, key.begin() + 1 + m);
      int x = key[1 + m];
      for (const auto& sigma : all_permutations(m)) {
        std::vector<int> us(m);
        for (int i = 0; i < m; ++i) us[i] = u[sigma[i]];
        std::vector<int> lhs = {m};
        lhs.insert(lhs.end(), us.begin(), us.end());
        lhs.push_back(x);
        std::vector<int> rhs = {m};
        rhs.insert(rhs.end(), u.begin(), u.end());
        rhs.push_back(T.sym[m][permutation_index(sigma)].map[x]);
        uf.unite(uf.add(lhs), uf.add(rhs));
      }
    }
    auto [reps, gcls] = uf.classes();
    (*rep_of)[n] = reps;
    for (const auto& key : reps) {
      int m = key[0];
      std::string id = "[(";
      for (int i = 0; i < m; ++i) {
        if (i) id += ",";
        id += std::to_string(key[1 + i] + 1);
      }
      id += ");" + T.op.level[m].elems[key[1 + m]] + "]";
      levels[n].elems.push_back(id);
    }
    for (size_t g = 0; g < uf.key_of.size(); ++g) (*cls)[n][uf.key_of[g]] = gcls[g];
    for (int i = 0; i < n; ++i) proj[n].push_back((*cls)[n].at({1, i, T.op.unit}));
  }
  auto Tp = std::make_shared<SymOperad>(T);
  auto comp_fn = [cls, rep_of, Tp](int k, int n, int phi, const std::vector<int>& thetas) {
    const auto& pk = (*rep_of)[k][phi];
    int a = pk[0];
    std::vector<int> u(pk.begin() + 1, pk.begin() + 1 + a);
    int x = pk[1 + a];
    std::vector<int> arities, ys, w;
    for (int i = 0; i < a; ++i) {
      const auto& tk = (*rep_of)[n][thetas[u[i]]];
      int b = tk[0];
      arities.push_back(b);
      ys.push_back(tk[1 + b]);
      for (int j = 0; j < b; ++j) w.push_back(tk[1 + j]);
    }
    int inner = Tp->op.compose(a, arities, x, ys);
    int total = 0;
    for (int v : arities) total += v;
    std::vector<int> key = {total};
    key.insert(key.end(), w.begin(), w.end());
    key.push_back(inner);
    return (*cls)[n].at(key);
  };
  return make_tabled_clone(K, levels, proj, comp_fn);
}

// ---------------------------------------------------------------------------
// Strong monoidality probes

Report check_lan_strong_monoidal_n_to_p(const TruncGradedSet& Y, const TruncGradedSet& X) {
  Report rep;
  int K = Y.K - 1;
  if (K < 0) {
    rep.input_error("lan-probe", "need inputs at bound >= 1");
    return rep;
  }
  auto Yk = truncate_graded(Y, K), Xk = truncate_graded(X, K);
  auto LYbig = lan_n_to_p(Y), LXbig = lan_n_to_p(X);
  auto LY = truncate_graded(LYbig, K), LX = truncate_graded(LXbig, K);
  auto lhs = subst_tensor(GradedKind::P, K, LY, LX);
  auto nx = subst_tensor(GradedKind::N, K, Yk, Xk);
  auto rhs = lan_n_to_p(nx.set);
  for (int n = 0; n <= K; ++n) {
    if (!subst_component_exact(GradedKind::P, K, LYbig, LXbig, n)) continue;
    auto perms_n = all_permutations(n);
    std::vector<bool> hit(lhs.set.level[n].size(), false);
    int hits = 0, total = 0;
    for (size_t s = 0; s < perms_n.size(); ++s)
      for (size_t g = 0; g < nx.gen_key[n].size(); ++g) {
        const auto& key = nx.gen_key[n][g];
        int k = key[0];
        std::vector<int> key2 = {k};
        for (int i = 0; i < k; ++i) key2.push_back(key[1 + i]);
        key2.push_back(static_cast<int>(s));
        key2.push_back(0 * Y.level_size(k) + key[1 + k]);
        for (int i = 0; i < k; ++i) key2.push_back(0 * X.level_size(key[1 + i]) + key[2 + k + i]);
        int cl = lhs.class_of_key(n, key2);
        ++total;
        if (cl < 0) {
          rep.fail("lan-np-map", "missing image at level " + std::to_string(n));
          continue;
        }
        if (!hit[cl]) {
          hit[cl] = true;
          ++hits;
        }
      }
    if (total != rhs.level[n].size() || hits != lhs.set.level[n].size() ||
        rhs.level[n].size() != lhs.set.level[n].size())
      rep.fail("lan-np-bijection",
               "level " + std::to_string(n) + ": " + std::to_string(rhs.level[n].size()) +
                   " vs " + std::to_string(lhs.set.level[n].size()));
  }
  return rep;
}

Report check_lan_strong_monoidal_p_to_f(const TruncGradedSet& Y, const TruncGradedSet& X) {
  Report rep;
  int K = Y.K - 1;
  if (K < 0) {
    rep.input_error("lan-probe", "need inputs at bound >= 1");
    return rep;
  }
  auto Yk = truncate_graded(Y, K), Xk = truncate_graded(X, K);
  auto LYbig = lan_p_to_f(Y), LXbig = lan_p_to_f(X);
  auto LY = truncate_graded(LYbig, K), LX = truncate_graded(LXbig, K);
  auto lhs = subst_tensor(GradedKind::F, K, LY, LX);
  auto px = subst_tensor(GradedKind::P, K, Yk, Xk);
  auto rhs = lan_p_to_f(px.set);
  for (int n = 0; n <= K; ++n) {
    bool cert_f = subst_component_exact(GradedKind::F, K, LYbig, LXbig, n);
    bool cert_p = subst_component_exact(GradedKind::P, K, Y, X, n);
    if (!cert_f || !cert_p) continue;
    if (rhs.level[n].size() != lhs.set.level[n].size())
      rep.fail("lan-pf-bijection",
               "level " + std::to_string(n) + ": " + std::to_string(rhs.level[n].size()) +
                   " vs " + std::to_string(lhs.set.level[n].size()));
  }
  return rep;
}

}  // namespace catalg
