#pragma once

// Finite categories given by explicit tables, functors and natural
// transformations between them, finite limits found by exhaustive search,
// and the end/coend kernel used by every other component.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace catalg {

// ---------------------------------------------------------------------------
// Reports

struct Witness {
  std::string law;     // which law or condition failed
  std::string detail;  // the offending instance, rendered
};

enum class Verdict { pass, fail, input_error };

struct Report {
  Verdict verdict = Verdict::pass;
  std::vector<Witness> witnesses;

  bool ok() const { return verdict == Verdict::pass; }
  void fail(std::string law, std::string detail) {
    verdict = Verdict::fail;
    witnesses.push_back({std::move(law), std::move(detail)});
  }
  void input_error(std::string law, std::string detail) {
    verdict = Verdict::input_error;
    witnesses.push_back({std::move(law), std::move(detail)});
  }
  // Merge another report, keeping the worst verdict.
  void absorb(const Report& r);
  std::string to_text() const;
};

// ---------------------------------------------------------------------------
// Finite categories

struct Mor {
  std::string id;
  int src = -1;
  int tgt = -1;
};

class FinCategory {
 public:
  std::string name;
  std::vector<std::string> objects;
  std::vector<Mor> morphisms;
  std::vector<int> identity;                     // object -> morphism
  std::vector<std::vector<int>> compose_table;   // [g][f] = g after f, -1 if not composable

  int n_obj() const { return static_cast<int>(objects.size()); }
  int n_mor() const { return static_cast<int>(morphisms.size()); }

  bool composable(int g, int f) const {
    return morphisms[f].tgt == morphisms[g].src;
  }
  int compose(int g, int f) const;     // asserts composable
  int id_of(int obj) const { return identity[obj]; }
  int src(int m) const { return morphisms[m].src; }
  int tgt(int m) const { return morphisms[m].tgt; }

  // Morphisms a -> b in morphism-index order.
  std::vector<int> hom(int a, int b) const;

  int object_index(const std::string& id) const;    // -1 if absent
  int morphism_index(const std::string& id) const;  // -1 if absent

  bool is_iso(int m) const;
  std::optional<int> inverse(int m) const;
};

using CatPtr = std::shared_ptr<const FinCategory>;

// Structural validation: ids well formed and unique, tables total and typed.
// Law violations (identity, associativity) are reported as `fail`;
// malformed tables as `input_error`.
Report validate_category(const FinCategory& C);

FinCategory opposite_category(const FinCategory& C);
FinCategory product_category(const FinCategory& C, const FinCategory& D);

// Object/morphism index pairing used by product_category (row-major: C major).
inline int product_obj(const FinCategory& D, int c, int d) { return c * D.n_obj() + d; }
inline int product_mor(const FinCategory& D, int f, int g) { return f * D.n_mor() + g; }

FinCategory terminal_category();
FinCategory walking_arrow_category();
FinCategory empty_category();
// Chain poset 0 <= 1 <= ... <= n-1 with n objects.
FinCategory chain_category(int n);

// ---------------------------------------------------------------------------
// Functors and natural transformations

struct FinFunctor {
  CatPtr source;
  CatPtr target;
  std::vector<int> on_obj;
  std::vector<int> on_mor;

  int ob(int c) const { return on_obj[c]; }
  int mor(int f) const { return on_mor[f]; }
};

Report validate_functor(const FinFunctor& F);
FinFunctor identity_functor(CatPtr C);
FinFunctor compose_functors(const FinFunctor& G, const FinFunctor& F);  // G after F
// The unique functor C -> 1.
FinFunctor bang_functor(CatPtr C, CatPtr terminal);
// The functor 1 -> C picking the object c.
FinFunctor name_functor(CatPtr terminal, CatPtr C, int c);
bool same_functor(const FinFunctor& F, const FinFunctor& G);

struct NatTransform {
  FinFunctor source;
  FinFunctor target;
  std::vector<int> comp;  // object of source category -> morphism of target category

  int at(int c) const { return comp[c]; }
};

Report validate_nat(const NatTransform& t);
NatTransform identity_nat(const FinFunctor& F);
NatTransform vcompose_nats(const NatTransform& s, const NatTransform& t);  // s after t
// Horizontal composition: (s * t) : G∘F => G'∘F' for t : F=>F', s : G=>G'.
NatTransform hcompose_nats(const NatTransform& s, const NatTransform& t);
NatTransform whisker_left(const FinFunctor& G, const NatTransform& t);   // G t
NatTransform whisker_right(const NatTransform& s, const FinFunctor& F);  // s F
bool same_nat(const NatTransform& a, const NatTransform& b);

// ---------------------------------------------------------------------------
// Finite sets and functions between them

struct FinSetObj {
  std::vector<std::string> elems;
  int size() const { return static_cast<int>(elems.size()); }
  int index_of(const std::string& id) const;
};

struct FinFunction {
  int src_size = 0;
  int tgt_size = 0;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
};

Report validate_function(const FinFunction& f);
FinFunction identity_function(int n);
FinFunction compose_functions(const FinFunction& g, const FinFunction& f);
bool is_bijection(const FinFunction& f);

// ---------------------------------------------------------------------------
// Bi-diagrams (set-valued bifunctors shape^op x shape -> Set) and the
// end/coend kernel.

struct BiDiagram {
  CatPtr shape;
  // value[b][a] = D(b, a); the first index is the contravariant slot.
  std::vector<std::vector<FinSetObj>> value;
  // left[g][a] : D(tgt g, a) -> D(src g, a)  for g in shape (contravariant).
  std::vector<std::vector<FinFunction>> left;
  // right[f][b] : D(b, src f) -> D(b, tgt f)  for f in shape (covariant).
  std::vector<std::vector<FinFunction>> right;

  const FinSetObj& at(int b, int a) const { return value[b][a]; }
};

Report validate_bidiagram(const BiDiagram& D);

// Hom bifunctor of C as a BiDiagram: D(b,a) = C(b,a).
BiDiagram hom_bidiagram(CatPtr C);

struct CoendResult {
  FinSetObj set;                       // classes, canonically named
  std::vector<FinFunction> proj;       // D(c,c) -> set, per object c
  // class_rep[k] = (object c, element index in D(c,c)) of the least representative
  std::vector<std::pair<int, int>> class_rep;
};

// Coequalizer of  ⨿_{f:c->c'} D(c',c) ⇉ ⨿_c D(c,c); classes are named by the
// least (object id, element id) pair in lexicographic order.
CoendResult coend(const BiDiagram& D);

struct EndResult {
  FinSetObj set;                       // natural families, lexicographic
  std::vector<FinFunction> proj;       // set -> D(c,c), per object c
  // family[k][c] = element index of the k-th family at object c
  std::vector<std::vector<int>> family;
};

// Subset of Π_c D(c,c) cut out by D(f,c')(x_{c'}) = D(c,f)(x_c).
EndResult end(const BiDiagram& D);

// A morphism of BiDiagrams over the same shape: components D(b,a) -> E(b,a).
struct BiDiagramMap {
  std::vector<std::vector<FinFunction>> comp;
};
Report validate_bidiagram_map(const BiDiagram& D, const BiDiagram& E, const BiDiagramMap& m);
// Induced maps between coends/ends, commuting with the projections.
FinFunction coend_map(const BiDiagram& D, const BiDiagram& E, const BiDiagramMap& m,
                      const CoendResult& cD, const CoendResult& cE);
FinFunction end_map(const BiDiagram& D, const BiDiagram& E, const BiDiagramMap& m,
                    const EndResult& eD, const EndResult& eE);

// ---------------------------------------------------------------------------
// Finite limits by exhaustive search

// A cone over a diagram D : shape -> C with the given apex.
struct Cone {
  int apex = -1;
  std::vector<int> legs;  // per shape object, a morphism apex -> D(s)
};

struct LimitWitness {
  Cone cone;
  // Mediating morphism tables are recomputed on demand via `mediate`.
};

bool cone_commutes(const FinCategory& C, const FinFunctor& D, const Cone& cone);
// Exhaustive search for a limit; ties broken by least apex object id,
// then least leg tuple in lexicographic morphism order.
std::optional<LimitWitness> limit(const FinCategory& C, const FinFunctor& D);
// The unique factorization of `cone` through the limit, if the witness is
// one (always succeeds for witnesses returned by `limit`).
std::optional<int> mediate_cone(const FinCategory& C, const FinFunctor& D,
                                const LimitWitness& w, const Cone& cone);
// Check the universal property of an arbitrary candidate against every cone.
bool is_limit(const FinCategory& C, const FinFunctor& D, const Cone& cand);

struct PowerWitness {
  int power = -1;               // the object A^n
  std::vector<int> projections; // n morphisms A^n -> A
  // pairing of a tuple (X -> A)^n is computed by exhaustive mediation
};

// n-th power of A, or nullopt with the reason left to the caller.
std::optional<PowerWitness> finite_power(const FinCategory& C, int A, int n);
std::optional<int> power_pair(const FinCategory& C, const PowerWitness& w,
                              int X, const std::vector<int>& tuple);

struct PullbackWitness {
  int apex = -1;
  int to_x = -1;  // apex -> X
  int to_y = -1;  // apex -> Y
};

std::optional<PullbackWitness> pullback(const FinCategory& C, int f, int g);  // f : X->Z, g : Y->Z
std::optional<int> pullback_pair(const FinCategory& C, int f, int g,
                                 const PullbackWitness& w, int u, int v);
// Check whether the commuting square (p : W->X, q : W->Y) over (f,g) is a pullback.
bool is_pullback_square(const FinCategory& C, int f, int g, int W, int p, int q);

std::optional<int> terminal_object(const FinCategory& C);

// ---------------------------------------------------------------------------
// Functor categories

struct FunctorCategory {
  CatPtr cat;                          // the category [C, D]
  std::vector<FinFunctor> functor_of;  // object index -> functor
  std::vector<NatTransform> nat_of;    // morphism index -> natural transformation
  int index_of_functor(const FinFunctor& F) const;
  int index_of_nat(const NatTransform& t) const;
};

// All functors C -> D and all natural transformations, enumerated
// exhaustively in lexicographic table order. Rejects inputs whose functor
// count would exceed `ceiling` (default 1e5).
struct SizeCeilingError {
  std::string what;
};
FunctorCategory functor_category(CatPtr C, CatPtr D, std::int64_t ceiling = 100000);

// Number of functors C -> D without materializing them (cheap upper bound
// used for the ceiling check is the exact count of object assignments).
std::int64_t functor_count_bound(const FinCategory& C, const FinCategory& D);

// ---------------------------------------------------------------------------
// Misc helpers

std::string canonical_pair_id(const std::string& a, const std::string& b);
std::vector<std::vector<int>> all_tuples(int arity, int base);  // lexicographic

}  // namespace catalg
