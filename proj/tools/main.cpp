// catalg: batch verification of finite algebraic-theory data.
//
// Entities are JSON files; commands load them, run the requested
// computation, and print a machine (json) or human (text) report.
// Exit codes: 0 pass, 1 fail (witnesses printed), 2 input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "catalg/doublecone.hpp"
#include "catalg/json_io.hpp"
#include "catalg/strsem.hpp"

using namespace catalg;
using Json = nlohmann::json;

namespace {

struct Options {
  std::string workspace = ".";
  std::string format = "text";
  int K = -1;            // override for truncation bound
  std::int64_t ceiling = 100000;
};

Options g_opt;

[[noreturn]] void die_input(const std::string& msg) {
  if (g_opt.format == "json") {
    Json j;
    j["verdict"] = "input-error";
    j["witnesses"] = Json::array({Json{{"law", "input"}, {"detail", msg}}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cerr << "input-error: " << msg << "\n";
  }
  std::exit(2);
}

Json load_json(const std::string& nameOrPath) {
  std::vector<std::string> candidates = {nameOrPath, g_opt.workspace + "/" + nameOrPath,
                                         g_opt.workspace + "/" + nameOrPath + ".json"};
  for (const auto& p : candidates) {
    std::ifstream in(p);
    if (in.good()) {
      Json j;
      try {
        in >> j;
      } catch (const std::exception& e) {
        die_input("cannot parse '" + p + "': " + e.what());
      }
      return j;
    }
  }
  die_input("cannot find entity '" + nameOrPath + "'");
}

// entity-reference fields may be inline JSON or a string naming another file
Json resolve(const Json& j) {
  if (j.is_string()) return load_json(j.get<std::string>());
  return j;
}

int finish(const Report& rep, Json extra = Json::object()) {
  if (g_opt.format == "json") {
    Json j = report_to_json(rep);
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << report_to_text(rep) << "\n";
    for (auto it = extra.begin(); it != extra.end(); ++it)
      std::cout << it.key() << ": " << it.value().dump() << "\n";
  }
  switch (rep.verdict) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::input_error: return 2;
  }
  return 2;
}

CatPtr builtin_category(const std::string& name) {
  if (name == "empty") return std::make_shared<FinCategory>(empty_category());
  if (name == "terminal") return std::make_shared<FinCategory>(terminal_category());
  if (name == "arrow") return std::make_shared<FinCategory>(walking_arrow_category());
  if (name.rfind("chain", 0) == 0)
    return std::make_shared<FinCategory>(chain_category(std::stoi(name.substr(5))));
  return nullptr;
}

CatPtr load_category(const Json& spec) {
  if (spec.is_string()) {
    auto b = builtin_category(spec.get<std::string>());
    if (b) return b;
  }
  Json j = resolve(spec);
  if (j.is_string()) {
    auto b = builtin_category(j.get<std::string>());
    if (b) return b;
    die_input("unknown category '" + j.get<std::string>() + "'");
  }
  if (j.contains("builtin")) {
    auto b = builtin_category(j.at("builtin").get<std::string>());
    if (b) return b;
    die_input("unknown builtin category");
  }
  try {
    return std::make_shared<FinCategory>(category_from_json(j));
  } catch (const JsonError& e) {
    die_input(e.what);
  }
}

ConcreteCategory load_concrete_base(const Json& spec) {
  Json j = resolve(spec);
  if (!j.contains("sizes")) die_input("a concrete base needs {\"sizes\": [...]}");
  std::vector<int> sizes;
  for (const auto& s : j.at("sizes")) sizes.push_back(s.get<int>());
  return concrete_finset(sizes);
}

MonPtr load_moncat(const Json& spec) {
  Json j = resolve(spec);
  try {
    if (j.value("kind", "") == "endofunctors") {
      auto C = load_category(j.at("category"));
      auto E = endofunctor_moncat(C, g_opt.ceiling);
      return std::make_shared<FinMonoidalCat>(E.mon);
    }
    return std::make_shared<FinMonoidalCat>(moncat_from_json(j));
  } catch (const JsonError& e) {
    die_input(e.what);
  } catch (const SizeCeilingError& e) {
    die_input(e.what);
  }
}

struct LoadedTheory {
  std::string flavor;  // "clone" | "nsoperad" | "theory"
  Clone clone;
  NsOperad operad;
  MonPtr M;
  Theory theory;
};

LoadedTheory load_theory(const Json& spec) {
  Json j = resolve(spec);
  LoadedTheory out;
  std::string kind = j.value("kind", "");
  if (kind == "clone") {
    out.flavor = "clone";
    if (j.contains("builtin")) {
      std::string b = j.at("builtin").get<std::string>();
      int K = j.value("K", g_opt.K > 0 ? g_opt.K : 2);
      if (b == "initial") out.clone = initial_clone(K);
      else if (b == "pointed") out.clone = pointed_clone(K);
      else if (b == "semilattice") out.clone = semilattice_clone(K);
      else if (b == "functions") out.clone = function_clone(j.value("carrier", 2), K);
      else die_input("unknown builtin clone '" + b + "'");
    } else {
      try {
        out.clone = clone_from_json(j);
      } catch (const JsonError& e) {
        die_input(e.what);
      }
    }
    return out;
  }
  if (kind == "nsoperad") {
    out.flavor = "nsoperad";
    if (j.contains("builtin")) {
      std::string b = j.at("builtin").get<std::string>();
      int K = j.value("K", g_opt.K > 0 ? g_opt.K : 2);
      if (b == "trivial") out.operad = trivial_ns_operad(K);
      else if (b == "pointed") out.operad = pointed_ns_operad(K);
      else die_input("unknown builtin operad '" + b + "'");
    } else {
      try {
        out.operad = nsoperad_from_json(j);
      } catch (const JsonError& e) {
        die_input(e.what);
      }
    }
    return out;
  }
  if (kind == "theory") {
    out.flavor = "theory";
    out.M = load_moncat(j.at("moncat"));
    try {
      out.theory = theory_from_json(j, *out.M);
    } catch (const JsonError& e) {
      die_input(e.what);
    }
    return out;
  }
  if (kind == "monad") {
    out.flavor = "theory";
    auto C = load_category(j.at("category"));
    FinMonad T;
    try {
      T = monad_from_json(j, C);
    } catch (const JsonError& e) {
      die_input(e.what);
    }
    auto rep = check_monad(T);
    if (!rep.ok()) die_input("monad file does not satisfy the monad laws");
    try {
      auto E = endofunctor_moncat(C, g_opt.ceiling);
      out.M = std::make_shared<FinMonoidalCat>(E.mon);
      out.theory = monad_as_theory(E, T);
    } catch (const SizeCeilingError& e) {
      die_input(e.what);
    }
    return out;
  }
  die_input("expected a clone, nsoperad, theory or monad entity");
}

struct LoadedMetamodel {
  std::string flavor;  // "graded-clone" | "graded-operad" | "table"
  GradedKind gkind = GradedKind::F;
  ConcreteCategory base;
  // table flavor
  MonPtr M;
  CatPtr C;
  Metamodel P;
  // for evaluation metamodels над [C,C]
  bool has_endo = false;
  EndoMonCat endo;
};

LoadedMetamodel load_metamodel(const Json& spec) {
  Json j = resolve(spec);
  LoadedMetamodel out;
  std::string kind = j.value("kind", "");
  if (kind == "standard_clone") {
    out.flavor = "graded-clone";
    out.gkind = GradedKind::F;
    out.base = load_concrete_base(j.at("base"));
    return out;
  }
  if (kind == "standard_nsoperad") {
    out.flavor = "graded-operad";
    out.gkind = GradedKind::N;
    out.base = load_concrete_base(j.at("base"));
    return out;
  }
  if (kind == "evaluation") {
    out.flavor = "table";
    out.C = load_category(j.at("category"));
    try {
      out.endo = endofunctor_moncat(out.C, g_opt.ceiling);
    } catch (const SizeCeilingError& e) {
      die_input(e.what);
    }
    out.has_endo = true;
    out.M = std::make_shared<FinMonoidalCat>(out.endo.mon);
    auto act = evaluation_action(out.M, out.endo, out.C);
    out.P = metamodel_from_action(act);
    return out;
  }
  if (kind == "theory_metamodel") {
    out.flavor = "table";
    out.M = load_moncat(j.at("moncat"));
    Theory T;
    try {
      T = theory_from_json(j.at("theory"), *out.M);
    } catch (const JsonError& e) {
      die_input(e.what);
    }
    out.P = theory_to_metamodel(out.M, T);
    out.C = out.P.C;
    return out;
  }
  if (kind == "metamodel") {
    out.flavor = "table";
    out.M = load_moncat(j.at("moncat"));
    out.C = load_category(j.at("category"));
    try {
      out.P = metamodel_from_json(j, out.M, out.C);
    } catch (const JsonError& e) {
      die_input(e.what);
    }
    return out;
  }
  die_input("expected a metamodel entity");
}

TheoryInterpretation interpret(const LoadedTheory& th, const LoadedMetamodel& mm) {
  if (mm.flavor == "graded-clone") {
    if (th.flavor == "clone") return interpret_clone(mm.base, th.clone);
    if (th.flavor == "nsoperad") return interpret_clone(mm.base, operad_to_clone(th.operad));
    die_input("the standard clone metamodel needs a clone or operad theory");
  }
  if (mm.flavor == "graded-operad") {
    if (th.flavor == "nsoperad") return interpret_ns_operad(mm.base, th.operad);
    die_input("the standard operad metamodel needs an nsoperad theory");
  }
  if (th.flavor != "theory") die_input("a table metamodel needs a theory/monad entity");
  return interpret_theory(mm.P, th.theory);
}

CatPtr load_apex(const std::string& name) {
  auto b = builtin_category(name);
  if (b) return b;
  return load_category(Json(name));
}

struct LoadedSlice {
  SliceObjectOverC V;
};

LoadedSlice load_slice(const Json& spec) {
  Json j = resolve(spec);
  LoadedSlice out;
  auto C = load_category(j.at("into"));
  if (j.contains("name_of")) {
    auto one = std::make_shared<FinCategory>(terminal_category());
    int c = C->object_index(j.at("name_of").get<std::string>());
    if (c < 0) die_input("name_of references an unknown object");
    out.V.apex = one;
    out.V.V = name_functor(one, C, c);
    return out;
  }
  if (j.value("identity", false)) {
    out.V.apex = C;
    out.V.V = identity_functor(C);
    return out;
  }
  out.V.apex = load_category(j.at("apex"));
  try {
    out.V.V = functor_from_json(j.at("functor"), out.V.apex, C);
  } catch (const JsonError& e) {
    die_input(e.what);
  }
  return out;
}

HatTheory load_hat(const Json& spec, MonPtr M, const LoadedMetamodel* mm = nullptr) {
  Json j = resolve(spec);
  if (j.value("kind", "") == "embed_monad") {
    if (!mm || !mm->has_endo) die_input("embed_monad needs an evaluation metamodel");
    FinMonad T;
    try {
      T = monad_from_json(resolve(j.at("monad")), mm->C);
    } catch (const JsonError& e) {
      die_input(e.what);
    }
    if (!check_monad(T).ok()) die_input("embed_monad: the monad laws fail");
    return embed_J(M, monad_as_theory(mm->endo, T));
  }
  if (j.value("kind", "") == "embed") {
    Theory T;
    try {
      T = theory_from_json(j.at("theory"), *M);
    } catch (const JsonError& e) {
      die_input(e.what);
    }
    return embed_J(M, T);
  }
  try {
    return hattheory_from_json(j, M);
  } catch (const JsonError& e) {
    die_input(e.what);
  }
}

// ---------------------------------------------------------------------------
// commands

int cmd_check(const std::string& entity) {
  Json j = load_json(entity);
  std::string kind = j.value("kind", "category");
  Report rep;
  Json extra = Json::object();
  try {
    if (kind == "category") {
      rep = validate_category(category_from_json(j));
    } else if (kind == "moncat") {
      rep = validate_moncat(moncat_from_json(j));
    } else if (kind == "theory") {
      auto M = load_moncat(j.at("moncat"));
      rep = check_theory(*M, theory_from_json(j, *M));
    } else if (kind == "monad") {
      auto C = load_category(j.at("category"));
      auto T = monad_from_json(j, C);
      rep = check_monad(T);
      if (rep.ok() && j.value("cartesian", false)) rep.absorb(check_cartesian_monad(*C, T));
    } else if (kind == "functor") {
      auto S = load_category(j.at("source"));
      auto T = load_category(j.at("target"));
      rep = validate_functor(functor_from_json(j, S, T));
    } else if (kind == "nattrans") {
      auto S = load_category(j.at("source"));
      auto T = load_category(j.at("target"));
      auto F = functor_from_json(resolve(j.at("from")), S, T);
      auto G = functor_from_json(resolve(j.at("to")), S, T);
      rep = validate_functor(F);
      rep.absorb(validate_functor(G));
      if (rep.ok()) rep = validate_nat(nat_from_json(j, F, G));
    } else if (kind == "profunctor") {
      auto S = load_category(j.at("source"));
      auto T = load_category(j.at("target"));
      rep = validate_profunctor(profunctor_from_json(j, S, T));
    } else if (kind == "gradedset") {
      rep = validate_graded(gradedset_from_json(j));
    } else if (kind == "clone") {
      rep = check_clone(clone_from_json(j));
    } else if (kind == "nsoperad") {
      rep = check_ns_operad(nsoperad_from_json(j));
    } else if (kind == "metamodel") {
      auto mm = load_metamodel(j);
      rep = check_metamodel(mm.P);
    } else if (kind == "hat_theory") {
      auto M = load_moncat(j.at("moncat"));
      rep = check_hat_theory(load_hat(j, M));
    } else {
      die_input("unknown entity kind '" + kind + "'");
    }
  } catch (const JsonError& e) {
    die_input(e.what);
  }
  return finish(rep, extra);
}

int cmd_tensor(const std::string& kind, const std::string& xf, const std::string& yf,
               const std::string& moncat_ref) {
  if (kind == "day") {
    if (moncat_ref.empty()) die_input("tensor day needs --moncat");
    auto M = load_moncat(Json(moncat_ref));
    Json xj = load_json(xf), yj = load_json(yf);
    // presheaves given as {"value": {object: [elems]}, "action": {mor: {e:e}}}
    auto load_presheaf = [&](const Json& j) {
      Presheaf P;
      P.base = M->cat;
      P.value.resize(M->cat->n_obj());
      for (auto it = j.at("value").begin(); it != j.at("value").end(); ++it) {
        int o = M->cat->object_index(it.key());
        if (o < 0) die_input("unknown object in presheaf");
        for (const auto& e : it.value()) P.value[o].elems.push_back(e.get<std::string>());
      }
      P.action.resize(M->cat->n_mor());
      for (int u = 0; u < M->cat->n_mor(); ++u) {
        P.action[u].src_size = P.value[M->cat->tgt(u)].size();
        P.action[u].tgt_size = P.value[M->cat->src(u)].size();
        P.action[u].map.assign(P.action[u].src_size, -1);
      }
      for (auto it = j.at("action").begin(); it != j.at("action").end(); ++it) {
        int u = M->cat->morphism_index(it.key());
        if (u < 0) die_input("unknown morphism in presheaf action");
        for (auto e = it.value().begin(); e != it.value().end(); ++e) {
          int from = P.value[M->cat->tgt(u)].index_of(e.key());
          int to = P.value[M->cat->src(u)].index_of(e.value().get<std::string>());
          if (from < 0 || to < 0) die_input("presheaf action references unknown elements");
          P.action[u].map[from] = to;
        }
      }
      auto rep = validate_presheaf(P);
      if (!rep.ok()) die_input("invalid presheaf input");
      return P;
    };
    auto Q = load_presheaf(yj);  // tensor <kind> X Y computes Y (.) X
    auto P = load_presheaf(xj);
    auto r = day_tensor(*M, Q, P);
    Json out;
    out["value"] = Json::object();
    for (int z = 0; z < M->cat->n_obj(); ++z)
      out["value"][M->cat->objects[z]] = r.sheaf.value[z].elems;
    Report rep;
    return finish(rep, out);
  }
  GradedKind gk = kind == "f" ? GradedKind::F : kind == "p" ? GradedKind::P : GradedKind::N;
  if (kind != "f" && kind != "p" && kind != "n") die_input("tensor kind must be n, p, f or day");
  TruncGradedSet X, Y;
  try {
    X = gradedset_from_json(load_json(xf));
    Y = gradedset_from_json(load_json(yf));
  } catch (const JsonError& e) {
    die_input(e.what);
  }
  int K = g_opt.K > 0 ? g_opt.K : X.K;
  auto r = subst_tensor(gk, K, Y, X);
  Json out = gradedset_to_json(r.set);
  out["truncated"] = true;
  out["lossy"] = r.lossy;
  Report rep;
  return finish(rep, out);
}

int cmd_models(const std::string& theory_ref, const std::string& mm_ref) {
  auto th = load_theory(load_json(theory_ref));
  auto mm = load_metamodel(load_json(mm_ref));
  auto ti = interpret(th, mm);
  auto MC = enumerate_models(ti);
  Report rep = check_forgetful_properties(MC);
  Json extra;
  extra["objects"] = MC.cat->objects;
  extra["object_count"] = MC.cat->n_obj();
  extra["morphism_count"] = MC.cat->n_mor();
  return finish(rep, extra);
}

int cmd_transport(const std::string& entity_ref, const std::string& morphism) {
  Json j = load_json(entity_ref);
  std::string kind = j.value("kind", "");
  try {
    if (kind == "gradedset") {
      auto X = gradedset_from_json(j);
      TruncGradedSet out;
      if (morphism == "n2p") out = lan_n_to_p(X);
      else if (morphism == "p2f") out = lan_p_to_f(X);
      else if (morphism == "n2f") out = lan_p_to_f(lan_n_to_p(X));
      else die_input("transport morphism must be n2p, p2f or n2f for graded sets");
      Report rep;
      return finish(rep, gradedset_to_json(out));
    }
    if (kind == "nsoperad") {
      auto th = load_theory(j);
      Report rep;
      if (morphism == "n2p") {
        auto sym = operad_to_symoperad(th.operad);
        rep = check_sym_operad(sym);
        Json out = gradedset_to_json(TruncGradedSet{GradedKind::P, sym.op.K, sym.op.level, {}, {}});
        return finish(rep, out);
      }
      if (morphism == "n2f" || morphism == "p2f") {
        auto c = operad_to_clone(th.operad);
        rep = check_clone(c);
        return finish(rep, clone_to_json(c));
      }
      die_input("transport morphism must be n2p, p2f or n2f for operads");
    }
  } catch (const JsonError& e) {
    die_input(e.what);
  }
  die_input("transport expects a gradedset or nsoperad entity");
}

int cmd_str(const std::string& v_ref, const std::string& mm_ref) {
  auto V = load_slice(load_json(v_ref));
  auto mm = load_metamodel(load_json(mm_ref));
  if (mm.flavor != "table") die_input("str needs a table metamodel (evaluation or explicit)");
  auto r = str(V.V, mm.P);
  Report rep = check_hat_theory(r.hat);
  Json extra;
  extra["value_sizes"] = Json::object();
  for (int X = 0; X < mm.M->cat->n_obj(); ++X)
    extra["value_sizes"][mm.M->cat->objects[X]] = r.hat.value[X].size();
  return finish(rep, extra);
}

int cmd_sem(const std::string& p_ref, const std::string& mm_ref) {
  auto mm = load_metamodel(load_json(mm_ref));
  if (mm.flavor != "table") die_input("sem needs a table metamodel");
  auto P = load_hat(load_json(p_ref), mm.M, &mm);
  auto r = sem(P, mm.P);
  Report rep = check_forgetful_properties(r.models);
  Json extra;
  extra["object_count"] = r.models.cat->n_obj();
  extra["morphism_count"] = r.models.cat->n_mor();
  extra["objects"] = r.models.cat->objects;
  return finish(rep, extra);
}

int cmd_adjunction(const std::string& p_ref, const std::string& v_ref,
                   const std::string& mm_ref) {
  auto mm = load_metamodel(load_json(mm_ref));
  if (mm.flavor != "table") die_input("adjunction needs a table metamodel");
  auto P = load_hat(load_json(p_ref), mm.M, &mm);
  auto V = load_slice(load_json(v_ref));
  auto r = check_adjunction(P, V.V, mm.P);
  Json extra;
  extra["lhs_count"] = r.lhs_count;
  extra["rhs_count"] = r.rhs_count;
  extra["naturality_probes"] = r.probes;
  return finish(r.report, extra);
}

int cmd_codensity(const std::string& v_ref) {
  auto V = load_slice(load_json(v_ref));
  auto r = codensity_crosscheck(V.V, g_opt.ceiling);
  Json extra;
  extra["tractable"] = r.tractable;
  if (r.tractable) {
    Json onobj = Json::array();
    for (int v : r.monad.S.on_obj) onobj.push_back(V.V.V.target->objects[v]);
    extra["codensity_on_objects"] = onobj;
  }
  return finish(r.report, extra);
}

int cmd_universality(const std::string& theory_ref, const std::string& mm_ref,
                     const std::string& apexes_csv) {
  auto th = load_theory(load_json(theory_ref));
  auto mm = load_metamodel(load_json(mm_ref));
  auto ti = interpret(th, mm);
  auto MC = enumerate_models(ti);
  std::vector<CatPtr> apexes;
  std::string csv = apexes_csv.empty() ? "empty,terminal,arrow" : apexes_csv;
  size_t pos = 0;
  while (pos < csv.size()) {
    size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    apexes.push_back(load_apex(csv.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  auto rep = verify_universality(ti, MC, apexes);
  Json extra;
  extra["model_count"] = MC.cat->n_obj();
  return finish(rep, extra);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catalg: exact verification of finite algebraic-theory data"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--workspace", g_opt.workspace, "directory for entity name resolution");
  app.add_option("--format", g_opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("-K", g_opt.K, "truncation bound override");
  app.add_option("--ceiling", g_opt.ceiling, "size ceiling for functor categories");
  std::string config;
  app.add_option("--config", config, "configuration file (K, ceilings)");

  std::string a1, a2, a3, moncat_ref, apexes;

  auto* check = app.add_subcommand("check", "validate an entity and report violations");
  check->add_option("entity", a1)->required();

  auto* tensor = app.add_subcommand("tensor", "substitution or Day tensor of two entities");
  tensor->add_option("kind", a1, "n | p | f | day")->required();
  tensor->add_option("X", a2)->required();
  tensor->add_option("Y", a3)->required();
  tensor->add_option("--moncat", moncat_ref, "monoidal category for day tensors");

  std::string mm_builtin;
  auto* models = app.add_subcommand("models", "enumerate the model category of a theory");
  models->add_option("theory", a1)->required();
  models->add_option("target", a2, "metamodel entity, or a base when --metamodel is given")
      ->required();
  models->add_option("--metamodel", mm_builtin,
                     "builtin metamodel (standard_clone | standard_nsoperad) over the base");

  auto* transport = app.add_subcommand("transport", "transport along N -> P -> F");
  transport->add_option("entity", a1)->required();
  transport->add_option("morphism", a2, "n2p | p2f | n2f")->required();

  auto* strc = app.add_subcommand("str", "structure hat-theory of a functor over C");
  strc->add_option("V", a1)->required();
  strc->add_option("metamodel", a2)->required();

  auto* semc = app.add_subcommand("sem", "semantics of a hat-theory");
  semc->add_option("P", a1)->required();
  semc->add_option("metamodel", a2)->required();

  auto* adj = app.add_subcommand("adjunction", "verify the structure-semantics correspondence");
  adj->add_option("P", a1)->required();
  adj->add_option("V", a2)->required();
  adj->add_option("metamodel", a3)->required();

  auto* cod = app.add_subcommand("codensity", "codensity-monad cross-check of Str");
  cod->add_option("V", a1)->required();

  auto* uni = app.add_subcommand("universality", "double-cone universal property");
  uni->add_option("theory", a1)->required();
  uni->add_option("metamodel", a2)->required();
  uni->add_option("--apexes", apexes, "comma-separated test apexes");

  CLI11_PARSE(app, argc, argv);

  if (!config.empty()) {
    Json cj = load_json(config);
    if (g_opt.K < 0 && cj.contains("K")) g_opt.K = cj.at("K").get<int>();
    if (cj.contains("ceiling")) g_opt.ceiling = cj.at("ceiling").get<std::int64_t>();
  }

  try {
    if (check->parsed()) return cmd_check(a1);
    if (tensor->parsed()) return cmd_tensor(a1, a2, a3, moncat_ref);
    if (models->parsed()) {
      if (!mm_builtin.empty()) {
        Json mm;
        mm["kind"] = mm_builtin;
        mm["base"] = a2;
        auto th = load_theory(load_json(a1));
        auto lm = load_metamodel(mm);
        auto ti = interpret(th, lm);
        auto MC = enumerate_models(ti);
        Report rep = check_forgetful_properties(MC);
        Json extra;
        extra["objects"] = MC.cat->objects;
        extra["object_count"] = MC.cat->n_obj();
        extra["morphism_count"] = MC.cat->n_mor();
        return finish(rep, extra);
      }
      return cmd_models(a1, a2);
    }
    if (transport->parsed()) return cmd_transport(a1, a2);
    if (strc->parsed()) return cmd_str(a1, a2);
    if (semc->parsed()) return cmd_sem(a1, a2);
    if (adj->parsed()) return cmd_adjunction(a1, a2, a3);
    if (cod->parsed()) return cmd_codensity(a1);
    if (uni->parsed()) return cmd_universality(a1, a2, apexes);
  } catch (const JsonError& e) {
    die_input(e.what);
  } catch (const std::exception& e) {
    die_input(e.what());
  }
  return 2;
}
