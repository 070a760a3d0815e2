#pragma once

// JSON readers and writers for the file formats the CLI speaks. Ids are
// case-sensitive strings; duplicate ids are input errors.

#include <json.hpp>

#include "catalg/doublecone.hpp"
#include "catalg/graded.hpp"
#include "catalg/metamodel.hpp"
#include "catalg/moncat.hpp"
#include "catalg/strsem.hpp"

namespace catalg {

using Json = nlohmann::json;

struct JsonError {
  std::string what;
};

FinCategory category_from_json(const Json& j);
Json category_to_json(const FinCategory& C);

FinFunctor functor_from_json(const Json& j, CatPtr source, CatPtr target);
NatTransform nat_from_json(const Json& j, const FinFunctor& F, const FinFunctor& G);

FinMonoidalCat moncat_from_json(const Json& j);  // embeds its category
Theory theory_from_json(const Json& j, const FinMonoidalCat& M);
FinMonad monad_from_json(const Json& j, CatPtr C);

Profunctor profunctor_from_json(const Json& j, CatPtr source, CatPtr target);

TruncGradedSet gradedset_from_json(const Json& j);
Json gradedset_to_json(const TruncGradedSet& X);

Clone clone_from_json(const Json& j);
Json clone_to_json(const Clone& c);

NsOperad nsoperad_from_json(const Json& j);
Json nsoperad_to_json(const NsOperad& T);

Metamodel metamodel_from_json(const Json& j, MonPtr M, CatPtr C);

HatTheory hattheory_from_json(const Json& j, MonPtr M);

Json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

}  // namespace catalg
