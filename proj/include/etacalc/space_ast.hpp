// The JSON space description language: parse, normalize, and build models.
//
// Grammar (one object per space):
//   {"kind":"point","q":Q}
//   {"kind":"real_flag","q":Q,"S":[[..],..],"parts":[..]}
//   {"kind":"complex_flag","q":Q,"S":[[..],..],"parts":[..]}
//   {"kind":"proj","s":S,"chars":[[..],..]}
//   {"kind":"dold","proj":{..proj fields..},"base":{..space..}}
//   {"kind":"product","factors":[..spaces..]}
//   {"kind":"disjoint_union","summands":[..spaces..]}
// Characters are sorted ascending lists of integers in [1, rank].
#pragma once

#include "etacalc/spaces.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace etacalc {

/// Parse or validation failure; the message names the offending field.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct SpaceAst;

struct PointNode {
    GroupRank q;
};
struct RealFlagNode {
    FlagSpec spec;
};
struct ComplexFlagNode {
    FlagSpec spec;
};
struct ProjNode {
    ProjSpec spec;
};
struct DoldNode {
    ProjSpec proj;
    std::unique_ptr<SpaceAst> base;
};
struct ProductNode {
    std::vector<SpaceAst> factors;
};
struct UnionNode {
    std::vector<SpaceAst> summands;
};

struct SpaceAst {
    std::variant<PointNode, RealFlagNode, ComplexFlagNode, ProjNode, DoldNode,
                 ProductNode, UnionNode>
        node;
};

SpaceAst parse_space_ast(const nlohmann::json& j, const std::string& path = "$");
SpaceAst parse_space_file(const std::string& filename);
nlohmann::json space_ast_to_json(const SpaceAst& ast);

/// A built space.  `conjugation` is present exactly when the space carries a
/// conjugation structure (a point, a real flag manifold, or products and
/// disjoint unions of such), which is what the dold construction accepts as
/// a base.
struct BuiltSpace {
    FixedPointModel model;
    std::optional<ConjugationModel> conjugation;
};

BuiltSpace build_space(const SpaceAst& ast);

} // namespace etacalc
