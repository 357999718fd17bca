#include "etacalc/space_ast.hpp"

#include "etacalc/json_io.hpp"

#include <fstream>
#include <sstream>

namespace etacalc {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(what + " at " + path);
}

const nlohmann::json& require_field(const nlohmann::json& j, const char* key,
                                    const std::string& path) {
    if (!j.contains(key))
        fail(path + "." + key, "missing field");
    return j[key];
}

int require_int(const nlohmann::json& j, const char* key, const std::string& path) {
    const auto& v = require_field(j, key, path);
    if (!v.is_number_integer())
        fail(path + "." + key, "must be an integer");
    return v.get<int>();
}

GroupRank parse_rank(const nlohmann::json& j, const char* key, const std::string& path) {
    try {
        return GroupRank(require_int(j, key, path));
    } catch (const std::invalid_argument& e) {
        fail(path + "." + key, e.what());
    }
}

std::vector<Character> parse_char_list(const nlohmann::json& j, const char* key,
                                       GroupRank rank, const std::string& path) {
    const auto& v = require_field(j, key, path);
    const std::string lpath = path + "." + key;
    if (!v.is_array())
        fail(lpath, "must be an array of characters");
    std::vector<Character> chars;
    for (std::size_t i = 0; i < v.size(); ++i) {
        try {
            chars.push_back(
                character_from_json(v[i], rank, lpath + "[" + std::to_string(i) + "]"));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    return chars;
}

std::vector<int> parse_parts(const nlohmann::json& j, const std::string& path) {
    const auto& v = require_field(j, "parts", path);
    const std::string lpath = path + ".parts";
    if (!v.is_array())
        fail(lpath, "must be an array of positive integers");
    std::vector<int> parts;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number_integer())
            fail(lpath + "[" + std::to_string(i) + "]", "must be an integer");
        parts.push_back(v[i].get<int>());
    }
    return parts;
}

FlagSpec parse_flag_spec(const nlohmann::json& j, const std::string& path) {
    const GroupRank q = parse_rank(j, "q", path);
    auto chars = parse_char_list(j, "S", q, path);
    auto parts = parse_parts(j, path);
    try {
        return FlagSpec(q, std::move(chars), std::move(parts));
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

ProjSpec parse_proj_spec(const nlohmann::json& j, const std::string& path) {
    const GroupRank s = parse_rank(j, "s", path);
    auto chars = parse_char_list(j, "chars", s, path);
    try {
        return ProjSpec(s, std::move(chars));
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

std::vector<SpaceAst> parse_space_list(const nlohmann::json& j, const char* key,
                                       const std::string& path) {
    const auto& v = require_field(j, key, path);
    const std::string lpath = path + "." + key;
    if (!v.is_array() || v.empty())
        fail(lpath, "must be a non-empty array of spaces");
    std::vector<SpaceAst> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(parse_space_ast(v[i], lpath + "[" + std::to_string(i) + "]"));
    return out;
}

} // namespace

SpaceAst parse_space_ast(const nlohmann::json& j, const std::string& path) {
    if (!j.is_object())
        fail(path, "space must be a JSON object");
    const auto& kind_field = require_field(j, "kind", path);
    if (!kind_field.is_string())
        fail(path + ".kind", "must be a string");
    const std::string kind = kind_field.get<std::string>();

    if (kind == "point")
        return SpaceAst{PointNode{parse_rank(j, "q", path)}};
    if (kind == "real_flag")
        return SpaceAst{RealFlagNode{parse_flag_spec(j, path)}};
    if (kind == "complex_flag")
        return SpaceAst{ComplexFlagNode{parse_flag_spec(j, path)}};
    if (kind == "proj")
        return SpaceAst{ProjNode{parse_proj_spec(j, path)}};
    if (kind == "dold") {
        const auto& proj_field = require_field(j, "proj", path);
        if (!proj_field.is_object())
            fail(path + ".proj", "must be an object");
        ProjSpec proj = parse_proj_spec(proj_field, path + ".proj");
        auto base = std::make_unique<SpaceAst>(
            parse_space_ast(require_field(j, "base", path), path + ".base"));
        return SpaceAst{DoldNode{std::move(proj), std::move(base)}};
    }
    if (kind == "product")
        return SpaceAst{ProductNode{parse_space_list(j, "factors", path)}};
    if (kind == "disjoint_union")
        return SpaceAst{UnionNode{parse_space_list(j, "summands", path)}};

    fail(path + ".kind", "unknown space kind \"" + kind + "\"");
}

SpaceAst parse_space_file(const std::string& filename) {
    std::ifstream in(filename);
    if (!in)
        throw ParseError("cannot open file " + filename);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("invalid JSON in " + filename + ": " + e.what());
    }
    return parse_space_ast(j);
}

namespace {

nlohmann::json char_list_to_json(const std::vector<Character>& chars) {
    nlohmann::json out = nlohmann::json::array();
    for (const Character& c : chars)
        out.push_back(character_to_json(c));
    return out;
}

nlohmann::json flag_fields(const FlagSpec& spec, const char* kind) {
    return nlohmann::json{{"kind", kind},
                          {"q", spec.rank().value()},
                          {"S", char_list_to_json(spec.chars())},
                          {"parts", spec.parts()}};
}

nlohmann::json proj_fields(const ProjSpec& spec) {
    return nlohmann::json{{"kind", "proj"},
                          {"s", spec.rank().value()},
                          {"chars", char_list_to_json(spec.chars())}};
}

} // namespace

nlohmann::json space_ast_to_json(const SpaceAst& ast) {
    return std::visit(
        [](const auto& node) -> nlohmann::json {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, PointNode>) {
                return {{"kind", "point"}, {"q", node.q.value()}};
            } else if constexpr (std::is_same_v<T, RealFlagNode>) {
                return flag_fields(node.spec, "real_flag");
            } else if constexpr (std::is_same_v<T, ComplexFlagNode>) {
                return flag_fields(node.spec, "complex_flag");
            } else if constexpr (std::is_same_v<T, ProjNode>) {
                return proj_fields(node.spec);
            } else if constexpr (std::is_same_v<T, DoldNode>) {
                nlohmann::json proj = proj_fields(node.proj);
                proj.erase("kind");
                return {{"kind", "dold"},
                        {"proj", proj},
                        {"base", space_ast_to_json(*node.base)}};
            } else if constexpr (std::is_same_v<T, ProductNode>) {
                nlohmann::json factors = nlohmann::json::array();
                for (const SpaceAst& f : node.factors)
                    factors.push_back(space_ast_to_json(f));
                return {{"kind", "product"}, {"factors", factors}};
            } else {
                nlohmann::json summands = nlohmann::json::array();
                for (const SpaceAst& s : node.summands)
                    summands.push_back(space_ast_to_json(s));
                return {{"kind", "disjoint_union"}, {"summands", summands}};
            }
        },
        ast.node);
}

BuiltSpace build_space(const SpaceAst& ast) {
    return std::visit(
        [](const auto& node) -> BuiltSpace {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, PointNode>) {
                ConjugationModel m = point_space(node.q);
                return BuiltSpace{m.real_part, m};
            } else if constexpr (std::is_same_v<T, RealFlagNode>) {
                ConjugationModel m = real_flag_space(node.spec);
                return BuiltSpace{m.real_part, m};
            } else if constexpr (std::is_same_v<T, ComplexFlagNode>) {
                return BuiltSpace{complex_from_real(real_flag_space(node.spec)),
                                  std::nullopt};
            } else if constexpr (std::is_same_v<T, ProjNode>) {
                return BuiltSpace{proj_space(node.spec), std::nullopt};
            } else if constexpr (std::is_same_v<T, DoldNode>) {
                BuiltSpace base = build_space(*node.base);
                if (!base.conjugation)
                    throw ParseError(
                        "dold base must be a conjugation space "
                        "(point, real_flag, or products/disjoint unions of them)");
                return BuiltSpace{dold_fixed_data(node.proj, *base.conjugation),
                                  std::nullopt};
            } else if constexpr (std::is_same_v<T, ProductNode>) {
                BuiltSpace acc = build_space(node.factors.front());
                for (std::size_t i = 1; i < node.factors.size(); ++i) {
                    BuiltSpace next = build_space(node.factors[i]);
                    acc.model = product_space(acc.model, next.model);
                    if (acc.conjugation && next.conjugation)
                        acc.conjugation = product_space(*acc.conjugation, *next.conjugation);
                    else
                        acc.conjugation.reset();
                }
                return acc;
            } else {
                BuiltSpace acc = build_space(node.summands.front());
                for (std::size_t i = 1; i < node.summands.size(); ++i) {
                    BuiltSpace next = build_space(node.summands[i]);
                    acc.model = disjoint_union(acc.model, next.model);
                    if (acc.conjugation && next.conjugation)
                        acc.conjugation = disjoint_union(*acc.conjugation, *next.conjugation);
                    else
                        acc.conjugation.reset();
                }
                return acc;
            }
        },
        ast.node);
}

} // namespace etacalc
