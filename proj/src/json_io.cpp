#include "etacalc/json_io.hpp"

#include <stdexcept>

namespace etacalc {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::invalid_argument(what + " at " + path);
}

} // namespace

nlohmann::json character_to_json(const Character& c) {
    return nlohmann::json(c.elements());
}

Character character_from_json(const nlohmann::json& j, GroupRank rank,
                              const std::string& path) {
    if (!j.is_array())
        fail(path, "character must be an array of integers");
    std::vector<int> elements;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer())
            fail(path + "[" + std::to_string(i) + "]", "character entry must be an integer");
        elements.push_back(j[i].get<int>());
    }
    try {
        return Character::from_elements(elements, rank);
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

nlohmann::json monomial_to_json(const Monomial& m) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& [chi, mult] : m.factors())
        factors.push_back(nlohmann::json::array({character_to_json(chi), mult}));
    return factors;
}

Monomial monomial_from_json(const nlohmann::json& j, GroupRank rank,
                            const std::string& path) {
    if (!j.is_array())
        fail(path, "monomial must be an array of [character, multiplicity] pairs");
    std::vector<std::pair<Character, int>> factors;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string fpath = path + "[" + std::to_string(i) + "]";
        const auto& entry = j[i];
        if (!entry.is_array() || entry.size() != 2 || !entry[1].is_number_integer())
            fail(fpath, "monomial factor must be a [character, multiplicity] pair");
        factors.emplace_back(character_from_json(entry[0], rank, fpath + "[0]"),
                             entry[1].get<int>());
    }
    try {
        return Monomial(rank, std::move(factors));
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

nlohmann::json element_to_json(const RepRingElement& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const Monomial& m : e.terms())
        terms.push_back(monomial_to_json(m));
    return nlohmann::json{{"rank", e.rank().value()}, {"terms", terms}};
}

RepRingElement element_from_json(const nlohmann::json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("terms"))
        fail(path, "element must be an object with fields rank and terms");
    if (!j["rank"].is_number_integer())
        fail(path + ".rank", "rank must be an integer");
    GroupRank rank(0);
    try {
        rank = GroupRank(j["rank"].get<int>());
    } catch (const std::invalid_argument& e) {
        fail(path + ".rank", e.what());
    }
    if (!j["terms"].is_array())
        fail(path + ".terms", "terms must be an array");
    std::vector<Monomial> terms;
    for (std::size_t i = 0; i < j["terms"].size(); ++i)
        terms.push_back(monomial_from_json(j["terms"][i], rank,
                                           path + ".terms[" + std::to_string(i) + "]"));
    return RepRingElement::from_monomials(rank, std::move(terms));
}

nlohmann::json model_to_json(const FixedPointModel& m) {
    nlohmann::json points = nlohmann::json::array();
    for (const FixedPoint& p : m.points())
        points.push_back({{"label", p.label},
                          {"rep", monomial_to_json(p.rep)},
                          {"rep_text", p.rep.to_string()}});
    return nlohmann::json{{"rank", m.rank().value()},
                          {"dimension", m.dimension()},
                          {"points", points}};
}

nlohmann::json witness_to_json(const PairingWitness& w) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [a, b] : w.pairs)
        pairs.push_back(nlohmann::json::array({a, b}));
    return nlohmann::json{{"pairs", pairs}, {"residual", w.residual}};
}

} // namespace etacalc
