#include "fuzzyseq/serialization.hpp"

#include <stdexcept>

namespace fuzzyseq {

using nlohmann::json;

json fuzzy_to_json(const FuzzyNumber& u) {
    const auto& cuts = u.breakpoints();
    if (cuts.size() == 2) {
        const double a = cuts[0].lower, d = cuts[0].upper;
        const double b = cuts[1].lower, c = cuts[1].upper;
        if (a == b && b == c && c == d) return json{{"kind", "crisp"}, {"x", a}};
        if (b == c) return json{{"kind", "triangular"}, {"a", a}, {"b", b}, {"c", d}};
        return json{{"kind", "trapezoidal"}, {"a", a}, {"b", b}, {"c", c}, {"d", d}};
    }
    json arr = json::array();
    for (const auto& cut : cuts) arr.push_back(json::array({cut.alpha, cut.lower, cut.upper}));
    return json{{"kind", "breakpoints"}, {"cuts", arr}};
}

FuzzyNumber fuzzy_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "crisp") return FuzzyNumber::crisp(j.at("x").get<double>());
    if (kind == "triangular")
        return FuzzyNumber::triangular(j.at("a").get<double>(), j.at("b").get<double>(), j.at("c").get<double>());
    if (kind == "trapezoidal")
        return FuzzyNumber::trapezoidal(j.at("a").get<double>(), j.at("b").get<double>(),
                                        j.at("c").get<double>(), j.at("d").get<double>());
    if (kind == "breakpoints") {
        std::vector<AlphaCut> cuts;
        for (const auto& row : j.at("cuts")) {
            if (!row.is_array() || row.size() != 3)
                throw std::invalid_argument("breakpoint rows must be [alpha, lower, upper]");
            cuts.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
        }
        return FuzzyNumber::from_cuts(std::move(cuts));
    }
    throw std::invalid_argument("unknown fuzzy number kind '" + kind + "'");
}

IndexSet index_set_from_json(const json& j) {
    const std::string kind = j.at("set").get<std::string>();
    if (kind == "all") return IndexSet::all();
    if (kind == "empty") return IndexSet::empty();
    if (kind == "multiples") return IndexSet::multiples(j.at("m").get<std::uint64_t>());
    if (kind == "powers") return IndexSet::powers(j.at("q").get<unsigned>());
    if (kind == "explicit") return IndexSet::explicit_set(j.at("members").get<std::vector<std::uint64_t>>());
    if (kind == "complement") return IndexSet::complement(index_set_from_json(j.at("of")));
    if (kind == "union")
        return IndexSet::union_of(index_set_from_json(j.at("a")), index_set_from_json(j.at("b")));
    throw std::invalid_argument("unknown index set '" + kind + "'");
}

FuzzySequence sequence_from_json(const json& j) {
    if (j.contains("preset")) return preset_sequence(j.at("preset").get<std::string>());
    const std::string rule = j.at("rule").get<std::string>();
    if (rule == "two_valued")
        return FuzzySequence::two_valued(index_set_from_json(j.at("on")), fuzzy_from_json(j.at("value_on")),
                                         fuzzy_from_json(j.at("value_off")));
    if (rule == "alternating")
        return FuzzySequence::alternating(fuzzy_from_json(j.at("value_odd")),
                                          fuzzy_from_json(j.at("value_even")));
    if (rule == "growing_peak") return FuzzySequence::growing_peak(index_set_from_json(j.at("on")));
    throw std::invalid_argument("unknown sequence rule '" + rule + "'");
}

json modulus_to_json(const Modulus& f) {
    json out{{"modulus", f.name()}};
    for (const auto& [k, v] : f.parameters()) out[k] = v;
    return out;
}

Modulus modulus_from_json(const json& j) {
    const std::string name = j.at("modulus").get<std::string>();
    if (name == "identity") return Modulus::identity();
    if (name == "log1p") return Modulus::log1p();
    if (name == "saturating") return Modulus::saturating();
    if (name == "power") return Modulus::power(j.at("p").get<double>());
    throw std::invalid_argument("unknown modulus '" + name + "'");
}

} // namespace fuzzyseq
