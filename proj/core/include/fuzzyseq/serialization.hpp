#pragma once

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

#include "fuzzyseq/fuzzy_number.hpp"
#include "fuzzyseq/fuzzy_sequence.hpp"
#include "fuzzyseq/index_set.hpp"
#include "fuzzyseq/modulus.hpp"

namespace fuzzyseq {

// {"kind":"triangular","a":..,"b":..,"c":..} | {"kind":"trapezoidal",...} |
// {"kind":"crisp","x":..} | {"kind":"breakpoints","cuts":[[alpha,lower,upper],...]}
// The emitter picks the most specific kind the breakpoints allow.
nlohmann::json fuzzy_to_json(const FuzzyNumber& u);
FuzzyNumber fuzzy_from_json(const nlohmann::json& j);

// {"set":"all"} | {"set":"empty"} | {"set":"multiples","m":2} |
// {"set":"powers","q":3} | {"set":"explicit","members":[..]} |
// {"set":"complement","of":{..}} | {"set":"union","a":{..},"b":{..}}
IndexSet index_set_from_json(const nlohmann::json& j);

// {"preset":"ex3.4"} | {"rule":"two_valued","on":{..},"value_on":{..},"value_off":{..}} |
// {"rule":"alternating","value_odd":{..},"value_even":{..}} |
// {"rule":"growing_peak","on":{..}}
FuzzySequence sequence_from_json(const nlohmann::json& j);

// {"modulus":"power","p":0.5}; only the built-in families round-trip.
nlohmann::json modulus_to_json(const Modulus& f);
Modulus modulus_from_json(const nlohmann::json& j);

} // namespace fuzzyseq
