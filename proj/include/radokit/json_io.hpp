#pragma once

#include <radokit/certify.hpp>
#include <radokit/coloring.hpp>
#include <radokit/constructive.hpp>
#include <radokit/equation.hpp>
#include <radokit/search.hpp>
#include <radokit/structures.hpp>

#include <json.hpp>

namespace radokit {

using Json = nlohmann::ordered_json;

// Exact integers are written as decimal strings.
auto big_json(const BigInt & v) -> Json;
auto rational_string(const Rational & v) -> std::string;

auto to_json(const LinearEquation & eq) -> Json;
auto canonical_json(const LinearEquation & eq) -> Json; // ["1","2","-4"]
auto equation_from_json(const Json & j) -> LinearEquation;

auto to_json(const RegularityResult & r) -> Json;
auto to_json(const SolutionTuple & t) -> Json;
auto to_json(const Coloring & c, bool embed_colors = true) -> Json;
auto to_json(const AvoidanceVerdict & v) -> Json;

auto to_json(const PigeonholeWitness & w) -> Json;
auto to_json(const APWitness & ap) -> Json;
auto to_json(const HomogeneousFamily & f) -> Json;
auto to_json(const HomogeneousFamily::Member & m) -> Json;
auto to_json(const MonochromaticFan & fan) -> Json;
auto to_json(const FanSearch & s) -> Json;
auto to_json(const Lemma22Trace & t) -> Json;
auto to_json(const Lemma22Result & r) -> Json;

auto to_json(const ExtensionSolution & s) -> Json;
auto to_json(const HyperplaneSolution & s) -> Json;
auto to_json(const Theorem1Proof & p) -> Json;
auto to_json(const Theorem1Outcome & o) -> Json;
auto to_json(const AtProof & p) -> Json;
auto to_json(const HyperplaneOutcome & o) -> Json;

auto to_json(const SearchCertificate & c) -> Json;
auto to_json(const RadoResult & r) -> Json;
auto to_json(const DorReport & r) -> Json;

}
