#pragma once

#include <string>

#include "dupdist/approx_engine.hpp"
#include "dupdist/bounds.hpp"
#include "dupdist/seqcore.hpp"

namespace dupdist {

/// {"original": "...", "beta": b, "steps": [{"i":..,"h":..,"keep":"first"|"second"}],
///  "final": "..."}; processes under the h-dependent budget carry "a" instead
/// of a non-zero "beta".
std::string process_to_json(const DedupProcess& p, int indent = -1);
/// Throws InvalidInput on malformed JSON or fields. Does not replay.
DedupProcess process_from_json(const std::string& text);

/// {"i":..,"h":..,"mismatches":..,"k":..,"ell":..,"B":..,"pair":[i,j],"r":..}
std::string witness_to_json(const RepeatWitness& w, int indent = -1);
RepeatWitness witness_from_json(const std::string& text);

std::string report_to_json(const BoundReport& report, int indent = -1);

}  // namespace dupdist
