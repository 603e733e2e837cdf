#pragma once

#include "bicumulant/colourings.hpp"
#include "bicumulant/laws.hpp"
#include "bicumulant/sequences.hpp"

#include <json.hpp>

namespace bicumulant {

using Json = nlohmann::ordered_json;

/// Blocks as lists of slot labels.
Json to_json(const SetPartition& nu);
/// A leaf is its slot label, an internal vertex the list of its children.
Json to_json(const Tree& t);
/// List of trees.
Json to_json(const ReducedForest& f);
/// {"forest": ..., "colours": [{"vertex": address, "colour": c}, ...]}.
Json to_json(const ReducedForest& f, const Colouring& c);
/// List of levels. Level 1 blocks list slot labels; later blocks list the
/// indices of the previous level's blocks.
Json to_json(const UpwardSequence& w);
/// {law, shape, equal, lhs_terms, rhs_terms, mismatch, millis}, with
/// "detail" for laws that are not expression comparisons.
Json to_json(const LawReport& r);
Json to_json(const ModelReport& r);

}  // namespace bicumulant
