#include "bicumulant/json_io.hpp"

namespace bicumulant {

Json to_json(const SetPartition& nu) {
  Json out = Json::array();
  for (const Block& b : nu.blocks()) {
    Json block = Json::array();
    for (Slot s : b) block.push_back(label(s));
    out.push_back(std::move(block));
  }
  return out;
}

Json to_json(const Tree& t) {
  if (t.is_leaf()) return label(t.slot());
  Json out = Json::array();
  for (const Tree& c : t.children()) out.push_back(to_json(c));
  return out;
}

Json to_json(const ReducedForest& f) {
  Json out = Json::array();
  for (const Tree& t : f.trees()) out.push_back(to_json(t));
  return out;
}

Json to_json(const ReducedForest& f, const Colouring& c) {
  Json colours = Json::array();
  for (const auto& [address, colour] : colouring_by_address(f, c))
    colours.push_back({{"vertex", address}, {"colour", colour}});
  return {{"forest", to_json(f)}, {"length", c.length()}, {"colours", std::move(colours)}};
}

Json to_json(const UpwardSequence& w) {
  Json out = Json::array();
  out.push_back(to_json(w.levels().front()));
  for (int i = 1; i < w.length(); ++i) out.push_back(w.grouping(i));
  return out;
}

Json to_json(const LawReport& r) {
  Json out = {{"law", r.law},
              {"shape", r.shape},
              {"equal", r.equal},
              {"lhs_terms", r.lhs.size()},
              {"rhs_terms", r.rhs.size()}};
  if (r.mismatch)
    out["mismatch"] = {{"term", render_text(r.mismatch->term)},
                       {"lhs", to_string(r.mismatch->lhs)},
                       {"rhs", to_string(r.mismatch->rhs)}};
  else
    out["mismatch"] = nullptr;
  if (!r.detail.empty()) out["detail"] = r.detail;
  out["millis"] = r.millis;
  return out;
}

Json to_json(const ModelReport& r) {
  Json out = {{"law", r.law}, {"shape", r.shape}, {"seed", r.seed}, {"trials", r.trials}, {"equal", r.equal}};
  if (!r.equal) {
    Json assignment = Json::object();
    for (const auto& [s, p] : r.assignment) assignment[label(s)] = p.to_string();
    out["assignment"] = std::move(assignment);
    out["lhs"] = r.lhs.to_string();
    out["rhs"] = r.rhs.to_string();
  }
  out["millis"] = r.millis;
  return out;
}

}  // namespace bicumulant
