#include "cyclerecon/json_out.hpp"

#include <map>

namespace cyclerecon {

using nlohmann::ordered_json;

ordered_json to_json(const Decision& d) {
  ordered_json j;
  j["connected"] = d.connected;
  j["reason"] = to_string(d.reason);
  return j;
}

ordered_json to_json(const ComponentReport& rep) {
  ordered_json j;
  j["source"] = rep.source.str();
  j["target"] = rep.target.str();
  j["contractible"] = rep.contractible;
  if (rep.contractible) {
    j["connected_everywhere"] = true;
    return j;
  }
  j["root"] = rep.root.str();
  j["root_multiplicity"] = rep.r;
  j["root_length"] = rep.s;
  j["max_root_power"] = rep.max_root_power;
  j["max_root_power_reversed"] = rep.max_root_power_reversed;
  j["max_wind"] = rep.max_wind;
  j["max_wind_reversed"] = rep.max_wind_reversed;
  j["exceptional"] = rep.exceptional;
  ordered_json winds = ordered_json::array();
  for (const auto& wr : rep.winds) {
    ordered_json row;
    row["w"] = wr.w;
    row["status"] = to_string(wr.status);
    row["case"] = to_string(wr.branch);
    if (wr.w != 0 && wr.status != WindStatus::Empty) {
      row["gamma"] = wr.gamma;
      if (wr.status == WindStatus::Blocks) {
        row["block_count_root_rotations"] = wr.block_residues;
        row["block_count_target_positions"] = wr.block_positions;
        row["block_count_inhabited"] = wr.block_inhabited;
      }
    }
    winds.push_back(std::move(row));
  }
  j["winds"] = std::move(winds);
  return j;
}

ordered_json to_json(const VerifyReport& rep) {
  ordered_json j;
  j["source"] = rep.source;
  j["target"] = rep.target;
  j["hom_count"] = rep.hom_count;
  j["pair_count"] = rep.pair_count;
  j["mismatch_total"] = rep.mismatch_total;
  j["mismatches"] = rep.mismatches;
  ordered_json audits = ordered_json::array();
  for (const auto& a : rep.block_audits) {
    ordered_json row;
    row["w"] = a.w;
    row["block_count_root_rotations"] = a.residue_count;
    row["block_count_target_positions"] = a.position_count;
    row["oracle_components"] = a.oracle_count;
    switch (a.match) {
      case BlockAudit::OracleMatch::Residues:
        row["oracle_matches"] = "root_rotations";
        break;
      case BlockAudit::OracleMatch::Positions:
        row["oracle_matches"] = "target_positions";
        break;
      case BlockAudit::OracleMatch::Both:
        row["oracle_matches"] = "both";
        break;
      default:
        row["oracle_matches"] = "neither";
        break;
    }
    audits.push_back(std::move(row));
  }
  j["block_audits"] = std::move(audits);
  return j;
}

ordered_json hom_row(const CycleHom& h) {
  ordered_json row;
  row["images"] = images_to_string(h.images);
  row["base"] = h.images[0];
  row["wind"] = wind(h);
  const Monotonicity mono = monotonicity(h);
  row["monotonicity"] = to_string(mono);
  if (mono == Monotonicity::Increasing) {
    const SelectionEncoding enc = hom_to_selection(h);
    ordered_json alpha = ordered_json::array();
    for (std::size_t a : enc.alpha) alpha.push_back(a);
    row["selection"] = std::move(alpha);
  }
  return row;
}

ordered_json hom_graph_summary(const HomGraph& g) {
  ordered_json j;
  j["source"] = g.source.str();
  j["target"] = g.target.str();
  j["hom_count"] = g.size();
  ordered_json comps = ordered_json::array();
  for (std::size_t c = 0; c < g.components.size(); ++c) {
    const auto& comp = g.components[c];
    ordered_json row;
    row["id"] = c;
    if (comp.single_wind)
      row["wind"] = comp.wind;
    else
      row["wind"] = nullptr;
    row["size"] = comp.size;
    row["cyclic"] = comp.cyclic;
    comps.push_back(std::move(row));
  }
  j["components"] = std::move(comps);

  // Aggregated per-wind counts, winds ascending; components mixing winds
  // (possible under a contractible target) are skipped here.
  std::map<int, std::pair<std::size_t, std::size_t>> tally;
  for (const auto& comp : g.components) {
    if (!comp.single_wind) continue;
    auto& t = tally[comp.wind];
    ++t.first;
    if (comp.cyclic) ++t.second;
  }
  ordered_json winds = ordered_json::array();
  for (const auto& [w, t] : tally) {
    ordered_json row;
    row["w"] = w;
    row["components"] = t.first;
    row["cyclic_components"] = t.second;
    winds.push_back(std::move(row));
  }
  j["winds"] = std::move(winds);
  return j;
}

}  // namespace cyclerecon
