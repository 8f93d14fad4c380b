#include "neurognn/taxonomy.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "neurognn/errors.hpp"

namespace neurognn {

// Generated from data/taxonomy.json at configure time.
extern const char* const kDefaultTaxonomyJson;

const std::string& BrainTaxonomy::node_name(int node) const {
  if (node < 0 || node >= total_nodes()) throw SchemaError("node index out of range");
  if (node < electrode_count()) return electrode_names[node];
  return region_names[node - electrode_count()];
}

std::vector<std::string> BrainTaxonomy::node_names() const {
  std::vector<std::string> out;
  out.reserve(total_nodes());
  for (int i = 0; i < total_nodes(); ++i) out.push_back(node_name(i));
  return out;
}

const std::string& BrainTaxonomy::descriptor_for_node(int node) const {
  const auto it = descriptors.find(node_name(node));
  if (it == descriptors.end()) throw SchemaError("missing descriptor for node " + node_name(node));
  return it->second;
}

void BrainTaxonomy::finalize() {
  members_.assign(region_count(), {});
  for (int e = 0; e < electrode_count(); ++e) {
    const int r = region_of[e];
    if (r < 0 || r >= region_count())
      throw SchemaError("electrode " + electrode_names[e] + " mapped to invalid region index");
    members_[r].push_back(e);
  }
}

void BrainTaxonomy::validate() const {
  if (electrode_count() == 0) throw SchemaError("taxonomy has no electrodes");
  if (region_count() == 0) throw SchemaError("taxonomy has no regions");
  if (coords.rows() != electrode_count() || coords.cols() != 3)
    throw SchemaError("coords must be one xyz row per electrode");
  if (static_cast<int>(region_of.size()) != electrode_count())
    throw SchemaError("region_of must cover every electrode");
  for (int e = 0; e < electrode_count(); ++e) {
    const double norm = coords.row(e).norm();
    if (std::abs(norm - 1.0) > 1e-6)
      throw SchemaError("electrode " + electrode_names[e] + " coordinates are not unit-norm (|" +
                        std::to_string(norm) + "|)");
  }
  if (static_cast<int>(members_.size()) != region_count())
    throw SchemaError("taxonomy not finalized");
  for (int r = 0; r < region_count(); ++r)
    if (members_[r].empty()) throw SchemaError("region " + region_names[r] + " has no electrodes");
  for (int i = 0; i < total_nodes(); ++i) {
    const auto it = descriptors.find(node_name(i));
    if (it == descriptors.end() || it->second.empty())
      throw SchemaError("missing descriptor for " + node_name(i));
  }
}

BrainTaxonomy taxonomy_from_json_text(const std::string& text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw SchemaError(origin + ": " + ex.what());
  }

  BrainTaxonomy tax;
  try {
    for (const auto& e : j.at("electrodes")) {
      tax.electrode_names.push_back(e.at("name").get<std::string>());
      const auto xyz = e.at("xyz");
      if (xyz.size() != 3) throw SchemaError(origin + ": xyz must have 3 components");
      tax.coords.conservativeResize(static_cast<int>(tax.electrode_names.size()), 3);
      for (int c = 0; c < 3; ++c)
        tax.coords(static_cast<int>(tax.electrode_names.size()) - 1, c) = xyz[c].get<double>();
    }
    for (const auto& r : j.at("regions")) tax.region_names.push_back(r.get<std::string>());

    const auto& region_of = j.at("region_of");
    for (const auto& name : tax.electrode_names) {
      if (!region_of.contains(name))
        throw SchemaError(origin + ": region_of missing electrode " + name);
      const std::string region = region_of.at(name).get<std::string>();
      const auto it = std::find(tax.region_names.begin(), tax.region_names.end(), region);
      if (it == tax.region_names.end())
        throw SchemaError(origin + ": electrode " + name + " mapped to unknown region " + region);
      tax.region_of.push_back(static_cast<int>(it - tax.region_names.begin()));
    }
    for (const auto& [key, value] : j.at("descriptors").items())
      tax.descriptors[key] = value.get<std::string>();
  } catch (const nlohmann::json::exception& ex) {
    throw SchemaError(origin + ": " + ex.what());
  }

  tax.finalize();
  tax.validate();
  return tax;
}

BrainTaxonomy load_taxonomy(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw SchemaError("cannot open taxonomy file: " + path.string());
  std::stringstream ss;
  ss << is.rdbuf();
  return taxonomy_from_json_text(ss.str(), path.string());
}

const BrainTaxonomy& default_taxonomy() {
  static const BrainTaxonomy tax = taxonomy_from_json_text(kDefaultTaxonomyJson, "<builtin taxonomy>");
  return tax;
}

}  // namespace neurognn
