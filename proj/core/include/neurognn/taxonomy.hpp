#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace neurognn {

/// Electrode layout, 6-region partition, unit-sphere coordinates and the
/// per-node descriptor texts. Immutable after load.
///
/// Canonical node index, shared by every downstream matrix: electrodes
/// 0..N-1 in file order, then meta-nodes N..N+R-1 in region order.
class BrainTaxonomy {
public:
  std::vector<std::string> electrode_names;
  Eigen::MatrixXd coords;  // N x 3, rows unit-norm
  std::vector<std::string> region_names;
  std::vector<int> region_of;  // electrode index -> region index
  std::map<std::string, std::string> descriptors;  // node or region name -> text

  int electrode_count() const { return static_cast<int>(electrode_names.size()); }
  int region_count() const { return static_cast<int>(region_names.size()); }
  int total_nodes() const { return electrode_count() + region_count(); }

  /// Electrode indices per region, in canonical order.
  const std::vector<std::vector<int>>& region_members() const { return members_; }

  /// Electrode or meta-node name for a canonical node index.
  const std::string& node_name(int node) const;

  std::vector<std::string> node_names() const;

  const std::string& descriptor_for_node(int node) const;

  /// Throws SchemaError naming the offending key when an invariant fails.
  void validate() const;

  void finalize();  // builds region membership lists; called by loaders

private:
  std::vector<std::vector<int>> members_;
};

BrainTaxonomy load_taxonomy(const std::filesystem::path& path);
BrainTaxonomy taxonomy_from_json_text(const std::string& text, const std::string& origin);

/// The shipped 19-electrode, 6-region default (compiled in; also installed
/// as data/taxonomy.json).
const BrainTaxonomy& default_taxonomy();

}  // namespace neurognn
