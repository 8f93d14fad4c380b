#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "neurognn/labels.hpp"

namespace neurognn {

enum class Split { Train, Val, Test };

const char* split_name(Split s);
Split split_from_name(const std::string& s);

struct ManifestEntry {
  std::string clip_id;
  std::string path;  // relative to the manifest's directory
  SeizureLabel label = SeizureLabel::NonSeizure;
  std::string patient_id;
};

/// Index of one dataset split. Serialized as UTF-8 JSON with exactly the
/// fields below; synthetic datasets additionally carry a generator block
/// documenting class signatures.
struct DatasetManifest {
  int version = 1;
  Split split = Split::Train;
  std::int64_t seed = 0;
  std::vector<ManifestEntry> entries;
  nlohmann::json generator;  // optional synthetic-signature documentation

  /// Checks clip_id uniqueness; with base_dir set, also opens every clip
  /// file and verifies its header clip_id.
  void validate(const std::optional<std::filesystem::path>& base_dir = std::nullopt) const;

  std::vector<ManifestEntry> entries_with_label(SeizureLabel l) const;
  void sort_by_clip_id();
};

nlohmann::json manifest_to_json(const DatasetManifest& m);
DatasetManifest manifest_from_json(const nlohmann::json& j);

void save_manifest(const std::filesystem::path& path, const DatasetManifest& m);
DatasetManifest load_manifest(const std::filesystem::path& path);

/// Conventional manifest filename for a split within a dataset directory.
std::filesystem::path manifest_path(const std::filesystem::path& dir, Split split);

/// 9:1-style random partition of a training manifest into train + val,
/// deterministic for the seed.
std::pair<DatasetManifest, DatasetManifest> split_train_val(const DatasetManifest& train,
                                                            double val_ratio, std::uint64_t seed);

}  // namespace neurognn
