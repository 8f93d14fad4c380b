#include "neurognn/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "neurognn/clip.hpp"
#include "neurognn/errors.hpp"
#include "neurognn/rng.hpp"

namespace neurognn {

const char* split_name(Split s) {
  switch (s) {
    case Split::Train: return "train";
    case Split::Val: return "val";
    case Split::Test: return "test";
  }
  throw SchemaError("invalid split");
}

Split split_from_name(const std::string& s) {
  if (s == "train") return Split::Train;
  if (s == "val") return Split::Val;
  if (s == "test") return Split::Test;
  throw SchemaError("unknown split name: " + s);
}

void DatasetManifest::validate(const std::optional<std::filesystem::path>& base_dir) const {
  std::unordered_set<std::string> seen;
  for (const auto& e : entries) {
    if (e.clip_id.empty()) throw SchemaError("manifest entry without clip_id");
    if (!seen.insert(e.clip_id).second) throw SchemaError("duplicate clip_id in manifest: " + e.clip_id);
    if (base_dir) {
      const auto p = *base_dir / e.path;
      const auto header = peek_clip_header(p);
      if (header.clip_id != e.clip_id)
        throw SchemaError("clip header id '" + header.clip_id + "' does not match manifest entry '" +
                          e.clip_id + "' at " + p.string());
    }
  }
}

std::vector<ManifestEntry> DatasetManifest::entries_with_label(SeizureLabel l) const {
  std::vector<ManifestEntry> out;
  for (const auto& e : entries)
    if (e.label == l) out.push_back(e);
  return out;
}

void DatasetManifest::sort_by_clip_id() {
  std::sort(entries.begin(), entries.end(),
            [](const ManifestEntry& a, const ManifestEntry& b) { return a.clip_id < b.clip_id; });
}

nlohmann::json manifest_to_json(const DatasetManifest& m) {
  nlohmann::json j;
  j["version"] = m.version;
  j["split"] = split_name(m.split);
  j["seed"] = m.seed;
  auto arr = nlohmann::json::array();
  for (const auto& e : m.entries) {
    arr.push_back({{"clip_id", e.clip_id},
                   {"path", e.path},
                   {"label", label_name(e.label)},
                   {"patient_id", e.patient_id}});
  }
  j["entries"] = arr;
  if (!m.generator.is_null()) j["generator"] = m.generator;
  return j;
}

DatasetManifest manifest_from_json(const nlohmann::json& j) {
  DatasetManifest m;
  try {
    m.version = j.at("version").get<int>();
    m.split = split_from_name(j.at("split").get<std::string>());
    m.seed = j.at("seed").get<std::int64_t>();
    for (const auto& e : j.at("entries")) {
      ManifestEntry entry;
      entry.clip_id = e.at("clip_id").get<std::string>();
      entry.path = e.at("path").get<std::string>();
      entry.label = label_from_name(e.at("label").get<std::string>());
      entry.patient_id = e.at("patient_id").get<std::string>();
      m.entries.push_back(std::move(entry));
    }
    if (j.contains("generator")) m.generator = j.at("generator");
  } catch (const nlohmann::json::exception& ex) {
    throw SchemaError(std::string("malformed manifest: ") + ex.what());
  }
  return m;
}

void save_manifest(const std::filesystem::path& path, const DatasetManifest& m) {
  std::ofstream os(path, std::ios::trunc);
  if (!os) throw SchemaError("cannot write manifest: " + path.string());
  os << manifest_to_json(m).dump(2) << "\n";
}

DatasetManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw SchemaError("cannot open manifest: " + path.string());
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw SchemaError(path.string() + ": " + ex.what());
  }
  return manifest_from_json(j);
}

std::filesystem::path manifest_path(const std::filesystem::path& dir, Split split) {
  return dir / ("manifest_" + std::string(split_name(split)) + ".json");
}

std::pair<DatasetManifest, DatasetManifest> split_train_val(const DatasetManifest& train,
                                                            double val_ratio, std::uint64_t seed) {
  if (!(val_ratio > 0.0 && val_ratio < 1.0)) throw ConfigError("val_ratio must be in (0,1)");
  DatasetManifest tr = train;
  tr.entries.clear();
  DatasetManifest va = train;
  va.entries.clear();
  va.split = Split::Val;

  std::vector<ManifestEntry> pool = train.entries;
  std::sort(pool.begin(), pool.end(),
            [](const ManifestEntry& a, const ManifestEntry& b) { return a.clip_id < b.clip_id; });
  Rng rng(mix_seed(seed, 0x51));
  rng.shuffle(pool);
  const std::size_t n_val = static_cast<std::size_t>(std::lround(val_ratio * static_cast<double>(pool.size())));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (i < n_val)
      va.entries.push_back(pool[i]);
    else
      tr.entries.push_back(pool[i]);
  }
  tr.sort_by_clip_id();
  va.sort_by_clip_id();
  return {tr, va};
}

}  // namespace neurognn
