#include "neurognn/clip.hpp"

#include <cmath>
#include <fstream>

#include "neurognn/binio.hpp"

namespace neurognn {
namespace {

constexpr std::uint8_t kPayloadRaw = 0;
constexpr std::uint8_t kPayloadFeature = 1;

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw SchemaError("cannot open for writing: " + path.string());
  return os;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw SchemaError("cannot open for reading: " + path.string());
  return is;
}

void check_magic(std::istream& is, const std::filesystem::path& path) {
  char m[4];
  is.read(m, 4);
  if (is.gcount() != 4 || m[0] != 'N' || m[1] != 'G' || m[2] != 'C' || m[3] != '1')
    throw SchemaError("not an NGC1 clip file: " + path.string());
}

// Header layout (after magic): payload flag u8, label u8, clip_id string,
// patient_id string, n u32, dim1 u32, dim2 u32, sample_rate f32.
// Raw clips use dim1 = samples per channel, dim2 = 1.
void write_header(std::ostream& os, std::uint8_t flag, const std::string& clip_id,
                  const std::string& patient_id, SeizureLabel label, std::uint32_t n,
                  std::uint32_t dim1, std::uint32_t dim2, float rate) {
  os.write(kClipMagic, 4);
  write_u8(os, flag);
  write_u8(os, static_cast<std::uint8_t>(label));
  write_string(os, clip_id);
  write_string(os, patient_id);
  write_u32(os, n);
  write_u32(os, dim1);
  write_u32(os, dim2);
  write_f32(os, rate);
}

}  // namespace

void RawClip::validate() const {
  if (clip_id.empty()) throw SchemaError("raw clip without clip_id");
  if (!(sample_rate_hz > 0)) throw SchemaError(clip_id + ": non-positive sample rate");
  if (channels.rows() < 1) throw SchemaError(clip_id + ": no channels");
  const long expected = std::lround(sample_rate_hz * kClipSeconds);
  if (channels.cols() != expected)
    throw SchemaError(clip_id + ": expected " + std::to_string(expected) + " samples per channel, got " +
                      std::to_string(channels.cols()));
  if (!channels.allFinite()) throw SchemaError(clip_id + ": non-finite sample values");
}

Eigen::MatrixXd FeatureClip::node_series(int n) const {
  Eigen::MatrixXd out(frames, bins);
  for (int t = 0; t < frames; ++t)
    for (int k = 0; k < bins; ++k) out(t, k) = at(n, t, k);
  return out;
}

void FeatureClip::validate() const {
  if (clip_id.empty()) throw SchemaError("feature clip without clip_id");
  if (nodes < 1 || frames < 1 || bins < 1) throw SchemaError(clip_id + ": degenerate feature shape");
  if (values.size() != static_cast<std::size_t>(nodes) * frames * bins)
    throw SchemaError(clip_id + ": feature payload size mismatch");
  for (float v : values)
    if (!std::isfinite(v)) throw SchemaError(clip_id + ": non-finite feature value");
}

void write_raw_clip(const std::filesystem::path& path, const RawClip& clip) {
  clip.validate();
  auto os = open_out(path);
  write_header(os, kPayloadRaw, clip.clip_id, clip.patient_id, clip.label,
               static_cast<std::uint32_t>(clip.channels.rows()),
               static_cast<std::uint32_t>(clip.channels.cols()), 1,
               static_cast<float>(clip.sample_rate_hz));
  for (int r = 0; r < clip.channels.rows(); ++r)
    for (int c = 0; c < clip.channels.cols(); ++c) write_f32(os, clip.channels(r, c));
  if (!os) throw SchemaError("write failed: " + path.string());
}

RawClip read_raw_clip(const std::filesystem::path& path) {
  auto is = open_in(path);
  check_magic(is, path);
  if (read_u8(is) != kPayloadRaw) throw SchemaError(path.string() + ": expected raw payload");
  RawClip clip;
  clip.label = label_from_code(read_u8(is));
  clip.clip_id = read_string(is);
  clip.patient_id = read_string(is);
  const std::uint32_t n = read_u32(is);
  const std::uint32_t samples = read_u32(is);
  read_u32(is);  // dim2, always 1 for raw
  clip.sample_rate_hz = read_f32(is);
  clip.channels.resize(n, samples);
  std::vector<float> row(samples);
  for (std::uint32_t r = 0; r < n; ++r) {
    read_f32_array(is, row.data(), samples);
    for (std::uint32_t c = 0; c < samples; ++c) clip.channels(static_cast<int>(r), static_cast<int>(c)) = row[c];
  }
  clip.validate();
  return clip;
}

void write_feature_clip(const std::filesystem::path& path, const FeatureClip& clip) {
  clip.validate();
  auto os = open_out(path);
  write_header(os, kPayloadFeature, clip.clip_id, clip.patient_id, clip.label,
               static_cast<std::uint32_t>(clip.nodes), static_cast<std::uint32_t>(clip.frames),
               static_cast<std::uint32_t>(clip.bins), static_cast<float>(kTargetSampleRateHz));
  write_f32_array(os, clip.values.data(), clip.values.size());
  if (!os) throw SchemaError("write failed: " + path.string());
}

FeatureClip read_feature_clip(const std::filesystem::path& path) {
  auto is = open_in(path);
  check_magic(is, path);
  if (read_u8(is) != kPayloadFeature) throw SchemaError(path.string() + ": expected feature payload");
  FeatureClip clip;
  clip.label = label_from_code(read_u8(is));
  clip.clip_id = read_string(is);
  clip.patient_id = read_string(is);
  clip.nodes = static_cast<int>(read_u32(is));
  clip.frames = static_cast<int>(read_u32(is));
  clip.bins = static_cast<int>(read_u32(is));
  read_f32(is);  // sample rate, informational for features
  clip.values.resize(static_cast<std::size_t>(clip.nodes) * clip.frames * clip.bins);
  read_f32_array(is, clip.values.data(), clip.values.size());
  clip.validate();
  return clip;
}

ClipHeader peek_clip_header(const std::filesystem::path& path) {
  auto is = open_in(path);
  check_magic(is, path);
  ClipHeader h;
  h.is_feature = read_u8(is) == kPayloadFeature;
  h.label = label_from_code(read_u8(is));
  h.clip_id = read_string(is);
  h.patient_id = read_string(is);
  return h;
}

}  // namespace neurognn
