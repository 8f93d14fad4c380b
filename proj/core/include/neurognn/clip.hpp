#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <string>
#include <vector>

#include "neurognn/labels.hpp"

namespace neurognn {

inline constexpr double kTargetSampleRateHz = 200.0;
inline constexpr int kClipSeconds = 60;
inline constexpr int kSegmentSamples = 200;     // one second at 200 Hz
inline constexpr int kFrequencyBins = 101;      // floor(200/2) + 1
inline constexpr int kClipFrames = 60;          // one log-amplitude frame per second

/// One 60-second multichannel EEG window. Values are microvolts.
/// channels is N x (sample_rate_hz * 60); padded spans are exactly 0.
struct RawClip {
  std::string clip_id;
  std::string patient_id;
  SeizureLabel label = SeizureLabel::NonSeizure;
  double sample_rate_hz = kTargetSampleRateHz;
  Eigen::MatrixXf channels;

  int channel_count() const { return static_cast<int>(channels.rows()); }
  int sample_count() const { return static_cast<int>(channels.cols()); }

  /// Throws SchemaError when an invariant is broken.
  void validate() const;
};

/// Per-second FFT log-amplitude representation: nodes x frames x bins.
struct FeatureClip {
  std::string clip_id;
  std::string patient_id;
  SeizureLabel label = SeizureLabel::NonSeizure;
  int nodes = 0;
  int frames = 0;
  int bins = 0;
  std::vector<float> values;  // row-major [node][frame][bin]

  float& at(int n, int t, int k) { return values[(static_cast<std::size_t>(n) * frames + t) * bins + k]; }
  float at(int n, int t, int k) const {
    return values[(static_cast<std::size_t>(n) * frames + t) * bins + k];
  }

  /// Node n as a frames*bins row (frame-major), used as the recurrent input series.
  Eigen::MatrixXd node_series(int n) const;

  void validate() const;
};

// Clip container format "NGC1": one clip per file, float32 little-endian
// payload after a fixed-order header. The payload flag selects raw
// (N x samples) or feature (N x frames x bins) content.
inline constexpr char kClipMagic[4] = {'N', 'G', 'C', '1'};

void write_raw_clip(const std::filesystem::path& path, const RawClip& clip);
RawClip read_raw_clip(const std::filesystem::path& path);

void write_feature_clip(const std::filesystem::path& path, const FeatureClip& clip);
FeatureClip read_feature_clip(const std::filesystem::path& path);

struct ClipHeader {
  bool is_feature = false;
  std::string clip_id;
  std::string patient_id;
  SeizureLabel label = SeizureLabel::NonSeizure;
};

/// Reads only the header, without the payload.
ClipHeader peek_clip_header(const std::filesystem::path& path);

}  // namespace neurognn
