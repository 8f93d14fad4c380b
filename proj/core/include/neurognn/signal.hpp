#pragma once

#include <Eigen/Core>
#include <span>
#include <string>
#include <vector>

#include "neurognn/clip.hpp"

namespace neurognn {

inline constexpr double kLogEpsilon = 1e-8;  // added before log to avoid -inf

/// Linear-interpolation resampling. Both grids share t = 0 at index 0 with
/// spacing 1/rate; output length = round(len * dst_hz / src_hz). Target
/// times beyond the last source sample clamp to the final value.
std::vector<double> resample(std::span<const double> signal, double src_hz, double dst_hz);

struct Annotation {
  double start_s = 0;
  double end_s = 0;
  SeizureLabel type = SeizureLabel::NonSeizure;
};

enum class WindowTask { Detection, Classification };

/// Cuts a 200 Hz recording into non-overlapping 60 s windows.
///
/// Detection: every window is emitted; a window intersecting any annotated
/// seizure carries that seizure's type (earliest intersection wins), else
/// non_seizure. Classification: only windows intersecting a seizure are
/// emitted, and a window where one seizure ends and another type begins is
/// truncated at the first seizure's end and zero-padded back to 60 s, so
/// each emitted clip holds exactly one type.
///
/// Clip ids are "<id_prefix>_c<k>" with k the window index, which downstream
/// pretraining uses to locate each clip's 12 s continuation.
std::vector<RawClip> window_and_label(const Eigen::MatrixXf& recording, double sample_rate_hz,
                                      std::span<const Annotation> annotations, WindowTask task,
                                      const std::string& id_prefix, const std::string& patient_id);

/// ln(|DFT(segment)[k]| + eps) for k = 0..100 on a 200-sample segment.
std::vector<double> fft_log_amplitude(std::span<const double> segment);

/// Full per-clip featurization: features[n][t] = fft_log_amplitude of the
/// t-th one-second segment of channel n.
FeatureClip clip_to_features(const RawClip& clip);

}  // namespace neurognn
