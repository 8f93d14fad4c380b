#include "neurognn/signal.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "neurognn/errors.hpp"

namespace neurognn {

std::vector<double> resample(std::span<const double> signal, double src_hz, double dst_hz) {
  if (signal.empty()) throw std::invalid_argument("resample: empty signal");
  if (!(src_hz > 0) || !(dst_hz > 0)) throw std::invalid_argument("resample: non-positive rate");

  const std::size_t out_len =
      static_cast<std::size_t>(std::llround(static_cast<double>(signal.size()) * dst_hz / src_hz));
  std::vector<double> out(out_len);
  const double step = src_hz / dst_hz;  // source index advance per output sample
  for (std::size_t i = 0; i < out_len; ++i) {
    const double pos = static_cast<double>(i) * step;
    const auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= signal.size()) {
      out[i] = signal.back();
      continue;
    }
    const double frac = pos - static_cast<double>(lo);
    out[i] = signal[lo] * (1.0 - frac) + signal[lo + 1] * frac;
  }
  return out;
}

namespace {

struct WindowSeizure {
  const Annotation* ann;
  double isect_start;
  double isect_end;
};

// Seizures intersecting [w0, w1), ordered by intersection start.
std::vector<WindowSeizure> intersecting(std::span<const Annotation> anns, double w0, double w1) {
  std::vector<WindowSeizure> out;
  for (const auto& a : anns) {
    const double s = std::max(a.start_s, w0);
    const double e = std::min(a.end_s, w1);
    if (s < e) out.push_back({&a, s, e});
  }
  std::sort(out.begin(), out.end(), [](const WindowSeizure& a, const WindowSeizure& b) {
    if (a.isect_start != b.isect_start) return a.isect_start < b.isect_start;
    return a.isect_end < b.isect_end;
  });
  return out;
}

}  // namespace

std::vector<RawClip> window_and_label(const Eigen::MatrixXf& recording, double sample_rate_hz,
                                      std::span<const Annotation> annotations, WindowTask task,
                                      const std::string& id_prefix, const std::string& patient_id) {
  if (!(sample_rate_hz > 0)) throw std::invalid_argument("window_and_label: non-positive sample rate");
  for (const auto& a : annotations)
    if (a.end_s < a.start_s)
      throw std::invalid_argument("window_and_label: annotation with end before start");

  const long win_samples = std::lround(sample_rate_hz * kClipSeconds);
  const long total = recording.cols();
  const long n_windows = total / win_samples;  // shorter-than-60s remainder is dropped

  std::vector<RawClip> clips;
  for (long w = 0; w < n_windows; ++w) {
    const double w0 = static_cast<double>(w) * kClipSeconds;
    const double w1 = w0 + kClipSeconds;
    const auto hits = intersecting(annotations, w0, w1);

    RawClip clip;
    clip.clip_id = id_prefix + "_c" + std::to_string(w);
    clip.patient_id = patient_id;
    clip.sample_rate_hz = sample_rate_hz;
    clip.channels = recording.middleCols(w * win_samples, win_samples);

    if (hits.empty()) {
      if (task == WindowTask::Classification) continue;
      clip.label = SeizureLabel::NonSeizure;
      clips.push_back(std::move(clip));
      continue;
    }

    const SeizureLabel first_type = hits.front().ann->type;
    const bool multi_type = std::any_of(hits.begin(), hits.end(),
                                        [&](const WindowSeizure& h) { return h.ann->type != first_type; });
    clip.label = first_type;

    if (task == WindowTask::Classification && multi_type) {
      // Keep only the first seizure's span; zero-pad the rest of the window.
      const double cut_s = hits.front().isect_end - w0;
      const long cut = std::lround(cut_s * sample_rate_hz);
      if (cut < win_samples) clip.channels.rightCols(win_samples - cut).setZero();
    }
    clips.push_back(std::move(clip));
  }
  return clips;
}

namespace {

// FFTW planning is not thread-safe; execution of a ready plan is.
class SegmentFft {
public:
  static SegmentFft& instance() {
    static SegmentFft fft;
    return fft;
  }

  void transform(const double* in, std::complex<double>* out) {
    fftw_execute_dft_r2c(plan_, const_cast<double*>(in), reinterpret_cast<fftw_complex*>(out));
  }

private:
  SegmentFft() {
    in_ = fftw_alloc_real(kSegmentSamples);
    out_ = fftw_alloc_complex(kFrequencyBins);
    // FFTW_ESTIMATE keeps planning deterministic; FFTW_UNALIGNED lets the
    // plan run on caller buffers.
    plan_ = fftw_plan_dft_r2c_1d(kSegmentSamples, in_, out_, FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  ~SegmentFft() {
    fftw_destroy_plan(plan_);
    fftw_free(in_);
    fftw_free(out_);
  }

  double* in_;
  fftw_complex* out_;
  fftw_plan plan_;
};

}  // namespace

std::vector<double> fft_log_amplitude(std::span<const double> segment) {
  if (segment.size() != kSegmentSamples)
    throw std::invalid_argument("fft_log_amplitude: expected " + std::to_string(kSegmentSamples) +
                                " samples, got " + std::to_string(segment.size()));
  for (double v : segment)
    if (!std::isfinite(v)) throw std::invalid_argument("fft_log_amplitude: non-finite sample");

  std::vector<std::complex<double>> spectrum(kFrequencyBins);
  SegmentFft::instance().transform(segment.data(), spectrum.data());

  std::vector<double> out(kFrequencyBins);
  for (int k = 0; k < kFrequencyBins; ++k) out[k] = std::log(std::abs(spectrum[k]) + kLogEpsilon);
  return out;
}

FeatureClip clip_to_features(const RawClip& clip) {
  clip.validate();
  if (clip.sample_rate_hz != kTargetSampleRateHz)
    throw std::invalid_argument(clip.clip_id + ": clip_to_features requires 200 Hz input, got " +
                                std::to_string(clip.sample_rate_hz) + " (resample first)");

  FeatureClip fc;
  fc.clip_id = clip.clip_id;
  fc.patient_id = clip.patient_id;
  fc.label = clip.label;
  fc.nodes = clip.channel_count();
  fc.frames = kClipFrames;
  fc.bins = kFrequencyBins;
  fc.values.resize(static_cast<std::size_t>(fc.nodes) * fc.frames * fc.bins);

  std::vector<double> segment(kSegmentSamples);
  for (int n = 0; n < fc.nodes; ++n) {
    for (int t = 0; t < fc.frames; ++t) {
      for (int s = 0; s < kSegmentSamples; ++s)
        segment[s] = clip.channels(n, t * kSegmentSamples + s);
      const auto logamp = fft_log_amplitude(segment);
      for (int k = 0; k < fc.bins; ++k) fc.at(n, t, k) = static_cast<float>(logamp[k]);
    }
  }
  return fc;
}

}  // namespace neurognn
