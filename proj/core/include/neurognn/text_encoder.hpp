#pragma once

#include <Eigen/Core>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

namespace neurognn {

/// Maps arbitrary UTF-8 text to a fixed-length vector. Implementations must
/// be deterministic: the same text always yields the same vector.
class TextEncoder {
public:
  virtual ~TextEncoder() = default;
  virtual int dim() const = 0;
  virtual Eigen::VectorXd encode(std::string_view text) const = 0;
  virtual std::string name() const = 0;
};

inline constexpr int kFallbackEncoderDim = 256;

/// Dependency-free descriptor encoder: lowercase, split on non-alphanumeric
/// characters, FNV-1a-hash each token into one of 256 buckets, accumulate
/// counts, L2-normalize. Empty text maps to the zero vector.
class FallbackEncoder : public TextEncoder {
public:
  int dim() const override { return kFallbackEncoderDim; }
  Eigen::VectorXd encode(std::string_view text) const override;
  std::string name() const override { return "fallback"; }
};

/// Reads a JSON object mapping descriptor text to a precomputed embedding
/// (for users who run an external language model offline).
class PrecomputedEncoder : public TextEncoder {
public:
  explicit PrecomputedEncoder(const std::string& json_path);
  int dim() const override { return dim_; }
  Eigen::VectorXd encode(std::string_view text) const override;
  std::string name() const override { return "external:" + path_; }

private:
  std::string path_;
  int dim_ = 0;
  std::map<std::string, Eigen::VectorXd> table_;
};

using EncoderFactory = std::function<std::unique_ptr<TextEncoder>()>;

/// Registers a named encoder reachable via "external:<name>".
void register_text_encoder(const std::string& name, EncoderFactory factory);

/// Resolves an encoder spec: "fallback", or "external:<name>" where <name>
/// is first looked up in the registry and otherwise treated as the path of
/// a precomputed-embeddings JSON file.
std::unique_ptr<TextEncoder> make_text_encoder(const std::string& spec);

}  // namespace neurognn
