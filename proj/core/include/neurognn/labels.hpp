#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "neurognn/errors.hpp"

namespace neurognn {

/// Clip-level label: background or one of the four grouped seizure types
/// (combined focal, generalized non-specific, absence, combined tonic).
enum class SeizureLabel : std::uint8_t {
  NonSeizure = 0,
  CF = 1,
  GN = 2,
  AB = 3,
  CT = 4,
};

inline constexpr int kNumLabels = 5;
inline constexpr int kNumSeizureClasses = 4;

inline constexpr std::array<SeizureLabel, 4> kSeizureClasses = {
    SeizureLabel::CF, SeizureLabel::GN, SeizureLabel::AB, SeizureLabel::CT};

inline bool is_seizure(SeizureLabel l) { return l != SeizureLabel::NonSeizure; }

/// 0..3 index of a seizure label within the 4-class task.
inline int seizure_class_index(SeizureLabel l) {
  if (!is_seizure(l)) throw ConfigError("non_seizure clip has no seizure class index");
  return static_cast<int>(l) - 1;
}

inline const char* label_name(SeizureLabel l) {
  switch (l) {
    case SeizureLabel::NonSeizure: return "non_seizure";
    case SeizureLabel::CF: return "CF";
    case SeizureLabel::GN: return "GN";
    case SeizureLabel::AB: return "AB";
    case SeizureLabel::CT: return "CT";
  }
  throw SchemaError("invalid label code");
}

inline SeizureLabel label_from_name(const std::string& s) {
  if (s == "non_seizure") return SeizureLabel::NonSeizure;
  if (s == "CF") return SeizureLabel::CF;
  if (s == "GN") return SeizureLabel::GN;
  if (s == "AB") return SeizureLabel::AB;
  if (s == "CT") return SeizureLabel::CT;
  throw SchemaError("unknown label name: " + s);
}

inline SeizureLabel label_from_code(std::uint8_t code) {
  if (code >= kNumLabels) throw SchemaError("label code out of range: " + std::to_string(code));
  return static_cast<SeizureLabel>(code);
}

}  // namespace neurognn
