#pragma once

#include <optional>
#include <string_view>

namespace qent {

/// Division algebra over which states are defined. Real ⊂ Complex ⊂ Quaternion.
enum class ScalarKind { Real, Complex, Quaternion };

constexpr std::string_view to_string(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::Real: return "real";
    case ScalarKind::Complex: return "complex";
    case ScalarKind::Quaternion: return "quaternion";
  }
  return "unknown";
}

/// Two-level system name for a kind: rebit, qubit, quaterbit.
constexpr std::string_view system_name(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::Real: return "rebit";
    case ScalarKind::Complex: return "qubit";
    case ScalarKind::Quaternion: return "quaterbit";
  }
  return "unknown";
}

/// Accepts both algebra names ("real") and system names ("rebit").
constexpr std::optional<ScalarKind> parse_kind(std::string_view text) {
  if (text == "real" || text == "rebit") return ScalarKind::Real;
  if (text == "complex" || text == "qubit") return ScalarKind::Complex;
  if (text == "quaternion" || text == "quaterbit") return ScalarKind::Quaternion;
  return std::nullopt;
}

}  // namespace qent
