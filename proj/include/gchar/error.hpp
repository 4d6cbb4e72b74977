#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gchar {

enum class ErrorKind {
  MinimalOfTrivial,
  Unsolvable,
  NonAssociative,
  MixedGroups,
  MixedChains,
  HNotProper,
  ChainLengthMismatch,
  ChainMisaligned,
  NotCyclic,
  NotAbsorbing,
  ShapeMismatch,
  InvalidArgument,
  Parse,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::MinimalOfTrivial: return "MinimalOfTrivial";
    case ErrorKind::Unsolvable: return "Unsolvable";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::MixedGroups: return "MixedGroups";
    case ErrorKind::MixedChains: return "MixedChains";
    case ErrorKind::HNotProper: return "HNotProper";
    case ErrorKind::ChainLengthMismatch: return "ChainLengthMismatch";
    case ErrorKind::ChainMisaligned: return "ChainMisaligned";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::NotAbsorbing: return "NotAbsorbing";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace gchar
