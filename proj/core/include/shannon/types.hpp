#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace shannon {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;
using Color = std::int32_t;

inline constexpr Color kBlank = -1;
inline constexpr EdgeId kNoEdge = -1;
inline constexpr Vertex kNoVertex = -1;

// Malformed graph or coloring input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An assignment or shift would produce an improper coloring.
class ColoringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal state contradicts a proven property. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace shannon
