#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace romandom {

/// A function V -> {0,1,2}, one entry per vertex. Entries are not range
/// checked on construction; `validate_rkdf` reports out-of-range values.
struct Labeling {
  std::vector<std::uint8_t> values;

  Labeling() = default;
  explicit Labeling(std::vector<std::uint8_t> v) : values(std::move(v)) {}
  Labeling(std::size_t n, std::uint8_t fill) : values(n, fill) {}

  std::size_t size() const noexcept { return values.size(); }
  std::uint8_t operator[](std::size_t v) const { return values[v]; }
  std::uint8_t& operator[](std::size_t v) { return values[v]; }

  /// Lexicographic on the value sequence.
  friend auto operator<=>(const Labeling&, const Labeling&) = default;
  friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// ω(f) = |V_1| + 2|V_2|.
int weight(const Labeling& f);

/// Vertices carrying label `value` (V_0, V_1 or V_2).
std::vector<int> level_set(const Labeling& f, std::uint8_t value);

/// Digit-string form, e.g. "20020".
std::string to_string(const Labeling& f);
/// Inverse of to_string; throws ParseError naming the offending byte.
Labeling parse_labeling(std::string_view digits);

enum class ViolationKind {
  zero_vertex_undercovered,
  length_mismatch,
  value_out_of_range,
  capacity_exceeded,
  duplicate_function,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::optional<int> vertex;
  std::optional<int> member;  // family member index, when checking a family
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

}  // namespace romandom
