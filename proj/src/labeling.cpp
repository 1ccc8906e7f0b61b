#include "romandom/labeling.hpp"

#include <algorithm>
#include <numeric>

#include "romandom/errors.hpp"
#include "romandom/family.hpp"
#include "romandom/solve_result.hpp"

namespace romandom {

int weight(const Labeling& f) {
  return std::accumulate(f.values.begin(), f.values.end(), 0);
}

std::vector<int> level_set(const Labeling& f, std::uint8_t value) {
  std::vector<int> out;
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f[v] == value) out.push_back(static_cast<int>(v));
  }
  return out;
}

std::string to_string(const Labeling& f) {
  std::string s;
  s.reserve(f.size());
  for (auto x : f.values) s.push_back(static_cast<char>('0' + x));
  return s;
}

Labeling parse_labeling(std::string_view digits) {
  Labeling f;
  f.values.reserve(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    char c = digits[i];
    if (c < '0' || c > '2') {
      throw ParseError("labeling: byte " + std::to_string(i) + " is not one of 0,1,2", i);
    }
    f.values.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return f;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::zero_vertex_undercovered: return "zero-vertex-undercovered";
    case ViolationKind::length_mismatch: return "length-mismatch";
    case ViolationKind::value_out_of_range: return "value-out-of-range";
    case ViolationKind::capacity_exceeded: return "capacity-exceeded";
    case ViolationKind::duplicate_function: return "duplicate-function";
  }
  return "?";
}

std::vector<int> vertex_sums(const Family& fam) {
  std::vector<int> sums;
  if (fam.members.empty()) return sums;
  sums.assign(fam.members.front().size(), 0);
  for (const auto& f : fam.members) {
    for (std::size_t v = 0; v < sums.size() && v < f.size(); ++v) sums[v] += f[v];
  }
  return sums;
}

std::string to_string(const Family& fam) {
  std::string out;
  for (const auto& f : fam.members) {
    out += to_string(f);
    out += '\n';
  }
  return out;
}

Family parse_family(std::string_view text, int k) {
  Family fam{k, {}};
  std::size_t offset = 0;
  while (offset < text.size()) {
    auto nl = text.find('\n', offset);
    auto end = nl == std::string_view::npos ? text.size() : nl;
    auto line = text.substr(offset, end - offset);
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (!line.empty()) {
      try {
        fam.members.push_back(parse_labeling(line));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), offset + e.position());
      }
    }
    offset = end + 1;
  }
  return fam;
}

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::gamma_k: return "gamma_k";
    case Quantity::gamma_kr: return "gamma_kR";
    case Quantity::d_k: return "d_k";
    case Quantity::d_rk: return "d_Rk";
  }
  return "?";
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.push_back(static_cast<int>(v));
  }
  return out;
}

int VertexSet::size() const {
  return static_cast<int>(std::count(mask.begin(), mask.end(), std::uint8_t{1}));
}

}  // namespace romandom
