#pragma once

#include "linkdraw/linkage.hpp"
#include "linkdraw/verify.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linkdraw {

// Input document. Coefficients ascend in powers of t and are "p/q" strings.
struct CurveSpec {
  std::array<RealPoly, 4> x;
  std::optional<M0Mode> mode;
  std::optional<DualQuaternion> m0;  // original coordinates
  std::vector<Vec3> picker;
  std::uint64_t seed = 1;

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

// Throws ParseError with a byte offset or a JSON pointer to the bad field.
CurveSpec read_curve_spec(std::string_view text);
std::string write_curve_spec(const CurveSpec& spec);

std::optional<M0Mode> parse_mode(std::string_view text);
// Comma-separated list of rationals.
std::vector<Rational> parse_rationals(std::string_view text);
// Comma-separated list of rationals or "inf".
std::vector<Param> parse_params(std::string_view text);
DualQuaternion parse_dual_quaternion(std::string_view text);

// Output document. Joint quaternions are written in original coordinates.
struct LinkageDoc {
  Linkage linkage;
  int d = 0;
  int c = 0;
  int deg_c = 0;

  friend bool operator==(const LinkageDoc&, const LinkageDoc&) = default;
};

std::string write_linkage_doc(const LinkageDoc& doc);
LinkageDoc read_linkage_doc(std::string_view text);

// Columns t, x, y, z (exact) and x_float, y_float, z_float (12 significant digits).
std::string emit_trace(const Linkage& linkage, const std::vector<Param>& samples);

std::string read_file(const std::filesystem::path& path);
// Throws IOError.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace linkdraw
