#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "metalift/metallic.hpp"
#include "metalift/paracontact.hpp"
#include "metalift/sampling.hpp"

namespace metalift {

/// A P-Sasakian candidate described in JSON with DSL expression strings.
struct Manifest {
  std::string name;
  int dimension = 0;
  std::vector<std::string> coordinates;
  std::vector<Expr> domain;
  std::vector<std::vector<Expr>> metric;
  std::vector<std::vector<Expr>> phi;  // phi[i][j] = φ^i_j
  std::vector<Expr> eta;
  std::vector<Expr> xi;
  std::vector<MetallicParams> metallic;
  SamplePlan plan;
  /// Unit vector fields in the distribution, for the Φ′ probe.
  std::vector<std::vector<Expr>> unit_fields;
  /// SHA-256 of the manifest bytes, lowercase hex.
  std::string sha256;
};

/// Throws ManifestError; messages carry a JSON pointer or a byte position.
Manifest parse_manifest(std::string_view json_text);
/// Also throws ManifestError when the file cannot be read.
Manifest load_manifest(const std::string& path);

ChartedManifold make_base(const Manifest& m);
ParacontactStructure make_structure(const Manifest& m);
std::vector<TensorField> make_unit_fields(const Manifest& m, const ChartPtr& chart);

std::string sha256_hex(std::string_view bytes);

}  // namespace metalift
