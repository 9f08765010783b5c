#pragma once

// JSON wire format. Rationals are "p/q" strings, Gaussian rationals
// {"re": .., "im": ..}, the point at infinity "inf". Every document carries
// "schema_version".

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

#include "polecover/cover.hpp"
#include "polecover/error.hpp"
#include "polecover/haupt.hpp"
#include "polecover/projective.hpp"
#include "polecover/realize.hpp"
#include "polecover/spherediff.hpp"

namespace polecover {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Validation failure at a JSON pointer into the input document.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& pointer, const std::string& what, ErrorCode code = ErrorCode::InvalidInput)
      : Error(code, "at " + (pointer.empty() ? std::string("/") : pointer) + ": " + what), pointer_(pointer) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

Json to_json(const Rational& q);
Json to_json(const GaussianRational& z);
Json to_json(const ProjectivePoint& p);
Json to_json(const MobiusMap& f);
Json to_json(const SphereDifferential& xi);
Json to_json(const PermGroup& g);
Json to_json(const CoverSpec& spec);
Json to_json(const PeriodLattice& lattice);
Json to_json(const CertifiedAut& aut);
Json to_json(const BaseSymmetries& q);
Json to_json(const BranchedStructureData& data);
Json to_json(const PeriodCharacter& chi);
Json to_json(const HauptResult& r);
Json to_json(const AdmissibleMaximum& m);
Json certificate_json(const RealizationCertificate& cert);

/// Parsers take the JSON pointer of the node for error messages.
Rational rational_from_json(const Json& j, const std::string& ptr = "");
GaussianRational gaussian_from_json(const Json& j, const std::string& ptr = "");
ProjectivePoint point_from_json(const Json& j, const std::string& ptr = "");
SphereDifferential differential_from_json(const Json& j, const std::string& ptr = "");
PermGroup group_from_json(const Json& j, const std::string& ptr = "", std::size_t cap = kDefaultGroupCap);
/// Monodromy entries are words (arrays of signed 1-based generator indices) or
/// element indices into the sorted element list.
CoverSpec cover_spec_from_json(const Json& j, const std::string& ptr = "", std::size_t cap = kDefaultGroupCap);
std::vector<Mark> marks_from_json(const Json& j, const std::string& ptr = "");
PeriodCharacter character_from_json(const Json& j, const std::string& ptr = "");

/// Parses text, reporting syntax errors as SchemaError at the root.
Json parse_document(std::string_view text);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Canonical serialization used for hashing and output.
std::string canonical_dump(const Json& j);

/// True if any number in the document is a floating-point value.
bool contains_float(const Json& j);

std::string_view to_string(DifferentialKind k);
std::string_view to_string(AutStatus s);

}  // namespace polecover
