#ifndef HOMKIT_REPORT_HPP
#define HOMKIT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "homkit/abelian.hpp"
#include "homkit/check.hpp"
#include "homkit/complex.hpp"
#include "homkit/number_field.hpp"

namespace homkit {

/// Insertion-ordered JSON so emitted reports keep a stable, readable key order.
using Json = nlohmann::ordered_json;

/// Integer, or "inf".
Json to_json(const Cardinality& c);
Cardinality cardinality_from_json(const Json& j);

/// {"free_rank": int | "inf", "torsion": [{"order": int, "mult": int | "inf"}]}
Json to_json(const GroupDescriptor& g);
GroupDescriptor group_from_json(const Json& j);

/// {"computed_through": int | null, "groups": [{"degree": n, "group": ...}]}. A
/// bounded group lists every degree from `first` (default min(0, lowest))
/// through the bound.
Json to_json(const GradedGroup& h, std::optional<int> first = std::nullopt);
GradedGroup graded_from_json(const Json& j);

/// {"even": group, "odd": group}
Json to_json(const Z2Graded& k);
Z2Graded z2graded_from_json(const Json& j);

/**
 * {"ring": "Z" | {"Z_inv": [primes]} | "Q", "lo": int, "ranks": [...],
 *  "boundaries": [[[entries row-major]]...]}; boundaries[k] maps degree
 * lo+k+1 to lo+k. Entries are decimal strings; plain JSON integers are accepted.
 */
Json to_json(const ChainComplex& c);
ChainComplex complex_from_json(const Json& j);

Json to_json(const NumberFieldProfile& p);
Json to_json(const Check& c);

/// The document every CLI verb emits.
struct ReportDocument {
  Json input = Json::object();
  Json results = Json::object();
  std::vector<Check> checks;
  std::vector<std::string> warnings;

  void add(const Report& r);
  bool pass() const { return all_pass(checks); }
  Json to_json() const;
  /// Plain text; groups render as "Z^3 + Z/2^2".
  std::string to_text() const;
};

}  // namespace homkit

#endif  // HOMKIT_REPORT_HPP
