#include "homkit/report.hpp"

#include <sstream>

namespace homkit {

namespace {

Json integer_to_json(const Integer& z) {
  if (fits_int64(z)) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw Error("expected an integer, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

bool is_group(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("free_rank") && j.contains("torsion"); }

bool is_graded(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("computed_through") && j.contains("groups"); }

bool is_z2(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("even") && j.contains("odd") && is_group(j.at("even")) && is_group(j.at("odd"));
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(std::ostringstream& out, const std::string& key, const Json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (is_group(value)) {
    out << pad << key << ": " << group_from_json(value).to_string() << "\n";
  } else if (is_z2(value)) {
    out << pad << key << ": (" << group_from_json(value.at("even")).to_string() << ", "
        << group_from_json(value.at("odd")).to_string() << ")\n";
  } else if (is_graded(value)) {
    out << pad << key << ":\n";
    for (const auto& entry : value.at("groups"))
      out << pad << "  H_" << entry.at("degree").get<int>() << " = " << group_from_json(entry.at("group")).to_string() << "\n";
    if (!value.at("computed_through").is_null())
      out << pad << "  (not computed above degree " << value.at("computed_through").get<int>() << ")\n";
  } else if (value.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, v] : value.items()) render(out, k, v, indent + 1);
  } else if (value.is_array()) {
    bool scalars = true;
    for (const auto& v : value) scalars = scalars && v.is_primitive();
    if (scalars) {
      out << pad << key << ": ";
      for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ", " : "") << scalar_text(value[i]);
      out << "\n";
    } else {
      out << pad << key << ":\n";
      for (std::size_t i = 0; i < value.size(); ++i) render(out, "[" + std::to_string(i) + "]", value[i], indent + 1);
    }
  } else {
    out << pad << key << ": " << scalar_text(value) << "\n";
  }
}

}  // namespace

Json to_json(const Cardinality& c) {
  if (c.is_infinite()) return "inf";
  return Json(c.value());
}

Cardinality cardinality_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Cardinality::infinite();
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0)) return Cardinality(j.get<std::uint64_t>());
  throw Error("expected a count or \"inf\", got " + j.dump());
}

Json to_json(const GroupDescriptor& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion()) torsion.push_back({{"order", integer_to_json(t.order)}, {"mult", to_json(t.multiplicity)}});
  return {{"free_rank", to_json(g.free_rank())}, {"torsion", torsion}};
}

GroupDescriptor group_from_json(const Json& j) {
  std::vector<TorsionSummand> torsion;
  for (const auto& t : field(j, "torsion")) {
    const Integer order = integer_from_json(field(t, "order"));
    if (order < 2) throw Error("torsion order must be at least 2, got " + order.get_str());
    torsion.push_back({order, cardinality_from_json(field(t, "mult"))});
  }
  return GroupDescriptor(cardinality_from_json(field(j, "free_rank")), torsion);
}

Json to_json(const GradedGroup& h, std::optional<int> first) {
  Json groups = Json::array();
  if (h.computed_through()) {
    const int top = *h.computed_through();
    const int bottom = first.value_or(std::min(0, h.lowest_degree().value_or(0)));
    for (int n = bottom; n <= top; ++n) groups.push_back({{"degree", n}, {"group", to_json(h.at(n))}});
  } else {
    for (const auto& [n, g] : h.groups()) groups.push_back({{"degree", n}, {"group", to_json(g)}});
  }
  Json bound = h.computed_through() ? Json(*h.computed_through()) : Json(nullptr);
  return {{"computed_through", bound}, {"groups", groups}};
}

GradedGroup graded_from_json(const Json& j) {
  const Json& bound = field(j, "computed_through");
  GradedGroup h(bound.is_null() ? std::nullopt : std::optional<int>(bound.get<int>()));
  for (const auto& entry : field(j, "groups")) h.set(field(entry, "degree").get<int>(), group_from_json(field(entry, "group")));
  return h;
}

Json to_json(const Z2Graded& k) { return {{"even", to_json(k.even)}, {"odd", to_json(k.odd)}}; }

Z2Graded z2graded_from_json(const Json& j) { return {group_from_json(field(j, "even")), group_from_json(field(j, "odd"))}; }

Json to_json(const ChainComplex& c) {
  Json ring;
  switch (c.ring().kind) {
    case RingKind::Integers:
      ring = "Z";
      break;
    case RingKind::Rationals:
      ring = "Q";
      break;
    case RingKind::Localized: {
      Json primes = Json::array();
      for (const auto& p : c.ring().inverted_primes) primes.push_back(integer_to_json(p));
      ring = {{"Z_inv", primes}};
      break;
    }
  }
  Json boundaries = Json::array();
  for (const auto& b : c.boundaries()) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < b.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < b.cols(); ++k) row.push_back(b(i, k).get_str());
      rows.push_back(row);
    }
    boundaries.push_back(rows);
  }
  return {{"ring", ring}, {"lo", c.lo()}, {"ranks", c.ranks()}, {"boundaries", boundaries}};
}

ChainComplex complex_from_json(const Json& j) {
  const Json& ring_json = field(j, "ring");
  CoefficientRing ring;
  if (ring_json == "Z") {
    ring = CoefficientRing::integers();
  } else if (ring_json == "Q") {
    ring = CoefficientRing::rationals();
  } else if (ring_json.is_object() && ring_json.contains("Z_inv")) {
    std::vector<Integer> primes;
    for (const auto& p : ring_json.at("Z_inv")) primes.push_back(integer_from_json(p));
    ring = CoefficientRing::localized(primes);
  } else {
    throw Error("unknown ring " + ring_json.dump());
  }
  const int lo = field(j, "lo").get<int>();
  std::vector<std::size_t> ranks;
  for (const auto& r : field(j, "ranks")) {
    if (!r.is_number_integer() || r.get<std::int64_t>() < 0) throw Error("ranks must be non-negative integers");
    ranks.push_back(r.get<std::size_t>());
  }
  const Json& bj = field(j, "boundaries");
  if (!bj.is_array()) throw Error("\"boundaries\" must be an array");
  std::vector<IntMatrix> boundaries;
  for (std::size_t k = 0; k < bj.size(); ++k) {
    if (k + 1 >= ranks.size()) throw Error("more boundaries than ranks allow");
    const std::size_t rows = ranks[k], cols = ranks[k + 1];
    const Json& m = bj[k];
    if (!m.is_array() || m.size() != rows) throw Error("boundary " + std::to_string(k) + " must have " + std::to_string(rows) + " rows");
    IntMatrix b(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (!m[i].is_array() || m[i].size() != cols)
        throw Error("boundary " + std::to_string(k) + " row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
      for (std::size_t c = 0; c < cols; ++c) b(i, c) = integer_from_json(m[i][c]);
    }
    boundaries.push_back(std::move(b));
  }
  return ChainComplex(ring, lo, ranks, boundaries);
}

Json to_json(const NumberFieldProfile& p) {
  return {{"polynomial", p.polynomial.to_string()},
          {"degree", p.degree},
          {"real_embeddings", p.real_embeddings},
          {"complex_pairs", p.complex_pairs},
          {"mu_order", p.mu_order},
          {"mu_source", p.mu_source == MuSource::Computed ? "computed" : "asserted"},
          {"mu_rule", p.mu_rule},
          {"totally_imaginary", p.totally_imaginary}};
}

Json to_json(const Check& c) {
  return {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}};
}

void ReportDocument::add(const Report& r) {
  checks.insert(checks.end(), r.checks.begin(), r.checks.end());
  warnings.insert(warnings.end(), r.warnings.begin(), r.warnings.end());
}

Json ReportDocument::to_json() const {
  Json cs = Json::array();
  for (const auto& c : checks) cs.push_back(homkit::to_json(c));
  return {{"input", input}, {"results", results}, {"checks", cs}, {"warnings", warnings}};
}

std::string ReportDocument::to_text() const {
  std::ostringstream out;
  render(out, "input", input, 0);
  for (const auto& [k, v] : results.items()) render(out, k, v, 0);
  if (!checks.empty()) {
    out << "checks:\n";
    for (const auto& c : checks) {
      out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
      if (!c.pass) out << ": expected " << c.expected << ", got " << c.actual;
      out << "\n";
    }
  }
  if (!warnings.empty()) {
    out << "warnings:\n";
    for (const auto& w : warnings) out << "  - " << w << "\n";
  }
  out << "status: " << (pass() ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace homkit
