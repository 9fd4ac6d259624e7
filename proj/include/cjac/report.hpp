#pragma once

// Structured results for the command-line tool, with JSON (de)serialization. Every
// record is a plain value with equality so a report survives a JSON round trip intact.

#include "cjac/abel.hpp"
#include "cjac/classgroup.hpp"
#include "cjac/curve_io.hpp"
#include "cjac/graph.hpp"
#include "cjac/picard.hpp"
#include "cjac/stability.hpp"
#include "cjac/theta.hpp"

#include <nlohmann/json.hpp>

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Big integers: a JSON number while they fit in 64 bits, a decimal string beyond.
template <>
struct nlohmann::adl_serializer<cjac::BigInt> {
  static void to_json(json& j, const cjac::BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
      j = v.convert_to<std::int64_t>();
    else
      j = v.str();
  }
  static void from_json(const json& j, cjac::BigInt& v) {
    if (j.is_string()) v = cjac::BigInt(j.get<std::string>());
    else v = j.get<std::int64_t>();
  }
};

template <>
struct nlohmann::adl_serializer<cjac::LocusDim> {
  static void to_json(json& j, const cjac::LocusDim& d) {
    if (d.is_known()) j = d.value();
    else j = d.to_string();
  }
  static cjac::LocusDim from_json(const json& j) {
    if (j.is_number_integer()) return cjac::LocusDim::known(j.get<std::int64_t>());
    const auto s = j.get<std::string>();
    if (s == "empty") return cjac::LocusDim::empty();
    if (s == "unknown") return cjac::LocusDim::unknown();
    throw cjac::InvalidInput("bad dimension value '" + s + "'");
  }
};

template <>
struct nlohmann::adl_serializer<cjac::Connectivity> {
  static void to_json(json& j, const cjac::Connectivity& c) {
    if (c.is_infinite()) j = "inf";
    else j = c.value();
  }
  static cjac::Connectivity from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return cjac::Connectivity::infinite();
    return cjac::Connectivity::finite(j.get<std::int64_t>());
  }
};

template <typename T>
struct nlohmann::adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v) j = *v;
    else j = nullptr;
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null()) v.reset();
    else v = j.get<T>();
  }
};

namespace cjac {

NLOHMANN_JSON_SERIALIZE_ENUM(StabilityStatus, {{StabilityStatus::stable, "stable"},
                                               {StabilityStatus::strictly_semistable, "strictly_semistable"},
                                               {StabilityStatus::unstable, "unstable"}})
NLOHMANN_JSON_SERIALIZE_ENUM(PicardType, {{PicardType::n_type, "N-type"}, {PicardType::d_type, "D-type"}})
NLOHMANN_JSON_SERIALIZE_ENUM(Naturality, {{Naturality::natural, "natural"},
                                          {Naturality::not_natural, "not_natural"},
                                          {Naturality::possibly_natural, "possibly_natural"}})
NLOHMANN_JSON_SERIALIZE_ENUM(DGenerality, {{DGenerality::all_curves, "all_curves"},
                                           {DGenerality::tree_like_only, "tree_like_only"},
                                           {DGenerality::unknown, "unknown"}})
NLOHMANN_JSON_SERIALIZE_ENUM(WClause, {{WClause::excess_component_degree, "excess_component_degree"},
                                       {WClause::not_semistable, "not_semistable"},
                                       {WClause::semistable, "semistable"}})

inline void to_json(nlohmann::json& j, const Multidegree& d) { j = d.entries(); }
inline void from_json(const nlohmann::json& j, Multidegree& d) { d = Multidegree(j.get<std::vector<Degree>>()); }

inline void to_json(nlohmann::json& j, const NodeSet& s) { j = s.edges; }
inline void from_json(const nlohmann::json& j, NodeSet& s) { s.edges = j.get<std::vector<EdgeIndex>>(); }

inline void to_json(nlohmann::json& j, const ClassLabel& l) {
  j = {{"residues", l.residues}, {"total_degree", l.total_degree}};
}
inline void from_json(const nlohmann::json& j, ClassLabel& l) {
  j.at("residues").get_to(l.residues);
  j.at("total_degree").get_to(l.total_degree);
}

inline void to_json(nlohmann::json& j, const NeronComponent& c) {
  j = {{"label", c.label}, {"representative", c.representative}};
}
inline void from_json(const nlohmann::json& j, NeronComponent& c) {
  j.at("label").get_to(c.label);
  j.at("representative").get_to(c.representative);
}

inline void to_json(nlohmann::json& j, const CorrectionEntry& e) {
  j = {{"l", e.l}, {"a", e.a}, {"corrected", e.corrected}};
}
inline void from_json(const nlohmann::json& j, CorrectionEntry& e) {
  j.at("l").get_to(e.l);
  j.at("a").get_to(e.a);
  j.at("corrected").get_to(e.corrected);
}

inline void to_json(nlohmann::json& j, const NaturalityVerdict& v) {
  j = {{"status", v.status},
       {"reason", v.reason},
       {"offending", v.offending},
       {"essential_connectivity", v.epsilon},
       {"neron_type_exists", v.neron_type_exists}};
}
inline void from_json(const nlohmann::json& j, NaturalityVerdict& v) {
  j.at("status").get_to(v.status);
  j.at("reason").get_to(v.reason);
  j.at("offending").get_to(v.offending);
  j.at("essential_connectivity").get_to(v.epsilon);
  j.at("neron_type_exists").get_to(v.neron_type_exists);
}

// ---------------------------------------------------------------------------
// Records

struct CurveSummary {
  nlohmann::json curve;  // the input in curve-file JSON form
  std::int64_t gamma = 0, delta = 0, b1 = 0, genus = 0;
  BigInt complexity;
  bool tree_like = false;
  Connectivity essential_connectivity = Connectivity::infinite();

  friend bool operator==(const CurveSummary&, const CurveSummary&) = default;
};

inline void to_json(nlohmann::json& j, const CurveSummary& s) {
  j = {{"curve", s.curve},
       {"gamma", s.gamma},
       {"delta", s.delta},
       {"b1", s.b1},
       {"genus", s.genus},
       {"complexity", s.complexity},
       {"tree_like", s.tree_like},
       {"essential_connectivity", s.essential_connectivity}};
}
inline void from_json(const nlohmann::json& j, CurveSummary& s) {
  s.curve = j.at("curve");
  j.at("gamma").get_to(s.gamma);
  j.at("delta").get_to(s.delta);
  j.at("b1").get_to(s.b1);
  j.at("genus").get_to(s.genus);
  j.at("complexity").get_to(s.complexity);
  j.at("tree_like").get_to(s.tree_like);
  s.essential_connectivity = j.at("essential_connectivity").get<Connectivity>();
}

struct ClassGroupRecord {
  std::vector<BigInt> invariant_factors;
  BigInt order;
  Degree degree = 0;
  std::vector<NeronComponent> classes;

  friend bool operator==(const ClassGroupRecord&, const ClassGroupRecord&) = default;
};

inline void to_json(nlohmann::json& j, const ClassGroupRecord& r) {
  j = {{"invariant_factors", r.invariant_factors}, {"order", r.order}, {"degree", r.degree}, {"classes", r.classes}};
}
inline void from_json(const nlohmann::json& j, ClassGroupRecord& r) {
  j.at("invariant_factors").get_to(r.invariant_factors);
  j.at("order").get_to(r.order);
  j.at("degree").get_to(r.degree);
  j.at("classes").get_to(r.classes);
}

struct StabilityRecord {
  Multidegree multidegree;
  StabilityStatus status = StabilityStatus::stable;

  friend bool operator==(const StabilityRecord&, const StabilityRecord&) = default;
};

inline void to_json(nlohmann::json& j, const StabilityRecord& r) {
  j = {{"multidegree", r.multidegree}, {"status", r.status}};
}
inline void from_json(const nlohmann::json& j, StabilityRecord& r) {
  j.at("multidegree").get_to(r.multidegree);
  j.at("status").get_to(r.status);
}

struct SemistableRecord {
  std::vector<StabilityRecord> semistable;  // every semistable multidegree, with its verdict
  std::size_t semistable_count = 0;
  std::size_t stable_count = 0;

  friend bool operator==(const SemistableRecord&, const SemistableRecord&) = default;
};

inline void to_json(nlohmann::json& j, const SemistableRecord& r) {
  j = {{"semistable", r.semistable}, {"semistable_count", r.semistable_count}, {"stable_count", r.stable_count}};
}
inline void from_json(const nlohmann::json& j, SemistableRecord& r) {
  j.at("semistable").get_to(r.semistable);
  j.at("semistable_count").get_to(r.semistable_count);
  j.at("stable_count").get_to(r.stable_count);
}

struct SemistabilizeRecord {
  Multidegree input;
  Multidegree output;
  std::vector<Degree> twist;
  Multidegree twister;  // output - input
  StabilityStatus status = StabilityStatus::stable;
  bool used_fallback = false;

  friend bool operator==(const SemistabilizeRecord&, const SemistabilizeRecord&) = default;
};

inline void to_json(nlohmann::json& j, const SemistabilizeRecord& r) {
  j = {{"input", r.input},       {"output", r.output}, {"twist", r.twist},
       {"twister", r.twister},   {"status", r.status}, {"used_fallback", r.used_fallback}};
}
inline void from_json(const nlohmann::json& j, SemistabilizeRecord& r) {
  j.at("input").get_to(r.input);
  j.at("output").get_to(r.output);
  j.at("twist").get_to(r.twist);
  j.at("twister").get_to(r.twister);
  j.at("status").get_to(r.status);
  j.at("used_fallback").get_to(r.used_fallback);
}

struct StratumRecord {
  NodeSet nodes;
  Multidegree multidegree;
  std::int64_t dim = 0;
  std::size_t pieces = 1;
  bool component = false;  // of maximal dimension

  friend bool operator==(const StratumRecord&, const StratumRecord&) = default;
};

inline void to_json(nlohmann::json& j, const StratumRecord& r) {
  j = {{"nodes", r.nodes}, {"multidegree", r.multidegree}, {"dim", r.dim}, {"pieces", r.pieces},
       {"component", r.component}};
}
inline void from_json(const nlohmann::json& j, StratumRecord& r) {
  j.at("nodes").get_to(r.nodes);
  j.at("multidegree").get_to(r.multidegree);
  j.at("dim").get_to(r.dim);
  j.at("pieces").get_to(r.pieces);
  j.at("component").get_to(r.component);
}

struct ComponentsRecord {
  PicardType type = PicardType::n_type;
  BigInt complexity;
  std::size_t count = 0;
  bool validated = false;
  std::vector<StratumRecord> components;

  friend bool operator==(const ComponentsRecord&, const ComponentsRecord&) = default;
};

inline void to_json(nlohmann::json& j, const ComponentsRecord& r) {
  j = {{"type", r.type}, {"complexity", r.complexity}, {"count", r.count}, {"validated", r.validated},
       {"components", r.components}};
}
inline void from_json(const nlohmann::json& j, ComponentsRecord& r) {
  j.at("type").get_to(r.type);
  j.at("complexity").get_to(r.complexity);
  j.at("count").get_to(r.count);
  j.at("validated").get_to(r.validated);
  j.at("components").get_to(r.components);
}

struct ThetaRecord {
  NodeSet nodes;
  Multidegree multidegree;
  std::int64_t stratum_dim = 0;
  std::string description;
  LocusDim dim = LocusDim::unknown();

  friend bool operator==(const ThetaRecord&, const ThetaRecord&) = default;
};

inline void to_json(nlohmann::json& j, const ThetaRecord& r) {
  j = {{"nodes", r.nodes}, {"multidegree", r.multidegree}, {"stratum_dim", r.stratum_dim},
       {"description", r.description}, {"dim", r.dim}};
}
inline void from_json(const nlohmann::json& j, ThetaRecord& r) {
  j.at("nodes").get_to(r.nodes);
  j.at("multidegree").get_to(r.multidegree);
  j.at("stratum_dim").get_to(r.stratum_dim);
  j.at("description").get_to(r.description);
  r.dim = j.at("dim").get<LocusDim>();
}

struct NeronRecord {
  Degree degree = 0;
  BigInt count;
  std::vector<NeronComponent> components;

  friend bool operator==(const NeronRecord&, const NeronRecord&) = default;
};

inline void to_json(nlohmann::json& j, const NeronRecord& r) {
  j = {{"degree", r.degree}, {"count", r.count}, {"components", r.components}};
}
inline void from_json(const nlohmann::json& j, NeronRecord& r) {
  j.at("degree").get_to(r.degree);
  j.at("count").get_to(r.count);
  j.at("components").get_to(r.components);
}

struct AbelRecord {
  std::string mode;  // "g-1" or "degree"
  std::int64_t degree = 0;
  NaturalityVerdict naturality;
  std::optional<std::vector<CorrectionEntry>> corrections;  // vine curves in degree g-1
  std::optional<bool> embedding;                            // degree 1
  std::vector<std::string> embedding_offenders;

  friend bool operator==(const AbelRecord&, const AbelRecord&) = default;
};

inline void to_json(nlohmann::json& j, const AbelRecord& r) {
  j = {{"mode", r.mode},
       {"degree", r.degree},
       {"naturality", r.naturality},
       {"corrections", r.corrections},
       {"embedding", r.embedding},
       {"embedding_offenders", r.embedding_offenders}};
}
inline void from_json(const nlohmann::json& j, AbelRecord& r) {
  j.at("mode").get_to(r.mode);
  j.at("degree").get_to(r.degree);
  j.at("naturality").get_to(r.naturality);
  j.at("corrections").get_to(r.corrections);
  j.at("embedding").get_to(r.embedding);
  j.at("embedding_offenders").get_to(r.embedding_offenders);
}

struct DGeneralRecord {
  std::int64_t genus = 0;
  std::int64_t degree = 0;
  std::int64_t gcd = 0;  // gcd(d - g + 1, 2g - 2)
  DGenerality verdict = DGenerality::unknown;

  friend bool operator==(const DGeneralRecord&, const DGeneralRecord&) = default;
};

inline void to_json(nlohmann::json& j, const DGeneralRecord& r) {
  j = {{"genus", r.genus}, {"degree", r.degree}, {"gcd", r.gcd}, {"verdict", r.verdict}};
}
inline void from_json(const nlohmann::json& j, DGeneralRecord& r) {
  j.at("genus").get_to(r.genus);
  j.at("degree").get_to(r.degree);
  j.at("gcd").get_to(r.gcd);
  j.at("verdict").get_to(r.verdict);
}

struct VerdictReport {
  static constexpr int schema_version = 1;
  std::string command;
  CurveSummary curve;
  std::optional<ClassGroupRecord> class_group;
  std::optional<SemistableRecord> semistable;
  std::optional<SemistabilizeRecord> semistabilization;
  std::optional<std::vector<StratumRecord>> strata;
  std::optional<ComponentsRecord> components;
  std::optional<std::vector<ThetaRecord>> theta;
  std::optional<NeronRecord> neron;
  std::optional<AbelRecord> abel;
  std::optional<DGeneralRecord> dgeneral;

  friend bool operator==(const VerdictReport&, const VerdictReport&) = default;
};

/// Sections that were not requested are omitted.
inline void to_json(nlohmann::json& j, const VerdictReport& r) {
  j = {{"schema_version", VerdictReport::schema_version}, {"command", r.command}, {"curve", r.curve}};
  if (r.class_group) j["class_group"] = *r.class_group;
  if (r.semistable) j["semistable"] = *r.semistable;
  if (r.semistabilization) j["semistabilization"] = *r.semistabilization;
  if (r.strata) j["strata"] = *r.strata;
  if (r.components) j["components"] = *r.components;
  if (r.theta) j["theta"] = *r.theta;
  if (r.neron) j["neron"] = *r.neron;
  if (r.abel) j["abel"] = *r.abel;
  if (r.dgeneral) j["dgeneral"] = *r.dgeneral;
}

inline void from_json(const nlohmann::json& j, VerdictReport& r) {
  if (j.at("schema_version").get<int>() != VerdictReport::schema_version)
    throw InvalidInput("unsupported report schema version");
  j.at("command").get_to(r.command);
  j.at("curve").get_to(r.curve);
  auto section = [&j](const char* key, auto& out) {
    if (j.contains(key)) out = j.at(key).get<typename std::decay_t<decltype(out)>::value_type>();
    else out.reset();
  };
  section("class_group", r.class_group);
  section("semistable", r.semistable);
  section("semistabilization", r.semistabilization);
  section("strata", r.strata);
  section("components", r.components);
  section("theta", r.theta);
  section("neron", r.neron);
  section("abel", r.abel);
  section("dgeneral", r.dgeneral);
}

// ---------------------------------------------------------------------------
// Builders

inline CurveSummary summarize_curve(const DualGraph& g) {
  const auto c = counts(g);
  return CurveSummary{curve_to_json(g), c.gamma, c.delta, c.b1, c.genus, complexity(g), is_tree_like(g),
                      essential_connectivity(g)};
}

inline ClassGroupRecord class_group_record(const DualGraph& g, Degree d, const EnumerationLimits& limits) {
  const DegreeClassGroup dcg(g);
  ClassGroupRecord r{dcg.invariant_factors(), dcg.order(), d, {}};
  for (auto& rep : dcg.class_representatives(d, limits)) r.classes.push_back({dcg.class_of(rep), rep});
  return r;
}

inline SemistableRecord semistable_record(const DualGraph& g, const EnumerationLimits& limits) {
  const StabilityChecker checker(g, limits);
  SemistableRecord r;
  for (auto& d : enumerate_semistable(g, limits)) {
    const auto status = checker.check(d).status;
    r.stable_count += status == StabilityStatus::stable ? 1 : 0;
    r.semistable.push_back({std::move(d), status});
  }
  r.semistable_count = r.semistable.size();
  return r;
}

inline SemistabilizeRecord semistabilize_record(const DualGraph& g, const Multidegree& d,
                                                const EnumerationLimits& limits) {
  auto s = semistabilize(g, d, limits);
  SemistabilizeRecord r;
  r.input = d;
  r.twister = s.multidegree - d;
  r.status = check_stability(g, s.multidegree, limits).status;
  r.output = std::move(s.multidegree);
  r.twist = std::move(s.twist);
  r.used_fallback = s.used_fallback;
  return r;
}

inline StratumRecord stratum_record(const Stratum& s, std::int64_t top) {
  return {s.nodes, s.multidegree, s.dim, s.pieces, s.dim == top};
}

inline std::vector<StratumRecord> strata_records(const std::vector<Stratum>& all) {
  std::int64_t top = std::numeric_limits<std::int64_t>::min();
  for (const auto& s : all) top = std::max(top, s.dim);
  std::vector<StratumRecord> out;
  for (const auto& s : all) out.push_back(stratum_record(s, top));
  return out;
}

inline ComponentsRecord components_record(const DualGraph& g, const EnumerationLimits& limits) {
  const auto all = strata(g, limits);
  const auto analysis = irreducible_components(g, all);
  ComponentsRecord r;
  r.type = is_tree_like(g) ? PicardType::n_type : PicardType::d_type;
  r.complexity = complexity(g);
  r.count = analysis.components.size();
  r.validated = analysis.validated;
  for (const auto& s : analysis.components) r.components.push_back(stratum_record(s, s.dim));
  return r;
}

inline std::vector<ThetaRecord> theta_records(const DualGraph& g, const EnumerationLimits& limits) {
  std::vector<ThetaRecord> out;
  for (auto& t : theta_strata(g, limits))
    out.push_back({t.base.nodes, t.base.multidegree, t.base.dim, std::move(t.description), t.dim});
  return out;
}

inline NeronRecord neron_record(const DualGraph& g, Degree d, const EnumerationLimits& limits) {
  auto fiber = neron_fiber(g, d, limits);
  return {fiber.degree, fiber.count, std::move(fiber.components)};
}

/// Degree g-1 on a vine: the exact naturality verdict and its correction profile.
inline AbelRecord abel_g_minus_1_record(const DualGraph& g) {
  if (!is_vine(g)) throw PreconditionError("the degree g-1 naturality criterion needs a vine curve");
  const int g1 = g.vertex(0).genus, g2 = g.vertex(1).genus, delta = static_cast<int>(g.edge_count());
  AbelRecord r;
  r.mode = "g-1";
  r.degree = counts(g).genus - 1;
  r.naturality = natural_g_minus_1_vine(g1, g2, delta);
  r.corrections = correction_profile_vine(g1, g2, delta).entries;
  return r;
}

inline AbelRecord abel_degree_record(const DualGraph& g, std::int64_t d) {
  AbelRecord r;
  r.mode = "degree";
  r.degree = d;
  r.naturality = naturality_necessary(g, d);
  if (d == 1) {
    const auto e = degree1_abel_is_embedding(g);
    r.embedding = e.embedding;
    for (VertexIndex v : e.offenders) r.embedding_offenders.push_back(g.vertex(v).name);
  }
  return r;
}

inline DGeneralRecord dgeneral_record(const DualGraph& g, std::int64_t d) {
  const auto genus = counts(g).genus;
  return {genus, d, std::gcd(d - genus + 1, 2 * genus - 2), d_general_verdict(genus, d, &g)};
}

}  // namespace cjac
