#pragma once

// The cjac command-line tool as a library function, so tests can drive it in-process.
// Exit codes: 0 success, 1 usage or input error, 2 enumeration cap exceeded.

#include "cjac/curve_io.hpp"
#include "cjac/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace cjac::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_cap = 2;

namespace detail {

/// Column-aligned text table; the last column is not padded.
class Table {
 public:
  explicit Table(std::vector<std::string> header = {}) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    auto measure = [&](const std::vector<std::string>& row) {
      if (width.size() < row.size()) width.resize(row.size(), 0);
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    measure(header_);
    for (const auto& r : rows_) measure(r);
    auto line = [&](const std::vector<std::string>& row) {
      std::string s;
      for (std::size_t i = 0; i < row.size(); ++i) {
        s += row[i];
        if (i + 1 < row.size()) s += std::string(width[i] - row[i].size() + 2, ' ');
      }
      os << s << '\n';
    };
    if (!header_.empty()) {
      line(header_);
      std::vector<std::string> rule;
      for (std::size_t i = 0; i < header_.size(); ++i) rule.push_back(std::string(width[i], '-'));
      line(rule);
    }
    for (const auto& r : rows_) line(r);
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <typename T>
std::string join(const std::vector<T>& v, const char* open, const char* close) {
  std::string s = open;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    if constexpr (std::is_same_v<T, BigInt>) s += v[i].str();
    else s += std::to_string(v[i]);
  }
  return s + close;
}

inline std::string nodes_string(const NodeSet& s) { return join(s.edges, "{", "}"); }

inline Multidegree parse_multidegree(const std::string& text) {
  std::vector<Degree> entries;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    std::string item = text.substr(start, end - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    Degree v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw InvalidInput("bad multidegree '" + text + "': expected comma-separated integers");
    entries.push_back(v);
    if (end == text.size()) break;
    start = end + 1;
  }
  return Multidegree(std::move(entries));
}

inline void print_curve_line(std::ostream& os, const CurveSummary& c) {
  os << "curve: gamma=" << c.gamma << " delta=" << c.delta << " genus=" << c.genus << "\n\n";
}

inline void print_strata_table(std::ostream& os, const std::vector<StratumRecord>& rows) {
  Table t({"nodes", "multidegree", "dim", "pieces", "component"});
  for (const auto& r : rows)
    t.add({nodes_string(r.nodes), r.multidegree.to_string(), std::to_string(r.dim), std::to_string(r.pieces),
           yes_no(r.component)});
  t.print(os);
}

inline void print_classes(std::ostream& os, const std::vector<NeronComponent>& classes) {
  Table t({"class", "representative"});
  for (const auto& c : classes) t.add({c.label.to_string(), c.representative.to_string()});
  t.print(os);
}

inline void print_text(std::ostream& os, const VerdictReport& r) {
  const auto& c = r.curve;
  if (r.command == "info") {
    Table t;
    std::string vertices;
    for (const auto& v : c.curve.at("vertices"))
      vertices += (vertices.empty() ? "" : " ") + v.at("name").get<std::string>() + "(g=" +
                  std::to_string(v.at("genus").get<int>()) + ")";
    t.add({"vertices", vertices});
    t.add({"gamma", std::to_string(c.gamma)});
    t.add({"delta", std::to_string(c.delta)});
    t.add({"b1", std::to_string(c.b1)});
    t.add({"genus", std::to_string(c.genus)});
    t.add({"complexity", c.complexity.str()});
    t.add({"tree_like", yes_no(c.tree_like)});
    t.add({"essential_connectivity", c.essential_connectivity.to_string()});
    t.print(os);
    return;
  }
  print_curve_line(os, c);

  if (r.class_group) {
    const auto& g = *r.class_group;
    Table t;
    t.add({"invariant_factors", join(g.invariant_factors, "[", "]")});
    t.add({"order", g.order.str()});
    t.add({"degree", std::to_string(g.degree)});
    t.print(os);
    os << '\n';
    print_classes(os, g.classes);
  }
  if (r.semistable) {
    const auto& s = *r.semistable;
    Table t;
    t.add({"semistable", std::to_string(s.semistable_count)});
    t.add({"stable", std::to_string(s.stable_count)});
    t.print(os);
    os << '\n';
    Table list({"multidegree", "status"});
    for (const auto& e : s.semistable) list.add({e.multidegree.to_string(), to_string(e.status)});
    list.print(os);
  }
  if (r.semistabilization) {
    const auto& s = *r.semistabilization;
    Table t;
    t.add({"input", s.input.to_string()});
    t.add({"output", s.output.to_string()});
    t.add({"status", to_string(s.status)});
    t.add({"twist", join(s.twist, "(", ")")});
    t.add({"twister", s.twister.to_string()});
    t.add({"used_fallback", yes_no(s.used_fallback)});
    t.print(os);
  }
  if (r.strata) print_strata_table(os, *r.strata);
  if (r.components) {
    const auto& k = *r.components;
    Table t;
    t.add({"type", to_string(k.type)});
    t.add({"components", std::to_string(k.count)});
    t.add({"complexity", k.complexity.str()});
    t.add({"validated", yes_no(k.validated)});
    t.print(os);
    os << '\n';
    print_strata_table(os, k.components);
  }
  if (r.theta) {
    Table t({"nodes", "multidegree", "stratum_dim", "theta_dim", "theta"});
    for (const auto& e : *r.theta)
      t.add({nodes_string(e.nodes), e.multidegree.to_string(), std::to_string(e.stratum_dim), e.dim.to_string(),
             e.description});
    t.print(os);
  }
  if (r.neron) {
    Table t;
    t.add({"degree", std::to_string(r.neron->degree)});
    t.add({"components", r.neron->count.str()});
    t.print(os);
    os << '\n';
    print_classes(os, r.neron->components);
  }
  if (r.abel) {
    const auto& a = *r.abel;
    const auto& n = a.naturality;
    Table t;
    t.add({"mode", a.mode});
    t.add({"degree", std::to_string(a.degree)});
    t.add({"naturality", to_string(n.status)});
    t.add({"reason", n.reason});
    if (n.offending) t.add({"offending", n.offending->to_string()});
    if (n.epsilon) t.add({"essential_connectivity", n.epsilon->to_string()});
    if (n.neron_type_exists) t.add({"neron_type_exists", to_string(*n.neron_type_exists)});
    if (a.embedding) {
      std::string offenders;
      for (const auto& o : a.embedding_offenders) offenders += (offenders.empty() ? "" : ",") + o;
      t.add({"degree1_embedding", yes_no(*a.embedding) + (offenders.empty() ? "" : " (fails at " + offenders + ")")});
    }
    t.print(os);
    if (a.corrections) {
      os << '\n';
      Table list({"l", "a(l)", "corrected"});
      for (const auto& e : *a.corrections) list.add({std::to_string(e.l), std::to_string(e.a), e.corrected.to_string()});
      list.print(os);
    }
  }
  if (r.dgeneral) {
    const auto& d = *r.dgeneral;
    Table t;
    t.add({"genus", std::to_string(d.genus)});
    t.add({"degree", std::to_string(d.degree)});
    t.add({"gcd(d-g+1,2g-2)", std::to_string(d.gcd)});
    t.add({"verdict", to_string(d.verdict)});
    t.print(os);
  }
}

}  // namespace detail

/// Runs one command; args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial invariants of compactified Jacobians of nodal curves", "cjac"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  EnumerationLimits limits;
  app.add_flag("--json", json, "Write the report as JSON");
  app.add_option("--max-vertices", limits.max_vertices, "Cap on components for subcurve enumeration")
      ->capture_default_str();
  app.add_option("--max-edges", limits.max_edges, "Cap on nodes for stratum enumeration")->capture_default_str();
  app.add_option("--max-box", limits.max_box, "Cap on multidegree box size")->capture_default_str();
  app.add_option("--max-classes", limits.max_classes, "Cap on listed degree classes")->capture_default_str();

  std::string path;
  std::int64_t degree = 0;
  std::string multidegree;
  bool g_minus_1 = false;
  std::function<void(const DualGraph&, VerdictReport&)> action;

  auto command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("curve", path, "Curve file (JSON or line format; - for stdin)")->required();
    return sub;
  };

  auto* info = command("info", "Counts, complexity, tree-likeness, essential connectivity");
  info->callback([&] { action = [](const DualGraph&, VerdictReport&) {}; });

  auto* classgroup = command("classgroup", "Degree class group and one representative per class");
  classgroup->add_option("-d,--degree", degree, "Total degree of the representatives")->capture_default_str();
  classgroup->callback([&] {
    action = [&](const DualGraph& g, VerdictReport& r) { r.class_group = class_group_record(g, degree, limits); };
  });

  auto* semistable = command("semistable", "Semistable and stable multidegrees of degree g-1");
  semistable->callback([&] {
    action = [&](const DualGraph& g, VerdictReport& r) { r.semistable = semistable_record(g, limits); };
  });

  auto* semistabilize_cmd = command("semistabilize", "Equivalent semistable multidegree of a degree g-1 input");
  semistabilize_cmd->add_option("-d,--multidegree", multidegree, "Comma-separated entries, in vertex order")
      ->required();
  semistabilize_cmd->callback([&] {
    action = [&](const DualGraph& g, VerdictReport& r) {
      r.semistabilization = semistabilize_record(g, detail::parse_multidegree(multidegree), limits);
    };
  });

  auto* strata_cmd = command("strata", "Strata of the degree g-1 compactified Jacobian");
  strata_cmd->callback([&] {
    action = [&](const DualGraph& g, VerdictReport& r) { r.strata = strata_records(strata(g, limits)); };
  });

  auto* components = command("components", "Irreducible components and N/D type");
  components->callback([&] {
    action = [&](const DualGraph& g, VerdictReport& r) { r.components = components_record(g, limits); };
  });

  auto* theta = command("theta", "Theta divisor, stratum by stratum");
  theta->callback([&] {
    action = [&](const DualGraph& g, VerdictReport& r) { r.theta = theta_records(g, limits); };
  });

  auto* neron = command("neron", "Components of the Neron model fiber in degree d");
  neron->add_option("-d,--degree", degree, "Degree")->capture_default_str();
  neron->callback([&] {
    action = [&](const DualGraph& g, VerdictReport& r) { r.neron = neron_record(g, degree, limits); };
  });

  auto* abel = command("abel", "Abel map naturality");
  auto* abel_degree = abel->add_option("-d,--degree", degree, "Degree of the Abel map (default 1)");
  abel->add_flag("--g-minus-1", g_minus_1, "Degree g-1 criterion for vine curves, with corrections")
      ->excludes(abel_degree);
  abel->callback([&] {
    if (abel_degree->count() == 0) degree = 1;
    action = [&](const DualGraph& g, VerdictReport& r) {
      r.abel = g_minus_1 ? abel_g_minus_1_record(g) : abel_degree_record(g, degree);
    };
  });

  auto* dgeneral = command("dgeneral", "Existence of a Neron-type compactified Picard scheme in degree d");
  dgeneral->add_option("-d,--degree", degree, "Degree")->required();
  dgeneral->callback([&] {
    action = [&](const DualGraph& g, VerdictReport& r) { r.dgeneral = dgeneral_record(g, degree); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // help requests exit 0 after printing to out; everything else is a usage error
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  }

  try {
    const DualGraph g = read_curve(path);
    VerdictReport report;
    report.command = app.get_subcommands().front()->get_name();
    report.curve = summarize_curve(g);
    action(g, report);
    if (json) {
      out << nlohmann::json(report).dump(2) << '\n';
    } else {
      detail::print_text(out, report);
    }
    return exit_ok;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return exit_cap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace cjac::cli
