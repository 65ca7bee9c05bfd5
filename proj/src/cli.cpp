#include "k3aut/cli.hpp"

#include "k3aut/classification.hpp"
#include "k3aut/elliptic.hpp"
#include "k3aut/isometry.hpp"
#include "k3aut/lattice.hpp"
#include "k3aut/lefschetz.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace k3aut {

namespace {

using nlohmann::json;

json int_json(const Int& value) {
  if (value.fits_slong_p()) return static_cast<std::int64_t>(value.get_si());
  return value.get_str();
}

json rat_json(const Rat& value) {
  if (value.get_den() == 1) return int_json(value.get_num());
  return format_rational(value);
}

Rat rat_from_json(const json& value) {
  if (value.is_number_integer()) return Rat(static_cast<long>(value.get<std::int64_t>()));
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw std::invalid_argument("coefficients must be integers or rational strings like \"-1/2\"");
}

Poly poly_from_json(const json& value) {
  if (!value.is_array()) throw std::invalid_argument("polynomial coefficients must be an array");
  std::vector<Rat> coeffs;
  for (const json& entry : value) coeffs.push_back(rat_from_json(entry));
  return Poly(std::move(coeffs));
}

RootOfUnity root_from_json(const json& value) {
  if (!value.is_object() || !value.contains("n") || !value.contains("k"))
    throw std::invalid_argument("a root of unity needs fields \"n\" and \"k\"");
  return make_root_of_unity(value["n"].get<long>(), value["k"].get<long>());
}

json root_json(const RootOfUnity& root) {
  RootOfUnity r = make_root_of_unity(root.n, root.k);
  return json{{"n", r.n}, {"k", r.k}};
}

// A lattice argument is either an expression like "U+D4(2)" or a path to a
// JSON file holding {"expr": ...} or {"gram": [[...]], "name"?: ...}.
GramLattice lattice_from_spec(const std::string& spec) {
  std::ifstream in(spec);
  if (!in.good()) return build_lattice(spec);
  json doc = json::parse(in);
  if (doc.contains("expr")) return build_lattice(doc["expr"].get<std::string>());
  if (!doc.contains("gram"))
    throw std::invalid_argument("lattice file needs an \"expr\" or \"gram\" field");
  const json& rows = doc["gram"];
  if (!rows.is_array() || rows.empty())
    throw std::invalid_argument("\"gram\" must be a nonempty array of rows");
  int n = static_cast<int>(rows.size());
  IntMatrix gram(n, n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("\"gram\" must be square");
    for (int j = 0; j < n; ++j) {
      const json& entry = rows[i][j];
      if (entry.is_number_integer())
        gram(i, j) = Int(static_cast<long>(entry.get<std::int64_t>()));
      else if (entry.is_string())
        gram(i, j) = Int(entry.get<std::string>());
      else
        throw std::invalid_argument("Gram entries must be integers");
    }
  }
  return make_lattice(std::move(gram), doc.value("name", std::string()));
}

std::string example_status_name(ExampleReport::Status status) {
  switch (status) {
    case ExampleReport::Status::pass:
      return "pass";
    case ExampleReport::Status::known_discrepancy:
      return "known_discrepancy";
    case ExampleReport::Status::note:
      return "note";
    case ExampleReport::Status::fail:
      return "fail";
  }
  return "fail";
}

void command_lattice_invariants(std::ostream& out, bool json_out, const std::string& spec) {
  GramLattice lattice = lattice_from_spec(spec);
  LatticeInvariants inv = lattice_invariants(lattice);
  if (json_out) {
    json doc;
    doc["rank"] = inv.rank;
    doc["signature"] = json::array({inv.t_plus, inv.t_minus});
    doc["a"] = inv.a;
    doc["p"] = inv.elementary_prime ? int_json(*inv.elementary_prime) : json(nullptr);
    doc["delta"] = inv.delta ? json(*inv.delta) : json(nullptr);
    json factors = json::array();
    for (const Int& d : inv.invariant_factors) factors.push_back(int_json(d));
    doc["invariant_factors"] = factors;
    out << doc.dump(2) << '\n';
    return;
  }
  out << "lattice " << (lattice.name.empty() ? "(anonymous)" : lattice.name) << ": rank "
      << inv.rank << ", signature (" << inv.t_plus << ", " << inv.t_minus << "), det "
      << lattice_determinant(lattice) << '\n';
  if (inv.a == 0) {
    out << "unimodular (L*/L trivial)\n";
  } else {
    out << "L*/L invariant factors:";
    for (const Int& d : inv.invariant_factors) out << ' ' << d;
    out << "  (a = " << inv.a << ")\n";
    if (inv.elementary_prime) out << "p-elementary with p = " << *inv.elementary_prime << '\n';
  }
  if (inv.delta) out << "delta = " << *inv.delta << '\n';
}

void command_classify(std::ostream& out, bool json_out, long order, const std::string& spec) {
  GramLattice lattice = lattice_from_spec(spec);
  FixedLocusProfile profile = fixed_locus_profile(order, lattice);
  if (json_out) {
    json doc;
    doc["exists"] = profile.exists;
    if (profile.exists) {
      doc["M"] = profile.points;
      doc["N"] = profile.rational_curves;
      if (profile.curve_genus) doc["genus"] = *profile.curve_genus;
      if (profile.special == SpecialLocus::empty_locus) doc["special"] = "empty_locus";
      if (profile.special == SpecialLocus::two_elliptic_curves)
        doc["special"] = "two_elliptic_curves";
    }
    out << doc.dump(2) << '\n';
    return;
  }
  if (!profile.exists) {
    out << "no purely non-symplectic automorphism of order " << order << " with invariant lattice "
        << lattice.name << '\n';
    return;
  }
  out << "order " << order << " on " << lattice.name << ": ";
  if (profile.special == SpecialLocus::empty_locus) {
    out << "fixed locus empty\n";
    return;
  }
  if (profile.special == SpecialLocus::two_elliptic_curves) {
    out << "fixed locus is two disjoint elliptic curves\n";
    return;
  }
  out << profile.points << " isolated points, " << profile.rational_curves << " rational curves";
  if (profile.curve_genus) out << ", one curve of genus " << *profile.curve_genus;
  out << '\n';
}

void command_lefschetz(std::ostream& out, bool json_out, int order, int rank) {
  FixedPointCounts counts = solve_fixed_point_counts(order, rank);
  if (json_out) {
    json doc;
    doc["M"] = rat_json(counts.total_points);
    doc["c"] = rat_json(counts.c);
    json m = json::object();
    for (size_t i = 0; i < counts.types.size(); ++i) {
      std::string key = std::to_string(counts.types[i].first) + "," +
                        std::to_string(counts.types[i].second);
      m[key] = rat_json(counts.multiplicities[i]);
    }
    doc["m"] = m;
    doc["unique"] = counts.unique;
    doc["admissible"] = counts.admissible;
    doc["violations"] = counts.violations;
    out << doc.dump(2) << '\n';
    return;
  }
  out << "order " << order << ", rank " << rank << ": M = " << format_rational(counts.total_points)
      << ", c = " << format_rational(counts.c) << '\n';
  for (size_t i = 0; i < counts.types.size(); ++i)
    out << "m(" << counts.types[i].first << "," << counts.types[i].second
        << ") = " << format_rational(counts.multiplicities[i]) << '\n';
  out << (counts.unique ? "solution unique" : "solution not unique") << '\n';
  if (!counts.admissible) {
    out << "not admissible:";
    for (const std::string& violation : counts.violations) out << ' ' << violation << ';';
    out << '\n';
  }
}

int command_elliptic_analyze(std::ostream& out, bool json_out, const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::invalid_argument("cannot open model file " + path);
  json doc = json::parse(in);
  WeierstrassModel model{poly_from_json(doc.value("a2", json::array())),
                         poly_from_json(doc.value("a4", json::array())),
                         poly_from_json(doc.value("a6", json::array()))};
  FiberConfiguration config = analyze_fibers(model);

  json result;
  result["c4"] = config.invariants.c4.to_string();
  result["c6"] = config.invariants.c6.to_string();
  result["delta"] = config.invariants.discriminant.to_string();
  json places = json::array();
  for (const FiberPlace& place : config.places) {
    json p;
    p["place"] = place.at_infinity ? "infinity" : place.place.to_string();
    p["degree"] = place.degree;
    p["v_c4"] = place.valuations.c4 ? json(*place.valuations.c4) : json(nullptr);
    p["v_c6"] = place.valuations.c6 ? json(*place.valuations.c6) : json(nullptr);
    p["v_delta"] = place.valuations.delta;
    p["type"] = place.type ? json(kodaira_name(*place.type)) : json(nullptr);
    p["euler"] = place.euler;
    p["components"] = place.components;
    p["root_lattice"] = place.root_lattice ? json(*place.root_lattice) : json(nullptr);
    p["diagnostics"] = place.diagnostics;
    places.push_back(p);
  }
  result["places"] = places;
  result["total_euler"] = config.total_euler;
  result["valid_k3"] = config.valid_k3;
  result["diagnostics"] = config.diagnostics;

  if (doc.contains("claimed_S")) {
    ShiodaTateReport st = compute_shioda_tate(config, doc["claimed_S"].get<std::string>());
    json shioda;
    shioda["claimed"] = doc["claimed_S"].get<std::string>();
    shioda["lattice_rank"] = st.lattice_rank;
    shioda["fiber_component_sum"] = st.fiber_component_sum;
    shioda["mw"] = st.mw_rank;
    shioda["all_required_present"] = st.all_required_present;
    shioda["exact_match"] = st.exact_match;
    result["shioda_tate"] = shioda;
  }
  if (doc.contains("automorphism")) {
    const json& phi_doc = doc["automorphism"];
    MonomialAutomorphism phi{root_from_json(phi_doc.at("alpha")), root_from_json(phi_doc.at("beta")),
                             root_from_json(phi_doc.at("gamma"))};
    try {
      MultiplierResult multiplier = automorphism_multiplier(model, phi);
      result["multiplier"] = root_json(multiplier.multiplier);
      result["multiplier_order"] = multiplier.order;
    } catch (const std::domain_error& error) {
      result["multiplier"] = nullptr;
      result["multiplier_error"] = error.what();
    }
  }

  if (json_out) {
    out << result.dump(2) << '\n';
  } else {
    out << "c4 = " << config.invariants.c4.to_string() << '\n';
    out << "c6 = " << config.invariants.c6.to_string() << '\n';
    out << "delta = " << config.invariants.discriminant.to_string() << '\n';
    for (const FiberPlace& place : config.places) {
      out << "place " << (place.at_infinity ? "infinity" : place.place.to_string()) << " (degree "
          << place.degree << "): ";
      if (place.type) {
        out << kodaira_name(*place.type) << ", euler " << place.euler << ", " << place.components
            << " components";
        if (place.root_lattice) out << ", root lattice " << *place.root_lattice;
      } else {
        out << "unclassified";
        for (const std::string& d : place.diagnostics) out << "; " << d;
      }
      out << '\n';
    }
    out << "total euler " << config.total_euler << ", valid K3: "
        << (config.valid_k3 ? "yes" : "no") << '\n';
    for (const std::string& d : config.diagnostics) out << "note: " << d << '\n';
    if (result.contains("shioda_tate")) {
      const json& st = result["shioda_tate"];
      out << "Shioda-Tate vs " << st["claimed"].get<std::string>() << ": mw = " << st["mw"]
          << ", exact match: " << (st["exact_match"].get<bool>() ? "yes" : "no") << '\n';
    }
    if (result.contains("multiplier_order"))
      out << "2-form multiplier of order " << result["multiplier_order"] << '\n';
    if (result.contains("multiplier_error"))
      out << "automorphism does not preserve the equation: "
          << result["multiplier_error"].get<std::string>() << '\n';
  }
  return 0;
}

int command_verify_examples(std::ostream& out, bool json_out) {
  std::vector<ExampleReport> reports = verify_registry();
  bool any_fail = false;
  for (const ExampleReport& report : reports)
    any_fail = any_fail || report.status == ExampleReport::Status::fail;
  if (json_out) {
    json doc;
    json examples = json::array();
    for (const ExampleReport& report : reports) {
      json e;
      e["id"] = report.id;
      e["status"] = example_status_name(report.status);
      e["details"] = report.details;
      examples.push_back(e);
    }
    doc["examples"] = examples;
    doc["all_ok"] = !any_fail;
    out << doc.dump(2) << '\n';
  } else {
    for (const ExampleReport& report : reports) {
      out << report.id << " " << example_status_name(report.status);
      for (const std::string& detail : report.details) out << "\n    " << detail;
      out << '\n';
    }
    out << (any_fail ? "FAIL" : "OK") << '\n';
  }
  return any_fail ? 1 : 0;
}

int command_table_verify(std::ostream& out, bool json_out) {
  std::vector<Table1Row> rows = verify_table1();
  int inconsistent = 0;
  for (const Table1Row& row : rows)
    if (!row.consistent) ++inconsistent;
  if (json_out) {
    json doc;
    json rows_json = json::array();
    for (const Table1Row& row : rows) {
      json r;
      r["rank"] = row.rank;
      r["a"] = row.a;
      r["S"] = row.s_expr;
      r["T"] = row.t_expr;
      r["s_matches"] = row.s_matches;
      r["complement_ok"] = row.complement_ok;
      r["consistent"] = row.consistent;
      r["notes"] = row.notes;
      rows_json.push_back(r);
    }
    doc["rows"] = rows_json;
    doc["inconsistent_rows"] = inconsistent;
    out << doc.dump(2) << '\n';
  } else {
    for (const Table1Row& row : rows) {
      out << "(r = " << row.rank << ", a = " << row.a << ")  S = " << row.s_expr
          << "  T = " << row.t_expr << "  " << (row.consistent ? "ok" : "MISMATCH");
      for (const std::string& note : row.notes) out << "\n    " << note;
      out << '\n';
    }
    out << inconsistent << " inconsistent row(s) of " << rows.size() << '\n';
  }
  return inconsistent == 0 ? 0 : 1;
}

void command_isometry_search(std::ostream& out, bool json_out, const std::string& spec,
                             const IsometryConstraints& constraints) {
  GramLattice lattice = lattice_from_spec(spec);
  IsometrySearchResult result = search_isometries(lattice, constraints);
  if (json_out) {
    json doc;
    doc["entry_bound"] = result.entry_bound;
    doc["parity_pruned"] = result.parity_pruned;
    json list = json::array();
    for (const IsometryCandidate& candidate : result.candidates) {
      json entry;
      json flat = json::array();
      for (int i = 0; i < candidate.matrix.rows(); ++i)
        for (int j = 0; j < candidate.matrix.cols(); ++j)
          flat.push_back(int_json(candidate.matrix(i, j)));
      entry["matrix"] = flat;  // row-major
      entry["order"] = candidate.order;
      entry["discriminant_action_trivial"] = candidate.discriminant_action_trivial;
      list.push_back(entry);
    }
    doc["isometries"] = list;
    out << doc.dump(2) << '\n';
    return;
  }
  if (result.parity_pruned) {
    out << "no candidates: f^2 = -I needs both signature parts even\n";
    return;
  }
  out << result.candidates.size() << " isometr" << (result.candidates.size() == 1 ? "y" : "ies")
      << " (certified up to entry bound " << result.entry_bound << ")\n";
  for (const IsometryCandidate& candidate : result.candidates) {
    out << "order " << candidate.order << ", discriminant action "
        << (candidate.discriminant_action_trivial ? "trivial" : "non-trivial") << ":\n";
    for (int i = 0; i < candidate.matrix.rows(); ++i) {
      out << "  [";
      for (int j = 0; j < candidate.matrix.cols(); ++j)
        out << (j ? " " : "") << candidate.matrix(i, j);
      out << "]\n";
    }
  }
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CommandResult result;
  std::ostringstream out;

  CLI::App app{"exact-arithmetic toolkit for non-symplectic K3 automorphisms"};
  app.require_subcommand(1);
  bool json_out = false;

  std::string lattice_arg;
  CLI::App* lattice_cmd = app.add_subcommand("lattice", "lattice invariant computations");
  lattice_cmd->require_subcommand(1);
  CLI::App* invariants_cmd =
      lattice_cmd->add_subcommand("invariants", "rank, signature and discriminant-group data");
  invariants_cmd->add_option("lattice", lattice_arg, "expression like \"U+D4\" or a JSON file")
      ->required();
  invariants_cmd->add_flag("--json", json_out, "machine-readable output");
  invariants_cmd->callback([&] { command_lattice_invariants(out, json_out, lattice_arg); });

  long classify_order = 0;
  std::string classify_arg;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "fixed-locus profile of a non-symplectic automorphism");
  classify_cmd->add_option("--order", classify_order, "automorphism order")->required();
  classify_cmd->add_option("lattice", classify_arg, "invariant lattice expression or JSON file")
      ->required();
  classify_cmd->add_flag("--json", json_out, "machine-readable output");
  classify_cmd->callback([&] { command_classify(out, json_out, classify_order, classify_arg); });

  int lefschetz_order = 0;
  int lefschetz_rank = 0;
  CLI::App* lefschetz_cmd =
      app.add_subcommand("lefschetz", "solve the holomorphic fixed-point count system");
  lefschetz_cmd->add_option("--order", lefschetz_order, "automorphism order (4, 8 or 16)")
      ->required();
  lefschetz_cmd->add_option("--rank", lefschetz_rank, "rank of the invariant lattice")->required();
  lefschetz_cmd->add_flag("--json", json_out, "machine-readable output");
  lefschetz_cmd->callback([&] { command_lefschetz(out, json_out, lefschetz_order, lefschetz_rank); });

  std::string elliptic_file;
  CLI::App* elliptic_cmd = app.add_subcommand("elliptic", "Weierstrass model analysis");
  elliptic_cmd->require_subcommand(1);
  CLI::App* analyze_cmd = elliptic_cmd->add_subcommand("analyze", "fiber configuration of a model");
  analyze_cmd->add_option("file", elliptic_file, "JSON model file")->required();
  analyze_cmd->add_flag("--json", json_out, "machine-readable output");
  analyze_cmd->callback(
      [&] { result.exit_code = command_elliptic_analyze(out, json_out, elliptic_file); });
  CLI::App* verify_examples_cmd =
      elliptic_cmd->add_subcommand("verify-examples", "check the built-in example registry");
  verify_examples_cmd->add_flag("--json", json_out, "machine-readable output");
  verify_examples_cmd->callback([&] { result.exit_code = command_verify_examples(out, json_out); });

  CLI::App* table_cmd = app.add_subcommand("table", "2-elementary lattice table checks");
  table_cmd->require_subcommand(1);
  CLI::App* table_verify_cmd =
      table_cmd->add_subcommand("verify", "recompute invariants and complements of all rows");
  table_verify_cmd->add_flag("--json", json_out, "machine-readable output");
  table_verify_cmd->callback([&] { result.exit_code = command_table_verify(out, json_out); });

  std::string isometry_arg;
  IsometryConstraints constraints;
  CLI::App* isometry_cmd = app.add_subcommand("isometry", "bounded isometry search");
  isometry_cmd->require_subcommand(1);
  CLI::App* search_cmd = isometry_cmd->add_subcommand("search", "depth-first bounded enumeration");
  search_cmd->add_option("lattice", isometry_arg, "lattice expression or JSON file")->required();
  search_cmd->add_option("--order", constraints.order, "exact isometry order")->required();
  search_cmd->add_option("--bound", constraints.entry_bound, "entry bound (1..3)")
      ->default_val(1);
  search_cmd->add_flag("--f2-minus-i", constraints.require_f2_eq_minus_i,
                       "require f^2 = -I (no eigenvalue 1 or -1)");
  search_cmd->add_flag("--trivial-disc", constraints.require_trivial_discriminant_action,
                       "require trivial action on the discriminant group");
  search_cmd->add_flag("--json", json_out, "machine-readable output");
  search_cmd->callback([&] { command_isometry_search(out, json_out, isometry_arg, constraints); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
    result.output = out.str();
  } catch (const CLI::ParseError& error) {
    if (error.get_exit_code() == 0) {
      result.exit_code = 0;
      result.output = app.help();
    } else {
      result.exit_code = 2;
      result.output = std::string(error.what()) + "\n";
    }
  } catch (const json::exception& error) {
    result.exit_code = 2;
    result.output = std::string("input error: ") + error.what() + "\n";
  } catch (const std::invalid_argument& error) {
    result.exit_code = 2;
    result.output = std::string("input error: ") + error.what() + "\n";
  } catch (const std::exception& error) {
    result.exit_code = 3;
    result.output = std::string("computation error: ") + error.what() + "\n";
  }
  return result;
}

}  // namespace k3aut
