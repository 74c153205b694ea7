#include "cli.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fivedual/assembly.hpp"
#include "fivedual/duality.hpp"
#include "fivedual/io.hpp"
#include "fivedual/lens.hpp"

namespace fivedual::cli {

namespace {

using json = nlohmann::ordered_json;
constexpr int kSchemaVersion = 1;

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  json& inputs() { return inputs_; }
  json& results() { return results_; }

  void verdict(const std::string& check, bool passed, const std::string& witness = {}) {
    json v;
    v["check"] = check;
    v["passed"] = passed;
    if (!passed) v["witness"] = witness.empty() ? "no witness recorded" : witness;
    verdicts_.push_back(std::move(v));
    all_passed_ = all_passed_ && passed;
  }

  template <class F>
  auto timed(const std::string& phase, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(body())>) {
      body();
      record(phase, start);
    } else {
      auto value = body();
      record(phase, start);
      return value;
    }
  }

  bool passed() const { return all_passed_; }

  void emit(std::ostream& out, bool as_json, bool with_timings) const {
    if (as_json) {
      json root;
      root["schema_version"] = kSchemaVersion;
      root["command"] = command_;
      root["inputs"] = inputs_;
      root["verdicts"] = verdicts_;
      root["results"] = results_;
      if (with_timings) root["timings_ms"] = timings_;
      out << root.dump(2) << '\n';
      return;
    }
    out << command_ << '\n';
    for (const auto& v : verdicts_) {
      out << (v["passed"].get<bool>() ? "  PASS " : "  FAIL ") << v["check"].get<std::string>();
      if (v.contains("witness")) out << ": " << v["witness"].get<std::string>();
      out << '\n';
    }
    for (const auto& [key, value] : results_.items())
      out << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    if (with_timings)
      for (const auto& [key, value] : timings_.items()) out << "  time " << key << ": " << value.dump() << " ms\n";
  }

 private:
  void record(const std::string& phase, std::chrono::steady_clock::time_point start) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    timings_[phase] = std::chrono::duration<double, std::milli>(elapsed).count();
  }

  std::string command_;
  json inputs_ = json::object();
  json verdicts_ = json::array();
  json results_ = json::object();
  json timings_ = json::object();
  bool all_passed_ = true;
};

std::string element_text(const GroupRingElement& a) { return to_string(a); }

json matrix_json(const GRMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element_text(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json ranks_top_down(const ChainComplex& c) {
  json r = json::array();
  for (std::size_t k = 0; k <= c.top_degree(); ++k) r.push_back(c.rank(c.top_degree() - k));
  return r;
}

json homology_table(const ChainComplex& c, Coefficients coeffs) {
  json t = json::array();
  for (std::size_t d = 0; d <= c.top_degree(); ++d) t.push_back(to_string(homology(c, d, coeffs)));
  return t;
}

std::string first_failure(const std::vector<DegreeCheck>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return c.witness;
  return {};
}

void add_validation(Report& report, const ChainComplex& c, const std::string& prefix = {}) {
  const auto v = validate_complex(c);
  report.verdict(prefix + "d_squared_zero", v.valid(), first_failure(v.compositions));
}

bool add_alg5(Report& report, const ChainComplex& c, const std::string& prefix = {}) {
  const auto alg5 = is_alg5(c);
  for (const auto& item : alg5.items) report.verdict(prefix + "alg5." + item.name, item.passed, item.detail);
  return alg5.member;
}

void add_chain_map(Report& report, const ChainMap& f, const std::string& name, std::optional<long> x,
                   std::optional<long> y) {
  const auto r = is_chain_map(f);
  report.verdict(name + ".commutes", r.commutes, first_failure(r.squares));
  if (!r.commutes) return;
  const auto scalar = [](const std::optional<Integer>& s) { return s ? json(s->get_str()) : json(nullptr); };
  report.results()[name + ".end_scalars"] = json::array({scalar(r.bottom_scalar), scalar(r.top_scalar)});
  if (x) report.verdict(name + ".x", r.bottom_scalar && *r.bottom_scalar == *x,
                        "x = " + (r.bottom_scalar ? r.bottom_scalar->get_str() : "unavailable"));
  if (y) report.verdict(name + ".y", r.top_scalar && *r.top_scalar == *y,
                        "y = " + (r.top_scalar ? r.top_scalar->get_str() : "unavailable"));
}

void add_homotopy(Report& report, const ChainHomotopy& h, const std::string& name) {
  const auto r = verify_homotopy(h);
  report.verdict(name, r.verified, first_failure(r.degrees));
  if (r.verified) report.verdict(name + ".end_scalars_agree", r.end_scalars_agree);
}

json view_json(const DualFormView& v) {
  json j;
  j["d3"] = matrix_json(v.d3);
  j["j_rank"] = v.j_rank;
  j["form_rank"] = v.form_rank;
  return j;
}

json move_log_json(const std::vector<MoveRecord>& moves) {
  json log = json::array();
  for (const auto& m : moves) log.push_back({{"position", m.position}, {"rank", m.rank}, {"label", m.label}});
  return log;
}

// Shared options.
struct Common {
  bool as_json = false;
  bool timings = true;
};

int cmd_check(Report& report, const std::string& file) {
  report.inputs()["file"] = file;
  const auto c = report.timed("load", [&] { return read_complex_file(file); });
  report.results()["ranks"] = ranks_top_down(c);
  report.timed("validate", [&] { add_validation(report, c); });
  if (c.top_degree() != 5) {
    report.verdict("length_6", false, "complex has " + std::to_string(c.top_degree() + 1) + " modules");
    return kCheckFailed;
  }
  report.timed("alg5", [&] { add_alg5(report, c); });
  report.timed("dual_form", [&] {
    const auto rec = recognize_dual_form(c);
    report.results()["dual_form"] = rec.view ? view_json(*rec.view) : json(nullptr);
    if (!rec.view) report.results()["dual_form_diagnostic"] = rec.diagnostic;
  });
  return report.passed() ? kPass : kCheckFailed;
}

int cmd_homology(Report& report, const std::string& file, const std::string& coeffs, std::optional<std::size_t> degree) {
  report.inputs()["file"] = file;
  report.inputs()["coefficients"] = coeffs;
  const auto c = read_complex_file(file);
  const auto kind = coeffs == "trivial" ? Coefficients::kTrivial : Coefficients::kIntegral;
  add_validation(report, c);
  if (!report.passed()) return kCheckFailed;
  report.timed("homology", [&] {
    if (degree) {
      if (*degree > c.top_degree()) throw DomainError("degree out of range");
      report.inputs()["degree"] = *degree;
      report.results()["homology"] = to_string(homology(c, *degree, kind));
    } else {
      report.results()["homology_by_degree"] = homology_table(c, kind);
    }
  });
  return kPass;
}

int cmd_dualform(Report& report, const std::string& file, const std::string& output, bool assemble,
                 std::size_t budget) {
  report.inputs()["file"] = file;
  report.inputs()["assemble"] = assemble;
  if (assemble) report.inputs()["budget"] = budget;
  const auto c = read_complex_file(file);
  if (c.top_degree() != 5 || !is_alg5(c).member) {
    add_validation(report, c);
    report.verdict("input_alg5", false, "input is not an ALG5 complex");
    return kCheckFailed;
  }
  report.verdict("input_alg5", true);
  const auto stage6 = report.timed("stage6", [&] { return to_dual_form_stage6(c); });
  report.results()["moves"] = move_log_json(stage6.moves);
  report.results()["stage6_ranks"] = ranks_top_down(stage6.complex);
  report.timed("stage6_checks", [&] {
    add_validation(report, stage6.complex, "stage6.");
    report.verdict("stage6.alg5", is_alg5(stage6.complex).member);
    report.verdict("stage6.euler_characteristic_zero", euler_characteristic(stage6.complex) == 0);
    for (auto kind : {Coefficients::kIntegral, Coefficients::kTrivial}) {
      const auto before = homology_table(c, kind), after = homology_table(stage6.complex, kind);
      report.verdict(std::string("stage6.homology_preserved.") + (kind == Coefficients::kIntegral ? "integral" : "trivial"),
                     before == after, "before " + before.dump() + ", after " + after.dump());
    }
  });
  const auto rec = recognize_dual_form(stage6.complex);
  report.results()["stage6_dual_form"] = rec.view ? json("recognized") : json(rec.diagnostic);

  ChainComplex written = stage6.complex;
  if (assemble) {
    const auto outcome = report.timed("solver", [&] {
      return solve_chain_isomorphism(tail_segment(stage6.complex), head_segment(stage6.complex), budget);
    });
    report.results()["solver"] = {{"found", outcome.iso.has_value()},
                                  {"method", outcome.iso ? json(outcome.iso->method) : json(nullptr)},
                                  {"nodes", outcome.nodes_used},
                                  {"detail", outcome.detail}};
    report.verdict("assembly.isomorphism_found", outcome.iso.has_value(), outcome.detail);
    if (outcome.iso) {
      const auto assembled = report.timed("assemble", [&] { return assemble_dual_form(stage6.complex, *outcome.iso); });
      report.verdict("assembly.dual_form_recognized", true);
      report.verdict("assembly.alg5", is_alg5(assembled.complex).member);
      add_chain_map(report, assembled.equivalence, "assembly.equivalence", 1, 1);
      const auto before = homology_table(c, Coefficients::kIntegral);
      const auto after = homology_table(assembled.complex, Coefficients::kIntegral);
      report.verdict("assembly.homology_preserved.integral", before == after,
                     "before " + before.dump() + ", after " + after.dump());
      report.results()["dual_form"] = view_json(assembled.view);
      written = assembled.complex;
    }
  }
  if (!output.empty()) {
    write_text_file(output, serialize_complex(written));
    report.inputs()["output"] = output;
  }
  return report.passed() ? kPass : kCheckFailed;
}

int cmd_normalize(Report& report, const std::string& file, const std::string& map_file) {
  report.inputs()["file"] = file;
  report.inputs()["map"] = map_file;
  const auto c = read_complex_file(file);
  const auto rec = recognize_dual_form(c);
  report.verdict("dual_form_recognized", rec.view.has_value(), rec.diagnostic);
  if (!rec.view) return kCheckFailed;
  const auto phi = read_chain_map_file(map_file, dualize_complex(c), c);
  add_chain_map(report, phi, "phi", std::nullopt, std::nullopt);
  if (!report.passed()) return kCheckFailed;
  std::optional<NormalizedDuality> nd;
  try {
    nd = report.timed("normalize", [&] { return normalize_duality(*rec.view, phi); });
  } catch (const DomainError& e) {
    report.verdict("normalize", false, e.what());
    return kCheckFailed;
  }
  report.verdict("normalize", true);
  add_chain_map(report, nd->psi, "psi", 1, -1);
  add_homotopy(report, nd->homotopy, "homotopy");
  report.verdict("central_square", central_square_holds(*rec.view, nd->theta1, nd->theta2));
  report.results()["negated"] = nd->negated;
  report.results()["theta1"] = matrix_json(nd->theta1);
  report.results()["theta2"] = matrix_json(nd->theta2);
  report.results()["theta_trace_mod_order"] = json::array({nd->theta1_trace_mod_order, nd->theta2_trace_mod_order});
  json hs = json::array();
  for (const auto& comp : nd->homotopy.components()) hs.push_back(matrix_json(comp));
  report.results()["homotopy_components"] = std::move(hs);
  return report.passed() ? kPass : kCheckFailed;
}

int cmd_asd(Report& report, const std::string& file) {
  report.inputs()["file"] = file;
  const auto c = read_complex_file(file);
  const auto rec = recognize_dual_form(c);
  report.verdict("dual_form_recognized", rec.view.has_value(), rec.diagnostic);
  if (!rec.view) return kCheckFailed;
  const bool asd = asd_check(*rec.view);
  report.results()["anti_self_dual"] = asd;
  report.results()["d3"] = matrix_json(rec.view->d3);
  if (!asd) report.results()["dual_d3"] = matrix_json(dual_matrix(rec.view->d3));
  return kPass;
}

json obstruction_json(const ObstructionReport& o, std::size_t order) {
  return {{"group_order", order},          {"group_order_even", o.group_order_even},
          {"h3_free_rank", o.h3_free_rank}, {"j_rank", o.j_rank},
          {"form_rank", o.form_rank},       {"j_rank_mod_order", o.j_rank_congruence},
          {"obstructed", o.obstructed}};
}

int cmd_obstruction(Report& report, const std::string& file) {
  report.inputs()["file"] = file;
  const auto c = read_complex_file(file);
  const auto rec = recognize_dual_form(c);
  report.verdict("dual_form_recognized", rec.view.has_value(), rec.diagnostic);
  if (!rec.view) return kCheckFailed;
  const auto o = report.timed("obstruction", [&] { return obstruction_check(*rec.view); });
  report.verdict("h3_cross_check", o.h3_cross_check,
                 "H_3 free rank " + std::to_string(o.h3_free_rank) + " but j_rank - form_rank = " +
                     std::to_string(o.j_rank) + " - " + std::to_string(o.form_rank));
  report.results()["obstruction"] = obstruction_json(o, c.group()->order());
  return report.passed() ? kPass : kCheckFailed;
}

int cmd_lens(Report& report, std::size_t n, bool asd, const std::string& output, const std::string& asd_output) {
  report.inputs()["n"] = n;
  report.inputs()["asd"] = asd;
  if (n < 2) throw DomainError("lens: n must be at least 2");
  const auto a = lens_complex(n);
  report.timed("checks", [&] {
    add_validation(report, a);
    add_alg5(report, a);
    const auto rec = recognize_dual_form(a);
    report.verdict("dual_form_recognized", rec.view.has_value(), rec.diagnostic);
    if (rec.view) {
      report.verdict("j_rank_congruent_minus_one", (rec.view->j_rank + 1) % n == 0,
                     "j_rank = " + std::to_string(rec.view->j_rank));
      report.results()["obstruction"] = obstruction_json(obstruction_check(*rec.view), n);
      report.results()["anti_self_dual_as_given"] = asd_check(*rec.view);
    }
    add_chain_map(report, lens_duality_map(n), "phi", 1, -1);
    report.results()["homology_trivial"] = homology_table(a, Coefficients::kTrivial);
    report.results()["homology_integral"] = homology_table(a, Coefficients::kIntegral);
  });
  if (!output.empty()) {
    write_text_file(output, serialize_complex(a));
    report.inputs()["output"] = output;
  }
  if (!asd) return report.passed() ? kPass : kCheckFailed;

  if (n % 2 == 0) {
    report.results()["asd_status"] = "obstructed";
  } else if (n % 4 == 3) {
    report.results()["asd_status"] = "unknown";
  } else {
    std::optional<AsdTransform> t;
    try {
      t = report.timed("asd", [&] { return lens_asd_transform(n); });
    } catch (const DomainError& e) {
      report.verdict("asd_transform", false, e.what());
      return kCheckFailed;
    }
    report.verdict("asd_transform", true);
    report.results()["asd_status"] = "anti-self-dual";
    report.results()["k"] = t->unit.k;
    report.results()["alpha"] = element_text(t->unit.alpha);
    report.results()["beta"] = element_text(t->unit.beta);
    report.results()["beta_inv"] = element_text(t->unit.beta_inv);
    report.results()["x"] = element_text(t->x);
    report.results()["target_sign"] = t->target_sign;
    add_chain_map(report, t->f, "f", 1, 1);
    add_homotopy(report, t->homotopy, "homotopy_to_signed_diagonal");
    const auto rec = recognize_dual_form(t->a_prime);
    report.verdict("a_prime.dual_form_recognized", rec.view.has_value(), rec.diagnostic);
    const bool asd_ok = rec.view && asd_check(*rec.view);
    report.verdict("asd_check", asd_ok);
    report.results()["asd_check"] = asd_ok;
    if (rec.view) report.verdict("a_prime.not_obstructed", !obstruction_check(*rec.view).obstructed);
    if (!asd_output.empty()) {
      write_text_file(asd_output, serialize_complex(t->a_prime));
      report.inputs()["asd_output"] = asd_output;
    }
  }
  return report.passed() ? kPass : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact algebra for algebraic 5-complexes over integral group rings", "fivedual"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.as_json, "Emit a JSON report");
  app.add_flag("!--no-timings", common.timings, "Omit the timings section");

  std::string file, map_file, output, asd_output, coefficients = "integral";
  std::optional<std::size_t> degree;
  std::size_t n = 0, budget = 200000;
  bool assemble = false, asd = false;

  auto* check = app.add_subcommand("check", "Validate a complex: d o d = 0, ALG5 membership, dual form");
  check->add_option("FILE", file, "Complex file")->required()->check(CLI::ExistingFile);

  auto* homology_cmd = app.add_subcommand("homology", "Homology of a complex");
  homology_cmd->add_option("FILE", file, "Complex file")->required()->check(CLI::ExistingFile);
  homology_cmd->add_option("--coefficients", coefficients, "integral or trivial")
      ->check(CLI::IsMember({"integral", "trivial"}));
  homology_cmd->add_option("--degree", degree, "Single degree");

  auto* dualform = app.add_subcommand("dualform", "Run the simple-homotopy pipeline towards dual form");
  dualform->add_option("FILE", file, "ALG5 complex file")->required()->check(CLI::ExistingFile);
  dualform->add_option("-o,--output", output, "Where to write the resulting complex");
  dualform->add_flag("--assemble", assemble, "Search for the end isomorphism and assemble the dual form");
  dualform->add_option("--budget", budget, "Node budget of the isomorphism search");

  auto* normalize = app.add_subcommand("normalize", "Normalize a duality equivalence to (-1,-1,theta2,theta1,1,1)");
  normalize->add_option("FILE", file, "Dual-form complex file")->required()->check(CLI::ExistingFile);
  normalize->add_option("MAPFILE", map_file, "Map dual(C) -> C")->required()->check(CLI::ExistingFile);

  auto* asd_cmd = app.add_subcommand("asd", "Test d_3^* = -d_3 on a dual-form complex");
  asd_cmd->add_option("FILE", file, "Dual-form complex file")->required()->check(CLI::ExistingFile);

  auto* obstruction = app.add_subcommand("obstruction", "Parity obstruction to anti-self-duality");
  obstruction->add_option("FILE", file, "Dual-form complex file")->required()->check(CLI::ExistingFile);

  auto* lens = app.add_subcommand("lens", "Build and verify the lens-space complex L(n;1,1)");
  lens->add_option("--n", n, "Order of the fundamental group")->required()->check(CLI::Range(2, 1 << 20));
  lens->add_flag("--asd", asd, "Build the anti-self-dual representative when n = 4k+1");
  lens->add_option("-o,--output", output, "Write the complex");
  lens->add_option("--asd-output", asd_output, "Write the anti-self-dual complex");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const auto* sub = app.get_subcommands().front();
  Report report(sub->get_name());
  int status = kPass;
  try {
    if (sub == check) status = cmd_check(report, file);
    else if (sub == homology_cmd) status = cmd_homology(report, file, coefficients, degree);
    else if (sub == dualform) status = cmd_dualform(report, file, output, assemble, budget);
    else if (sub == normalize) status = cmd_normalize(report, file, map_file);
    else if (sub == asd_cmd) status = cmd_asd(report, file);
    else if (sub == obstruction) status = cmd_obstruction(report, file);
    else status = cmd_lens(report, n, asd, output, asd_output);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  report.emit(out, common.as_json, common.timings);
  return status;
}

}  // namespace fivedual::cli
