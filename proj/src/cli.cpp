#include "braidforge/cli.hpp"

#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "braidforge/braid.hpp"
#include "braidforge/compile.hpp"
#include "braidforge/error.hpp"
#include "braidforge/io.hpp"
#include "braidforge/orbifold.hpp"
#include "braidforge/presentation.hpp"
#include "braidforge/surface.hpp"
#include "braidforge/tl.hpp"

namespace braidforge {

namespace {

using nlohmann::ordered_json;

constexpr const char* kSchema = "braidforge/1";

std::string read_input(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  os << in.rdbuf();
  return os.str();
}

ordered_json complex_pair(const std::complex<double>& c) {
  return ordered_json::array({c.real(), c.imag()});
}

ordered_json matrix_json(const Eigen::MatrixXcd& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_pair(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void render_table(const ordered_json& payload, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& [key, value] : payload.items()) {
    if (key != "schema") width = std::max(width, key.size());
  }
  for (const auto& [key, value] : payload.items()) {
    if (key == "schema") continue;
    std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    if (value.is_string() && text.find('\n') != std::string::npos) {
      out << key << ":\n" << text;
      if (!text.empty() && text.back() != '\n') out << '\n';
      continue;
    }
    out << key << std::string(width - key.size() + 2, ' ') << text << '\n';
  }
}

ordered_json error_payload(const std::string& type, const std::string& message) {
  return ordered_json{{"schema", kSchema},
                      {"error", ordered_json{{"type", type}, {"message", message}}}};
}

std::string abelian_echo(const AbelianizationResult& a) {
  std::string s = "Z^" + std::to_string(a.free_rank);
  for (const BigInt& d : a.torsion_coefficients) s += " + Z/" + d.str();
  return s;
}

ordered_json torsion_json(const AbelianizationResult& a) {
  ordered_json torsion = ordered_json::array();
  for (const BigInt& d : a.torsion_coefficients) torsion.push_back(d.str());
  return torsion;
}

std::vector<int> parse_loop_word(const std::string& text) {
  std::istringstream is(text);
  std::vector<int> loop;
  std::string token;
  while (is >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InputError("invalid loop letter '" + token + "'");
    }
    if (used != token.size()) throw InputError("invalid loop letter '" + token + "'");
    loop.push_back(value);
  }
  return loop;
}

BraidSystem resolve_system(bool standard, int degree, const std::string& input) {
  if (standard == !input.empty()) {
    throw InputError("choose exactly one of --standard or --input");
  }
  if (standard) return standard_braid_system(degree);
  std::istringstream is(read_input(input));
  return parse_braid_system(is);
}

RepMatrices build_unitary_rep(int n, int p, const std::string& angle_text, TLParams* params_out) {
  const double theta = parse_angle(angle_text);
  const TLParams params = make_tl_params(std::polar(1.0, theta));
  if (params_out != nullptr) *params_out = params;
  return unitarize(rep_matrices(n, p, params), params);
}

ordered_json handle_invariants(const std::string& input) {
  const OrbifoldGeometry g = parse_geometry_json(read_input(input));
  validate(g);
  const InvariantReport r = invariant_report(g);
  ordered_json j{{"schema", kSchema}};
  j["chi_orb"] = format_rational(r.chi_orb);
  j["tau_orb"] = format_rational(r.tau_orb);
  j["index_K"] = format_rational(r.index_K);
  j["satake_normal_euler"] = format_rational(r.satake_normal_euler);
  j["einstein_plus_ok"] = r.einstein_plus_ok;
  j["einstein_minus_ok"] = r.einstein_minus_ok;
  j["index_K_integral"] = r.index_K_integral;
  return j;
}

ordered_json handle_hurwitz_orbit(bool standard, int degree, const std::string& input,
                                  std::uint64_t cap) {
  const BraidSystem bs = resolve_system(standard, degree, input);
  const OrbitResult r = hurwitz_orbit(bs, cap);
  ordered_json j{{"schema", kSchema}};
  j["degree"] = bs.degree();
  j["entries"] = bs.length();
  j["cap"] = cap;
  j["size"] = r.size;
  j["truncated"] = r.truncated;
  return j;
}

ordered_json handle_cover_report(bool standard, int degree, const std::string& input,
                                 int base_euler) {
  const BraidSystem bs = resolve_system(standard, degree, input);
  const CoverReport r = monodromy_report(bs, base_euler);
  ordered_json j{{"schema", kSchema}};
  j["degree"] = r.degree;
  j["base_euler"] = r.base_euler;
  j["branch_count"] = r.branch_count;
  j["cover_euler"] = r.cover_euler;
  j["transitive"] = r.transitive;
  return j;
}

ordered_json handle_braid_eq(const std::string& w1, const std::string& w2, int strands) {
  const BraidWord a = parse_braid_word(w1, strands);
  const BraidWord b = parse_braid_word(w2, strands);
  ordered_json j{{"schema", kSchema}};
  j["strands"] = strands;
  j["equal"] = words_equal(a, b);
  return j;
}

ordered_json handle_braid_nf(const std::string& word, int strands) {
  const GarsideForm nf = garside_normal_form(parse_braid_word(word, strands));
  ordered_json factors = ordered_json::array();
  for (const Permutation& p : nf.factors()) factors.push_back(p.images());
  ordered_json j{{"schema", kSchema}};
  j["strands"] = strands;
  j["delta_power"] = nf.delta_power();
  j["canonical_length"] = nf.canonical_length();
  j["factors"] = std::move(factors);
  j["word"] = format_braid_word(nf.to_word());
  return j;
}

ordered_json handle_braid_perm(const std::string& word, int strands) {
  const Permutation p = underlying_permutation(parse_braid_word(word, strands));
  ordered_json j{{"schema", kSchema}};
  j["strands"] = strands;
  j["images"] = p.images();
  return j;
}

ordered_json handle_abelianize(const std::string& input) {
  std::istringstream is(read_input(input));
  const GroupPresentation p = parse_presentation(is);
  const AbelianizationResult a = abelianization(p);
  ordered_json j{{"schema", kSchema}};
  j["generator_count"] = p.generator_count();
  j["free_rank"] = a.free_rank;
  j["torsion"] = torsion_json(a);
  j["group"] = abelian_echo(a);
  return j;
}

ordered_json handle_orbifold_quotient(const std::string& input,
                                      const std::vector<std::string>& loop_texts,
                                      const std::vector<int>& exponents) {
  std::istringstream is(read_input(input));
  const GroupPresentation p = parse_presentation(is);
  std::vector<std::vector<int>> loops;
  loops.reserve(loop_texts.size());
  for (const std::string& text : loop_texts) loops.push_back(parse_loop_word(text));
  const GroupPresentation q = orbifold_quotient(p, loops, exponents);
  ordered_json j{{"schema", kSchema}};
  j["generator_count"] = q.generator_count();
  j["relators"] = q.relators();
  j["text"] = format_presentation(q);
  return j;
}

ordered_json handle_c_group(const std::string& input) {
  std::istringstream is(read_input(input));
  const GroupPresentation p = parse_presentation(is);
  const bool is_c = validate_c_group(p);
  const AbelianizationResult a = abelianization(p);
  ordered_json j{{"schema", kSchema}};
  j["generator_count"] = p.generator_count();
  j["is_c_group"] = is_c;
  j["free_rank"] = a.free_rank;
  j["torsion"] = torsion_json(a);
  return j;
}

ordered_json handle_rep(int n, int p, const std::string& angle_text) {
  TLParams params{};
  const RepMatrices rm = build_unitary_rep(n, p, angle_text, &params);
  ordered_json images = ordered_json::array();
  ordered_json eigenvalues = ordered_json::array();
  ordered_json residuals = ordered_json::array();
  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(rm.dimension, rm.dimension);
  for (const Eigen::MatrixXcd& u : rm.sigma_images) {
    images.push_back(matrix_json(u));
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(u, false);
    ordered_json spectrum = ordered_json::array();
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
      spectrum.push_back(complex_pair(solver.eigenvalues()(i)));
    }
    eigenvalues.push_back(std::move(spectrum));
    residuals.push_back(((u.adjoint() * u) - identity).cwiseAbs().maxCoeff());
  }
  double braid_residual = 0.0;
  for (std::size_t i = 0; i + 1 < rm.sigma_images.size(); ++i) {
    const Eigen::MatrixXcd& a = rm.sigma_images[i];
    const Eigen::MatrixXcd& b = rm.sigma_images[i + 1];
    braid_residual = std::max(braid_residual, (a * b * a - b * a * b).cwiseAbs().maxCoeff());
  }
  ordered_json j{{"schema", kSchema}};
  j["n"] = n;
  j["p"] = p;
  j["angle"] = angle_text;
  j["a"] = complex_pair(params.a_value);
  j["loop_value"] = params.loop_value;
  j["dimension"] = rm.dimension;
  j["sigma_images"] = std::move(images);
  j["eigenvalues"] = std::move(eigenvalues);
  j["unitarity_residuals"] = std::move(residuals);
  j["braid_relation_residual"] = braid_residual;
  return j;
}

TargetGate resolve_target(const std::string& text) {
  if (text == "x") return pauli_x_gate();
  if (text == "z") return pauli_z_gate();
  if (text == "h") return hadamard_gate();
  if (text == "cnot") return cnot_gate();
  return make_target_gate(parse_matrix_json(read_input(text)));
}

ordered_json handle_compile(const std::string& target_text, int depth, double tolerance,
                            std::uint64_t beam, const std::string& strategy_text, bool no_dedup,
                            int probe, std::uint64_t seed, int n, int p,
                            const std::string& angle_text) {
  const RepMatrices rm = build_unitary_rep(n, p, angle_text, nullptr);
  if (probe > 0) {
    const DensityProbeStats stats = density_probe(rm, probe, depth, seed);
    ordered_json j{{"schema", kSchema}};
    j["mode"] = "probe";
    j["samples"] = probe;
    j["depth"] = stats.depth;
    j["seed"] = stats.seed;
    j["min"] = stats.min_distance;
    j["median"] = stats.median_distance;
    j["max"] = stats.max_distance;
    j["distances"] = stats.distances;
    return j;
  }
  if (target_text.empty()) throw InputError("--target is required unless --probe is set");
  SearchConfig cfg;
  cfg.max_depth = depth;
  cfg.tolerance = tolerance;
  cfg.beam_width = beam;
  cfg.dedup_matrices = !no_dedup;
  if (strategy_text == "exhaustive") {
    cfg.strategy = SearchStrategy::exhaustive;
  } else if (strategy_text == "mitm") {
    cfg.strategy = SearchStrategy::meet_in_middle;
  } else {
    throw InputError("unknown strategy '" + strategy_text + "' (use exhaustive or mitm)");
  }
  const CompilationResult r = compile_gate(resolve_target(target_text), rm, cfg);
  ordered_json j{{"schema", kSchema}};
  j["mode"] = "compile";
  j["target"] = target_text;
  j["strands"] = rm.strand_count;
  j["word"] = format_braid_word(r.word);
  j["length"] = r.word.length();
  j["achieved_distance"] = r.achieved_distance;
  j["nodes_explored"] = r.nodes_explored;
  j["depth_reached"] = r.depth_reached;
  j["max_depth"] = depth;
  j["tolerance"] = tolerance;
  j["strategy"] = strategy_text;
  j["dedup"] = !no_dedup;
  j["beam_width"] = beam;
  return j;
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  bool as_json = false;

  std::string invariants_input = "-";

  bool orbit_standard = false;
  int orbit_degree = 2;
  std::string orbit_input;
  std::uint64_t orbit_cap = 1000000;

  bool cover_standard = false;
  int cover_degree = 2;
  std::string cover_input;
  int cover_base_euler = 1;

  std::string eq_w1;
  std::string eq_w2;
  int eq_strands = 0;
  std::string nf_word;
  int nf_strands = 0;
  std::string perm_word;
  int perm_strands = 0;

  std::string abel_input = "-";
  std::string quot_input = "-";
  std::vector<std::string> quot_loops;
  std::vector<int> quot_exponents;
  std::string cg_input = "-";

  int rep_n = 3;
  int rep_p = 1;
  std::string rep_angle = "2pi/5";

  std::string compile_target;
  int compile_depth = 8;
  double compile_tolerance = 1e-6;
  std::uint64_t compile_beam = 0;
  std::string compile_strategy = "exhaustive";
  bool compile_no_dedup = false;
  int compile_probe = 0;
  std::uint64_t compile_seed = 0;
  int compile_n = 3;
  int compile_p = 1;
  std::string compile_angle = "2pi/5";

  ordered_json payload;

  CLI::App app{"Braid words, surface braid systems, orbifold invariants, "
               "Temperley-Lieb representations, and a braid-word gate compiler",
               "braidforge"};
  app.require_subcommand(1);
  auto add_json_flag = [&as_json](CLI::App* sub) {
    sub->add_flag("--json", as_json, "Print the payload as JSON instead of a table");
  };
  add_json_flag(&app);

  CLI::App* invariants = app.add_subcommand(
      "invariants", "Orbifold invariants of a 4-manifold with an embedded cone surface");
  invariants->add_option("--input", invariants_input, "Geometry JSON file, '-' for stdin")
      ->capture_default_str();
  add_json_flag(invariants);
  invariants->callback([&] { payload = handle_invariants(invariants_input); });

  CLI::App* orbit = app.add_subcommand("hurwitz-orbit", "Enumerate the Hurwitz orbit of a system");
  orbit->add_flag("--standard", orbit_standard, "Use the standard system of the given degree");
  orbit->add_option("--degree", orbit_degree, "Covering degree for --standard")
      ->capture_default_str();
  orbit->add_option("--input", orbit_input, "Braid-system file, '-' for stdin");
  orbit->add_option("--cap", orbit_cap, "Stop discovering beyond this many systems")
      ->capture_default_str();
  add_json_flag(orbit);
  orbit->callback(
      [&] { payload = handle_hurwitz_orbit(orbit_standard, orbit_degree, orbit_input, orbit_cap); });

  CLI::App* cover = app.add_subcommand("cover-report",
                                       "Branched-cover accounting for a braid system");
  cover->add_flag("--standard", cover_standard, "Use the standard system of the given degree");
  cover->add_option("--degree", cover_degree, "Covering degree for --standard")
      ->capture_default_str();
  cover->add_option("--input", cover_input, "Braid-system file, '-' for stdin");
  cover->add_option("--base-euler", cover_base_euler, "Euler characteristic of the base surface")
      ->capture_default_str();
  add_json_flag(cover);
  cover->callback([&] {
    payload = handle_cover_report(cover_standard, cover_degree, cover_input, cover_base_euler);
  });

  CLI::App* braid = app.add_subcommand("braid", "Braid word operations");
  braid->require_subcommand(1);
  add_json_flag(braid);

  CLI::App* eq = braid->add_subcommand("eq", "Decide whether two words are the same braid");
  eq->add_option("word1", eq_w1, "First word, e.g. \"1 2 1\"")->required();
  eq->add_option("word2", eq_w2, "Second word")->required();
  eq->add_option("--strands", eq_strands, "Strand count")->required();
  add_json_flag(eq);
  eq->callback([&] { payload = handle_braid_eq(eq_w1, eq_w2, eq_strands); });

  CLI::App* nf = braid->add_subcommand("nf", "Garside normal form of a word");
  nf->add_option("word", nf_word, "Braid word")->required();
  nf->add_option("--strands", nf_strands, "Strand count")->required();
  add_json_flag(nf);
  nf->callback([&] { payload = handle_braid_nf(nf_word, nf_strands); });

  CLI::App* perm = braid->add_subcommand("perm", "Underlying permutation of a word");
  perm->add_option("word", perm_word, "Braid word")->required();
  perm->add_option("--strands", perm_strands, "Strand count")->required();
  add_json_flag(perm);
  perm->callback([&] { payload = handle_braid_perm(perm_word, perm_strands); });

  CLI::App* presentation = app.add_subcommand("presentation", "Finite presentation operations");
  presentation->require_subcommand(1);
  add_json_flag(presentation);

  CLI::App* abelianize = presentation->add_subcommand("abelianize",
                                                      "Smith-form abelianization of a presentation");
  abelianize->add_option("--input", abel_input, "Presentation file, '-' for stdin")
      ->capture_default_str();
  add_json_flag(abelianize);
  abelianize->callback([&] { payload = handle_abelianize(abel_input); });

  CLI::App* quotient = presentation->add_subcommand(
      "orbifold-quotient", "Quotient by normal closures of powers of loop words");
  quotient->add_option("--input", quot_input, "Presentation file, '-' for stdin")
      ->capture_default_str();
  quotient->add_option("--loop", quot_loops, "Loop word as signed indices, repeatable");
  quotient->add_option("--exponent", quot_exponents, "Cone order for the matching loop, repeatable");
  add_json_flag(quotient);
  quotient->callback(
      [&] { payload = handle_orbifold_quotient(quot_input, quot_loops, quot_exponents); });

  CLI::App* cgroup = presentation->add_subcommand(
      "c-group", "Check the conjugation-relator shape and abelianize");
  cgroup->add_option("--input", cg_input, "Presentation file, '-' for stdin")
      ->capture_default_str();
  add_json_flag(cgroup);
  cgroup->callback([&] { payload = handle_c_group(cg_input); });

  CLI::App* rep = app.add_subcommand("rep", "Unitarized Temperley-Lieb representation matrices");
  rep->add_option("--n", rep_n, "Strand count")->capture_default_str();
  rep->add_option("--p", rep_p, "Through-strand count of the module")->capture_default_str();
  rep->add_option("--a", rep_angle, "Phase of the Kauffman parameter, e.g. 2pi/5")
      ->capture_default_str();
  add_json_flag(rep);
  rep->callback([&] { payload = handle_rep(rep_n, rep_p, rep_angle); });

  CLI::App* compile = app.add_subcommand("compile",
                                         "Search braid words approximating a target gate");
  compile->add_option("--target", compile_target,
                      "x, z, h, cnot, or a matrix JSON file of [re, im] pairs");
  compile->add_option("--depth", compile_depth, "Maximum word length")->capture_default_str();
  compile->add_option("--tolerance", compile_tolerance, "Stop once this distance is reached")
      ->capture_default_str();
  compile->add_option("--beam", compile_beam, "Frontier states kept per level, 0 for all")
      ->capture_default_str();
  compile->add_option("--strategy", compile_strategy, "exhaustive or mitm")
      ->capture_default_str();
  compile->add_flag("--no-dedup", compile_no_dedup, "Keep states whose matrices coincide");
  compile->add_option("--probe", compile_probe,
                      "Probe this many Haar targets instead of compiling one");
  compile->add_option("--seed", compile_seed, "Seed for --probe")->capture_default_str();
  compile->add_option("--n", compile_n, "Strand count of the representation")
      ->capture_default_str();
  compile->add_option("--p", compile_p, "Through-strand count of the module")
      ->capture_default_str();
  compile->add_option("--a", compile_angle, "Phase of the Kauffman parameter")
      ->capture_default_str();
  add_json_flag(compile);
  compile->callback([&] {
    payload = handle_compile(compile_target, compile_depth, compile_tolerance, compile_beam,
                             compile_strategy, compile_no_dedup, compile_probe, compile_seed,
                             compile_n, compile_p, compile_angle);
  });

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    const std::string text = app.help();
    out << text;
    return CommandOutcome{0, ordered_json{{"schema", kSchema}, {"help", text}}};
  } catch (const CLI::CallForAllHelp&) {
    const std::string text = app.help("", CLI::AppFormatMode::All);
    out << text;
    return CommandOutcome{0, ordered_json{{"schema", kSchema}, {"help", text}}};
  } catch (const CLI::ParseError& e) {
    const ordered_json payload_error = error_payload("usage", e.what());
    err << payload_error.dump() << '\n' << app.help();
    return CommandOutcome{2, payload_error};
  } catch (const InputError& e) {
    const ordered_json payload_error = error_payload("input", e.what());
    err << payload_error.dump() << '\n';
    return CommandOutcome{2, payload_error};
  } catch (const DomainError& e) {
    const ordered_json payload_error = error_payload("domain", e.what());
    err << payload_error.dump() << '\n';
    return CommandOutcome{1, payload_error};
  } catch (const std::exception& e) {
    const ordered_json payload_error = error_payload("internal", e.what());
    err << payload_error.dump() << '\n';
    return CommandOutcome{1, payload_error};
  }

  if (as_json) {
    out << payload.dump(2) << '\n';
  } else {
    render_table(payload, out);
  }
  return CommandOutcome{0, payload};
}

CommandOutcome run(const std::vector<std::string>& argv) {
  return run(argv, std::cout, std::cerr);
}

}  // namespace braidforge
