#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "polyalg/invariants.hpp"
#include "polyalg/io.hpp"
#include "polyalg/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace polyalg;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDisagree = 3;
constexpr int kExitBudget = 4;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) fail(Errc::syntax_error, "cannot open input file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::budget_exceeded: return kExitBudget;
    default: return kExitInput;
  }
}

ordered_json poly_json(const IntPolynomial& h) {
  ordered_json arr = ordered_json::array();
  for (int k = 0; k <= h.degree(); ++k) arr.push_back(h.coeff(k));
  if (h.is_zero()) arr.push_back(0);
  return arr;
}

ordered_json cells_array(const Polyomino& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : p.cells()) arr.push_back({c.x, c.y});
  return arr;
}

ordered_json classification_json(const ClassificationReport& rep) {
  ordered_json j;
  j["is_simple"] = rep.is_simple;
  j["holes"] = rep.holes.size();
  j["is_thin"] = rep.is_thin;
  j["is_closed_path"] = rep.is_closed_path;
  j["is_weakly_closed_path"] = rep.is_weakly_closed_path;
  j["l_configurations"] = rep.l_configurations;
  j["max_ladder_steps"] = rep.max_ladder_steps;
  j["has_weak_ladder"] = rep.has_weak_ladder;
  j["has_zig_zag"] = rep.has_zig_zag;
  if (rep.is_prime_closed_path.has_value())
    j["is_prime_closed_path"] = *rep.is_prime_closed_path;
  else
    j["is_prime_closed_path"] = nullptr;
  return j;
}

int cmd_classify(const std::string& file, bool as_json) {
  Polyomino p = parse_input(read_input(file));
  auto rep = classify_basic(p);
  if (as_json) {
    ordered_json j;
    j["schema_version"] = 1;
    j["input"] = {{"cells", cells_array(p)}, {"rank", p.rank()},
                  {"vertices", p.vertices().size()}};
    j["classification"] = classification_json(rep);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << render_ascii(p) << "\n";
    std::cout << "rank " << p.rank() << ", |V| " << p.vertices().size() << "\n";
    std::cout << "simple: " << (rep.is_simple ? "yes" : "no") << " (holes: " << rep.holes.size()
              << ")\n";
    std::cout << "thin: " << (rep.is_thin ? "yes" : "no") << "\n";
    std::cout << "closed path: " << (rep.is_closed_path ? "yes" : "no") << "\n";
    std::cout << "weakly closed path: " << (rep.is_weakly_closed_path ? "yes" : "no") << "\n";
    std::cout << "L-configurations: " << rep.l_configurations << "\n";
    std::cout << "max ladder steps: " << rep.max_ladder_steps << "\n";
    std::cout << "weak ladder: " << (rep.has_weak_ladder ? "yes" : "no") << "\n";
    std::cout << "zig-zag walks: " << (rep.has_zig_zag ? "yes" : "no") << "\n";
    if (rep.is_prime_closed_path)
      std::cout << "prime closed path: " << (*rep.is_prime_closed_path ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_invariants(const std::string& file, const std::string& method, bool as_json) {
  Polyomino p = parse_input(read_input(file));
  auto cls = classify_basic(p);

  InvariantsReport rep;
  bool have_report = false;
  std::string route;
  if (cls.is_closed_path && cls.is_prime_closed_path.value_or(false)) {
    ClosedPathOptions o;
    o.run_formula = method == "formula" || method == "all";
    o.run_oracle = method == "oracle" || method == "all";
    rep = closed_path_invariants(p, o);
    if (method == "rook") rep.h_oracle.reset();
    route = "closed-path";
    have_report = true;
  } else if (cls.is_closed_path && !cls.is_prime_closed_path.value_or(true)) {
    if (method != "oracle")
      fail(Errc::has_zig_zag,
           "closed path with zig-zag walks: formulas out of scope, rerun with --method oracle");
    route = "oracle-only";
  } else if (cls.is_simple && cls.is_thin) {
    rep.h_rook = h_simple_thin(p);
    rep.formula = "simple-thin";
    if (method == "oracle" || method == "all") {
      auto hs = hilbert_series_oracle(p);
      rep.h_oracle = hs.num;
    }
    rep.methods_agree = !rep.h_oracle || *rep.h_oracle == rep.h_rook;
    rep.krull_dim = static_cast<int>(p.vertices().size()) - p.rank();
    rep.hp = HilbertSeries(rep.h_rook, rep.krull_dim);
    rep.regularity = rep.h_rook.degree();
    rep.gorenstein = gorenstein(p);
    route = "simple-thin";
    have_report = true;
  } else {
    if (method == "rook" || method == "formula")
      fail(Errc::out_of_scope_class,
           "h = rook polynomial is only claimed for simple thin polyominoes and prime closed "
           "paths; use --method oracle");
    route = "oracle-only";
  }

  if (!have_report) {  // oracle-only fallback for out-of-scope classes
    auto hs = hilbert_series_oracle(p);
    rep.h_oracle = hs.num;
    rep.hp = hs;
    rep.krull_dim = hs.denom_exp;
    rep.regularity = hs.num.degree();
    rep.methods_agree = true;
    rep.h_rook = IntPolynomial{};
  }

  if (as_json) {
    ordered_json j;
    j["schema_version"] = 1;
    j["input"] = {{"cells", cells_array(p)}, {"rank", p.rank()},
                  {"vertices", p.vertices().size()}};
    j["classification"] = classification_json(cls);
    ordered_json inv;
    inv["route"] = route;
    inv["h"] = poly_json(rep.hp.num);
    inv["h_rook"] = rep.h_rook.is_zero() && route == "oracle-only" ? ordered_json(nullptr)
                                                                   : poly_json(rep.h_rook);
    inv["h_formula"] = rep.h_formula ? poly_json(*rep.h_formula) : ordered_json(nullptr);
    inv["formula"] = rep.formula;
    inv["h_oracle"] = rep.h_oracle ? poly_json(*rep.h_oracle) : ordered_json(nullptr);
    inv["hilbert_series"] = rep.hp.str();
    inv["krull_dim"] = rep.krull_dim;
    inv["regularity"] = rep.regularity;
    if (route == "oracle-only")
      inv["gorenstein"] = nullptr;
    else
      inv["gorenstein"] = rep.gorenstein;
    inv["methods_agree"] = rep.methods_agree;
    j["invariants"] = inv;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << render_ascii(p) << "\n";
    std::cout << "route: " << route << "\n";
    std::cout << "HP(t) = " << rep.hp.str() << "\n";
    if (!(rep.h_rook.is_zero() && route == "oracle-only"))
      std::cout << "h (rook)    = " << rep.h_rook.str() << "\n";
    if (rep.h_formula)
      std::cout << "h (formula) = " << rep.h_formula->str() << "   [" << rep.formula << "]\n";
    if (rep.h_oracle) std::cout << "h (oracle)  = " << rep.h_oracle->str() << "\n";
    std::cout << "Krull dimension = " << rep.krull_dim << "\n";
    std::cout << "regularity      = " << rep.regularity << "\n";
    if (route != "oracle-only")
      std::cout << "Gorenstein      = " << (rep.gorenstein ? "yes" : "no") << "\n";
    std::cout << "methods agree   = " << (rep.methods_agree ? "yes" : "no") << "\n";
  }
  return rep.methods_agree ? kExitOk : kExitDisagree;
}

int cmd_generate(const GenerateOptions& opts, bool as_json) {
  auto stream = generate(opts);
  bool first = true;
  for (const auto& p : stream) {
    if (as_json) {
      std::cout << cells_json(p) << "\n";
    } else {
      if (!first) std::cout << "\n\n";
      std::cout << render_ascii(p);
      first = false;
    }
  }
  if (!as_json && !stream.empty()) std::cout << "\n";
  return kExitOk;
}

int cmd_render(const std::string& file, const std::string& format, const std::string& rooks) {
  Polyomino p = parse_input(read_input(file));
  std::vector<Cell> markers = parse_rooks(rooks);
  for (const auto& m : markers)
    if (!p.contains(m)) fail(Errc::cell_not_in_polyomino, "rook marker outside the polyomino");
  if (format == "ascii")
    std::cout << render_ascii(p) << "\n";
  else if (format == "tikz")
    std::cout << render_tikz(p, markers);
  else if (format == "svg")
    std::cout << render_svg(p, markers);
  else
    fail(Errc::unknown_format, "unknown render format " + format);
  return kExitOk;
}

int cmd_verify(const VerifyOptions& opts, bool as_json) {
  auto results = run_verification(opts);
  bool all_pass = true;
  if (as_json) {
    ordered_json j = ordered_json::array();
    for (const auto& r : results) {
      j.push_back({{"check", r.name},
                   {"pass", r.pass},
                   {"instances", r.instances},
                   {"failures", r.failures}});
      all_pass = all_pass && r.pass;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.instances
                << " instances)\n";
      for (const auto& f : r.failures) std::cout << f << "\n";
      all_pass = all_pass && r.pass;
    }
  }
  return all_pass ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyalg: exact invariants of polyomino coordinate rings"};
  app.require_subcommand(1);

  std::string file;
  std::string method = "all";
  bool as_json = false;

  auto* inv = app.add_subcommand("invariants", "h-polynomial, dimension, regularity, Gorenstein");
  inv->add_option("file", file, "grid-text or JSON input (default: stdin)");
  inv->add_option("--method", method, "rook|formula|oracle|all")
      ->check(CLI::IsMember({"rook", "formula", "oracle", "all"}));
  inv->add_flag("--json", as_json, "machine-readable report");

  auto* cls = app.add_subcommand("classify", "structural classification report");
  cls->add_option("file", file, "grid-text or JSON input (default: stdin)");
  cls->add_flag("--json", as_json, "machine-readable report");

  GenerateOptions gen_opts;
  std::uint32_t seed_value = 0;
  int count_value = -1;
  auto* gen = app.add_subcommand("generate", "enumerate polyominoes / closed paths");
  gen->add_option("--max-rank", gen_opts.max_rank, "largest rank to emit")
      ->check(CLI::PositiveNumber);
  gen->add_flag("--closed-paths", gen_opts.closed_paths, "closed paths only");
  gen->add_flag("--no-zigzag", gen_opts.no_zigzag, "drop shapes with zig-zag walks");
  auto* seed_opt = gen->add_option("--seed", seed_value, "shuffle deterministically");
  auto* count_opt = gen->add_option("--count", count_value, "emit at most this many")
                        ->check(CLI::NonNegativeNumber);
  gen->add_option("--cap", gen_opts.cap, "raise the enumeration cap");
  gen->add_flag("--json", as_json, "one {\"cells\": ...} document per line");

  std::string format = "ascii";
  std::string rooks;
  auto* ren = app.add_subcommand("render", "ASCII / TikZ / SVG rendering");
  ren->add_option("file", file, "grid-text or JSON input (default: stdin)");
  ren->add_flag_callback("--ascii", [&] { format = "ascii"; });
  ren->add_flag_callback("--tikz", [&] { format = "tikz"; });
  ren->add_flag_callback("--svg", [&] { format = "svg"; });
  ren->add_option("--rooks", rooks, "rook markers, e.g. \"0,0;2,1\"");

  VerifyOptions ver_opts;
  std::string inject = "none";
  auto* ver = app.add_subcommand("verify", "run the corpus property battery");
  ver->add_option("--max-rank", ver_opts.max_rank, "closed-path corpus bound");
  ver->add_option("--w-rank", ver_opts.w_rank, "W-configuration / zig-zag corpus bound");
  ver->add_option("--simple-rank", ver_opts.simple_rank, "simple-polyomino corpus bound");
  ver->add_option("--threads", ver_opts.threads, "worker threads (0 = hardware)");
  ver->add_option("--inject", inject, "negative control: none|attack-flip|formula-sign")
      ->check(CLI::IsMember({"none", "attack-flip", "formula-sign"}));
  ver->add_flag("--json", as_json, "machine-readable report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) return cmd_invariants(file, method, as_json);
    if (cls->parsed()) return cmd_classify(file, as_json);
    if (gen->parsed()) {
      if (seed_opt->count()) gen_opts.seed = seed_value;
      if (count_opt->count()) gen_opts.count = count_value;
      return cmd_generate(gen_opts, as_json);
    }
    if (ren->parsed()) return cmd_render(file, format, rooks);
    if (ver->parsed()) {
      if (inject == "attack-flip") ver_opts.inject = Inject::attack_flip;
      if (inject == "formula-sign") ver_opts.inject = Inject::formula_sign;
      return cmd_verify(ver_opts, as_json);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
