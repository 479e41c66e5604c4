// Command-line front end: exact invariants of weighted projective spaces.
//
// Exit codes: 0 success, 1 invalid input, 2 internal assertion failure.

#include "wps/wps.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using wps::Int;
using wps::Json;

Int parse_integer(const std::string& s) {
  std::string t = s;
  bool neg = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    neg = t[0] == '-';
    t = t.substr(1);
  }
  wps::require(!t.empty() && std::all_of(t.begin(), t.end(),
                                         [](unsigned char c) { return std::isdigit(c); }),
               "not an integer: '" + s + "'");
  Int v(t);
  return neg ? Int(-v) : v;
}

wps::WeightVector parse_weights(const std::vector<std::string>& args) {
  wps::require(args.size() >= 2, "need at least 2 weights");
  wps::IntVec rho;
  for (const std::string& a : args) {
    Int v = parse_integer(a);
    wps::require(v >= 1, "weights must be positive: '" + a + "'");
    rho.push_back(v);
  }
  return wps::WeightVector(rho);
}

struct Output {
  bool json = false;
  std::string out_file;

  void emit(const std::string& command, const Json& inputs, const Json& payload,
            const std::string& human) const {
    std::string text;
    if (json) {
      Json report{{"schema", 1},
                  {"command", command},
                  {"inputs", inputs},
                  {"payload", payload},
                  {"status", "ok"}};
      text = report.dump();
      text += "\n";
    } else {
      text = human;
    }
    std::cout << text;
    if (!out_file.empty()) {
      std::ofstream f(out_file, std::ios::binary);
      wps::require(f.good(), "cannot open output file: " + out_file);
      f << text;
    }
  }
};

std::string render_group(const wps::FgAbelianGroup& g) { return g.str(); }

std::string render_vec(const wps::IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

std::string render_matrix(const wps::IntMat& m, const std::string& indent) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += indent + "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += " ";
      s += m.at(i, j).str();
    }
    s += "]\n";
  }
  return s;
}

int run_normalize(const std::vector<std::string>& args, const Output& out) {
  wps::WeightVector w = parse_weights(args);
  wps::NormalizationReport rep = wps::normalize(w);
  std::string human = "input:       " + render_vec(rep.input.rho) + "\n" +
                      "gcd divided: " + render_vec(rep.gcd_divided.rho) + "\n";
  for (std::size_t k = 0; k < rep.steps.size(); ++k) {
    const auto& st = rep.steps[k];
    human += "step " + std::to_string(k + 1) + ":      d=" + render_vec(st.d) +
             " s_each=" + render_vec(st.s_each) + " s=" + st.s.str() + " -> " +
             render_vec(st.output.rho) + "\n";
  }
  human += "normal form: " + render_vec(rep.normal_form.rho) +
           "  (total_s = " + rep.total_s.str() + ")\n";
  out.emit("normalize", Json{{"weights", wps::vec_json(w.rho)}}, wps::normalization_json(rep),
           human);
  return 0;
}

int run_iso(const std::vector<std::string>& lhs, const std::vector<std::string>& rhs,
            const Output& out) {
  wps::WeightVector a = parse_weights(lhs);
  wps::WeightVector b = parse_weights(rhs);
  bool iso = wps::is_isomorphic(a, b);
  wps::WeightVector na = wps::normalize(a).normal_form;
  wps::WeightVector nb = wps::normalize(b).normal_form;
  Json payload{{"isomorphic", iso},
               {"normal_forms", Json::array({wps::vec_json(na.rho), wps::vec_json(nb.rho)})}};
  std::string human = a.str() + " and " + b.str() + ": " +
                      (iso ? "isomorphic" : "not isomorphic") + "  (normal forms " + na.str() +
                      ", " + nb.str() + ")\n";
  out.emit("iso",
           Json{{"weights1", wps::vec_json(a.rho)}, {"weights2", wps::vec_json(b.rho)}},
           payload, human);
  return 0;
}

int run_fan(const std::vector<std::string>& args, const Output& out) {
  wps::WeightVector w = parse_weights(args);
  wps::require(w.gcd() == 1, "fan requires gcd(weights) = 1 (normalize first)");
  wps::Fan f = wps::build_fan(w);
  std::string human = "weights: " + render_vec(w.rho) + "\nU:\n" + render_matrix(f.u, "  ") +
                      "rays:\n";
  for (const auto& v : f.rays) human += "  " + render_vec(v) + "\n";
  human += "multiplicities: " + render_vec(f.multiplicities) + "\n" +
           std::string("smooth: ") + (wps::is_smooth(f) ? "yes" : "no") + "\n";
  out.emit("fan", Json{{"weights", wps::vec_json(w.rho)}}, wps::fan_json(f), human);
  return 0;
}

int run_brauer(const std::vector<std::string>& args, bool with_pages, const Output& out) {
  wps::WeightVector w = parse_weights(args);
  wps::WeightVector reduced = wps::divided_by(w, w.gcd());
  wps::SpectralPages pages{wps::DoubleComplex(wps::build_fan(reduced))};
  const wps::FgAbelianGroup& br = pages.e2(0, 1).group;
  Json payload{{"E2_01", wps::group_json(br)}};
  if (with_pages) payload["pages"] = wps::pages_json(pages);
  std::string human =
      "Brauer group (E2^{0,1}) of P" + w.str() + ": " + render_group(br) + "\n";
  if (with_pages) {
    for (int q = 1; q >= 0; --q) {
      human += "E1 row q=" + std::to_string(q) + ":";
      for (int p = -1; p <= pages.n(); ++p)
        human += "  [p=" + std::to_string(p) + "] " + render_group(pages.e1(p, q).group);
      human += "\nE2 row q=" + std::to_string(q) + ":";
      for (int p = -1; p <= pages.n(); ++p)
        human += "  [p=" + std::to_string(p) + "] " + render_group(pages.e2(p, q).group);
      human += "\n";
    }
  }
  out.emit("brauer", Json{{"weights", wps::vec_json(w.rho)}}, payload, human);
  return 0;
}

int run_class_groups(const std::vector<std::string>& args, const Output& out) {
  wps::WeightVector w = parse_weights(args);
  wps::require(w.gcd() == 1, "class-groups requires gcd(weights) = 1 (normalize first)");
  wps::Fan f = wps::build_fan(w);
  wps::ClassGroupData cl = wps::class_group(f);
  wps::PicardData pic = wps::picard_index(f);
  wps::StackComparison st = wps::stack_comparison(w);
  std::string human = "Cl  = " + render_group(cl.group) + ", ray degrees " +
                      render_vec(cl.ray_degrees) + "\n" +
                      "Pic index in Cl: " + pic.index_in_class_group.str() + "\n" +
                      "stack pullback multiplier: " + st.pullback_multiplier.str() + "\n";
  out.emit("class-groups", Json{{"weights", wps::vec_json(w.rho)}},
           wps::class_groups_json(cl, pic, st), human);
  return 0;
}

int run_cohomology(const std::vector<std::string>& args, int i, const std::string& ell_str,
                   bool with_basis, bool stack, const Output& out) {
  wps::WeightVector w = parse_weights(args);
  Int ell = parse_integer(ell_str);
  Json payload = wps::cohomology_json(w, i, ell, with_basis, stack);
  Int dim = wps::h_dim(w, i, ell);
  std::string human = std::string(stack ? "stack " : "") + "h^" + std::to_string(i) + "(P" +
                      w.str() + ", O(" + ell.str() + ")) = " + dim.str() + "\n";
  if (with_basis) {
    for (const auto& e : wps::monomial_basis(w, i, ell)) human += "  " + render_vec(e) + "\n";
  }
  out.emit("cohomology",
           Json{{"weights", wps::vec_json(w.rho)}, {"i", i}, {"ell", wps::int_json(ell)}},
           payload, human);
  return 0;
}

int run_twist(const std::vector<std::string>& args, const std::string& ell_str,
              const Output& out) {
  wps::WeightVector w = parse_weights(args);
  Int ell = parse_integer(ell_str);
  wps::TwistTransport t = wps::twist_transport(w, ell);
  std::string human = "ell = " + ell.str() + ": b=" + render_vec(t.b) + " c=" + render_vec(t.c) +
                      " ell'=" + t.ell_prime.str() + " s=" + t.s.str() +
                      " reduced twist=" + t.reduced_twist.str() + "\n";
  out.emit("twist",
           Json{{"weights", wps::vec_json(w.rho)}, {"ell", wps::int_json(ell)}},
           wps::twist_json(t), human);
  return 0;
}

int run_sweep_cmd(int dim, const std::string& max_weight_str, int jobs, const Output& out) {
  wps::SweepOptions opts;
  opts.dim = dim;
  opts.max_weight = parse_integer(max_weight_str);
  opts.jobs = jobs;
  wps::SweepResult res = wps::run_sweep(opts);
  std::string human = "checked " + std::to_string(res.checked) + " weight vectors (dim " +
                      std::to_string(dim) + ", max weight " + opts.max_weight.str() + ")\n" +
                      "all Brauer groups trivial: " + (res.all_brauer_trivial ? "yes" : "no") +
                      "\nfailures: " + std::to_string(res.failures.size()) + "\n";
  for (const auto& f : res.failures)
    human += "  " + render_vec(f.weights) + ": " + f.check + "\n";
  // jobs is runtime configuration, not a mathematical input; leaving it out of
  // the echo keeps reports byte-identical across --jobs values
  out.emit("sweep", Json{{"dim", dim}, {"max_weight", wps::int_json(opts.max_weight)}},
           wps::sweep_json(res), human);
  return 0;
}

// `iso W... -- W...` is parsed by hand: the double dash separates the two
// weight lists, which CLI11's positional handling would otherwise merge.
int main_iso(const std::vector<std::string>& argv) {
  Output out;
  std::vector<std::string> lhs, rhs;
  bool after_dashes = false;
  for (std::size_t i = 0; i < argv.size(); ++i) {
    const std::string& a = argv[i];
    if (a == "--") {
      wps::require(!after_dashes, "iso: more than one '--' separator");
      after_dashes = true;
    } else if (a == "--json") {
      out.json = true;
    } else if (a == "--out") {
      wps::require(i + 1 < argv.size(), "--out needs a file name");
      out.out_file = argv[++i];
    } else {
      (after_dashes ? rhs : lhs).push_back(a);
    }
  }
  wps::require(after_dashes, "iso: expected 'iso W... -- W...'");
  return run_iso(lhs, rhs, out);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    if (argc >= 2 && std::string(argv[1]) == "iso")
      return main_iso(std::vector<std::string>(argv + 2, argv + argc));

    CLI::App app{"exact invariants of weighted projective spaces and stacks"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--json", out.json, "emit a JSON report instead of text");
    app.add_option("--out", out.out_file, "also write the report to this file");

    std::vector<std::string> weights;
    int coh_i = 0;
    std::string ell_str;
    bool with_basis = false, stack = false, with_pages = false;
    int sweep_dim = 2, jobs = 1;
    std::string max_weight_str;

    auto* normalize_cmd = app.add_subcommand("normalize", "gcd scaling and weight reduction");
    normalize_cmd->add_option("weights", weights, "weights")->required()->expected(-1);

    auto* fan_cmd = app.add_subcommand("fan", "toric fan of P(weights)");
    fan_cmd->add_option("weights", weights)->required()->expected(-1);

    auto* brauer_cmd = app.add_subcommand("brauer", "Brauer group E2^{0,1}");
    brauer_cmd->add_option("weights", weights)->required()->expected(-1);
    brauer_cmd->add_flag("--pages", with_pages, "include all E1/E2 entries");

    auto* class_cmd = app.add_subcommand("class-groups", "class group, Picard index");
    class_cmd->add_option("weights", weights)->required()->expected(-1);

    auto* coh_cmd = app.add_subcommand("cohomology", "dimensions of H^i(O(ell))");
    coh_cmd->add_option("weights", weights)->required()->expected(-1);
    coh_cmd->add_option("--i", coh_i, "cohomological degree")->required();
    coh_cmd->add_option("--ell", ell_str, "twist")->required();
    coh_cmd->add_flag("--basis", with_basis, "list the monomial basis");
    coh_cmd->add_flag("--stack", stack, "tag the report as the stack variant");

    auto* twist_cmd = app.add_subcommand("twist", "twist transport data for O(ell)");
    twist_cmd->add_option("weights", weights)->required()->expected(-1);
    twist_cmd->add_option("--ell", ell_str, "twist")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "verify the corpus predicates");
    sweep_cmd->add_option("--dim", sweep_dim, "dimension n")->required();
    sweep_cmd->add_option("--max-weight", max_weight_str, "largest weight")->required();
    sweep_cmd->add_option("--jobs", jobs, "worker threads");

    // global flags may appear after subcommand arguments
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) return app.exit(e);  // --help
      app.exit(e);
      return 1;
    }

    if (normalize_cmd->parsed()) return run_normalize(weights, out);
    if (fan_cmd->parsed()) return run_fan(weights, out);
    if (brauer_cmd->parsed()) return run_brauer(weights, with_pages, out);
    if (class_cmd->parsed()) return run_class_groups(weights, out);
    if (coh_cmd->parsed()) return run_cohomology(weights, coh_i, ell_str, with_basis, stack, out);
    if (twist_cmd->parsed()) return run_twist(weights, ell_str, out);
    if (sweep_cmd->parsed()) return run_sweep_cmd(sweep_dim, max_weight_str, jobs, out);
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
