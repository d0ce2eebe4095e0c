#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "heckelab/io.hpp"
#include "heckelab/suites.hpp"

using namespace heckelab;

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    out << text;
  }
}

SVec parse_sigma(const std::string& csv) {
  SVec out;
  std::string cur;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(scalar_from_string(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

Json root_json(const BasedRootDatum& d, int r) {
  SVec v;
  for (auto& q : d.roots[r]) v.push_back(Scalar(q));
  return svec_to_json(v);
}

int cmd_open_check(const std::string& file, bool as_json, const std::string& out_path) {
  AdditiveParameter p;
  try {
    p = additive_from_json(read_json_file(file));
  } catch (const std::exception& e) {
    std::cerr << "invalid parameter: " << e.what() << "\n";
    return 2;
  }
  bool open = is_open(p.y, p.sigma, p.r);
  GradedSpace g = graded_space(p.sigma, p.r);
  ExactMatrix s0 = p.sigma0();
  Boundedness b = boundedness_class(s0);
  std::optional<bool> lem;
  if (!p.r.is_zero()) lem = lemma112_criterion(p.y, p.sigma, p.r);
  int odim = orbit_dimension(p.y, p.sigma);

  if (as_json) {
    Json j;
    j["open"] = open;
    if (lem) j["lemma_1_12"] = *lem;
    j["boundedness"] = to_string(b);
    if (!p.r.is_zero()) {
      j["orbit_dim"] = odim;
      j["space_dim"] = g.dim();
    }
    j["sigma0"] = matrix_to_json(s0);
    emit(j.dump(2) + "\n", out_path);
  } else {
    std::ostringstream os;
    os << "open: " << (open ? "true" : "false");
    if (lem) os << "; lemma-1.12: " << (*lem ? "true" : "false");
    os << "; bounded: " << (b == Boundedness::bounded ? "true" : "false") << " ("
       << to_string(b) << ")";
    if (!p.r.is_zero()) os << "; orbit dim " << odim << " of " << g.dim();
    os << "\n";
    emit(os.str(), out_path);
  }
  return open ? 0 : 1;
}

int cmd_jm(const std::string& file, bool as_json, const std::string& out_path) {
  try {
    Json j = read_json_file(file);
    SL2Triple t;
    ExactMatrix sigma0_mat(0, 0);
    bool have_sigma = j.contains("sigma");
    if (have_sigma) {
      AdditiveParameter p = additive_from_json(j);
      auto ad = sl2_adapted(p.y, p.sigma, p.r);
      t = ad.triple;
      sigma0_mat = ad.sigma0;
    } else {
      NilpotentElement y;
      y.mat = matrix_from_json(j.at("y"));
      y.n = y.mat.rows;
      y.validate();
      t = jm_triple(y);
    }
    Json out;
    out["e"] = matrix_to_json(t.e);
    out["h"] = matrix_to_json(t.h);
    out["f"] = matrix_to_json(t.f);
    if (have_sigma) out["sigma0"] = matrix_to_json(sigma0_mat);
    if (as_json) {
      emit(out.dump(2) + "\n", out_path);
    } else {
      std::ostringstream os;
      os << "h = " << out["h"].dump() << "\nf = " << out["f"].dump() << "\n";
      if (have_sigma) os << "sigma0 = " << out["sigma0"].dump() << "\n";
      emit(os.str(), out_path);
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  }
}

int cmd_block_report(int n, const std::string& sigma_csv, bool as_json,
                     const std::string& out_path) {
  try {
    SVec sigma = parse_sigma(sigma_csv);
    if ((int)sigma.size() != n) throw std::invalid_argument("sigma length != n");
    BlockReport rep = block_report(n, sigma);
    if (as_json)
      emit(block_report_to_json(rep).dump(2) + "\n", out_path);
    else
      emit(block_report_to_text(rep), out_path);
    return rep.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "block-report: " << e.what() << "\n";
    return 2;
  }
}

int cmd_reduce_affine(const std::string& file, bool as_json, const std::string& out_path) {
  try {
    Json j = read_json_file(file);
    AffineReductionInput in;
    std::string type = j.at("datum").at("type").get<std::string>();
    std::string gamma = j.at("datum").value("gamma", std::string("none"));
    in.datum = build_root_datum(type);
    in.group = enumerate_group(in.datum, gamma);
    std::map<std::string, Rat> lam, lam2;
    for (auto& [key, val] : j.at("lambda").items())
      lam[key] = rat_from_string(val.get<std::string>());
    for (auto& [key, val] : j.at("lambda_star").items())
      lam2[key] = rat_from_string(val.get<std::string>());
    in.lambda = ParameterFunction::by_length(in.datum, lam);
    in.lambda_star = ParameterFunction::by_length(in.datum, lam2);
    in.u_basis_values = svec_from_json(j.at("u"));
    AffineReductionOutput out = reduce_affine(in);

    Json oj;
    Json roots = Json::array();
    for (int r : out.r_u) roots.push_back(root_json(in.datum, r));
    oj["R_u"] = roots;
    Json delta = Json::array();
    for (int r : out.delta_u) delta.push_back(root_json(in.datum, r));
    oj["Delta_u"] = delta;
    oj["Gamma_u_order"] = (int)out.gamma_u.size();
    Json ks = Json::array();
    for (auto& [r, k] : out.k_u) {
      Json e;
      e["root"] = root_json(in.datum, r);
      e["k"] = rat_to_string(k);
      ks.push_back(e);
    }
    oj["k_u"] = ks;
    if (as_json) {
      emit(oj.dump(2) + "\n", out_path);
    } else {
      std::ostringstream os;
      os << "|R_u| = " << out.r_u.size() << ", |Delta_u| = " << out.delta_u.size()
         << ", stabilizer order " << out.gamma_u.size() << "\n";
      for (auto& e : ks)
        os << "  k" << e["root"].dump() << " = " << e["k"].get<std::string>() << "\n";
      emit(os.str(), out_path);
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "reduce-affine: " << e.what() << "\n";
    return 2;
  }
}

int cmd_steinberg(const std::string& type, const std::string& gamma, bool as_json,
                  const std::string& out_path) {
  try {
    BasedRootDatum d = build_root_datum(type);
    auto g = enumerate_group(d, gamma);
    ParameterFunction lam = ParameterFunction::constant(d, Rat(2));
    SteinbergCharacter st = steinberg_char(*g, lam, Scalar(1));
    if (as_json) {
      Json j;
      j["values"] = st.values;
      j["quadratic_relation"] = st.quadratic_relation_ok;
      emit(j.dump(2) + "\n", out_path);
    } else {
      std::ostringstream os;
      os << "St(T_w) over " << type << (gamma == "none" ? "" : "+" + gamma) << ":";
      for (int v : st.values) os << " " << v;
      os << "\nquadratic relation: " << (st.quadratic_relation_ok ? "ok" : "FAIL") << "\n";
      emit(os.str(), out_path);
    }
    return st.quadratic_relation_ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "steinberg: " << e.what() << "\n";
    return 2;
  }
}

int cmd_verify(const std::string& selector, unsigned seed) {
  std::vector<std::string> names = module_suite_names();
  bool run_acc = (selector == "all" || selector == "acceptance");
  std::vector<std::string> to_run;
  if (selector == "all") {
    to_run = names;
  } else if (selector != "acceptance") {
    bool known = false;
    for (auto& n : names)
      if (n == selector) known = true;
    if (!known) {
      std::cerr << "unknown suite: " << selector << "\nusage: verify [all|acceptance";
      for (auto& n : names) std::cerr << "|" << n;
      std::cerr << "]\n";
      return 1;
    }
    to_run = {selector};
  }

  bool all_ok = true;
  for (auto& name : to_run) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = run_module_suite(name, seed);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << (r.passed() ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.checks
              << " checks, " << ms << " ms)\n";
    for (auto& f : r.failures) std::cout << "      " << f << "\n";
    all_ok = all_ok && r.passed();
  }
  if (run_acc) {
    for (int id = 1; id <= acceptance_count(); ++id) {
      auto t0 = std::chrono::steady_clock::now();
      SuiteResult r = run_acceptance(id, seed);
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      std::cout << (r.passed() ? "PASS" : "FAIL") << "  criterion " << id << ": "
                << acceptance_title(id) << "  (" << r.checks << " checks, " << ms << " ms)\n";
      for (auto& f : r.failures) std::cout << "      " << f << "\n";
      all_ok = all_ok && r.passed();
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hecke-lab: exact computations with twisted graded Hecke algebras"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string out_path;
  unsigned seed = 0;
  app.add_flag("--json", as_json, "emit JSON instead of text");
  app.add_option("--out", out_path, "write the report to FILE");
  app.add_option("--seed", seed, "seed for randomized suites (default 0)");

  std::string param_file;
  auto* oc = app.add_subcommand("open-check", "openness/boundedness of an L-parameter");
  oc->add_option("file", param_file, "JSON parameter file")->required();

  std::string jm_file;
  auto* jm = app.add_subcommand("jm", "Jacobson-Morozov triple of a nilpotent matrix");
  jm->add_option("file", jm_file, "JSON file with y (and optionally sigma, r)")->required();

  int block_n = 0;
  std::string sigma_csv;
  auto* br = app.add_subcommand("block-report", "type-A block report (k=2, r=1)");
  br->add_option("--n", block_n, "gl_n size (n <= 4)")->required();
  br->add_option("--sigma", sigma_csv, "comma-separated integer eigenvalues")->required();

  std::string ra_file;
  auto* ra = app.add_subcommand("reduce-affine", "affine-to-graded parameter reduction");
  ra->add_option("file", ra_file, "JSON input")->required();

  std::string st_type = "B2", st_gamma = "none";
  auto* st = app.add_subcommand("steinberg", "Steinberg character table row");
  st->add_option("--type", st_type, "root datum preset");
  st->add_option("--gamma", st_gamma, "diagram automorphisms (none|flip)");

  std::string selector = "all";
  auto* vf = app.add_subcommand("verify", "run invariant suites and acceptance criteria");
  vf->add_option("selector", selector, "all | acceptance | <module suite name>");

  CLI11_PARSE(app, argc, argv);

  try {
    if (oc->parsed()) return cmd_open_check(param_file, as_json, out_path);
    if (jm->parsed()) return cmd_jm(jm_file, as_json, out_path);
    if (br->parsed()) return cmd_block_report(block_n, sigma_csv, as_json, out_path);
    if (ra->parsed()) return cmd_reduce_affine(ra_file, as_json, out_path);
    if (st->parsed()) return cmd_steinberg(st_type, st_gamma, as_json, out_path);
    if (vf->parsed()) return cmd_verify(selector, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
