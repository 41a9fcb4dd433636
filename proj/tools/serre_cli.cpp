// Command-line front end. Exit codes: 0 success, 1 verification failure, 2 input error.
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "serre/cells.hpp"
#include "serre/check/acceptance.hpp"
#include "serre/golden.hpp"
#include "serre/io.hpp"

namespace {

using namespace serre;

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  Int p = 101;
  std::size_t f = 0;  // 0: take f from the inputs
  std::uint64_t seed = check::Config{}.seed;
  std::string format = "text";
  std::string strict = "warn";
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

Int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    Int v = std::stoll(s, &used);
    if (used != s.size()) throw InputError("not an integer: " + s);
    return v;
  } catch (const std::logic_error&) {
    throw InputError("not an integer: " + s);
  }
}

Vec3 parse_vec3(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 3) throw InputError("expected x,y,z, got " + s);
  return {to_int(parts[0]), to_int(parts[1]), to_int(parts[2])};
}

// "x,y,z|x,y,z" with one triple per embedding
FWeight parse_fweight(const std::string& s) {
  FWeight out;
  for (const auto& part : split(s, '|')) out.push_back(parse_vec3(part));
  return out;
}

std::vector<Perm> parse_perms(const std::string& s) {
  std::vector<Perm> out;
  for (const auto& part : split(s, '|')) out.push_back(perm_from_cycle(part));
  return out;
}

// "(12)|()/60,31,2|50,20,0"
TameType parse_type(const std::string& s) {
  auto pos = s.find('/');
  if (pos == std::string::npos) throw InputError("type must be <perms>/<mu>, got " + s);
  TameType t{parse_perms(s.substr(0, pos)), parse_fweight(s.substr(pos + 1))};
  if (t.s.size() != t.mu.size()) throw InputError("type: perms and weights differ in f");
  return t;
}

// "m1,m2,a|m1,m2,a"
GraphVertex parse_vertex(const std::string& s) {
  GraphVertex v;
  for (const auto& part : split(s, '|')) {
    Vec3 x = parse_vec3(part);
    if (x[2] != 0 && x[2] != 1) throw InputError("alcove bit must be 0 or 1 in " + part);
    v.omega.push_back({x[0], x[1]});
    v.a.push_back(static_cast<int>(x[2]));
  }
  return v;
}

std::vector<AffElem1> parse_shape(const std::string& s, Base base) {
  std::vector<AffElem1> out;
  for (const auto& part : split(s, '|')) out.push_back(parse_aff1(part, base));
  return out;
}

void check_f(const RunConfig& cfg, std::size_t f) {
  if (cfg.f && cfg.f != f) throw InputError("inputs have f = " + std::to_string(f) + " but --f is " + std::to_string(cfg.f));
}

// Genericity: report the depth of center - eta against what the statement needs.
void genericity(const RunConfig& cfg, const FWeight& center, Int required, const std::string& what) {
  Int d = check_center(center, cfg.p).depth;
  if (d >= required) return;
  std::string msg = what + ": center is only " + std::to_string(d) + "-deep, " + std::to_string(required) + " expected";
  if (cfg.strict == "error") throw InputError(msg);
  std::cerr << "warning: " << msg << "\n";
}

void print_weights(const RunConfig& cfg, const std::vector<LabeledWeight>& ws) {
  if (cfg.format == "json") {
    std::cout << json(ws).dump(2) << "\n";
    return;
  }
  for (const auto& w : ws) {
    std::string labels;
    for (const auto& l : w.labels) labels += (labels.empty() ? "" : "|") + to_string(l);
    std::cout << labels << "  " << to_string(w.weight) << "  defect " << defect(w.labels) << "\n";
  }
}

int cmd_jh(const RunConfig& cfg, const std::string& type) {
  TameType t = parse_type(type);
  check_f(cfg, t.f());
  genericity(cfg, t.mu, 3, "jh");
  print_weights(cfg, jh(t, cfg.p));
  return 0;
}

int cmd_wq(const RunConfig& cfg, const std::string& rho_text) {
  RhoData rho;
  auto pos = rho_text.find(':');
  if (pos != std::string::npos)
    rho = RhoData::from_niveau(static_cast<int>(to_int(rho_text.substr(0, pos))), parse_fweight(rho_text.substr(pos + 1)));
  else
    rho = RhoData{parse_type(rho_text)};
  check_f(cfg, rho.v.f());
  genericity(cfg, rho.v.mu - constant_weight(rho.v.f(), kOne), 3, "wq");
  print_weights(cfg, w_question(rho, cfg.p));
  return 0;
}

int cmd_dist(const RunConfig& cfg, const std::string& from, const std::string& to, const std::string& center) {
  GraphVertex a = parse_vertex(from), b = parse_vertex(to);
  if (a.f() != b.f()) throw InputError("vertices differ in f");
  check_f(cfg, a.f());
  Region region;
  if (!center.empty()) {
    region.center = parse_fweight(center);
    region.p = cfg.p;
    if (region.center->size() != a.f()) throw InputError("center differs in f");
  }
  int d = distance(a, b, region);
  if (cfg.format == "json")
    std::cout << json{{"from", a}, {"to", b}, {"distance", d}}.dump(2) << "\n";
  else
    std::cout << d << "\n";
  return 0;
}

int cmd_adm(const RunConfig& cfg, const std::string& lambda, const std::string& sign) {
  if (sign != "+" && sign != "-") throw InputError("--sign must be + or -");
  const Base base = sign == "+" ? Base::plus : Base::minus;
  auto adm = admissible_set(parse_vec3(lambda), base);
  if (cfg.format == "json") {
    json out = json::array();
    for (const auto& x : adm) out.push_back({{"element", x}, {"text", to_string(x)}, {"length", length(x, base)}, {"star", to_string(star(x))}});
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  for (const auto& x : adm)
    std::cout << to_string(x) << "  length " << length(x, base) << "  star " << to_string(star(x)) << "\n";
  return 0;
}

int cmd_intersect_table(const RunConfig& cfg) {
  const json rows = json::parse(golden::text("table_intersections"))["rows"];
  const TameType t{{Perm{}}, {{60, 31, 2}}};
  bool all = true;
  json out = json::array();
  for (const auto& row : rows) {
    AffElem1 x = parse_aff1(row["word"].get<std::string>(), Base::plus);
    std::set<SigmaPair> want;
    for (const auto& s : row["sigma"]) want.insert(s.get<SigmaPair>());
    auto got = intersect_types(t, AffElem{{x}}, cfg.p).front();
    bool same = got == want;
    all = all && same;
    if (cfg.format == "json") {
      out.push_back({{"word", row["word"]}, {"element", to_string(x)}, {"computed", got}, {"table", want}, {"match", same}});
      continue;
    }
    std::cout << (same ? "  " : "! ") << row["word"].get<std::string>() << " = " << to_string(x) << ":";
    for (const auto& s : got) std::cout << " " << to_string(s);
    if (!same) {
      std::cout << "   table:";
      for (const auto& s : want) std::cout << " " << to_string(s);
    }
    std::cout << "\n";
  }
  if (cfg.format == "json") std::cout << out.dump(2) << "\n";
  return all ? 0 : 1;
}

int cmd_lattice(const RunConfig& cfg, const std::string& type, const std::string& cosocle) {
  TameType t = parse_type(type);
  check_f(cfg, t.f());
  genericity(cfg, t.mu, static_cast<Int>(3 * t.f()), "lattice");
  GraphVertex labels = parse_vertex(cosocle);
  auto ws = jh(t, cfg.p);
  const LabeledWeight* sigma = nullptr;
  for (const auto& w : ws)
    if (to_vertex(w.labels) == labels) sigma = &w;
  if (!sigma) throw InputError("cosocle labels " + cosocle + " do not name a constituent");
  PredictedGraph g = predicted_graph(t, sigma->weight, cfg.p);
  if (cfg.format == "dot") {
    std::cout << to_dot(g);
  } else if (cfg.format == "json") {
    std::cout << predicted_json(g).dump(2) << "\n";
  } else {
    auto layers = predicted_layers(t, sigma->weight, cfg.p);
    std::cout << "predicted layers from cosocle " << to_string(sigma->weight) << "\n";
    for (std::size_t d = 0; d < layers.size(); ++d) {
      std::cout << "  layer " << d << ":";
      for (const auto& w : layers[d]) std::cout << " " << to_string(w.weight);
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_phi(const RunConfig& cfg, const std::string& shape_text, const std::string& type) {
  auto pos = type.find('/');
  if (pos == std::string::npos) throw InputError("type must be <s_tau>/<mu>");
  TypeData td{perm_from_cycle(type.substr(0, pos)), parse_fweight(type.substr(pos + 1))};
  auto shape = parse_shape(shape_text, Base::minus);
  if (shape.size() != td.mu.size()) throw InputError("shape and type differ in f");
  check_f(cfg, shape.size());
  for (const auto& x : shape)
    if (!is_admissible(x, kEta, Base::minus)) throw InputError(to_string(x) + " is not in Adm-(eta)");
  auto mats = phi_matrices(shape, td);
  MonoMat phi_f = compose_phi_f(mats, cfg.p);
  TameType got = inertial_type_of(phi_f, cfg.p, shape.size());
  TameType want = expected_reflection(shape, td);
  bool ok = type_equivalent(got, want, cfg.p);
  if (cfg.format == "json") {
    std::cout << json{{"matrices", mats}, {"phi_f", phi_f}, {"inertial_type", got}, {"expected", want}, {"match", ok}}.dump(2)
              << "\n";
  } else {
    for (std::size_t j = 0; j < mats.size(); ++j) std::cout << "B(" << j << ") =\n" << render(mats[j]) << "\n";
    std::cout << "phi^f =\n" << render(phi_f) << "\n";
    std::cout << "inertial type  " << to_string(got) << "\n";
    std::cout << "expected       " << to_string(want) << "\n";
    std::cout << (ok ? "equivalent" : "NOT equivalent") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_ideal(const RunConfig& cfg, const std::string& which, const std::string& params) {
  ideal::CellParams pr;
  if (!params.empty()) {
    Vec3 v = parse_vec3(params);
    pr.a = v[0], pr.b = v[1], pr.c = v[2];
  }
  pr.p = static_cast<std::uint32_t>(cfg.p);
  std::vector<std::string> names = which == "all" ? ideal::lemma_names() : std::vector<std::string>{which};
  const auto known = ideal::lemma_names();
  for (const auto& n : names)
    if (std::find(known.begin(), known.end(), n) == known.end()) throw InputError("unknown lemma " + n);
  bool all = true;
  json out = json::array();
  for (const auto& n : names) {
    auto r = ideal::verify_lemma(n, pr);
    all = all && r.holds;
    if (cfg.format == "json") {
      out.push_back(r);
      continue;
    }
    std::cout << (r.holds ? "true " : "false") << "  " << n << "  [" << r.cell << "]";
    if (!r.certified.empty()) std::cout << "  certified by " << r.certified;
    std::cout << "\n";
    for (const auto& v : r.variants) {
      std::cout << "    " << (v.holds ? "holds " : "fails ") << v.name << ": " << v.claim << "\n";
      for (const auto* side : {&v.report.left_in_right, &v.report.right_in_left})
        for (const auto& g : *side)
          if (!g.member) std::cout << "      not contained: " << g.generator << "  (remainder " << g.remainder << ")\n";
    }
  }
  if (cfg.format == "json") std::cout << out.dump(2) << "\n";
  return all ? 0 : 1;
}

int cmd_selftest(const RunConfig& cfg) {
  auto results = check::run_all({cfg.seed});
  bool ok = true;
  json out = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (cfg.format == "json")
      out.push_back(check::to_json(r));
    else {
      std::cout << check::format_line(r) << "\n";
      if (!r.passed)
        for (const auto& n : r.notes) std::cout << "        " << n << "\n";
    }
  }
  if (cfg.format == "json") std::cout << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* e = std::getenv("SERRE_P")) cfg.p = std::atoll(e);
  if (const char* e = std::getenv("SERRE_F")) cfg.f = static_cast<std::size_t>(std::atoll(e));

  CLI::App app{"Serre weights and extension graphs for GL3"};
  app.require_subcommand(1);
  app.add_option("--p", cfg.p, "prime (env SERRE_P)");
  app.add_option("--f", cfg.f, "number of embeddings, checked against the inputs (env SERRE_F)");
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--strict", cfg.strict, "genericity handling")->check(CLI::IsMember({"warn", "error"}));

  std::string type, rho, from, to, center, lambda = "1,0,-1", sign = "+", cosocle, shape, lemma = "all", params;
  auto* jh_cmd = app.add_subcommand("jh", "labeled JH constituents of R_s(mu)");
  jh_cmd->add_option("--type", type, "perms/mu, e.g. \"(12)/60,31,2\"")->required();
  auto* wq_cmd = app.add_subcommand("wq", "the predicted weight set W?");
  wq_cmd->add_option("--rho", rho, "niveau:lambda, e.g. \"2:60,31,2\", or perms/mu")->required();
  auto* dist_cmd = app.add_subcommand("dist", "graph distance");
  dist_cmd->add_option("--from", from, "m1,m2,a|...")->required();
  dist_cmd->add_option("--to", to, "m1,m2,a|...")->required();
  dist_cmd->add_option("--center", center, "restrict to Lambda_W^center x {0,1}^f");
  auto* adm_cmd = app.add_subcommand("adm", "admissible set with lengths and adjoints");
  adm_cmd->add_option("--lambda", lambda, "dominant triple");
  adm_cmd->add_option("--sign", sign, "base alcove, + or -");
  auto* table_cmd = app.add_subcommand("intersect-table", "recompute the intersections table and diff");
  auto* lattice_cmd = app.add_subcommand("lattice", "predicted layers and graph");
  lattice_cmd->add_option("--type", type, "perms/mu")->required();
  lattice_cmd->add_option("--cosocle", cosocle, "Sigma labels m1,m2,a|...")->required();
  auto* phi_cmd = app.add_subcommand("phi", "Frobenius matrices of a shape and the recovered type");
  phi_cmd->add_option("--shape", shape, "elements of Adm-(eta), e.g. \"(13)t(1,0,-1)|Id\"")->required();
  phi_cmd->add_option("--type", type, "s_tau/mu, e.g. \"(12)/60,31,2\"")->required();
  auto* ideal_cmd = app.add_subcommand("ideal", "ideal computations");
  auto* verify_cmd = ideal_cmd->add_subcommand("verify", "verify a lemma or all of them");
  ideal_cmd->require_subcommand(1);
  verify_cmd->add_option("lemma", lemma, "lemma name or all");
  verify_cmd->add_option("--params", params, "a,b,c (default 70,35,0)");
  auto* self_cmd = app.add_subcommand("selftest", "run the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  bool prime = cfg.p >= 5;
  for (Int d = 2; prime && d * d <= cfg.p; ++d) prime = cfg.p % d != 0;
  if (!prime) {
    std::cerr << "error: p must be a prime >= 5\n";
    return 2;
  }

  try {
    if (*jh_cmd) return cmd_jh(cfg, type);
    if (*wq_cmd) return cmd_wq(cfg, rho);
    if (*dist_cmd) return cmd_dist(cfg, from, to, center);
    if (*adm_cmd) return cmd_adm(cfg, lambda, sign);
    if (*table_cmd) return cmd_intersect_table(cfg);
    if (*lattice_cmd) return cmd_lattice(cfg, type, cosocle);
    if (*phi_cmd) return cmd_phi(cfg, shape, type);
    if (*verify_cmd) return cmd_ideal(cfg, lemma, params);
    if (*self_cmd) return cmd_selftest(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
