#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wreathchar/groupspec.hpp"
#include "wreathchar/twistmult.hpp"
#include "wreathchar/unipotent.hpp"
#include "wreathchar/verify.hpp"

using namespace wreathchar;
using nlohmann::json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

json parse_json_arg(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(what + ": " + e.what());
  }
}

std::string type_name(TorusType t) { return t == TorusType::Linear ? "linear" : "unitary"; }

std::string points_string(const std::vector<int>& pts) {
  std::string s = "[";
  for (size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + std::to_string(pts[i]);
  return s + "]";
}

// |W^F x| A^F|, the largest group the table commands enumerate.
mpz_class weyl_order(const FixedStructure& fs) {
  mpz_class order = static_cast<unsigned long>(fs.AF.order());
  for (const OrbitInfo& o : fs.orbits) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(o.n));
    order *= f;
  }
  return order;
}

struct Options {
  std::string spec_path;
  std::string out = "tsv";
  uint64_t seed = 1;
  size_t cap = kDefaultElementCap;
  std::string levi_path;
  std::string lambda;
  std::string a;
  std::string suite;
  long q = 2;
};

FixedStructure load_structure(const Options& o) {
  if (o.spec_path.empty()) throw InputError("--spec is required");
  const FixedStructure fs = analyze(GroupSpec::from_json(read_json_file(o.spec_path)));
  if (weyl_order(fs) > o.cap) throw InputError("group order exceeds --cap " + std::to_string(o.cap));
  return fs;
}

int cmd_analyze(const Options& o) {
  const FixedStructure fs = load_structure(o);
  const QPoly order = order_polynomial(fs);
  if (o.out == "json") {
    json orbits = json::array();
    for (size_t i = 0; i < fs.orbits.size(); ++i) {
      const OrbitInfo& orb = fs.orbits[i];
      orbits.push_back({{"orbit", i}, {"factor", orb.factor}, {"points", orb.points}, {"n", orb.n},
                        {"length", orb.length}, {"type", type_name(orb.type)}});
    }
    std::cout << json{{"schema", 1}, {"orbits", orbits}, {"AF_order", fs.AF.order()},
                      {"order_polynomial", order.to_string()}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "orbit\tfactor\tpoints\tn\tlength\ttype\n";
  for (size_t i = 0; i < fs.orbits.size(); ++i) {
    const OrbitInfo& orb = fs.orbits[i];
    std::cout << i << '\t' << orb.factor << '\t' << points_string(orb.points) << '\t' << orb.n << '\t'
              << orb.length << '\t' << type_name(orb.type) << '\n';
  }
  std::cout << "# |A^F| = " << fs.AF.order() << "\n# order = " << order.to_string() << "\n";
  return 0;
}

int cmd_labels(const Options& o, bool evaluate) {
  const FixedStructure fs = load_structure(o);
  const auto labels = unipotent_labels(fs);
  if (o.out == "json") {
    json rows = json::array();
    for (const UnipotentLabel& l : labels) {
      json row = {{"eta", to_string(l.eta)}, {"xi", l.xi.to_string()}, {"sign", l.sign},
                  {"degree", l.degree.to_string()}};
      if (evaluate) row["value"] = l.degree.evaluate(o.q).get_str();
      rows.push_back(std::move(row));
    }
    json out = {{"schema", 1}, {"labels", rows}};
    if (evaluate) out["q"] = o.q;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "eta\txi\tsign\tdegree" << (evaluate ? "\tvalue" : "") << '\n';
  for (const UnipotentLabel& l : labels) {
    std::cout << to_string(l.eta) << '\t' << l.xi.to_string() << '\t' << (l.sign > 0 ? "+1" : "-1") << '\t'
              << l.degree.to_string();
    if (evaluate) std::cout << '\t' << l.degree.evaluate(o.q).get_str();
    std::cout << '\n';
  }
  return 0;
}

int cmd_mtable(const Options& o) {
  const FixedStructure fs = load_structure(o);
  if (o.levi_path.empty() || o.lambda.empty()) throw InputError("mtable needs --levi and --lambda");
  const LeviDatum datum = LeviDatum::from_json(fs, read_json_file(o.levi_path));
  const LeviLabel lambda = levi_label_from_json(parse_json_arg(o.lambda, "--lambda"));
  const int d = static_cast<int>(datum.compositions.size());
  const Perm a = o.a.empty() ? Perm::identity(d) : Perm(parse_json_arg(o.a, "--a").get<std::vector<int>>());
  const MultiplicityTable t = m_table(datum, lambda, a);
  if (o.out == "json") {
    json j = t.to_json();
    j["lambda"] = to_string(lambda);
    j["a"] = a.images();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "eta\tm\n";
  for (size_t e = 0; e < t.etas.size(); ++e) std::cout << to_string(t.etas[e]) << '\t' << t.m[e].to_string() << '\n';
  std::cout << "# reexpansion_exact = " << (t.reexpansion_exact() ? "true" : "false") << "\n";
  return 0;
}

int cmd_verify(const Options& o) {
  SuiteOptions so;
  so.seed = o.seed;
  if (!o.spec_path.empty()) so.spec = GroupSpec::from_json(read_json_file(o.spec_path));
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = suite_names();
  } else {
    names.push_back(o.suite);
  }
  bool ok = true;
  json rows = json::array();
  for (const std::string& n : names) {
    const SuiteResult r = run_suite(n, so);
    ok = ok && r.ok;
    if (o.out == "json") {
      rows.push_back({{"suite", r.name}, {"ok", r.ok}, {"checks", r.checks}, {"detail", r.detail}});
    } else {
      std::cout << (r.ok ? "PASS" : "FAIL") << '\t' << r.name << '\t' << r.checks << (r.ok ? "" : "\t" + r.detail)
                << '\n';
    }
  }
  if (o.out == "json") std::cout << json{{"schema", 1}, {"results", rows}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unipotent label and twisted induction tables for wreath-type Weyl groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--spec", o.spec_path, "GroupSpec JSON file");
  app.add_option("--out", o.out, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--seed", o.seed, "Seed for randomized suites");
  app.add_option("--cap", o.cap, "Largest group order to enumerate");

  auto* analyze_cmd = app.add_subcommand("analyze", "Orbit table and order polynomial");
  auto* labels_cmd = app.add_subcommand("labels", "Unipotent labels with signs and degrees");
  auto* mtable_cmd = app.add_subcommand("mtable", "Twisted induction multiplicities");
  mtable_cmd->add_option("--levi", o.levi_path, "Levi datum JSON file")->required();
  mtable_cmd->add_option("--lambda", o.lambda, "Label as JSON, e.g. [[[2],[1]]]")->required();
  mtable_cmd->add_option("--a", o.a, "Element of A_L as a JSON image list");
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify_cmd->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(choices));
  auto* degrees_cmd = app.add_subcommand("degrees", "Label degrees evaluated at q");
  degrees_cmd->add_option("--q", o.q, "Value of q")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(o);
    if (*labels_cmd) return cmd_labels(o, false);
    if (*degrees_cmd) return cmd_labels(o, true);
    if (*mtable_cmd) return cmd_mtable(o);
    if (*verify_cmd) return cmd_verify(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
