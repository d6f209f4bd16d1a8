#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json_io.hpp"

#include <marf/error.hpp>

namespace marf::cli {

namespace {

struct Config {
  int genus = 0;
  std::vector<int> orders;
  int m = 1;
  std::vector<int> alpha, beta;
  bool brute_force = false;
  bool table = false;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
  int samples = 100;

  Signature sig() const { return {genus, orders}; }
};

std::string tuple_str(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

void emit(std::ostream& out, const json& j, bool table) {
  if (!table) {
    out << j.dump(2) << "\n";
    return;
  }
  // rows of objects become aligned columns; everything else key: value
  for (const auto& [key, val] : j.items()) {
    if (val.is_array() && !val.empty() && val[0].is_object()) {
      out << key << ":\n";
      std::vector<std::string> cols;
      for (const auto& [k, _] : val[0].items()) cols.push_back(k);
      for (const auto& c : cols) out << std::setw(18) << c;
      out << "\n";
      for (const auto& row : val) {
        for (const auto& c : cols) out << std::setw(18) << (row.contains(c) ? row[c].dump() : "-");
        out << "\n";
      }
    } else {
      out << key << ": " << val.dump() << "\n";
    }
  }
}

int cmd_liftable(const Config& c, std::ostream& out) {
  const auto r = check_liftable(c.sig(), c.m);
  json j{{"signature", c.sig()}, {"m", c.m}, {"liftable", r.liftable}};
  if (!r.liftable) j["reason"] = r.reason == LiftFailure::Gcd ? "gcd" : "congruence";
  emit(out, j, c.table);
  return r.liftable ? 0 : 1;
}

int cmd_components(const Config& c, std::ostream& out) {
  const auto report = components(c.sig(), c.m, c.brute_force, c.budget);
  emit(out, json(report), c.table);
  return report.components.empty() ? 1 : 0;
}

int cmd_orbits(const Config& c, std::ostream& out) {
  json j{{"signature", c.sig()}, {"m", c.m}, {"orbits", json::array()}};
  if (!liftable(c.sig(), c.m)) {
    emit(out, j, c.table);
    return 1;
  }
  for (const auto& o : classify_orbits(c.sig(), c.m, c.budget)) j["orbits"].push_back(orbit_json(o, c.m));
  emit(out, j, c.table);
  return 0;
}

int cmd_normalize(const Config& c, std::ostream& out) {
  const auto f = new_arf(c.sig(), c.m, c.alpha, c.beta);
  const auto nf = normal_form(f, c.budget);
  std::vector<std::string> word;
  for (const auto& t : nf.word) word.push_back(t.to_string());
  json j{{"signature", c.sig()}, {"m", c.m},          {"input", f.tuple()},
         {"normal_form", nf.form.tuple()}, {"twist_word", word}, {"delta", arf_invariant(f)}};
  emit(out, j, c.table);
  return 0;
}

int cmd_verify_numeric(const Config& c, std::ostream& out) {
  const auto sig = c.sig();
  const auto v = make_signature(sig);
  const auto seq = is_sequential(v);
  const auto product_level = canonical_lift_product_check(v);
  const auto g = static_cast<std::size_t>(sig.genus);
  const auto levA = c.alpha.empty() ? std::vector<int>(g, 0) : c.alpha;
  const auto levB = c.beta.empty() ? std::vector<int>(g, 0) : c.beta;
  const auto lift = lift_with_levels(v, c.m, levA, levB);
  const auto report = verify_arf_axioms(lift, c.samples, c.seed);
  const long long expected = static_cast<long long>(v.reduction().size()) - 2;
  const bool ok = seq.ok && product_level == expected && report.all_passed();

  json j{{"signature", sig},
         {"m", c.m},
         {"seed", c.seed},
         {"sequential", seq.ok},
         {"canonicalProductLevel", product_level},
         {"expectedProductLevel", expected},
         {"relationResidual", report.relation_residual},
         {"levels", {{"A", lift.levA}, {"B", lift.levB}, {"C", lift.levC}}},
         {"checks", report.checks},
         {"allPassed", ok}};
  if (!seq.ok) j["diagnostic"] = seq.diagnostic;
  emit(out, j, c.table);
  return ok ? 0 : 1;
}

int cmd_arf_count(const Config& c, std::ostream& out) {
  const auto n = count_arf_functions(c.sig(), c.m);
  emit(out, json{{"signature", c.sig()}, {"m", c.m}, {"count", n}}, c.table);
  return n > 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"m-Arf functions and components of hyperbolic GQHSS moduli"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-g,--genus", cfg.genus, "genus g")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("-p,--orders", cfg.orders, "cone orders, comma separated")->delimiter(',');
    sub->add_option("-m,--level", cfg.m, "level m")->required()->check(CLI::PositiveNumber);
    sub->add_flag("--table", cfg.table, "plain table instead of JSON");
    sub->add_flag("--json", "JSON output (default)");
    sub->add_option("--budget", cfg.budget, "state budget for orbit searches");
  };

  std::vector<std::pair<CLI::App*, int (*)(const Config&, std::ostream&)>> commands;
  auto add = [&](const char* name, const char* help, int (*fn)(const Config&, std::ostream&)) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    commands.emplace_back(sub, fn);
    return sub;
  };
  add("liftable", "liftability of the signature at level m", cmd_liftable);
  add("components", "connected components of the moduli space", cmd_components)
      ->add_flag("--brute-force", cfg.brute_force, "cross-check with orbit enumeration");
  add("orbits", "mapping class group orbits on m-Arf functions", cmd_orbits);
  auto* norm = add("normalize", "normal form of an m-Arf function with a twist word", cmd_normalize);
  norm->add_option("--alpha", cfg.alpha, "values on a_1..a_g")->delimiter(',');
  norm->add_option("--beta", cfg.beta, "values on b_1..b_g")->delimiter(',');
  auto* ver = add("verify-numeric", "numerical Fuchsian group and lift checks", cmd_verify_numeric);
  ver->add_option("--seed", cfg.seed, "sampling seed");
  ver->add_option("--samples", cfg.samples, "samples per rule")->check(CLI::PositiveNumber);
  ver->add_option("--alpha", cfg.alpha, "levels of A_1..A_g")->delimiter(',');
  ver->add_option("--beta", cfg.beta, "levels of B_1..B_g")->delimiter(',');
  add("arf-count", "number of m-Arf functions", cmd_arf_count);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  for (const auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    try {
      return fn(cfg, out);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return 2;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace marf::cli
