// pgroup: command line front end.
#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>

#include "pgroup/harness.hpp"

using namespace pgroup;

namespace {

std::vector<PcPresentation> load_all(const std::vector<std::string>& files, bool builtin) {
  std::vector<PcPresentation> out;
  if (builtin) out = builtin_corpus();
  for (const auto& f : files) {
    auto part = load_presentations(f);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<PcPresentation> select(std::vector<PcPresentation> all, const std::string& name) {
  if (name.empty()) return all;
  std::vector<PcPresentation> out;
  for (auto& p : all)
    if (p.name == name) out.push_back(std::move(p));
  if (out.empty()) throw std::runtime_error("no group named " + name);
  return out;
}

std::string invariants_text(const AbelianInvariants& a) {
  if (a.exponents.empty()) return "1";
  std::string s;
  for (int e : a.exponents) {
    if (!s.empty()) s += " x ";
    s += "C" + std::to_string(static_cast<long long>(std::pow(a.prime, e)));
  }
  return s;
}

int cmd_check(const std::vector<std::string>& files) {
  int bad = 0;
  for (const auto& f : files) {
    std::vector<PcPresentation> list;
    try {
      list = load_presentations(f);
    } catch (const ParseError& e) {
      std::cerr << e.what() << '\n';
      ++bad;
      continue;
    }
    for (const auto& pres : list) {
      try {
        const GroupPtr g = enumerate(pres);
        const ConsistencyReport r = consistency_check(*g);
        std::cout << pres.name << ": order " << g->order() << ", "
                  << (r.consistent ? "consistent" : "INCONSISTENT") << " ("
                  << (r.exhaustive ? "exhaustive, " : "sampled, ") << r.triples_checked << " triples)\n";
        for (const auto& msg : r.failures) std::cout << "  " << msg << '\n';
        bad += !r.consistent;
      } catch (const std::exception& e) {
        std::cout << pres.name << ": error: " << e.what() << '\n';
        ++bad;
      }
    }
  }
  return bad ? 1 : 0;
}

int cmd_structure(const std::vector<PcPresentation>& list) {
  for (const auto& pres : list) {
    const GroupPtr gp = enumerate(pres);
    const Group& g = *gp;
    const Subgroup z = center(g);
    const QuotientMap ab = quotient(g, derived_subgroup(g));
    std::cout << pres.name << " (p=" << g.prime() << ", |G|=" << g.order() << ")\n"
              << "  |Z(G)|        " << z.order() << '\n'
              << "  |G'|          " << derived_subgroup(g).order() << '\n'
              << "  |Phi(G)|      " << frattini(g).order() << '\n'
              << "  |Z2(G)|       " << second_center(g).order() << '\n'
              << "  |Omega1(Z)|   " << omega1(z).order() << '\n'
              << "  maximal       " << maximal_subgroups(g).size() << '\n'
              << "  d(G)          " << generator_rank(g) << '\n'
              << "  class         " << nilpotency_class(g) << '\n'
              << "  G/G'          " << invariants_text(abelian_invariants(*ab.quotient)) << '\n'
              << "  Z(G)          " << invariants_text(abelian_invariants(z)) << '\n';
  }
  return 0;
}

int cmd_classify(const std::vector<PcPresentation>& list) {
  for (const auto& pres : list) {
    const GroupPtr g = enumerate(pres);
    std::cout << pres.name << ' ' << to_json(classify(*g)).dump() << '\n';
  }
  return 0;
}

int cmd_webb(const std::vector<PcPresentation>& list) {
  for (const auto& pres : list) {
    const GroupPtr gp = enumerate(pres);
    const Group& g = *gp;
    const Subgroup z = center(g);
    const auto& maxes = maximal_subgroups(g);
    std::cout << pres.name << '\n';
    for (size_t k = 0; k < maxes.size(); ++k) {
      const WebbData d = webb_maps(g, maxes[k]);
      std::cout << "  M" << k << " |M|=" << maxes[k].order() << " g=" << d.g << " |Z(M)|=" << d.zm.order()
                << " |im tau|=" << d.im_tau.order() << " |ker gamma|=" << d.ker_gamma.order()
                << (d.all_checks_pass() ? "" : " CONTAINMENT FAILURE");
      if (!g.is_abelian() && z.is_subset_of(maxes[k])) {
        const WebbVerdict v = webb_criterion(g, maxes[k]);
        std::cout << " non-inner=" << (v.non_inner_exists ? "yes" : "no") << " |Out_M^M| predicted "
                  << v.predicted_out << " oracle " << v.oracle_out;
      } else {
        std::cout << " (Z(G) not in M or G abelian)";
      }
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_aut(const std::vector<PcPresentation>& list) {
  for (const auto& pres : list) {
    const GroupPtr g = enumerate(pres);
    const std::int64_t aut = automorphism_count(*g);
    const std::int64_t inn = inner_order(*g);
    std::cout << pres.name << ": |Aut|=" << aut << " |Inn|=" << inn << " |Out|=" << aut / inn
              << " |Aut|_p=" << p_part(aut, g->prime()) << " |G| divides |Aut|: "
              << (aut % g->order() == 0 ? "yes" : "no") << '\n';
  }
  return 0;
}

int cmd_verify(const std::vector<std::string>& files, bool builtin, const std::string& report,
               const std::string& csv, int jobs) {
  const auto corpus = load_all(files, builtin);
  if (corpus.empty()) throw std::runtime_error("nothing to verify (give files or --builtin)");
  const ReportSet set = run_corpus(corpus, jobs);
  for (const auto& r : set.reports) {
    std::cout << (r.ok() ? "ok   " : "FAIL ") << r.name << "  checks=" << r.checks.size()
              << " failed=" << r.failed_checks() << " skips=" << r.skips.size();
    if (r.divisibility) std::cout << " |Aut|=" << r.divisibility->aut_order;
    std::cout << '\n';
    for (const auto& c : r.checks)
      if (!c.pass)
        std::cout << "     " << c.id << ": " << c.lhs << ' ' << relation_name(c.rel) << ' ' << c.rhs << '\n';
    for (const auto& e : r.errors) std::cout << "     error: " << e << '\n';
  }
  for (const auto& [k, v] : set.buckets) std::cout << k << '=' << v << ' ';
  std::cout << '\n';
  if (!report.empty()) {
    std::ofstream out(report, std::ios::binary);
    out << to_json(set).dump(2) << '\n';
  }
  if (!csv.empty()) {
    std::ofstream out(csv, std::ios::binary);
    out << to_csv(set);
  }
  return set.failed_groups() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite p-group workbench"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string name, report, csv;
  bool builtin = false;
  int jobs = 1;

  auto* check = app.add_subcommand("check", "parse and check consistency");
  check->add_option("files", files, "presentation files")->required();

  auto* structure = app.add_subcommand("structure", "orders of characteristic subgroups");
  structure->add_option("file", files, "presentation file")->required();
  structure->add_option("-g,--group", name, "group name");

  auto* cls = app.add_subcommand("classify", "classification flags");
  cls->add_option("file", files, "presentation file")->required();
  cls->add_option("-g,--group", name, "group name");

  auto* webb = app.add_subcommand("webb", "tau and gamma for each maximal subgroup");
  webb->add_option("file", files, "presentation file")->required();
  webb->add_option("-g,--group", name, "group name")->required();

  auto* aut = app.add_subcommand("aut", "automorphism group orders");
  aut->add_option("file", files, "presentation file")->required();
  aut->add_option("-g,--group", name, "group name");

  auto* verify = app.add_subcommand("verify", "run every check and emit reports");
  verify->add_option("files", files, "presentation files");
  verify->add_flag("--builtin", builtin, "include the compiled-in corpus");
  verify->add_option("--report", report, "JSON report path");
  verify->add_option("--csv", csv, "CSV summary path");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*check) return cmd_check(files);
    if (*verify) return cmd_verify(files, builtin, report, csv, jobs);
    const auto list = select(load_all(files, false), name);
    if (*structure) return cmd_structure(list);
    if (*cls) return cmd_classify(list);
    if (*webb) return cmd_webb(list);
    if (*aut) return cmd_aut(list);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
