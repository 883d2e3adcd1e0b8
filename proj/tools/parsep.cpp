#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "parsep/parsep.hpp"

using namespace parsep;
using io::Json;

namespace {

struct Output {
  std::string format = "json";
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << text;
  }
};

int emit_report(const Report& r, const Output& out) {
  out.write(out.format == "csv" ? to_csv(r) : to_json(r).dump(2) + "\n");
  return r.all_passed() ? 0 : 1;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parity-restricted partition toolkit: enumeration, q-series identities and congruence checks"};
  app.require_subcommand(1);
  app.fallthrough();

  checks::Options opt;
  Output out;
  app.add_option("--order", opt.order, "q-series truncation order N")->check(CLI::NonNegativeNumber);
  app.add_option("--max-n", opt.max_n, "largest size enumerated explicitly")->check(CLI::NonNegativeNumber);
  app.add_option("--jobs", opt.jobs, "worker threads for enumeration")->check(CLI::PositiveNumber);
  app.add_option("--format", out.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out.path, "write to a file instead of stdout");

  auto* identities = app.add_subcommand("identities", "series identities and enumeration cross-checks");
  auto* congruences = app.add_subcommand("congruences", "crank congruences and vanishing results");

  auto* parity = app.add_subcommand("parity", "parity characterizations");
  int wang_bound = 500;
  parity->add_option("--wang-bound", wang_bound, "check the p_psi parity criterion for m up to this bound");

  auto* conjectures = app.add_subcommand("conjectures", "numerical scans of open conjectures");
  std::string which;
  int mod4_n = 20, density_bound = 2000, inequality_n = 100;
  conjectures->add_option("--which", which, "comma list from 5.1,5.2,5.3 (default all)");
  conjectures->add_option("--mod4-n", mod4_n, "largest n for the mod 4 scan");
  conjectures->add_option("--density-bound", density_bound, "density of even p0(m) for m below this");
  conjectures->add_option("--inequality-n", inequality_n, "largest n for the inequality scans");

  auto* enumerate = app.add_subcommand("enumerate", "list the members of a family of a given size");
  std::string family;
  int size = 0;
  bool with_stats = false;
  enumerate->add_option("family", family, "EO, BEO, OE, BOE, EO1, EO2, EO3, BOE_K(k), SELF_CONJ(...)")->required();
  enumerate->add_option("n", size, "partition size")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--stats", with_stats, "attach statistics to each member");

  auto* stats = app.add_subcommand("stats", "statistics of one partition");
  std::string partition_text;
  stats->add_option("partition", partition_text, "parts separated by commas, e.g. 4,4,2,1,1")->required();

  auto* table = app.add_subcommand("table", "crank table of a family");
  std::string table_family = "BEO";
  int table_n = 0;
  table->add_option("n", table_n, "partition size")->required()->check(CLI::NonNegativeNumber);
  table->add_option("--family", table_family, "BEO (eoc) or BOE (srank)");

  auto* series = app.add_subcommand("series", "coefficients of a named series up to --order");
  std::string series_name;
  series->add_option("name", series_name, "NU, OMEGA, PSI3, ETA_PRODUCT, GF_BEO_BIVAR, GF_BOE_BIVAR, GF_P0, GF_P1, ...")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*identities) return emit_report(checks::cmd_identities(opt), out);
    if (*congruences) return emit_report(checks::cmd_congruences(opt), out);
    if (*parity) return emit_report(checks::cmd_parity(opt, wang_bound), out);
    if (*conjectures) {
      return emit_report(checks::cmd_conjectures(opt, split_list(which), mod4_n, density_bound, inequality_n), out);
    }
    if (*enumerate) {
      FamilyTag tag = parse_family(family);
      auto members = enumerate_family(tag, size);
      if (out.format == "csv") {
        std::string text = "index,partition\n";
        for (std::size_t i = 0; i < members.size(); ++i) {
          text += std::to_string(i) + ",\"" + members[i].to_string() + "\"\n";
        }
        out.write(text);
        return 0;
      }
      Json list = Json::array();
      for (const auto& lambda : members) {
        if (with_stats) {
          list.push_back(Json{{"parts", io::to_json(lambda)}, {"statistics", io::to_json(statistics(lambda))}});
        } else {
          list.push_back(io::to_json(lambda));
        }
      }
      Json j{{"family", family_name(tag)}, {"n", size}, {"count", members.size()}, {"partitions", std::move(list)}};
      out.write(j.dump(2) + "\n");
      return 0;
    }
    if (*stats) {
      Partition lambda = Partition::parse(partition_text);
      Json j{{"partition", io::to_json(lambda)}, {"size", lambda.size()}, {"conjugate", io::to_json(conjugate(lambda))}};
      Json st = io::to_json(statistics(lambda));
      for (auto& [k, v] : st.items()) j[k] = v;
      Json families = Json::array();
      for (const char* name : {"EO", "BEO", "OE", "BOE", "EO1", "EO2", "EO3"}) {
        if (is_member(parse_family(name), lambda)) families.push_back(name);
      }
      j["families"] = std::move(families);
      out.write(j.dump(2) + "\n");
      return 0;
    }
    if (*table) {
      FamilyTag tag = parse_family(table_family);
      CrankStatistic stat = tag.family == Family::boe ? CrankStatistic::srank : CrankStatistic::eoc;
      out.write(io::to_json(crank_table(tag, table_n, stat)).dump(2) + "\n");
      return 0;
    }
    if (*series) {
      auto kind = parse_series_family(series_name);
      if (!kind) throw std::invalid_argument("unknown series: " + series_name);
      out.write(io::to_json(build_family(*kind, opt.order)).dump(2) + "\n");
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
