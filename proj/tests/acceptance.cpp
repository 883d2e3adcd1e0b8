// Acceptance run: one PASS/FAIL line per criterion, exact integer equality
// throughout, wall-clock limits enforced. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "parsep/parsep.hpp"

using namespace parsep;
using namespace parsep::checks;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 means no individual limit
  std::function<std::vector<CaseResult>()> run;
};

std::vector<CaseResult> pick(const std::vector<CaseResult>& all, std::initializer_list<const char*> names) {
  std::vector<CaseResult> out;
  for (const char* name : names) {
    for (const auto& c : all) {
      if (c.name == name) out.push_back(c);
    }
  }
  return out;
}

CaseResult boe_nine_list() {
  std::vector<Partition> expected{{8, 1},       {6, 3},          {6, 1, 1, 1},       {4, 3, 1, 1},
                                  {4, 2, 2, 1}, {4, 1, 1, 1, 1, 1}, {2, 2, 2, 1, 1, 1}, {2, 1, 1, 1, 1, 1, 1, 1}};
  std::sort(expected.begin(), expected.end(), std::greater<>());
  auto got = enumerate_family({Family::boe}, 9);
  std::string listed;
  for (const auto& p : got) listed += (listed.empty() ? "" : " ") + p.to_string();
  return {"boe_9_members", "BOE(9) = 8 with the known member list", "8 members", std::to_string(got.size()) + ": " + listed,
          got == expected};
}

CaseResult p_nu_six() {
  auto v = p_nu_comb(6);
  return {"p_nu_6", "p_nu(6) = 4", "4", std::to_string(v), v == 4};
}

}  // namespace

int main() {
  const int jobs = 4;
  const int order = 200;
  std::vector<Criterion> criteria{
      {1, "BOE(9) enumeration", 1.0, [] { return std::vector<CaseResult>{boe_nine_list()}; }},
      {2, "Andrews-Beck combination mod 10 at 10n (n=1..6), mod 20 at 10n+8 (n=0..6)", 120.0,
       [&] { return andrews_beck_checks(68, jobs, false); }},
      {3, "N_eo(i,5,10n+8) equidistributed for n=0..4", 60.0,
       [&] {
         std::vector<int> sizes;
         for (int n = 0; n <= 4; ++n) sizes.push_back(10 * n + 8);
         auto tables = beo_tables(sizes, jobs);
         std::vector<CaseResult> out;
         for (int s : sizes) out.push_back(equidistribution_case(tables.at(s)));
         return out;
       }},
      {4, "N_eo(0,4,4n+2) = N_eo(2,4,4n+4) = 0 for n <= 15", 0,
       [&] {
         std::vector<CaseResult> out{vanishing_enumerated(15, jobs)};
         out.push_back(vanishing_series(beo_bivariate(4 * 15 + 4)));
         return out;
       }},
      {5, "bivariate series = crank tables for n <= 40, series consistency to 200", 0,
       [&] {
         std::vector<CaseResult> out{
             bivariate_matches_tables({Family::beo}, CrankStatistic::eoc, kOracleBound, jobs),
             bivariate_matches_tables({Family::boe}, CrankStatistic::srank, kOracleBound, jobs),
             beo_at_z_one(order),
             beo_bivariate_support(order),
             boe_bivariate_symmetry(order),
         };
         out.push_back(boe_parity(boe_bivariate(order).specialize_z_one()));
         return out;
       }},
      {6, "phi weight-preserving bijection for |pi| <= 30", 0,
       [] { return std::vector<CaseResult>{phi_bijection(30)}; }},
      {7, "star involution exhaustive to q-degree 12, product identity in box (10,4,8)", 0,
       [] { return star_involution_checks(12, 6, 8, Box::triple(10, 4, 8)); }},
      {8, "EO2, EO3 counts for n <= 40; generating functions and nu identities to 200", 0,
       [&] {
         auto out = pick(enumeration_cross_checks(kOracleBound), {"eo2_count_vs_series", "eo3_count_vs_series"});
         for (auto c : {eo2_identity(order), eo3_identity(order), nu_plus_identity(order), nu_minus_identity(order)}) {
           out.push_back(c);
         }
         return out;
       }},
      {9, "EO2(n+1) + EO3(n) = p_nu(n) to 200, counter to 40, p_nu(6) = 4", 0,
       [&] {
         auto out = pick(enumeration_cross_checks(kOracleBound), {"p_nu_counter", "eo_split_by_enumeration"});
         out.push_back(eo_split_identity(order));
         out.push_back(p_nu_six());
         return out;
       }},
      {10, "BEO/BOE parity predicates for n <= 200, Wang predicate for m <= 500", 0,
       [&] {
         return std::vector<CaseResult>{beo_parity(eta_product(order)),
                                        boe_parity(boe_bivariate(order).specialize_z_one()), wang_vs_psi(500)};
       }},
      {11, "p0, p1 vs BOE_K for 2n-1 <= 39; p0 + p1 + 1 = p_omega and p0(2n) parity to 200", 0,
       [&] {
         auto out = pick(enumeration_cross_checks(kOracleBound), {"p0_vs_boe_k0", "p1_vs_boe_k1"});
         out.push_back(p_omega_relation(order));
         out.push_back(p0_psi_parity(order));
         return out;
       }},
      {12, "conjecture sweeps", 0,
       [&] { return cmd_conjectures(Options{order, kOracleBound, jobs}).results; }},
  };

  using clock = std::chrono::steady_clock;
  const auto suite_start = clock::now();
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = clock::now();
    std::vector<CaseResult> results;
    std::string error;
    try {
      results = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(clock::now() - start).count();
    bool pass = error.empty() && !results.empty();
    std::string detail;
    for (const auto& r : results) {
      if (!r.pass) {
        pass = false;
        if (detail.empty()) detail = r.name + ": " + r.actual;
      }
    }
    if (!error.empty()) detail = "exception: " + error;
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      pass = false;
      detail = "exceeded " + std::to_string(c.limit_seconds) + " s";
    }
    if (c.id == 12) {
      const double total = std::chrono::duration<double>(clock::now() - suite_start).count();
      if (total > 600.0) {
        pass = false;
        detail = "suite exceeded 600 s";
      }
    }
    all = all && pass;
    std::printf("criterion %2d: %s  %s (%zu cases, %.2f s)%s%s\n", c.id, pass ? "PASS" : "FAIL", c.title.c_str(),
                results.size(), seconds, detail.empty() ? "" : "; ", detail.c_str());
    if (c.id == 12) {
      for (const auto& r : results) {
        if (r.expected == "informational") std::printf("              %s: %s\n", r.name.c_str(), r.actual.c_str());
      }
    }
  }
  const double total = std::chrono::duration<double>(clock::now() - suite_start).count();
  std::printf("acceptance: %s (%.2f s total)\n", all ? "all criteria passed" : "FAILURES", total);
  return all ? 0 : 1;
}
