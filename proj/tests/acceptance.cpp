// Runs every criterion of the claims manifest at full scale with a fresh
// catalog and prints one verdict line per criterion. Exits non-zero unless
// all of them pass within their time budgets.

#include <cstdio>
#include <iostream>
#include <thread>

#include "invgrp/claims.hpp"

using namespace invgrp;

int main(int argc, char** argv) {
  ClaimRunOptions opt;
  opt.scale = Scale::Full;
  opt.jobs = std::max(1u, std::thread::hardware_concurrency());
  for (int i = 1; i < argc; ++i) opt.criteria.push_back(std::atoi(argv[i]));
  opt.on_result = [](const ClaimResult& r) {
    std::printf("  [%d] %-28s %-7s %7.2fs  %s\n", r.criterion, r.id.c_str(), to_string(r.status).c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
  };
  try {
    auto results = run_claims(opt);
    auto summary = summarize(results, manifest_criteria());
    bool ok = true;
    std::printf("\n");
    for (const auto& c : summary) {
      std::printf("criterion %2d: %-7s %7.2fs / %4.0fs  %s%s\n", c.info.number, to_string(c.status).c_str(), c.seconds,
                  c.info.budget_seconds, c.info.title.c_str(), c.over_budget ? "  (over budget)" : "");
      ok = ok && c.status == ClaimStatus::Pass;
    }
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "acceptance run aborted: " << e.what() << "\n";
    return 2;
  }
}
