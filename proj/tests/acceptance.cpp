// Copyright 2026 The naive-a Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance checks, one line per criterion. Usage: acceptance <naive-a path>
// [work dir]. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "json.hpp"
#include "naive_a/augment.hpp"
#include "naive_a/errors.hpp"
#include "naive_a/generators.hpp"
#include "naive_a/io.hpp"
#include "naive_a/tailor.hpp"
#include "naive_a/verify.hpp"

namespace fs = std::filesystem;
using namespace naive_a;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string cli;
fs::path work;

int run_cli(const std::string& args) {
  std::string cmd = "\"" + cli + "\" " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string path(const std::string& name) { return (work / name).string(); }

Outcome flow_oracle() {
  MonitorReport r = flow_monitor({5, 2});
  std::ostringstream os;
  os << r.chains << " chains, " << r.pairs << " ordered pairs, max "
     << r.max_iterations << " iterations";
  if (!r.failures.empty()) os << "; first failure: " << r.failures.front();
  return {r.passed && r.chains == 243 && r.pairs == 243u * 243u, os.str()};
}

GeneratorParams paths_params() {
  GeneratorParams p;  // R 2, S 12, epsilon 1/2, 20 paths of 5..300 points
  p.radii = {12, 6};
  return p;
}

Outcome end_to_end() {
  Instance inst = gen_instance("weighted_ball", paths_params(), 7);
  InstanceReport pre =
      check_instance(inst.space, inst.chains, inst.R, inst.epsilon, inst.S);
  if (!pre.ok()) return {false, "instance fails the witness check"};
  PipelineResult r =
      run_pipeline(inst.space, inst.chains, inst.R, inst.epsilon, inst.S);
  VerifyReport v = verify_naive(inst.space, r.subsets, inst.R, inst.epsilon);
  std::size_t ok_pairs = 0;
  for (const auto& p : r.certificate.pairs) ok_pairs += p.output <= p.input;
  const Dist bound = r.params.bound_radius();
  std::ostringstream os;
  os << inst.space.size() << " points, L " << r.params.L << ", N "
     << r.params.N << ", " << ok_pairs << "/" << r.certificate.pairs.size()
     << " pairs with output <= input ratio, S' " << v.support_radius
     << " <= " << bound << ", verify_naive " << (v.passed ? "PASS" : "FAIL");
  return {v.passed && ok_pairs == r.certificate.pairs.size() &&
              v.pairs_checked == r.certificate.pairs.size() &&
              v.support_radius <= bound && r.certificate.passed(),
          os.str()};
}

Space two_lines() {
  std::vector<PointId> ids;
  for (int i = 0; i < 5; ++i) ids.push_back("q" + std::to_string(i));
  for (int i = 0; i < 5; ++i) ids.push_back("r" + std::to_string(i));
  std::vector<std::vector<Dist>> rows(10, std::vector<Dist>(10));
  for (int a = 0; a < 10; ++a) {
    for (int b = 0; b < 10; ++b) {
      int ia = a % 5, ib = b % 5;
      rows[a][b] = (a < 5) == (b < 5) ? Dist(std::abs(ia - ib))
                                      : Dist(ia + 100 + ib);
    }
  }
  return Space::from_matrix(ids, rows);
}

Outcome augmented_metric() {
  Space s = two_lines();
  InstanceParams p;
  p.R = 1;
  p.epsilon = 1;
  p.S = 2;
  p.set_mass_bound(2);
  AugmentedSpace x(s, rips_components(s, 2), p, 10);
  auto pts = x.materialized();
  std::uint64_t triples = 0, bad = 0;
  for (AugPoint a : pts) {
    for (AugPoint b : pts) {
      Dist ab = x.dist(a, b);
      if (ab != x.dist(b, a) || ab.is_zero() != (a == b)) ++bad;
      for (AugPoint c : pts) {
        ++triples;
        if (x.dist(a, c) > ab + x.dist(b, c)) ++bad;
      }
    }
  }
  std::ostringstream os;
  os << pts.size() << " points, " << triples << " triples, " << bad
     << " violations";
  return {bad == 0 && pts.size() <= 40, os.str()};
}

Outcome branch_3b() {
  Space s = line_space(200, "q");
  InstanceParams p;
  p.R = 1;
  p.epsilon = 5;
  p.S = 2;
  p.set_mass_bound(2);  // N = 6
  ChainFamily ind(s.size());
  for (PointIndex x = 0; x < s.size(); ++x) ind[x] = Chain{{AugPoint::base(x), 1}};
  TailorPlan plan = classify(s, rips_components(s, 2), p, ind);
  const Component& c = plan.decomposition.components[0];
  if (c.cls != ComponentClass::kBoundedLarge) return {false, "not large"};
  const auto& z = plan.annulus[0];

  // Random A, B whose base parts lie in ball(x_lambda, S+2NS), hence avoid z,
  // and whose tail parts are random subsets of the N tail points.
  std::vector<PointIndex> near = ball(s, c.basepoint, p.locality_radius());
  std::mt19937_64 rng(2026);
  auto draw = [&] {
    std::vector<AugPoint> out;
    for (PointIndex q : near) {
      if (rng() % 3 == 0) out.push_back(AugPoint::base(q));
    }
    for (std::uint32_t j = 1; j <= p.N; ++j) {
      if (rng() % 2 == 0) out.push_back(AugPoint::tail(0, j));
    }
    if (out.empty() || out.back().is_base()) out.push_back(AugPoint::tail(0, 1));
    return out;
  };
  std::size_t trials = 2000, bad = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<AugPoint> a = draw(), b = draw();
    std::vector<AugPoint> sym, both;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(sym));
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(both));
    std::vector<PointIndex> fa = phi(plan, 0, a), fb = phi(plan, 0, b);
    std::vector<PointIndex> fsym, fboth;
    std::set_symmetric_difference(fa.begin(), fa.end(), fb.begin(), fb.end(),
                                  std::back_inserter(fsym));
    std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(),
                          std::back_inserter(fboth));
    bad += fsym.size() != sym.size() || fboth.size() != both.size();
  }
  for (PointIndex q : near) {
    if (std::find(z.begin(), z.end(), q) != z.end()) ++bad;
  }

  // Pipeline runs: a line whose mass spills into the tail, and the
  // end-to-end instance.
  ChainFamily lean(s.size());
  for (int i = 0; i < 200; ++i) {
    PointIndex x = s.index_of("q" + std::to_string(i));
    PointIndex y = s.index_of("q" + std::to_string(i == 199 ? 198 : i + 1));
    lean[x] = Chain{{AugPoint::base(x), 2}, {AugPoint::base(y), 1}};
  }
  PipelineResult r1 = run_pipeline(s, lean, 1, 5, 2);
  Instance inst = gen_instance("weighted_ball", paths_params(), 7);
  PipelineResult r2 =
      run_pipeline(inst.space, inst.chains, inst.R, inst.epsilon, inst.S);

  std::ostringstream os;
  os << trials << " hand-built pairs, " << bad << " mismatches; spill line "
     << r1.certificate.branch_3b_pairs << " branch-3b pairs, "
     << r1.certificate.violations.size() << " violations; end-to-end "
     << r2.certificate.branch_3b_pairs << " branch-3b pairs, "
     << r2.certificate.violations.size() << " violations";
  return {bad == 0 && r1.certificate.branch_3b_pairs > 0 &&
              r1.certificate.passed() && r2.certificate.passed(),
          os.str()};
}

GeneratorParams ray_params() {
  GeneratorParams p = paths_params();
  p.base = "line";
  p.n = 2000;
  p.unbounded = true;
  return p;
}

Outcome ray_emulation() {
  Instance inst = gen_instance("weighted_ball", ray_params(), 0);
  PipelineResult r =
      run_pipeline(inst.space, inst.chains, inst.R, inst.epsilon, inst.S);
  std::size_t case1 = 0, inside = 0, ratios = 0;
  for (PointIndex x = 0; x < inst.space.size(); ++x) {
    case1 += r.certificate.cases[x] == StepCase::kUnbounded;
    inside += r.certificate.radii[x] <= r.params.flow_radius();
  }
  for (const auto& p : r.certificate.pairs) ratios += p.output <= p.input;
  std::ostringstream os;
  os << case1 << "/" << inst.space.size() << " points in case 1, " << inside
     << " within S+SL^2 = " << r.params.flow_radius() << ", " << ratios << "/"
     << r.certificate.pairs.size() << " ratios not increased";
  for (const auto& w : r.plan.warnings) os << "; " << w;
  const std::size_t n = inst.space.size();
  return {case1 == n && inside == n && ratios == r.certificate.pairs.size(),
          os.str()};
}

GeneratorParams cyclic_params() {
  GeneratorParams p;
  p.n = 240;
  p.generators = {1, -1};
  p.folner_radius = 30;
  p.R = 2;
  p.S = 30;
  return p;
}

Outcome amenable_sanity() {
  Instance inst = gen_instance("cayley_cyclic", cyclic_params(), 0);
  bool indicators = true;
  for (const Chain& c : inst.chains) indicators = indicators && c.is_indicator();
  InstanceReport pre =
      check_instance(inst.space, inst.chains, inst.R, inst.epsilon, inst.S);
  PipelineResult r =
      run_pipeline(inst.space, inst.chains, inst.R, inst.epsilon, inst.S);
  VerifyReport v = verify_naive(inst.space, r.subsets, inst.R, inst.epsilon);
  std::ostringstream os;
  os << "{0,1}-valued " << (indicators ? "yes" : "no") << ", verify_naive "
     << (v.passed ? "PASS" : "FAIL") << ", worst ratio "
     << v.worst_ratio.to_string() << " vs input "
     << pre.worst_ratio.to_string();
  return {indicators && v.passed && v.worst_ratio == pre.worst_ratio,
          os.str()};
}

bool same_bytes(const std::string& a, const std::string& b) {
  return read_text_file(a) == read_text_file(b);
}

Outcome determinism() {
  struct Case {
    std::string name, args;
  };
  std::vector<Case> cases{
      {"paths", "weighted_ball --R 2 --S 12 --epsilon 1/2 --radii 12,6 "
                "--paths 20 --min-length 5 --max-length 300 --seed 7"},
      {"ray", "weighted_ball --base line --n 2000 --unbounded --R 2 --S 12 "
              "--epsilon 1/2 --radii 12,6 --seed 0"},
      {"cyclic", "cayley_cyclic --n 240 --generators 1,-1 --k 30 --R 2 "
                 "--S 30 --seed 0"}};
  std::ostringstream os;
  bool pass = true;
  for (const auto& c : cases) {
    for (int rep = 0; rep < 2; ++rep) {
      std::string tag = c.name + std::to_string(rep);
      int g = run_cli("generate " + c.args + " --out " + path(tag + ".json"));
      int r = run_cli("run " + path(tag + ".json") + " --out " +
                      path(tag + ".out.json") + " --jobs " +
                      std::to_string(1 + 3 * rep));
      if (g != 0 || r != 0) {
        pass = false;
        os << c.name << " exit " << g << "/" << r << "; ";
      }
    }
    bool same = same_bytes(path(c.name + "0.json"), path(c.name + "1.json")) &&
                same_bytes(path(c.name + "0.out.json"),
                           path(c.name + "1.out.json"));
    pass = pass && same;
    os << c.name << (same ? " identical" : " DIFFERS") << ", ";
  }

  // Tampering: drop a point, perturb a ratio, delete a field.
  const std::string inst = path("cyclic0.json");
  const std::string out = path("cyclic0.out.json");
  auto doc = nlohmann::json::parse(read_text_file(out));
  auto tamper = [&](const std::string& name, auto&& edit) {
    auto copy = doc;
    edit(copy);
    write_text_file(path(name), copy.dump(1));
    return run_cli("verify " + inst + " " + path(name));
  };
  int clean = run_cli("verify " + inst + " " + out);
  int dropped = tamper("drop.json", [](auto& j) {
    j["subsets"].begin()->erase(j["subsets"].begin()->begin());
  });
  int ratio = tamper("ratio.json", [](auto& j) {
    j["certificate"]["pairs"][0]["output_ratio"] = "1/1000";
  });
  int missing = tamper("missing.json",
                       [](auto& j) { j["certificate"].erase("radii"); });
  os << "verify exits: clean " << clean << ", dropped point " << dropped
     << ", perturbed ratio " << ratio << ", missing field " << missing;
  pass = pass && clean == 0 && dropped == 1 && ratio == 1 && missing == 2;
  return {pass, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <naive-a binary> [work dir]\n";
    return 2;
  }
  cli = argv[1];
  work = argc > 2 ? fs::path(argv[2]) : fs::temp_directory_path() / "naive_a_acceptance";
  fs::create_directories(work);

  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"flow-oracle-suite", 5, flow_oracle},
      {"end-to-end-paths", 60, end_to_end},
      {"augmented-metric-axioms", 5, augmented_metric},
      {"branch-3b-equalities", 5, branch_3b},
      {"ray-emulation", 30, ray_emulation},
      {"amenable-cycle-sanity", 10, amenable_sanity},
      {"determinism-and-tamper", 120, determinism},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    bool in_time = secs <= c.limit_s;
    bool pass = o.pass && in_time;
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << c.name
              << " (" << std::fixed << std::setprecision(2) << secs << " s"
              << (in_time ? "" : ", over time limit") << "): " << o.detail
              << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
