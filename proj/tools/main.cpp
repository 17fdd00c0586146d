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

// naive-a: converts a Property A witness made of N-valued chains into one made
// of subsets, and checks the result.
//
// Exit status: 0 pass, 1 verification failed, 2 malformed input,
// 3 instance is not a Property A witness, 4 internal invariant broken.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "naive_a/errors.hpp"
#include "naive_a/generators.hpp"
#include "naive_a/io.hpp"
#include "naive_a/tailor.hpp"
#include "naive_a/verify.hpp"

namespace {

using namespace naive_a;

enum Exit : int {
  kPass = 0,
  kVerifyFail = 1,
  kMalformed = 2,
  kPrecondition = 3,
  kInternal = 4,
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

Rational rational_arg(const std::string& text, const char* name) {
  try {
    return Rational::parse(text);
  } catch (const MalformedInput& e) {
    throw MalformedInput(std::string("--") + name + ": " + e.what());
  }
}

template <typename T>
std::vector<T> split_list(const std::string& text,
                          T (*convert)(const std::string&)) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(convert(item));
  }
  return out;
}

std::int64_t to_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw MalformedInput("not an integer: '" + s + "'");
  return v;
}

Rational to_rational(const std::string& s) { return Rational::parse(s); }

struct GenerateArgs {
  std::string kind;
  std::uint64_t seed = 0;
  std::string out;
  std::string R = "2", epsilon = "1/2", S = "12";
  std::int64_t n = 10, width = 10, height = 10;
  std::int64_t paths = 20, min_length = 5, max_length = 300;
  std::string gap, generators = "1", radii, base = "disjoint_union_paths";
  std::int64_t k = 3;
  bool unbounded = false, bounded = false;
};

int cmd_generate(const GenerateArgs& a) {
  GeneratorParams p;
  p.R = rational_arg(a.R, "R");
  p.epsilon = rational_arg(a.epsilon, "epsilon");
  p.S = rational_arg(a.S, "S");
  p.n = a.n;
  p.width = a.width;
  p.height = a.height;
  p.count = a.paths;
  p.min_length = a.min_length;
  p.max_length = a.max_length;
  if (!a.gap.empty()) p.gap = rational_arg(a.gap, "gap");
  p.generators = split_list<std::int64_t>(a.generators, to_int);
  p.folner_radius = a.k;
  if (!a.radii.empty()) p.radii = split_list<Rational>(a.radii, to_rational);
  p.base = a.base;
  if (a.unbounded) p.unbounded = true;
  if (a.bounded) p.unbounded = false;
  Instance inst = gen_instance(a.kind, p, a.seed);
  emit(a.out, serialize_instance(inst));
  return kPass;
}

struct RunArgs {
  std::string instance;
  std::string out;
  std::string trace;
  unsigned jobs = 1;
};

int cmd_run(const RunArgs& a) {
  Instance inst = parse_instance(read_text_file(a.instance));
  PipelineOptions opts;
  opts.jobs = a.jobs;
  std::ostringstream trace;
  if (!a.trace.empty()) {
    opts.trace = [&](PointIndex x, std::uint64_t it, const Chain& c) {
      trace << inst.space.id(x) << " " << it << " "
            << format_chain(inst.space, c) << "\n";
    };
  }
  PipelineResult r =
      run_pipeline(inst.space, inst.chains, inst.R, inst.epsilon, inst.S, opts);
  emit(a.out, serialize_output(inst.space, r.subsets, r.certificate));
  if (!a.trace.empty()) emit(a.trace, trace.str());
  for (const auto& w : r.plan.warnings) std::cerr << "warning: " << w << "\n";
  const Certificate& c = r.certificate;
  std::cerr << "L " << c.L << ", N " << c.N << ", worst ratio "
            << c.worst_ratio.to_string() << " (input "
            << c.input_worst_ratio.to_string() << "), worst radius "
            << c.worst_radius << " (bound " << c.bound_radius << ")\n";
  for (const auto& v : c.violations) std::cerr << "violation: " << v << "\n";
  std::cerr << (c.passed() ? "PASS" : "FAIL") << "\n";
  return c.passed() ? kPass : kVerifyFail;
}

int cmd_verify(const std::string& instance_path, const std::string& output_path) {
  Instance inst = parse_instance(read_text_file(instance_path));
  RunOutput out = parse_output(read_text_file(output_path), inst.space);

  VerifyReport naive =
      verify_naive(inst.space, out.subsets, inst.R, inst.epsilon);
  std::cout << "naive: " << (naive.passed ? "PASS" : "FAIL") << ", "
            << naive.pairs_checked << " pairs, worst ratio "
            << naive.worst_ratio.to_string() << ", support radius "
            << naive.support_radius << "\n";
  for (const auto& v : naive.violations) std::cout << "  " << v << "\n";

  InstanceReport pre =
      check_instance(inst.space, inst.chains, inst.R, inst.epsilon, inst.S);
  if (!pre.ok()) {
    std::cerr << describe_violations(inst.space, pre);
    return kPrecondition;
  }
  VerifyReport cert = verify_certificate(inst.space, inst.chains, pre.params,
                                         out.subsets, out.certificate);
  std::cout << "certificate: " << (cert.passed ? "PASS" : "FAIL") << "\n";
  for (const auto& v : cert.violations) std::cout << "  " << v << "\n";
  return naive.passed && cert.passed ? kPass : kVerifyFail;
}

int cmd_trace(const std::string& instance_path, const std::string& point,
              const std::string& out) {
  Instance inst = parse_instance(read_text_file(instance_path));
  std::optional<PointIndex> only;
  if (!point.empty()) only = inst.space.index_of(point);
  std::ostringstream os;
  PipelineOptions opts;
  opts.trace = [&](PointIndex x, std::uint64_t it, const Chain& c) {
    if (only && *only != x) return;
    os << inst.space.id(x) << " " << it << " " << format_chain(inst.space, c)
       << "\n";
  };
  run_pipeline(inst.space, inst.chains, inst.R, inst.epsilon, inst.S, opts);
  emit(out, os.str());
  return kPass;
}

int cmd_inspect(const std::string& instance_path) {
  Instance inst = parse_instance(read_text_file(instance_path));
  InstanceReport pre =
      check_instance(inst.space, inst.chains, inst.R, inst.epsilon, inst.S);
  if (!pre.ok()) {
    std::cerr << describe_violations(inst.space, pre);
    return kPrecondition;
  }
  TailorPlan plan = classify(inst.space, rips_components(inst.space, inst.S),
                             pre.params, inst.chains);
  std::cout << describe_plan(inst.space, pre.params, plan);
  std::cout << "input worst ratio " << pre.worst_ratio.to_string() << " over "
            << pre.pairs_checked << " pairs\n";
  return kPass;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kInternal;
  } catch (const OverflowError& e) {
    std::cerr << "arithmetic overflow: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Naive Property A witnesses from chain witnesses"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a generated instance");
  generate->add_option("kind", gen.kind, "Generator kind")
      ->required()
      ->check(CLI::IsMember({"line", "grid", "disjoint_union_paths",
                             "cayley_cyclic", "weighted_ball"}));
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_option("--out", gen.out, "Output path (default stdout)");
  generate->add_option("--R", gen.R, "Scale R");
  generate->add_option("--epsilon", gen.epsilon, "Ratio bound");
  generate->add_option("--S", gen.S, "Support scale S");
  generate->add_option("--n", gen.n, "Points (line, cayley_cyclic)");
  generate->add_option("--width", gen.width, "Grid width");
  generate->add_option("--height", gen.height, "Grid height");
  generate->add_option("--paths", gen.paths, "Number of paths");
  generate->add_option("--min-length", gen.min_length, "Shortest path");
  generate->add_option("--max-length", gen.max_length, "Longest path");
  generate->add_option("--gap", gen.gap, "Gap between paths (default 2S)");
  generate->add_option("--generators", gen.generators,
                       "Comma separated generators of Z/n");
  generate->add_option("--k", gen.k, "Folner ball radius");
  generate->add_option("--radii", gen.radii, "Comma separated ball radii");
  generate->add_option("--base", gen.base, "Space under weighted_ball");
  auto* unb = generate->add_flag("--unbounded", gen.unbounded,
                                 "Attach a ray hint to each component");
  generate->add_flag("--bounded", gen.bounded, "Never attach ray hints")
      ->excludes(unb);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Build and certify the subsets");
  run_cmd->add_option("instance", run.instance)->required();
  run_cmd->add_option("--out", run.out, "Output path (default stdout)");
  run_cmd->add_option("--trace", run.trace, "Write flow traces here");
  run_cmd->add_option("--jobs", run.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  std::string instance_path, output_path;
  auto* verify = app.add_subcommand("verify", "Check an output file");
  verify->add_option("instance", instance_path)->required();
  verify->add_option("output", output_path)->required();

  std::string trace_in, trace_point, trace_out;
  auto* trace = app.add_subcommand("trace", "Print per-iteration flow traces");
  trace->add_option("instance", trace_in)->required();
  trace->add_option("--point", trace_point, "Only this point");
  trace->add_option("--out", trace_out, "Output path (default stdout)");

  std::string inspect_in;
  auto* inspect = app.add_subcommand("inspect", "Print the decomposition");
  inspect->add_option("instance", inspect_in)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kMalformed;
  }

  if (generate->parsed()) return guarded([&] { return cmd_generate(gen); });
  if (run_cmd->parsed()) return guarded([&] { return cmd_run(run); });
  if (verify->parsed()) {
    return guarded([&] { return cmd_verify(instance_path, output_path); });
  }
  if (trace->parsed()) {
    return guarded([&] { return cmd_trace(trace_in, trace_point, trace_out); });
  }
  return guarded([&] { return cmd_inspect(inspect_in); });
}
