// Copyright 2026 The ringload Authors
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

// ringload command-line front end. Reports go to stdout as JSON, a short
// summary goes to stderr.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ringload/ringload.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

struct InstanceDeleter {
  void operator()(rl_instance* p) const { rl_instance_free(p); }
};
using InstancePtr = std::unique_ptr<rl_instance, InstanceDeleter>;

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { rl_string_free(s); }
  std::string str() const { return s == nullptr ? "" : s; }
};

class Failure {
 public:
  Failure(int code, std::string message)
      : code_(code), message_(std::move(message)) {}
  int code() const { return code_; }
  const std::string& message() const { return message_; }

 private:
  int code_;
  std::string message_;
};

void Check(rl_status status) {
  if (status != RL_OK) {
    throw Failure(kExitInvalid, rl_last_error());
  }
}

std::string ReadFile(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(kExitInvalid, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure(kExitInvalid, "cannot write " + path);
}

InstancePtr Load(const std::string& path) {
  rl_instance* raw = nullptr;
  Check(rl_instance_parse(ReadFile(path).c_str(), &raw));
  return InstancePtr(raw);
}

rl_options Options(unsigned workers) {
  rl_options opt = rl_options_default();
  if (const char* cap = std::getenv("RINGLOAD_BRUTE_CAP")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(cap, &end, 10);
    if (end == cap || *end != '\0') {
      throw Failure(kExitUsage,
                    std::string("RINGLOAD_BRUTE_CAP is not a number: ") + cap);
    }
    opt.brute_cap = static_cast<size_t>(value);
  }
  opt.workers = workers;
  return opt;
}

std::string Field(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) return "-";
  const auto& v = doc[key];
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void Print(const OwnedString& report) { std::cout << report.str(); }

struct SearchArgs {
  int m = 8;
  int d = 10;
  std::string threshold;
  std::string shard;
  std::string containing;
  std::uint64_t shard_count = 2048;
  bool full = false;
  unsigned jobs = 1;
  std::string checkpoint;
};

std::pair<std::uint64_t, std::uint64_t> ParseShard(const std::string& text) {
  const auto slash = text.find('/');
  std::uint64_t index = 0, count = 0;
  try {
    if (slash == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    index = std::stoull(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument(text);
    count = std::stoull(text.substr(slash + 1), &used);
    if (used != text.size() - slash - 1) throw std::invalid_argument(text);
  } catch (const std::logic_error&) {
    throw Failure(kExitUsage, "--shard expects I/N, got '" + text + "'");
  }
  if (count == 0 || index >= count) {
    throw Failure(kExitUsage, "--shard needs 0 <= I < N, got '" + text + "'");
  }
  return {index, count};
}

int RunSearch(const SearchArgs& args) {
  std::uint64_t index = 0, count = 1;
  if (!args.shard.empty()) {
    std::tie(index, count) = ParseShard(args.shard);
  } else if (!args.containing.empty()) {
    InstancePtr inst = Load(args.containing);
    count = args.shard_count;
    Check(rl_search_shard_of(inst.get(), count, &index));
  } else if (!args.full) {
    throw Failure(kExitUsage,
                  "search needs --shard I/N, --containing FILE, or --full");
  }
  const unsigned jobs = std::max(1u, args.jobs);

  std::mutex out_mutex;
  auto on_hit = [](const char* record, void* user) {
    std::lock_guard<std::mutex> lock(*static_cast<std::mutex*>(user));
    std::cout << record << '\n' << std::flush;
  };
  std::vector<std::string> summaries(jobs);
  std::vector<rl_status> statuses(jobs, RL_OK);
  std::vector<std::string> errors(jobs);
  auto work = [&](unsigned j) {
    const std::uint64_t sub_index = index * jobs + j;
    const std::uint64_t sub_count = count * jobs;
    std::string checkpoint = args.checkpoint;
    if (!checkpoint.empty() && jobs > 1) checkpoint += "." + std::to_string(j);
    OwnedString report;
    statuses[j] = rl_search(args.m, args.d, args.threshold.c_str(), sub_index,
                            sub_count,
                            checkpoint.empty() ? nullptr : checkpoint.c_str(),
                            on_hit, &out_mutex, &report.s);
    if (statuses[j] != RL_OK) {
      errors[j] = rl_last_error();
    } else {
      summaries[j] = report.str();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    for (auto& t : pool) t.join();
  }
  std::uint64_t evaluated = 0, hits = 0;
  for (unsigned j = 0; j < jobs; ++j) {
    if (statuses[j] != RL_OK) throw Failure(kExitInvalid, errors[j]);
    const auto doc = nlohmann::json::parse(summaries[j]);
    evaluated += doc["canonical_evaluated"].get<std::uint64_t>();
    hits += doc["hits"].size();
  }
  std::cerr << "search m=" << args.m << " D=" << args.d << " threshold "
            << args.threshold << " shard " << index << "/" << count << ": "
            << evaluated << " canonical sequences evaluated, " << hits
            << " hit(s)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unsplittable ring loading: solvers, checks and searches"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rl_version()));
  unsigned workers = 1;
  app.add_option("--workers", workers, "Threads for brute-force enumeration")
      ->check(CLI::PositiveNumber);

  std::string alg = "auto", input, output;
  long medium_demand = -1;
  auto* solve = app.add_subcommand("solve", "Round a split routing");
  solve->add_option("--alg", alg, "ssw|medium|smallbig|auto|dp|brute")
      ->check(CLI::IsMember({"ssw", "medium", "smallbig", "auto", "dp", "brute"}));
  solve->add_option("-i,--input", input, "Instance file, - for stdin")->required();
  solve->add_option("--demand", medium_demand,
                    "Reduced demand index for --alg medium (0-based)");

  auto* loads = app.add_subcommand("loads", "Edge loads of the split routing");
  loads->add_option("-i,--input", input, "Instance file")->required();

  std::string verify_name;
  auto* verify = app.add_subcommand("verify", "Check a built-in instance");
  verify->add_option("name", verify_name, "fig1|fig2|fig5|fig6|fig7|fig8|all")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig5", "fig6", "fig7", "fig8", "all"}));

  int gen_m = 0, gen_d = 0;
  std::uint64_t seed = 0;
  bool structured = false;
  auto* gen = app.add_subcommand("gen", "Random crossing-form instance");
  gen->add_option("--m", gen_m, "Number of demands")->required();
  gen->add_option("--d", gen_d, "Maximum demand D")->required();
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_flag("--structured", structured, "Lower-bound search family");
  gen->add_option("-o,--output", output, "Write the instance here");

  auto* extend = app.add_subcommand("extend", "Equalize all edge loads");
  extend->add_option("-i,--input", input, "Instance file")->required();
  extend->add_option("-o,--output", output, "Write the extended instance here");

  auto* builtin = app.add_subcommand("builtin", "Print a built-in instance");
  builtin->add_option("name", verify_name, "fig1|fig2|fig5|fig6|fig7|fig8")
      ->required();

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Lower-bound instance search");
  search->add_option("--m", search_args.m, "Number of demands");
  search->add_option("--d", search_args.d, "Maximum demand D");
  search->add_option("--threshold", search_args.threshold,
                     "Report sequences whose optimum is at least this")
      ->required();
  auto* shard_opt =
      search->add_option("--shard", search_args.shard, "Shard I/N");
  auto* containing_opt = search->add_option(
      "--containing", search_args.containing,
      "Search the shard holding this instance's canonical form");
  search->add_option("--shard-count", search_args.shard_count,
                     "Shard count for --containing")
      ->check(CLI::PositiveNumber);
  auto* full_opt =
      search->add_flag("--full", search_args.full, "Whole family (long)");
  shard_opt->excludes(containing_opt)->excludes(full_opt);
  containing_opt->excludes(full_opt);
  search->add_option("--jobs", search_args.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  search->add_option("--checkpoint", search_args.checkpoint,
                     "Checkpoint file (per job suffix .J when --jobs > 1)");

  auto* optimum = app.add_subcommand("optimum", "Optimum unsplittable load");
  optimum->add_option("-i,--input", input, "Instance file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    OwnedString report;
    if (*solve) {
      InstancePtr inst = Load(input);
      const rl_options opt = Options(workers);
      Check(rl_solve(inst.get(), alg.c_str(), medium_demand, &opt, &report.s));
      const auto doc = nlohmann::json::parse(report.str());
      std::cerr << alg << ": branch " << Field(doc, "branch")
                << ", performance " << Field(doc, "performance")
                << ", max increase " << Field(doc, "max_increase")
                << ", bound " << Field(doc, "bound") << "\n";
      Print(report);
    } else if (*loads) {
      InstancePtr inst = Load(input);
      Check(rl_loads(inst.get(), &report.s));
      const auto doc = nlohmann::json::parse(report.str());
      std::cerr << "max load " << Field(doc, "max_load") << " on edges "
                << Field(doc, "max_edges") << "\n";
      Print(report);
    } else if (*verify) {
      const rl_options opt = Options(workers);
      int passes = 0;
      Check(rl_verify(verify_name.c_str(), &opt, &report.s, &passes));
      std::cerr << verify_name << ": " << (passes ? "all checks pass" : "CHECK FAILED")
                << "\n";
      Print(report);
      return passes ? kExitOk : kExitInvalid;
    } else if (*gen) {
      rl_instance* raw = nullptr;
      Check(rl_generate(gen_m, gen_d, seed, structured ? 1 : 0, &raw));
      InstancePtr inst(raw);
      Check(rl_instance_to_json(inst.get(), &report.s));
      if (!output.empty()) WriteFile(output, report.str());
      std::cerr << "generated m=" << gen_m << " D=" << gen_d << " seed " << seed
                << (structured ? " (structured)" : "") << "\n";
      Print(report);
    } else if (*extend) {
      InstancePtr inst = Load(input);
      rl_instance* raw = nullptr;
      Check(rl_extend(inst.get(), &raw, &report.s));
      InstancePtr extended(raw);
      if (!output.empty()) {
        OwnedString doc;
        Check(rl_instance_to_json(extended.get(), &doc.s));
        WriteFile(output, doc.str());
      }
      const auto doc = nlohmann::json::parse(report.str());
      std::cerr << "added " << Field(doc, "added") << " edge demand(s), level "
                << Field(doc, "level") << ", within D: " << Field(doc, "within_D")
                << "\n";
      Print(report);
    } else if (*builtin) {
      rl_instance* raw = nullptr;
      Check(rl_instance_builtin(verify_name.c_str(), &raw));
      InstancePtr inst(raw);
      Check(rl_instance_to_json(inst.get(), &report.s));
      Print(report);
    } else if (*search) {
      return RunSearch(search_args);
    } else if (*optimum) {
      InstancePtr inst = Load(input);
      const rl_options opt = Options(workers);
      Check(rl_optimum(inst.get(), &opt, &report.s));
      const auto doc = nlohmann::json::parse(report.str());
      std::cerr << "optimum unsplittable load " << Field(doc, "L") << "\n";
      Print(report);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message() << "\n";
    return f.code();
  }
  return kExitOk;
}
