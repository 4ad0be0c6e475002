// Copyright 2026 The seqsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seqsum/io.hpp"
#include "seqsum/multilinear.hpp"
#include "seqsum/propcheck.hpp"
#include "seqsum/repro.hpp"

namespace {

using namespace seqsum;

// Exit codes: 0 success/pass, 2 property counterexample or repro FAIL,
// 1 usage or runtime error.

int cmd_norm(const std::string& class_spec, const std::string& space_spec,
             const std::string& file) {
  SeqClassSpec cls = parse_class(class_spec);
  Space sp = parse_space(space_spec);
  FiniteSeq s = load_seq_file(file, sp);
  EvalOptions opts;

  if (cls.kind == ClassKind::LpWeak) {
    NormResult r = weak_norm(s, cls.p, opts);
    std::cout << "value: " << format_double(r.value) << "\n";
    std::cout << "backend: " << r.backend << "\n";
    if (r.certificate) {
      std::cout << "maximizing functional:";
      for (double c : r.certificate->coords) std::cout << " " << format_double(c);
      std::cout << "\n";
    }
    return 0;
  }
  if (cls.kind == ClassKind::Cohen || cls.kind == ClassKind::Dual) {
    TupleNormResult r = cls.kind == ClassKind::Cohen ? cohen_norm(s, cls.p, opts)
                                                     : dual_norm(*cls.inner, s, opts);
    std::cout << "value: " << format_double(r.value) << " (certified lower bound)\n";
    std::cout << "backend: " << r.backend << "\n";
    std::cout << "witness tuple:\n";
    for (const Functional& f : r.witness) {
      std::cout << " ";
      for (double c : f.coords) std::cout << " " << format_double(c);
      std::cout << "\n";
    }
    return 0;
  }
  double v = class_norm(cls, s, opts);
  std::cout << "value: " << format_double(v) << "\n";
  std::cout << "backend: "
            << (cls.kind == ClassKind::Rad ? "sign-enumeration"
                                           : (cls.kind == ClassKind::Fd ? "prefix-sup" : "direct"))
            << "\n";
  return 0;
}

int cmd_check(const std::string& property, const std::vector<std::string>& class_specs,
              std::uint64_t seed, int samples, double tol) {
  std::vector<SeqClassSpec> classes;
  for (const std::string& c : class_specs) classes.push_back(parse_class(c));
  SamplerConfig cfg;
  cfg.seed = seed;
  cfg.samples = samples;
  if (tol > 0.0) cfg.tol_opt = tol;
  PropertyReport rep = run_checker(property, classes, cfg);
  std::cout << rep.to_text();
  return rep.counterexample ? 2 : 0;
}

int cmd_search(const std::string& op_file, const std::vector<std::string>& x_specs,
               const std::string& y_spec, std::vector<int> ks, std::uint64_t seed,
               std::int64_t budget, const std::string& out) {
  MultilinearOp a = load_op_file(op_file);
  std::vector<SeqClassSpec> xs;
  for (const std::string& c : x_specs) xs.push_back(parse_class(c));
  SeqClassSpec y = parse_class(y_spec);
  SearchConfig cfg;
  if (!ks.empty()) cfg.ks = std::move(ks);
  cfg.seed = seed;
  cfg.budget = budget;
  SummingEstimate est = lower_bound_search(a, xs, y, cfg);

  CsvWriter csv({"k", "rho"});
  for (const auto& e : est.trace) csv.row({std::to_string(e.k), format_double(e.rho)});
  if (!out.empty()) {
    csv.save(out);
    std::cout << "trace: " << out << "\n";
  } else {
    std::cout << csv.text();
  }
  std::cout << "lower bound: " << format_double(est.value) << "\n";
  return 0;
}

int cmd_repro(const std::string& id, const ReproOptions& opts) {
  std::cout << "repro " << id << ": seed=" << opts.seed << " kmax=" << opts.kmax
            << " rad_len=" << opts.rad_len << " budget=" << opts.budget
            << " out=" << opts.out_dir << "\n";
  std::vector<CaseResult> results = run_repro(id, opts);
  bool all_pass = true;
  for (const CaseResult& r : results) {
    std::cout << r.summary << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sequence-class norms and summing multilinear operator norms"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::uint64_t seed = 7;
  double tol = 0.0;
  std::int64_t budget = 20000;
  int kmax = 4096;
  app.add_option("--seed", seed, "global random seed");
  app.add_option("--tol", tol, "optimizer-side tolerance override");
  app.add_option("--budget", budget, "search proposal budget");
  app.add_option("--kmax", kmax, "probe truncation horizon");

  auto* norm = app.add_subcommand("norm", "evaluate a sequence-class norm");
  std::string class_spec, space_spec, seq_file;
  norm->add_option("class", class_spec, "class spec, e.g. lp:2, lpw:2, linf, rad, cohen:2, fd(lpw:2), dual(lp:2)")
      ->required();
  norm->add_option("space", space_spec, "space spec lp:<p>:<dim>")->required();
  norm->add_option("file", seq_file, "sequence JSON file")->required();

  auto* check = app.add_subcommand("check", "run a property falsifier");
  std::string property;
  std::vector<std::string> check_classes;
  int samples = 1000;
  check->add_option("property", property,
                    "axioms|shrinking|zeroinv|subseq|contraction|spherical|linstab|scalar|finleq|dominated")
      ->required();
  check->add_option("classes", check_classes, "class spec(s); target class last where needed")
      ->required();
  check->add_option("--samples", samples, "sample budget");

  auto* search = app.add_subcommand("search", "summing-norm lower-bound search");
  std::string op_file, y_spec, out_file;
  std::vector<std::string> x_specs;
  std::vector<int> ks;
  search->add_option("operator", op_file, "operator JSON file")->required();
  search->add_option("--classes", x_specs, "input class specs, one per slot")->required();
  search->add_option("--y", y_spec, "output class spec")->required();
  search->add_option("--k", ks, "witness lengths to search");
  search->add_option("--out", out_file, "write the rho trace CSV here");

  auto* repro = app.add_subcommand("repro", "run reproduction cases");
  std::string repro_id;
  std::string out_dir = ".";
  int rad_len = 16;
  bool parallel = false;
  repro->add_option("id", repro_id, "case id or 'all'")->required();
  repro->add_option("--out", out_dir, "output directory for CSV traces");
  repro->add_option("--rad-len", rad_len, "Rademacher horizon");
  repro->add_flag("--parallel", parallel, "run independent cases concurrently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // 1 for every usage error, 0 for --help
  }

  try {
    if (*norm) return cmd_norm(class_spec, space_spec, seq_file);
    if (*check) return cmd_check(property, check_classes, seed, samples, tol);
    if (*search) return cmd_search(op_file, x_specs, y_spec, ks, seed, budget, out_file);
    if (*repro) {
      ReproOptions opts;
      opts.seed = seed;
      opts.out_dir = out_dir;
      opts.kmax = kmax;
      opts.rad_len = rad_len;
      opts.budget = budget;
      opts.parallel = parallel;
      return cmd_repro(repro_id, opts);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
