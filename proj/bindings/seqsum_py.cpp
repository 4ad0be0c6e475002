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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seqsum/io.hpp"
#include "seqsum/multilinear.hpp"
#include "seqsum/propcheck.hpp"
#include "seqsum/repro.hpp"

namespace py = pybind11;
using namespace seqsum;

namespace {

FiniteSeq make_seq(const std::string& space_spec,
                   const std::vector<std::vector<double>>& items) {
  Space sp = parse_space(space_spec);
  FiniteSeq s(sp);
  for (const auto& coords : items) s.push(Vector(sp, coords));
  return s;
}

SeqFamily make_family(const py::dict& fam) {
  std::string kind = fam["kind"].cast<std::string>();
  if (kind == "unit") {
    return SeqFamily::unit_vectors(parse_space(fam["space"].cast<std::string>()));
  }
  if (kind == "scaled") {
    Space sp = parse_space(fam["space"].cast<std::string>());
    Vector z(sp, fam["z"].cast<std::vector<double>>());
    return SeqFamily::scaled_pattern(fam["decay"].cast<double>(), z);
  }
  if (kind == "explicit") {
    return SeqFamily::explicit_list(make_seq(fam["space"].cast<std::string>(),
                                             fam["items"].cast<std::vector<std::vector<double>>>()));
  }
  throw Error("unknown family kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(seqsum, m) {
  m.doc() =
      "Sequence-class norms and summing multilinear operator norms on "
      "finite-dimensional lp spaces";

  py::register_exception<Error>(m, "SeqsumError");

  m.def("dual_exponent",
        [](const std::string& p) { return Exponent::parse(p).conjugate().str(); },
        py::arg("p"), "Hoelder conjugate of an exponent string ('2', '4/3', 'inf').");

  m.def("vec_norm",
        [](const std::string& space, const std::vector<double>& coords) {
          Space sp = parse_space(space);
          return vec_norm(Vector(sp, coords));
        },
        py::arg("space"), py::arg("coords"));

  m.def("class_norm",
        [](const std::string& cls, const std::string& space,
           const std::vector<std::vector<double>>& items) {
          return class_norm(parse_class(cls), make_seq(space, items));
        },
        py::arg("cls"), py::arg("space"), py::arg("items"),
        "Norm of a finite sequence in the given class ('lp:2', 'lpw:2', 'linf', "
        "'rad', 'cohen:2', 'fd(...)', 'dual(...)').");

  m.def("fd_norm",
        [](const std::string& cls, const std::string& space,
           const std::vector<std::vector<double>>& items) {
          return fd_norm(parse_class(cls), make_seq(space, items));
        },
        py::arg("cls"), py::arg("space"), py::arg("items"));

  m.def("weak_norm",
        [](const std::string& space, const std::vector<std::vector<double>>& items,
           const std::string& p) {
          NormResult r = weak_norm(make_seq(space, items), Exponent::parse(p));
          py::dict out;
          out["value"] = r.value;
          out["backend"] = r.backend;
          if (r.certificate) out["certificate"] = r.certificate->coords;
          return out;
        },
        py::arg("space"), py::arg("items"), py::arg("p"));

  m.def("rad_norm",
        [](const std::string& space, const std::vector<std::vector<double>>& items) {
          return rad_norm(make_seq(space, items));
        },
        py::arg("space"), py::arg("items"));

  m.def("cohen_norm",
        [](const std::string& space, const std::vector<std::vector<double>>& items,
           const std::string& p) {
          TupleNormResult r = cohen_norm(make_seq(space, items), Exponent::parse(p));
          py::dict out;
          out["value"] = r.value;
          out["backend"] = r.backend;
          return out;
        },
        py::arg("space"), py::arg("items"), py::arg("p"),
        "Certified lower bound on the Cohen strongly-p-summable norm.");

  m.def("dual_norm",
        [](const std::string& inner, const std::string& space,
           const std::vector<std::vector<double>>& items) {
          TupleNormResult r = dual_norm(parse_class(inner), make_seq(space, items));
          py::dict out;
          out["value"] = r.value;
          out["backend"] = r.backend;
          return out;
        },
        py::arg("inner"), py::arg("space"), py::arg("items"));

  m.def("tail_trace",
        [](const std::string& cls, const py::dict& family, int horizon) {
          TailTrace t = u_tail_trace(parse_class(cls), make_family(family), horizon);
          py::dict out;
          out["entries"] = t.entries;
          out["verdict"] = t.verdict;
          return out;
        },
        py::arg("cls"), py::arg("family"), py::arg("horizon"),
        "Tail-norm trace n -> ||(x_n, ..., x_N)|| with a decay verdict.");

  m.def("check",
        [](const std::string& property, const std::vector<std::string>& classes, int samples,
           std::uint64_t seed) {
          std::vector<SeqClassSpec> specs;
          for (const std::string& c : classes) specs.push_back(parse_class(c));
          SamplerConfig cfg;
          cfg.samples = samples;
          cfg.seed = seed;
          PropertyReport rep = run_checker(property, specs, cfg);
          py::dict out;
          out["property"] = rep.property;
          out["verdict"] = rep.verdict();
          out["counterexample"] = rep.counterexample;
          out["samples"] = rep.samples_tested;
          out["text"] = rep.to_text();
          if (rep.counterexample) out["payload"] = rep.payload.dump();
          return out;
        },
        py::arg("property"), py::arg("classes"), py::arg("samples") = 1000,
        py::arg("seed") = 1,
        "Run a property falsifier; verdict is 'counterexample' or "
        "'no-counterexample' (bounded search, not a proof).");

  m.def("summing_ratio",
        [](const py::dict& op, const std::vector<std::string>& xs, const std::string& y,
           const std::vector<std::vector<std::vector<double>>>& witnesses, int k) {
          MultilinearOp a = op_from_json(nlohmann::json::parse(op["json"].cast<std::string>()));
          std::vector<SeqClassSpec> xspecs;
          for (const std::string& c : xs) xspecs.push_back(parse_class(c));
          std::vector<FiniteSeq> ws;
          for (std::size_t i = 0; i < witnesses.size(); ++i)
            ws.push_back(make_seq(a.domains()[i].str(), witnesses[i]));
          return summing_ratio(a, xspecs, parse_class(y), ws, k);
        },
        py::arg("op"), py::arg("xs"), py::arg("y"), py::arg("witnesses"), py::arg("k"),
        "Prefix ratio rho_k; op is {'json': <operator JSON text>}.");

  m.def("divergence_probe",
        [](const py::dict& op, const std::vector<std::string>& xs, const std::string& y,
           const std::vector<py::dict>& families, int k_max) {
          MultilinearOp a = op_from_json(nlohmann::json::parse(op["json"].cast<std::string>()));
          std::vector<SeqClassSpec> xspecs;
          for (const std::string& c : xs) xspecs.push_back(parse_class(c));
          std::vector<SeqFamily> fams;
          for (const py::dict& f : families) fams.push_back(make_family(f));
          ProbeTrace t = divergence_probe(a, xspecs, parse_class(y), fams, k_max);
          py::dict out;
          py::list entries;
          for (const ProbeEntry& e : t.entries) {
            py::dict row;
            row["k"] = e.k;
            row["rho"] = e.rho;
            row["slot_norms"] = e.slot_norms;
            entries.append(row);
          }
          out["entries"] = entries;
          out["verdict"] = t.verdict;
          return out;
        },
        py::arg("op"), py::arg("xs"), py::arg("y"), py::arg("families"), py::arg("k_max"));

  m.def("repro",
        [](const std::string& id, std::uint64_t seed, const std::string& out_dir, int kmax) {
          ReproOptions opts;
          opts.seed = seed;
          opts.out_dir = out_dir;
          opts.kmax = kmax;
          py::list out;
          for (const CaseResult& r : run_repro(id, opts)) {
            py::dict row;
            row["id"] = r.id;
            row["pass"] = r.pass;
            row["summary"] = r.summary;
            row["csv_paths"] = r.csv_paths;
            out.append(row);
          }
          return out;
        },
        py::arg("id"), py::arg("seed") = 7, py::arg("out_dir") = ".", py::arg("kmax") = 4096,
        "Run a reproduction case (or 'all'); writes <id>.csv under out_dir.");

  m.def("repro_ids", [] { return repro_ids(); });
}
