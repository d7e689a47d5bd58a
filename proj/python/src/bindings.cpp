//
// Copyright 2026 The Herald Authors
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
//
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "herald/audit.hpp"
#include "herald/baselines.hpp"
#include "herald/error.hpp"
#include "herald/experiment.hpp"
#include "herald/fixtures.hpp"
#include "herald/instance.hpp"
#include "herald/matching.hpp"
#include "herald/oracle.hpp"
#include "herald/payment.hpp"
#include "herald/scorefn.hpp"
#include "herald/selection.hpp"

namespace py = pybind11;
using namespace herald;

PYBIND11_MODULE(_herald, m) {
  m.doc() = "Privacy-preserving reverse-auction simulator for uncertain crowd-sensing tasks";

  py::register_exception<Error>(m, "HeraldError");

  py::class_<Worker>(m, "Worker")
      .def(py::init<int, double>(), py::arg("id"), py::arg("cost"))
      .def_readwrite("id", &Worker::id)
      .def_readwrite("cost", &Worker::cost);

  py::class_<FixedMatch>(m, "FixedMatch")
      .def(py::init<int, int>(), py::arg("subset"), py::arg("worker"))
      .def_readwrite("subset", &FixedMatch::subset)
      .def_readwrite("worker", &FixedMatch::worker);

  py::class_<Instance>(m, "Instance")
      .def(py::init<>())
      .def_readwrite("n", &Instance::n)
      .def_readwrite("b_max", &Instance::b_max)
      .def_readwrite("subsets", &Instance::subsets)
      .def_readwrite("workers", &Instance::workers)
      .def_readwrite("fixed_matching", &Instance::fixed_matching)
      .def("costs", &Instance::costs)
      .def("num_workers", &Instance::num_workers)
      .def("num_subsets", &Instance::num_subsets)
      .def("to_json", [](const Instance& inst) { return instance_to_json(inst); })
      .def_static("from_json", [](const std::string& text) { return instance_from_json(text); });

  py::class_<BidProfile>(m, "BidProfile")
      .def(py::init([](std::vector<double> bids) { return BidProfile{std::move(bids)}; }))
      .def_readwrite("bids", &BidProfile::bids)
      .def_static("truthful", &BidProfile::truthful);

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("violations", &ValidationReport::violations)
      .def("ok", &ValidationReport::ok);

  py::enum_<ScoreKind>(m, "ScoreKind")
      .value("LINEAR", ScoreKind::kLinear)
      .value("LOGARITHMIC", ScoreKind::kLogarithmic);

  py::enum_<MatchMode>(m, "MatchMode")
      .value("DP_PURE", MatchMode::kDpPure)
      .value("CONSTRAINED", MatchMode::kConstrained);

  py::enum_<ExpectationMode>(m, "ExpectationMode")
      .value("EXACT_ENUM", ExpectationMode::kExactEnum)
      .value("MONTE_CARLO", ExpectationMode::kMonteCarlo);

  py::class_<MatchingDistribution>(m, "MatchingDistribution")
      .def_readonly("probs", &MatchingDistribution::probs)
      .def_readonly("epsilon", &MatchingDistribution::epsilon)
      .def_readonly("kind", &MatchingDistribution::kind);

  py::class_<MatchingPair>(m, "MatchingPair")
      .def_readonly("subset", &MatchingPair::subset)
      .def_readonly("worker", &MatchingPair::worker)
      .def_readonly("bid", &MatchingPair::bid);

  py::class_<MatchingSet>(m, "MatchingSet")
      .def_readonly("pairs", &MatchingSet::pairs)
      .def("size", &MatchingSet::size);

  py::enum_<SelectionType>(m, "SelectionType")
      .value("TYPE_I", SelectionType::kTypeI)
      .value("TYPE_II", SelectionType::kTypeII);

  py::class_<WinningPair>(m, "WinningPair")
      .def_readonly("subset", &WinningPair::subset)
      .def_readonly("worker", &WinningPair::worker)
      .def_readonly("bid", &WinningPair::bid)
      .def_readonly("selection_type", &WinningPair::selection_type)
      .def_readonly("round", &WinningPair::round)
      .def_property_readonly("incremental_coverage", [](const WinningPair& w) {
        return w.incremental_coverage.to_ids();
      });

  py::class_<WinningSet>(m, "WinningSet")
      .def_readonly("winners", &WinningSet::winners)
      .def_readonly("threshold", &WinningSet::threshold)
      .def("size", &WinningSet::size)
      .def("total_bid", &WinningSet::total_bid);

  py::class_<ReplacedSet>(m, "ReplacedSet")
      .def_readonly("pair_indices", &ReplacedSet::pair_indices)
      .def_readonly("total_bid", &ReplacedSet::total_bid);

  py::class_<PaymentContribution>(m, "PaymentContribution")
      .def_readonly("subset", &PaymentContribution::subset)
      .def_readonly("worker", &PaymentContribution::worker)
      .def_readonly("bid", &PaymentContribution::bid)
      .def_readonly("replaced", &PaymentContribution::replaced)
      .def_readonly("amount", &PaymentContribution::amount);

  py::class_<PaymentProfile>(m, "PaymentProfile")
      .def_readonly("payments", &PaymentProfile::payments)
      .def_readonly("contributions", &PaymentProfile::contributions)
      .def("total", &PaymentProfile::total);

  py::class_<UtilityProfile>(m, "UtilityProfile")
      .def_readonly("utilities", &UtilityProfile::utilities);

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("cost", &OracleResult::cost)
      .def_readonly("cover", &OracleResult::cover);

  py::class_<ExpectedCost>(m, "ExpectedCost")
      .def_readonly("value", &ExpectedCost::value)
      .def_readonly("samples", &ExpectedCost::samples)
      .def_readonly("std_error", &ExpectedCost::std_error);

  py::class_<GoldenCase>(m, "GoldenCase")
      .def_readonly("name", &GoldenCase::name)
      .def_readonly("instance", &GoldenCase::instance)
      .def_readonly("k", &GoldenCase::k)
      .def_readonly("expected_threshold", &GoldenCase::expected_threshold)
      .def_readonly("expected_winners", &GoldenCase::expected_winners)
      .def_readonly("expected_payments", &GoldenCase::expected_payments);

  py::class_<DpAuditReport>(m, "DpAuditReport")
      .def_readonly("epsilon", &DpAuditReport::epsilon)
      .def_readonly("worst_ratio", &DpAuditReport::worst_ratio)
      .def_readonly("bound_proven", &DpAuditReport::bound_proven)
      .def_readonly("bound_stated", &DpAuditReport::bound_stated)
      .def_readonly("pass_", &DpAuditReport::pass);

  py::class_<TruthAuditReport>(m, "TruthAuditReport")
      .def_readonly("worker", &TruthAuditReport::worker)
      .def_readonly("truthful_utility", &TruthAuditReport::truthful_utility)
      .def_readonly("best_deviation_utility", &TruthAuditReport::best_deviation_utility)
      .def_readonly("max_gain", &TruthAuditReport::max_gain);

  py::class_<IrReport>(m, "IrReport")
      .def_readonly("runs", &IrReport::runs)
      .def_readonly("winning_contributions", &IrReport::winning_contributions)
      .def_readonly("violations", &IrReport::violations)
      .def("pass_", &IrReport::pass);

  py::class_<RatioReport>(m, "RatioReport")
      .def_readonly("n", &RatioReport::n)
      .def_readonly("m", &RatioReport::m)
      .def_readonly("l", &RatioReport::l)
      .def_readonly("k", &RatioReport::k)
      .def_readonly("seeds", &RatioReport::seeds)
      .def_readonly("mean_mechanism_cost", &RatioReport::mean_mechanism_cost)
      .def_readonly("mean_opt_cost", &RatioReport::mean_opt_cost)
      .def_readonly("mean_ratio", &RatioReport::mean_ratio)
      .def_readonly("ceiling", &RatioReport::ceiling)
      .def_readonly("pass_", &RatioReport::pass);

  m.def("validate_instance", &validate_instance, py::arg("instance"));
  m.def(
      "generate_instance",
      [](int n, int m, int l, double cost_lo, double cost_hi, int size_lo, int size_hi,
         double b_max, std::uint64_t seed) {
        return generate_instance(InstanceConfig{n, m, l, {cost_lo, cost_hi}, {size_lo, size_hi}, b_max},
                                 seed);
      },
      py::arg("n"), py::arg("m"), py::arg("l"), py::arg("cost_lo"), py::arg("cost_hi"),
      py::arg("size_lo"), py::arg("size_hi"), py::arg("b_max"), py::arg("seed"));
  m.def("load_instance_file", &load_instance_file, py::arg("path"));
  m.def("save_instance_file", &save_instance_file, py::arg("instance"), py::arg("path"));

  m.def("sensitivity", &sensitivity, py::arg("kind"), py::arg("b_max"));
  m.def("matching_probabilities", &matching_probabilities, py::arg("bids"), py::arg("kind"),
        py::arg("epsilon"), py::arg("b_max"));

  m.def("match", &match, py::arg("instance"), py::arg("bids"), py::arg("dist"), py::arg("seed"),
        py::arg("mode") = MatchMode::kDpPure);
  m.def("matching_from_fixed", &matching_from_fixed, py::arg("instance"), py::arg("bids"));
  m.def("outcome_probability", &outcome_probability, py::arg("outcome"), py::arg("dist"));

  m.def(
      "min_cover_cost",
      [](const Instance& inst, const MatchingSet& p, const std::vector<int>& tasks) {
        return min_cover_cost(inst, p, tasks);
      },
      py::arg("instance"), py::arg("matching"), py::arg("tasks"));
  m.def(
      "brute_force_min_cover",
      [](const Instance& inst, const MatchingSet& p, const std::vector<int>& tasks) {
        return brute_force_min_cover(inst, p, tasks);
      },
      py::arg("instance"), py::arg("matching"), py::arg("tasks"));
  m.def(
      "expected_opt_cost",
      [](const Instance& inst, const MatchingSet& p, int k, ExpectationMode mode,
         std::int64_t samples, std::uint64_t seed) {
        return expected_opt_cost(inst, p, ArrivalModel{k}, mode, samples, seed);
      },
      py::arg("instance"), py::arg("matching"), py::arg("k"),
      py::arg("mode") = ExpectationMode::kExactEnum, py::arg("samples") = 10000,
      py::arg("seed") = 0);

  m.def(
      "selection_threshold",
      [](const Instance& inst, const MatchingSet& p, int k, ExpectationMode mode,
         std::int64_t samples, std::uint64_t seed) {
        return selection_threshold(inst, p, ArrivalModel{k}, mode, samples, seed);
      },
      py::arg("instance"), py::arg("matching"), py::arg("k"),
      py::arg("mode") = ExpectationMode::kExactEnum, py::arg("samples") = 10000,
      py::arg("seed") = 0);
  m.def("select_winners", &select_winners, py::arg("instance"), py::arg("matching"),
        py::arg("threshold"));
  m.def("cone_select", &cone_select, py::arg("instance"), py::arg("matching"));
  m.def("cosy_select", &cosy_select, py::arg("instance"), py::arg("matching"));

  m.def("replaced_set", &replaced_set, py::arg("instance"), py::arg("matching"),
        py::arg("winner_subset"), py::arg("winner_worker"));
  m.def("determine_payments", &determine_payments, py::arg("instance"), py::arg("matching"),
        py::arg("winning_set"));
  m.def("utilities", &utilities, py::arg("payments"), py::arg("instance"), py::arg("winning_set"));

  m.def("dp_exact_audit", &dp_exact_audit, py::arg("instance"), py::arg("kind"),
        py::arg("epsilon"), py::arg("grid") = 4, py::arg("seed") = 7);
  m.def(
      "truthfulness_audit",
      [](const Instance& inst, const MatchingSet& p, int worker, int grid, int k) {
        return truthfulness_audit(inst, p, worker, grid, ArrivalModel{k});
      },
      py::arg("instance"), py::arg("matching"), py::arg("worker"), py::arg("grid") = 50,
      py::arg("k") = 1);
  m.def("expected_attributed_cost", &expected_attributed_cost, py::arg("instance"),
        py::arg("winning_set"), py::arg("k"));
  m.def("ratio_ceiling", &ratio_ceiling, py::arg("n"), py::arg("l"));
  m.def(
      "ir_audit",
      [](const Instance& inst, ScoreKind kind, double epsilon, int k, std::int64_t seeds,
         std::uint64_t master_seed) { return ir_audit(inst, kind, epsilon, k, seeds, master_seed); },
      py::arg("instance"), py::arg("kind") = ScoreKind::kLinear, py::arg("epsilon") = 0.1,
      py::arg("k") = 1, py::arg("seeds") = 100, py::arg("master_seed") = 1);
  m.def(
      "ratio_audit_instance",
      [](const Instance& inst, int k) { return ratio_audit_instance(inst, ArrivalModel{k}); },
      py::arg("instance"), py::arg("k") = 1);

  m.def("load_golden", &load_golden, py::arg("name"));
  m.def("golden_case_names", &golden_case_names);
}
