// Copyright 2026 The EPRQDBA Authors
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

#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eprqdba/checks.h"
#include "eprqdba/commandvec.h"
#include "eprqdba/errors.h"
#include "eprqdba/harness.h"
#include "eprqdba/registers.h"
#include "eprqdba/scenario.h"
#include "eprqdba/simulation.h"

namespace py = pybind11;

namespace eprqdba {
namespace {

py::object to_python(const nlohmann::json &j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json from_python(const py::object &o) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

ProtocolConfig make_config(int n, std::size_t m, std::uint64_t seed, double z,
                           std::size_t sd_max, bool paper_literal) {
  ProtocolConfig c;
  c.n = n;
  c.m = m;
  c.seed = seed;
  c.tolerance.z = z;
  c.tolerance.sd_max = sd_max;
  c.tolerance.paper_literal = paper_literal;
  c.validate();
  return c;
}

Scenario resolve_scenario(const py::object &scenario, int n, Bit order) {
  if (py::isinstance<py::str>(scenario)) {
    return make_scenario(scenario.cast<std::string>(), n, order);
  }
  return scenario_from_json(from_python(scenario), n);
}

py::dict verdict_dict(const CheckVerdict &v) {
  py::list conditions;
  for (const auto &c : v.conditions) {
    py::dict d;
    d["name"] = c.name;
    d["passed"] = c.passed;
    d["observed"] = c.observed;
    d["expected"] = c.expected;
    d["bound"] = c.bound;
    conditions.append(d);
  }
  py::dict out;
  out["kind"] = check_kind_name(v.kind);
  out["passed"] = v.passed;
  out["conditions"] = conditions;
  return out;
}

TolerancePolicy make_policy(double z, std::size_t sd_max, bool paper_literal) {
  TolerancePolicy p;
  p.z = z;
  p.sd_max = sd_max;
  p.paper_literal = paper_literal;
  p.validate();
  return p;
}

}  // namespace
}  // namespace eprqdba

PYBIND11_MODULE(_eprqdba, mod) {
  using namespace eprqdba;
  mod.doc() = "Simulator for detectable Byzantine agreement over EPR pairs";

  py::register_exception<ConfigError>(mod, "ConfigError", PyExc_ValueError);
  py::register_exception<ValidationError>(mod, "ValidationError", PyExc_ValueError);
  py::register_exception<UsageError>(mod, "UsageError", PyExc_ValueError);
  py::register_exception<ProtocolViolation>(mod, "ProtocolViolation", PyExc_RuntimeError);

  mod.def(
      "sample_registers",
      [](int n, std::size_t m, std::uint64_t seed) {
        return to_python(registers_to_json(sample_registers(make_config(n, m, seed, 4, 0, false))));
      },
      py::arg("n"), py::arg("m"), py::arg("seed") = 0);

  mod.def(
      "build_command_vector",
      [](const std::string &alice, int n, int i, Bit c) {
        const auto a = Register::from_string(GeneralId::commander(),
                                             static_cast<std::size_t>(n - 1), alice);
        return build_command_vector(a, i, c).to_string();
      },
      py::arg("alice"), py::arg("n"), py::arg("i"), py::arg("c"));

  mod.def(
      "positions_pair",
      [](const std::string &vector, int n, int i, Bit x, int j, Bit y) {
        const auto v = CommandVector::from_string(static_cast<std::size_t>(n - 1), vector);
        return positions_pair(v, i, x, j, y).indices();
      },
      py::arg("vector"), py::arg("n"), py::arg("i"), py::arg("x"), py::arg("j"), py::arg("y"));

  mod.def(
      "check_alice",
      [](int n, int i, Bit c, const std::string &vector, const std::string &reg, double z,
         std::size_t sd_max, bool paper_literal) {
        const auto w = static_cast<std::size_t>(n - 1);
        return verdict_dict(check_alice(i, c, CommandVector::from_string(w, vector),
                                        Register::from_string(GeneralId::lieutenant(i), w, reg),
                                        make_policy(z, sd_max, paper_literal)));
      },
      py::arg("n"), py::arg("i"), py::arg("c"), py::arg("vector"), py::arg("register"),
      py::arg("z") = 4.0, py::arg("sd_max") = 0, py::arg("paper_literal") = false);

  mod.def(
      "check_lt_with_cv",
      [](int n, int i, int j, Bit c, const std::string &vector, const std::string &own,
         double z, std::size_t sd_max, bool paper_literal) {
        const auto w = static_cast<std::size_t>(n - 1);
        return verdict_dict(check_lt_with_cv(i, j, c, CommandVector::from_string(w, vector),
                                             CommandVector::from_string(w, own),
                                             make_policy(z, sd_max, paper_literal)));
      },
      py::arg("n"), py::arg("i"), py::arg("j"), py::arg("c"), py::arg("vector"), py::arg("own"),
      py::arg("z") = 4.0, py::arg("sd_max") = 0, py::arg("paper_literal") = false);

  mod.def(
      "check_lt_with_bv",
      [](int n, int i, int j, Bit c, const std::string &vector, const std::string &reg, double z,
         std::size_t sd_max, bool paper_literal) {
        const auto w = static_cast<std::size_t>(n - 1);
        return verdict_dict(check_lt_with_bv(i, j, c, CommandVector::from_string(w, vector),
                                             Register::from_string(GeneralId::lieutenant(i), w, reg),
                                             make_policy(z, sd_max, paper_literal)));
      },
      py::arg("n"), py::arg("i"), py::arg("j"), py::arg("c"), py::arg("vector"),
      py::arg("register"), py::arg("z") = 4.0, py::arg("sd_max") = 0,
      py::arg("paper_literal") = false);

  mod.def("scenario_names", &scenario_names);

  mod.def(
      "simulate",
      [](int n, std::size_t m, std::uint64_t seed, const py::object &scenario, Bit order,
         double z, std::size_t sd_max, bool paper_literal, bool trace) {
        const auto config = make_config(n, m, seed, z, sd_max, paper_literal);
        const auto outcome = run_protocol(config, resolve_scenario(scenario, n, order));
        auto j = outcome_to_json(outcome);
        if (trace) {
          nlohmann::json records = nlohmann::json::array();
          for (const auto &r : outcome.trace.records()) {
            records.push_back(r.to_json());
          }
          j["trace"] = records;
        }
        return to_python(j);
      },
      py::arg("n") = 3, py::arg("m") = 32, py::arg("seed") = 0,
      py::arg("scenario") = py::str("all-loyal"), py::arg("order") = 0, py::arg("z") = 4.0,
      py::arg("sd_max") = 0, py::arg("paper_literal") = false, py::arg("trace") = false);

  mod.def(
      "run_experiment",
      [](const py::object &spec) {
        const auto s = experiment_from_json(from_python(spec));
        ExperimentResult res;
        {
          py::gil_scoped_release release;
          res = run_experiment(s);
        }
        return to_python(summary_to_json(res.summary));
      },
      py::arg("spec"));

  mod.def(
      "forgery_probability_exact",
      [](std::size_t m) {
        const Rational p = forgery_probability_exact(m);
        return py::make_tuple(py::int_(py::str(boost::multiprecision::numerator(p).str())),
                              py::int_(py::str(boost::multiprecision::denominator(p).str())));
      },
      py::arg("m"));

  mod.def(
      "forgery_probability_monte_carlo",
      [](std::size_t m, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
        ForgeryEstimate e;
        {
          py::gil_scoped_release release;
          e = forgery_probability_monte_carlo(m, trials, seed, threads);
        }
        return to_python(forgery_to_json({e}).at(0));
      },
      py::arg("m"), py::arg("trials") = 100000, py::arg("seed") = 0, py::arg("threads") = 0);

  mod.def(
      "oracle_check",
      [](int n, std::size_t m, std::uint64_t draws, std::uint64_t seed) {
        const auto c = oracle_check(n, m, draws, seed);
        py::list p;
        for (const auto &t : c.tests) {
          p.append(t.p_value);
        }
        py::dict out;
        out["p_values"] = p;
        out["complement_exact"] = c.complement_exact;
        out["min_p_value"] = c.min_p_value();
        return out;
      },
      py::arg("n") = 3, py::arg("m") = 4, py::arg("draws") = 100000, py::arg("seed") = 0);

  mod.def(
      "expected_accounting",
      [](int n, std::size_t m) {
        const auto acc = expected_accounting(n, m);
        py::list rounds;
        for (const auto &r : acc.rounds) {
          py::dict d;
          d["round"] = r.round;
          d["messages"] = r.messages;
          d["symbols"] = r.symbols;
          d["bits"] = r.bits;
          rounds.append(d);
        }
        return rounds;
      },
      py::arg("n"), py::arg("m"));
}
