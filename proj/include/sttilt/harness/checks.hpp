#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sttilt/harness/report.hpp"
#include "sttilt/harness/scenario.hpp"

namespace sttilt::harness {

struct Outcome {
  Status status = Status::pass;
  std::vector<std::string> witnesses;

  void fail(const std::string& w);
  void note(const std::string& w) { witnesses.push_back(w); }
  void skip(const std::string& why) {
    status = Status::skipped;
    witnesses.push_back(why);
  }
};

struct CheckSpec {
  std::string name;
  std::string suite;
  std::string statement;
  std::function<Outcome(Context&)> run;
};

/// Every check, in report order.
const std::vector<CheckSpec>& manifest();

/// Runs the checks of the scenario's suites (optionally only the named ones).
/// Exceptions inside a check become a failing or inconclusive result.
VerificationReport run_checks(Context& ctx, const std::vector<std::string>& only = {});

/// A random small module: a cyclic sub- or quotient module of a projective
/// indecomposable, sometimes plus a simple, of dimension at most max_dim.
rep::GModule random_module(const rep::GroupAlgebra& a, rep::Rng& rng, std::size_t max_dim = 8);

}  // namespace sttilt::harness
