#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wq/cayley_table.hpp"
#include "wq/dimension.hpp"
#include "wq/word.hpp"

namespace wq {

struct ClosureOptions {
  /// Maximum number of live element classes before giving up.
  int budget = 64;
  /// Cap on saturation sweeps.
  long long max_rounds = 1'000'000;
  /// Record the derivation log (rule, instantiation) step by step.
  bool keep_trace = false;
};

struct TraceStep {
  std::string rule;
  std::string detail;
};

enum class DegeneracyReason {
  collapsed_e_equals_f,  // saturation derived e = f
  not_one_step,          // a proper subgroupoid survives, or commutativity
  inconsistent,          // fixpoint table fails an identity or the relation
};

std::string to_string(DegeneracyReason r);

struct ClosureSuccess {
  CayleyTable table;
  GeneratorContext ctx;
  /// Representative term over {e, f} for each element, in table order.
  std::vector<std::string> term_names;
  /// Dimension of the constructed model; its value equals the relation
  /// length exactly when the relation is irreducible.
  DimensionReport dim;
};

struct ClosureDegenerate {
  DegeneracyReason reason = DegeneracyReason::collapsed_e_equals_f;
  /// Order of the fixpoint table that failed verification (0 for collapse).
  int fixpoint_order = 0;
  std::string detail;
  /// The saturated table that failed the gate, for auditing.  Absent on
  /// collapse.
  std::optional<CayleyTable> fixpoint_table;
  std::optional<GeneratorContext> fixpoint_ctx;
};

struct ClosureBudgetExceeded {
  int elements_reached = 0;
  int budget = 0;
  bool rounds_exhausted = false;
};

struct ClosureOutcome {
  std::variant<std::monostate, ClosureSuccess, ClosureDegenerate,
               ClosureBudgetExceeded>
      result;
  std::vector<TraceStep> trace;

  const ClosureSuccess* success() const {
    return std::get_if<ClosureSuccess>(&result);
  }
  const ClosureDegenerate* degenerate() const {
    return std::get_if<ClosureDegenerate>(&result);
  }
  const ClosureBudgetExceeded* budget_exceeded() const {
    return std::get_if<ClosureBudgetExceeded>(&result);
  }
};

/// Builds the model forced by the defining relation e = w(f, ef) inside the
/// variety of idempotent right modular groupoids, assuming cancellativity.
///
/// The engine saturates a partial product table over hash-consed terms:
/// known identities and cancellation derive products and merge classes;
/// when nothing is derivable, the smallest undefined product becomes a
/// fresh element (breadth-first by term size).  Cancellation is only valid
/// on one-step models, so every fixpoint is re-verified from scratch: the
/// full identity battery, the one-step property, and the relation itself
/// must hold or the outcome is downgraded to Degenerate.
///
/// Requires length(w) >= 2 and budget >= 4.
ClosureOutcome construct(const Word& relation, const ClosureOptions& opts = {});

}  // namespace wq
