#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "torsionlab/pattern.hpp"

namespace torsionlab::dsl {

struct SourceLoc {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Argument of a query or check: an ideal expression or a polynomial.
using Arg = std::variant<IdealExpr, PolyPattern>;

/// `KIND(arg; arg) [degree D] [cap C] [for binders] [if guard]`.
struct Call {
  std::string kind;
  std::vector<Arg> args;
  std::optional<std::int64_t> degree;
  std::optional<std::int64_t> cap;
  Quantifier quant;

  friend bool operator==(const Call&, const Call&) = default;
};

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const Range&, const Range&) = default;
};

struct ScheduleStmt {
  std::string family;
  Range levels;
  std::optional<std::int64_t> window;
  friend bool operator==(const ScheduleStmt&, const ScheduleStmt&) = default;
};

struct QueryStmt {
  Call call;
  friend bool operator==(const QueryStmt&, const QueryStmt&) = default;
};

struct CheckStmt {
  Call call;
  friend bool operator==(const CheckStmt&, const CheckStmt&) = default;
};

struct StableStmt {
  std::string family;
  Call claim;
  friend bool operator==(const StableStmt&, const StableStmt&) = default;
};

struct RunExampleStmt {
  std::string tag;
  std::optional<Range> levels;
  std::optional<std::int64_t> window;
  friend bool operator==(const RunExampleStmt&, const RunExampleStmt&) = default;
};

struct HarnessStmt {
  std::int64_t instances = 500;
  std::optional<std::int64_t> seed;
  friend bool operator==(const HarnessStmt&, const HarnessStmt&) = default;
};

using StatementNode = std::variant<LetDef, RingPattern, IdealDef, FamilySpec, ScheduleStmt, QueryStmt, CheckStmt,
                                   StableStmt, RunExampleStmt, HarnessStmt>;

struct Statement {
  StatementNode node;
  SourceLoc loc;

  /// Locations are not part of the syntax tree identity.
  friend bool operator==(const Statement& a, const Statement& b) { return a.node == b.node; }
};

struct Script {
  std::vector<Statement> statements;
  friend bool operator==(const Script&, const Script&) = default;
};

}  // namespace torsionlab::dsl
