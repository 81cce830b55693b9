#include <gtest/gtest.h>

#include "support.hpp"

using namespace torsionlab;

namespace {

dsl::ExecResult run(const std::string& source) { return dsl::execute(dsl::parse(source)); }

const Json& statement(const dsl::ExecResult& r, std::size_t k) { return r.report.at("statements").at(k); }

}  // namespace

TEST(Lexer, TokensAndComments) {
  auto toks = dsl::tokenize("ideal a = < X[0]^2 > # trailing\nquery radical(a)");
  ASSERT_FALSE(toks.empty());
  EXPECT_EQ(toks.front().text, "ideal");
  EXPECT_EQ(toks.back().kind, dsl::TokenKind::End);
  EXPECT_THROW(dsl::tokenize("ideal a = $"), dsl::SyntaxError);
}

TEST(Parser, EmptyInput) {
  EXPECT_TRUE(dsl::parse("").statements.empty());
  EXPECT_TRUE(dsl::parse("  # only a comment\n").statements.empty());
}

TEST(Parser, UnexpectedEndReportsExpectations) {
  try {
    dsl::parse("ideal a = <");
    FAIL();
  } catch (const dsl::SyntaxError& e) {
    EXPECT_EQ(e.loc().line, 1u);
    EXPECT_FALSE(e.expected().empty());
    EXPECT_NE(std::string(e.what()).find("expected one of"), std::string::npos);
  }
}

TEST(Parser, ErrorPositionOnSecondLine) {
  try {
    dsl::parse("ring R = vars X[0..2]\nquery nosuch(X0)");
    FAIL();
  } catch (const dsl::SyntaxError& e) {
    EXPECT_EQ(e.loc().line, 2u);
  }
}

TEST(Parser, ShorthandNeedsDeclaredFamily) {
  EXPECT_NO_THROW(dsl::parse("ring R = vars X[0..2]\nquery normal(X1*X2)"));
  // Y1 is an ideal name, not a variable.
  auto r = run("ring R = vars X[0..2]\nquery normal(Y1)");
  EXPECT_EQ(statement(r, 1).at("error").at("kind"), "InvalidArgument");
}

TEST(Printer, CanonicalForms) {
  auto s = dsl::parse("ring R = vars X[0..3] rules { X0^2 -> 0; X[i]*X[j] -> 0 for i, j in 1..3 if i < j }\n"
                      "ideal a = < X1, X2 > ^ 2 + (< X3 > : < X0 >)\n"
                      "query normal(3*X0 - X1^2)");
  EXPECT_EQ(dsl::print(s),
            "ring R = vars X[0..3] rules { X[0]^2 -> 0; X[i]*X[j] -> 0 for i in 1..3, j in 1..3 if i < j }\n"
            "ideal a = < X[1], X[2] >^2 + (< X[3] > : < X[0] >)\n"
            "query normal(3*X[0] + -1*X[1]^2)\n");
}

TEST(Printer, RoundTripShippedScripts) {
  for (auto& name : support::shipped_scripts()) {
    auto first = dsl::parse(support::read_file(support::script_path(name)));
    auto text = dsl::print(first);
    auto second = dsl::parse(text);
    EXPECT_EQ(first, second) << name;
    EXPECT_EQ(dsl::print(second), text) << name;
  }
}

TEST(Printer, RoundTripRegistrySources) {
  for (auto& entry : example_registry()) {
    auto first = dsl::parse(entry.source);
    EXPECT_EQ(dsl::parse(dsl::print(first)), first) << entry.tag;
  }
}

TEST(Script, Nil40AFamilyMatchesRegistry) {
  auto script = dsl::parse(support::read_file(support::script_path("nil40A.tl")));
  auto fam = std::get<FamilySpec>(script.statements.front().node);
  EXPECT_EQ(fam, find_example("nil40A").family());
}

TEST(Execute, QueriesOnFairnessScript) {
  auto r = dsl::execute(dsl::parse(support::read_file(support::script_path("fairness.tl"))));
  EXPECT_EQ(r.exit_status(), 0) << r.report.dump(2);
  auto& stmts = r.report.at("statements");
  auto find = [&](const std::string& text) -> const Json& {
    for (auto& s : stmts)
      if (s.at("statement") == text) return s;
    throw std::runtime_error("missing " + text);
  };
  EXPECT_EQ(find("query gamma(a; b)").at("result").at("ideal"), "ideal(X1)");
  EXPECT_EQ(find("query normal(X[0]*X[1] + 2*X[2]^3 + -1*X[0]^2)").at("result").at("normal_form"), "X0*X1 + 2*X2^3");
}

TEST(Execute, FailingCheckSetsExitStatus) {
  auto r = run("ring R = vars X[0..1] rules { X0^2 -> 0 }\ncheck zero(X1)");
  EXPECT_EQ(r.failures, 1u);
  EXPECT_EQ(r.exit_status(), 1);
  EXPECT_EQ(statement(r, 1).at("status"), "FAIL");
}

TEST(Execute, ErrorStopsExecution) {
  auto r = run("ring R = vars X[0..1]\nquery normal(X[5])\nquery normal(X0)");
  EXPECT_EQ(r.errors, 1u);
  EXPECT_EQ(statement(r, 1).at("status"), "error");
  EXPECT_EQ(statement(r, 1).at("error").at("kind"), "VariableOutOfRange");
  EXPECT_EQ(r.report.at("statements").size(), 2u);
  EXPECT_EQ(r.report.at("summary").at("statements"), 3);
}

TEST(Execute, MismatchedRingsReported) {
  auto r = run("ring R = vars X[0..1]\nideal a = < X0 >\nring S = vars X[0..2]\nideal b = < X2 >\nquery colon(a; X2)");
  EXPECT_EQ(r.exit_status(), 1);
  EXPECT_EQ(r.report.at("statements").back().at("error").at("kind"), "RingMismatch");
}

TEST(Execute, NonConfluentRingIsAnError) {
  auto r = run("ring R = vars X[0..3] rules { X0*X1 -> X2; X0^2 -> X3 }");
  EXPECT_EQ(statement(r, 0).at("error").at("kind"), "NonConfluent");
}

TEST(Execute, UnknownExampleTag) {
  auto r = run("run example nil99Z");
  EXPECT_EQ(statement(r, 0).at("error").at("kind"), "UnknownTag");
}

TEST(Execute, Deterministic) {
  for (auto& name : support::shipped_scripts()) {
    auto script = dsl::parse(support::read_file(support::script_path(name)));
    auto one = dsl::execute(script).report;
    auto two = dsl::execute(script).report;
    EXPECT_EQ(one.dump(), two.dump()) << name;
    EXPECT_EQ(render(one, ReportFormat::Text), render(two, ReportFormat::Text)) << name;
  }
}

TEST(Report, TextRendering) {
  Json j = {{"b", 2}, {"a", {{"x", "y"}}}, {"list", {1, 2}}};
  EXPECT_EQ(render_text(j), "a:\n  x: y\nb: 2\nlist: [1, 2]\n");
}
