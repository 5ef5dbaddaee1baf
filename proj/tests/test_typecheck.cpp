#include "support.hpp"

#include "hop/typecheck.hpp"

#include <doctest.h>

using namespace hop;

namespace {

ErrorKind rejection(std::string_view text) {
  try {
    load_program(text);
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("accepted: " << text);
  return ErrorKind::Usage;
}

std::map<std::string, Type> inferred(std::string_view text) {
  SourceProgram sp = parse_program(text);
  Program p = check_program(sp);
  return infer_var_types(sp.clauses.back(), p.signature);
}

} // namespace

TEST_SUITE("typecheck") {

TEST_CASE("head arguments of predicate type must be variables") {
  CHECK(rejection("type q : i -> o.\ntype r : (i -> o) -> o.\nq a.\nr q.") ==
        ErrorKind::NonVariableHeadArgument);
  CHECK(rejection("type p : (i -> o) -> (i -> o) -> o.\np Q Q <- Q a.") ==
        ErrorKind::RepeatedHeadVariable);
}

TEST_CASE("union is accepted") {
  Program p = load_program("type union : (i -> o) -> (i -> o) -> i -> o.\n"
                           "union P Q X <- P X.\n"
                           "union P Q X <- Q X.\n");
  CHECK(p.clauses.size() == 2);
  CHECK(p.clauses_for("union").size() == 2);
}

TEST_CASE("individual head arguments are desugared") {
  Program p = load_program("type q : i -> o.\ntype e : i -> i -> o.\nq a.\ne X X.");
  REQUIRE(p.clauses.size() == 2);
  CHECK(p.clauses[0].to_string() == "q _H1 <- _H1 = a.");
  const Clause &e = p.clauses[1];
  REQUIRE(e.formals.size() == 2);
  CHECK(e.formals[0].name != e.formals[1].name);
  CHECK(e.body.size() == 1);
  CHECK(e.body[0].kind() == ExprKind::Eq);
}

TEST_CASE("variable type inference") {
  auto s = inferred("type s : (o -> o) -> o.\ns Q <- Q (s Q).");
  CHECK(s.at("Q") == parse_type("o -> o"));
  auto q = inferred("type q : i -> o.\nq X <- X = a.");
  CHECK(q.at("X") == Type::iota());
  auto w = inferred("type w : o -> o.\nw R <- ~R.");
  CHECK(w.at("R") == Type::omicron());
  auto body = inferred("type m : i -> i -> o.\ntype p : o.\np <- m X Y, ~(m Y X).");
  CHECK(body.at("X") == Type::iota());
  CHECK(body.at("Y") == Type::iota());
}

TEST_CASE("ambiguous and conflicting variables") {
  CHECK(rejection("type p : o.\np <- R X.") ==
        ErrorKind::AmbiguousVariableType);
  try {
    load_program("type p : (i -> o) -> o.\ntype q : (o -> o) -> o.\n"
                 "type t : o.\nt <- p R, q R, ~(p R).");
    FAIL("conflict accepted");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::ConflictingVariableType);
    CHECK(e.notes().size() >= 2);
    for (const Diagnostic &d : e.notes())
      CHECK(d.pos.known());
  }
}

TEST_CASE("other rejections name their rule") {
  CHECK(rejection("type p : i -> o.\np X <- p (f X).") == ErrorKind::UnboundSymbol);
  CHECK(rejection("type p : i -> o.\ntype f : i -> i -> i.\np X <- p (f X).") ==
        ErrorKind::ArityMismatch);
  CHECK(rejection("type p : i -> o.\np.") == ErrorKind::ArityMismatch);
  CHECK(rejection("type p : o.\np <- p a.") == ErrorKind::IllTypedApplication);
  CHECK(rejection("type p : o -> i.\n") == ErrorKind::InvalidDeclaration);
  CHECK(rejection("type q : i -> o.\ntype p : o.\np <- q = q.") ==
        ErrorKind::EqOfNonIndividual);
  CHECK(rejection("type q : i -> o.\np <- q.") != ErrorKind::SyntaxError);
}

TEST_CASE("undeclared nullary names default by position") {
  Program p = load_program("type q : i -> o.\nq a.\nr <- ~(q b).");
  const Symbol *a = p.signature.find("a");
  REQUIRE(a);
  CHECK(a->kind == SymbolKind::IndividualConstant);
  CHECK_FALSE(a->declared);
  const Symbol *r = p.signature.find("r");
  REQUIRE(r);
  CHECK(r->kind == SymbolKind::PredicateConstant);
  CHECK(r->type == Type::omicron());
  CHECK(rejection("type q : i -> o.\nq a.\na <- q a.") == ErrorKind::UnboundSymbol);
}

TEST_CASE("checking is idempotent") {
  hoptest::Rng rng(31);
  for (int n = 0; n < 200; ++n) {
    Program p = load_program(hoptest::random_program(rng));
    Program again = load_program(print_program(p));
    CHECK(again == p);
    CHECK(load_program(print_program(again)) == again);
  }
}

} // TEST_SUITE
