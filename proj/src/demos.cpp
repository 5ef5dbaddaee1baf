#include "hop/demos.hpp"

#include "hop/error.hpp"

namespace hop {

const std::vector<DemoProgram> &demo_programs() {
  static const std::vector<DemoProgram> programs = {
      {"nonext",
       "a program whose well-founded model is not extensional",
       R"(type s : (o -> o) -> o.
type p : o -> o.
type q : o -> o.
type w : o -> o.

s Q <- Q (s Q).
p R <- R.
q R <- ~(w R).
w R <- ~R.
)"},
      {"positive", "a positive higher-order program",
       R"(type q : i -> o.
type p : (i -> o) -> o.
type id : (i -> o) -> i -> o.

q a.
q b.
p Q <- Q a.
id R X <- R X.
)"},
      {"stratified", "stratified through a predicate variable",
       R"(type p : (i -> o) -> o.
type q : i -> o.

p Q <- ~(Q a).
q X <- X = a.
)"},
      {"unstratified",
       "not stratified: q's type is above Q's, closing a negative cycle",
       R"(type p : (i -> o) -> o.
type q : i -> i -> o.

p Q <- ~(Q a).
q X Y <- X = a, Y = a, p (q a).
)"},
      {"subset", "subset over unary predicates",
       R"(type subset : (i -> o) -> (i -> o) -> o.
type nonsubset : (i -> o) -> (i -> o) -> o.
type p : i -> o.
type q : i -> o.

subset S1 S2 <- ~(nonsubset S1 S2).
nonsubset S1 S2 <- S1 X, ~(S2 X).

p a.
q a.
q b.
)"},
      {"winnow", "best tuples of a relation under a preference",
       R"(type winnow : (i -> i -> o) -> (i -> o) -> i -> o.
type bypassed : (i -> i -> o) -> (i -> o) -> i -> o.
type movie : i -> o.
type prefer : i -> i -> o.

winnow P R T <- R T, ~(bypassed P R T).
bypassed P R T <- R T1, P T1 T.

movie heat.
movie ronin.
movie tenet.
prefer heat ronin.
prefer heat tenet.
prefer tenet ronin.
)"},
  };
  return programs;
}

const DemoProgram &demo_program(std::string_view name) {
  for (const DemoProgram &d : demo_programs())
    if (d.name == name)
      return d;
  throw Error(ErrorKind::Usage, "unknown demo '" + std::string(name) + "'");
}

} // namespace hop
