#include "support.hpp"

#include "hop/parser.hpp"
#include "hop/typecheck.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace hoptest {

using hop::Type;

namespace {

struct Named {
  std::string name;
  Type type;
};

struct Piece {
  std::string text;
  bool compound = false;
};

std::string operand(const Piece &p) {
  return p.compound ? "(" + p.text + ")" : p.text;
}

// Arguments that turn `t` into `target` by application, if any.
std::optional<std::vector<Type>> args_to(const Type &t, const Type &target) {
  std::vector<Type> args;
  Type cur = t;
  while (cur != target) {
    if (!cur.is_arrow())
      return std::nullopt;
    args.push_back(cur.argument());
    cur = cur.result();
  }
  return args;
}

struct ProgramGen {
  Rng &rng;
  bool functions;
  std::vector<Named> preds;
  std::vector<std::string> consts = {"a", "b", "c"};

  std::optional<Piece> term(const Type &ty, int budget,
                            const std::vector<Named> &env) {
    if (budget <= 0)
      return std::nullopt;
    if (ty.is_iota()) {
      std::vector<std::string> leaves = consts;
      for (const Named &v : env)
        if (v.type.is_iota())
          leaves.push_back(v.name);
      if (functions && budget >= 2 && rng.chance(0.2)) {
        auto arg = term(ty, budget - 1, env);
        if (arg)
          return Piece{"f " + operand(*arg), true};
      }
      return Piece{rng.pick(leaves), false};
    }
    std::vector<std::pair<std::string, std::vector<Type>>> heads;
    for (const std::vector<Named> *pool :
         std::initializer_list<const std::vector<Named> *>{&preds, &env})
      for (const Named &n : *pool) {
        if (n.type.is_iota())
          continue;
        auto args = args_to(n.type, ty);
        if (args && static_cast<int>(args->size()) < budget)
          heads.emplace_back(n.name, *args);
      }
    if (heads.empty())
      return std::nullopt;
    for (int attempt = 0; attempt < 4; ++attempt) {
      const auto &[name, args] = heads[rng.below(heads.size())];
      std::string text = name;
      bool ok = true;
      for (const Type &a : args) {
        auto sub = term(a, budget - 1, env);
        if (!sub) {
          ok = false;
          break;
        }
        text += " " + operand(*sub);
      }
      if (ok)
        return Piece{text, !args.empty()};
    }
    return std::nullopt;
  }

  std::optional<std::string> literal(const std::vector<Named> &env) {
    double r = static_cast<double>(rng.below(100)) / 100.0;
    if (r < 0.2) {
      auto l = term(Type::iota(), 2, env), rr = term(Type::iota(), 2, env);
      return l->text + " = " + rr->text;
    }
    auto atom = term(Type::omicron(), 3, env);
    if (!atom)
      return std::nullopt;
    if (r < 0.5) {
      if (atom->compound && rng.chance(0.5))
        return "~" + atom->text;
      return "~" + operand(*atom);
    }
    if (rng.chance(0.1))
      return "(" + atom->text + ")";
    return atom->text;
  }

  std::string clause(const Named &head) {
    std::vector<Named> env;
    std::string text = head.name;
    int ix = 0;
    for (const Type &a : head.type.arguments()) {
      ++ix;
      if (a.is_iota() && rng.chance(0.15)) {
        // Exercises head desugaring: a constant or a repeated variable.
        std::vector<std::string> opts = consts;
        for (const Named &v : env)
          if (v.type.is_iota())
            opts.push_back(v.name);
        text += " " + rng.pick(opts);
        continue;
      }
      std::string name = (a.is_iota() ? "X" : "Q") + std::to_string(ix);
      env.push_back({name, a});
      text += " " + name;
    }
    env.push_back({"Y1", Type::iota()});
    env.push_back({"Y2", Type::iota()});
    std::size_t n = rng.below(4);
    std::vector<std::string> body;
    for (std::size_t k = 0; k < n; ++k)
      if (auto l = literal(env))
        body.push_back(*l);
    if (!body.empty()) {
      text += rng.chance(0.5) ? " <- " : "\n  <- ";
      for (std::size_t k = 0; k < body.size(); ++k)
        text += (k ? ", " : "") + body[k];
    } else if (rng.chance(0.1)) {
      text += " <-";
    }
    return text + ".";
  }
};

const std::vector<std::string> &type_pool() {
  static const std::vector<std::string> pool = {
      "o",           "i -> o",          "i -> i -> o",     "(i -> o) -> o",
      "(i -> o) -> i -> o", "o -> o", "(o -> o) -> o", "i -> (i -> o) -> o"};
  return pool;
}

} // namespace

std::string random_program(Rng &rng, bool function_symbols) {
  ProgramGen g{rng, function_symbols, {}};
  std::ostringstream out;
  std::size_t npred = 2 + rng.below(5);
  for (std::size_t k = 0; k < npred; ++k) {
    std::string ty = rng.pick(type_pool());
    std::string name = "p" + std::to_string(k);
    g.preds.push_back({name, hop::parse_type(ty)});
    out << "type " << name << " : " << ty << ".\n";
  }
  if (function_symbols)
    out << "type f : i -> i.\n";
  if (rng.chance(0.5))
    out << "type a : i.\n";
  if (rng.chance(0.2))
    out << "% comment line\n";
  std::size_t nclause = rng.below(7);
  for (std::size_t k = 0; k < nclause; ++k)
    out << g.clause(rng.pick(g.preds)) << "\n";
  return out.str();
}

std::string random_stratified_program(Rng &rng) {
  struct Pred {
    std::string name;
    int arity; // 0, 1 or 2 individual arguments
    int stratum;
  };
  std::vector<Pred> preds;
  std::ostringstream out;
  out << "type a : i.\ntype b : i.\n";
  std::size_t n = 2 + rng.below(4);
  for (std::size_t k = 0; k < n; ++k) {
    int arity = static_cast<int>(rng.below(3));
    // i -> o and i -> i -> o predicates stay below a negating higher-order
    // predicate at stratum 3.
    int stratum = 1 + static_cast<int>(rng.below(arity == 0 ? 3 : 2));
    preds.push_back({"r" + std::to_string(k), arity, stratum});
    static const char *types[] = {"o", "i -> o", "i -> i -> o"};
    out << "type r" << k << " : " << types[arity] << ".\n";
  }
  bool h2 = rng.chance(0.6), h3 = rng.chance(0.6);
  if (h2)
    out << "type h2 : (i -> o) -> i -> o.\n";
  if (h3)
    out << "type h3 : (i -> o) -> o.\n";

  std::vector<std::string> unary; // closed i -> o terms
  for (const Pred &p : preds) {
    if (p.arity == 1)
      unary.push_back(p.name);
    if (p.arity == 2)
      unary.push_back("(" + p.name + " " + (rng.chance(0.5) ? "a" : "b") +
                      ")");
  }

  auto ind = [&](const std::vector<std::string> &vars) {
    std::vector<std::string> opts = {"a", "b"};
    opts.insert(opts.end(), vars.begin(), vars.end());
    return rng.pick(opts);
  };
  auto atom_of = [&](const Pred &p, const std::vector<std::string> &vars) {
    std::string t = p.name;
    for (int k = 0; k < p.arity; ++k)
      t += " " + ind(vars);
    return t;
  };
  auto body_literal = [&](int stratum,
                          const std::vector<std::string> &vars) -> std::string {
    for (int attempt = 0; attempt < 8; ++attempt) {
      std::size_t r = rng.below(10);
      if (r == 0)
        return ind(vars) + " = " + ind(vars);
      if (r == 1 && h2 && stratum >= 2 && !unary.empty())
        return "h2 " + rng.pick(unary) + " " + ind(vars);
      if (r == 2 && h2 && stratum >= 3 && !unary.empty())
        return "~(h2 " + rng.pick(unary) + " " + ind(vars) + ")";
      if (r == 3 && h3 && stratum >= 3 && !unary.empty())
        return "h3 " + rng.pick(unary);
      const Pred &q = rng.pick(preds);
      bool neg = r >= 7;
      if (neg && q.stratum < stratum) {
        std::string a = atom_of(q, vars);
        return q.arity ? "~(" + a + ")" : "~" + a;
      }
      if (!neg && q.stratum <= stratum)
        return atom_of(q, vars);
    }
    return ind(vars) + " = " + ind(vars);
  };

  for (const Pred &p : preds) {
    if (p.arity > 0)
      out << p.name << (p.arity >= 1 ? " a" : "") << (p.arity == 2 ? " b" : "")
          << ".\n";
    std::size_t rules = rng.below(3);
    for (std::size_t k = 0; k < rules; ++k) {
      std::vector<std::string> vars = {"Z"};
      std::string head = p.name;
      for (int v = 0; v < p.arity; ++v) {
        std::string name = "X" + std::to_string(v + 1);
        head += " " + name;
        vars.push_back(name);
      }
      std::size_t len = 1 + rng.below(3);
      out << head << " <- ";
      for (std::size_t l = 0; l < len; ++l)
        out << (l ? ", " : "") << body_literal(p.stratum, vars);
      out << ".\n";
    }
  }
  if (h2) {
    out << "h2 Q X <- Q X";
    if (rng.chance(0.5))
      out << ", " << body_literal(2, {"X", "Z"});
    out << ".\n";
  }
  if (h3) {
    out << (rng.chance(0.5) ? "h3 Q <- ~(Q a).\n" : "h3 Q <- Q Z, ~(Q b).\n");
    if (rng.chance(0.5))
      out << "h3 Q <- " << body_literal(3, {"Z"}) << ".\n";
  }
  return out.str();
}

std::string random_propositional_program(Rng &rng, std::size_t atoms,
                                         std::size_t clauses) {
  std::ostringstream out;
  for (std::size_t k = 0; k < atoms; ++k)
    out << "type p" << k << " : o.\n";
  for (std::size_t c = 0; c < clauses; ++c) {
    out << "p" << rng.below(atoms);
    std::size_t len = rng.below(4);
    for (std::size_t l = 0; l < len; ++l) {
      out << (l ? ", " : " <- ");
      if (rng.chance(0.4))
        out << "~";
      out << "p" << rng.below(atoms);
    }
    out << ".\n";
  }
  return out.str();
}

std::string random_noise(Rng &rng) {
  static const std::vector<std::string> tokens = {
      "type", ":", "->", "(", ")", "<-", ",", ".", "~", "=", "i", "o", "p",
      "q",    "Q", "X",  "a", "%", "\n", " ", "_", "'", "s", "0", "(((",
      ")))",  "<", "-",  "\t"};
  std::string s;
  std::size_t len = rng.below(60);
  for (std::size_t k = 0; k < len; ++k) {
    if (rng.chance(0.1))
      s += static_cast<char>(rng.below(256));
    else
      s += rng.pick(tokens) + (rng.chance(0.5) ? " " : "");
  }
  return s;
}

std::string mutate(Rng &rng, const std::string &text) {
  static const std::vector<std::string> inserts = {
      "(", ")", "~", "<-", ".", ",", "=", "->", "type", "Q", "a", "\xff", "%"};
  std::string s = text;
  std::size_t ops = 1 + rng.below(3);
  for (std::size_t k = 0; k < ops; ++k) {
    std::size_t at = s.empty() ? 0 : rng.below(s.size() + 1);
    switch (rng.below(4)) {
    case 0:
      if (!s.empty() && at < s.size())
        s.erase(at, 1 + rng.below(std::min<std::size_t>(8, s.size() - at)));
      break;
    case 1:
      s.insert(at, rng.pick(inserts));
      break;
    case 2:
      if (at < s.size())
        s.insert(at, s.substr(at, 1 + rng.below(10)));
      break;
    default:
      if (s.size() > 1) {
        std::size_t b = rng.below(s.size());
        std::swap(s[at % s.size()], s[b]);
      }
    }
  }
  return s;
}

std::vector<std::string> brute_force_terms(const hop::Program &p,
                                           const Type &rho, std::size_t k) {
  // Each term is a head symbol applied to arguments; sizes add up.
  struct Gen {
    const hop::Program &p;
    std::map<std::pair<std::string, std::size_t>,
             std::vector<std::pair<Piece, std::size_t>>>
        memo;

    const std::vector<std::pair<Piece, std::size_t>> &all(const Type &ty,
                                                          std::size_t budget) {
      auto key = std::make_pair(ty.to_string(), budget);
      if (auto it = memo.find(key); it != memo.end())
        return it->second;
      std::vector<std::pair<Piece, std::size_t>> out;
      for (const auto &[name, sym] : p.signature.symbols()) {
        std::vector<Type> args;
        if (sym.kind == hop::SymbolKind::FunctionSymbol) {
          if (!ty.is_iota())
            continue;
          args = sym.type.arguments();
        } else {
          auto a = args_to(sym.type, ty);
          if (!a)
            continue;
          args = *a;
        }
        // Extend partial applications one argument at a time.
        std::vector<std::pair<std::string, std::size_t>> partial = {{name, 1}};
        for (const Type &a : args) {
          std::vector<std::pair<std::string, std::size_t>> next;
          for (const auto &[text, size] : partial) {
            if (size >= budget)
              continue;
            for (const auto &[arg, asize] : all(a, budget - size))
              next.emplace_back(text + " " + operand(arg), size + asize);
          }
          partial = std::move(next);
        }
        for (auto &[text, size] : partial)
          out.push_back({Piece{text, !args.empty()}, size});
      }
      return memo[key] = std::move(out);
    }
  } gen{p, {}};

  std::vector<std::pair<std::size_t, std::string>> sorted;
  for (const auto &[piece, size] : gen.all(rho, k))
    sorted.emplace_back(size, piece.text);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::string> out;
  for (auto &[size, text] : sorted)
    out.push_back(std::move(text));
  return out;
}

std::vector<bool> classical_least_model(const hop::GroundProgram &gp) {
  std::vector<bool> t(gp.atom_count(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (const hop::GroundClause &c : gp.clauses) {
      if (t[c.head])
        continue;
      bool fires = true;
      for (const hop::GroundLiteral &l : c.body) {
        using K = hop::GroundLiteral::Kind;
        if (l.kind == K::False || l.kind == K::Neg ||
            (l.kind == K::Pos && !t[l.atom]))
          fires = false;
      }
      if (fires) {
        t[c.head] = true;
        changed = true;
      }
    }
  }
  return t;
}

std::vector<hop::TruthValue>
reference_theta(const hop::GroundProgram &gp,
                const std::vector<hop::TruthValue> &j,
                const std::vector<hop::TruthValue> &i) {
  using hop::TruthValue;
  using K = hop::GroundLiteral::Kind;
  auto jval = [&](const hop::GroundLiteral &l) {
    switch (l.kind) {
    case K::True:
      return TruthValue::True;
    case K::False:
      return TruthValue::False;
    case K::Pos:
      return j[l.atom];
    default:
      return hop::negate(j[l.atom]);
    }
  };
  std::vector<TruthValue> out(gp.atom_count());
  for (hop::AtomId a = 0; a < gp.atom_count(); ++a) {
    if (gp.frontier[a]) {
      out[a] = TruthValue::Zero;
      continue;
    }
    bool some_true = false, all_false = true;
    for (const hop::GroundClause &c : gp.clauses) {
      if (c.head != a)
        continue;
      bool every = true, some = false;
      for (const hop::GroundLiteral &l : c.body) {
        bool pos = l.kind == K::Pos;
        if (!(jval(l) == TruthValue::True ||
              (pos && i[l.atom] == TruthValue::True)))
          every = false;
        if (jval(l) == TruthValue::False ||
            (pos && i[l.atom] == TruthValue::False))
          some = true;
      }
      some_true = some_true || every;
      all_false = all_false && some;
    }
    out[a] = some_true   ? TruthValue::True
             : all_false ? TruthValue::False
                         : TruthValue::Zero;
  }
  return out;
}

namespace {

// Least model of the reduct of gp with respect to the atom set s.
std::vector<bool> gamma(const hop::GroundProgram &gp,
                        const std::vector<bool> &s) {
  using K = hop::GroundLiteral::Kind;
  std::size_t n = gp.atom_count();
  std::vector<bool> t(n, false);
  for (bool changed = true; changed;) {
    changed = false;
    auto fire = [&](hop::AtomId head, const std::vector<hop::GroundLiteral> &b) {
      if (t[head])
        return;
      for (const hop::GroundLiteral &l : b) {
        if (l.kind == K::False || (l.kind == K::Neg && s[l.atom]) ||
            (l.kind == K::Pos && !t[l.atom]))
          return;
      }
      t[head] = true;
      changed = true;
    };
    for (const hop::GroundClause &c : gp.clauses)
      fire(c.head, c.body);
    // A frontier atom f behaves as if defined by f <- ~f.
    for (hop::AtomId a = 0; a < n; ++a)
      if (gp.frontier[a])
        fire(a, {{K::Neg, a}});
  }
  return t;
}

} // namespace

hop::PartialInterpretation alternating_fixpoint(const hop::GroundProgram &gp) {
  std::size_t n = gp.atom_count();
  std::vector<bool> under(n, false);
  std::vector<bool> over = gamma(gp, under);
  for (;;) {
    std::vector<bool> u2 = gamma(gp, over);
    std::vector<bool> o2 = gamma(gp, u2);
    if (u2 == under && o2 == over)
      break;
    under = std::move(u2);
    over = std::move(o2);
  }
  hop::PartialInterpretation m(gp.atoms);
  for (hop::AtomId a = 0; a < n; ++a)
    m.set(a, under[a]  ? hop::TruthValue::True
             : !over[a] ? hop::TruthValue::False
                        : hop::TruthValue::Zero);
  return m;
}

hop::PartialInterpretation
iterated_least_model(const hop::GroundProgram &gp,
                     const std::vector<std::size_t> &stratum) {
  using K = hop::GroundLiteral::Kind;
  std::size_t n = gp.atom_count();
  std::vector<bool> t(n, false);
  std::size_t top = 0;
  for (std::size_t s : stratum)
    top = std::max(top, s);
  for (std::size_t s = 1; s <= top; ++s) {
    for (bool changed = true; changed;) {
      changed = false;
      for (const hop::GroundClause &c : gp.clauses) {
        if (stratum[c.head] != s || t[c.head])
          continue;
        bool fires = true;
        for (const hop::GroundLiteral &l : c.body)
          if (l.kind == K::False || (l.kind == K::Neg && t[l.atom]) ||
              (l.kind == K::Pos && !t[l.atom]))
            fires = false;
        if (fires) {
          t[c.head] = true;
          changed = true;
        }
      }
    }
  }
  hop::PartialInterpretation m(gp.atoms);
  for (hop::AtomId a = 0; a < n; ++a)
    m.set(a, t[a] ? hop::TruthValue::True : hop::TruthValue::False);
  return m;
}

std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (const auto &e : std::filesystem::directory_iterator(HOP_CORPUS_DIR))
    if (e.path().extension() == ".hop")
      out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CorpusCase load_case(const std::string &path) {
  std::string text = read_file(path);
  CorpusCase c{std::filesystem::path(path).stem().string(),
               hop::load_program(text)};
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("% depth:", 0) == 0)
      c.depth = std::stoul(line.substr(8));
    if (line.rfind("% roots:", 0) == 0) {
      std::istringstream items(line.substr(8));
      for (std::string item; std::getline(items, item, ',');) {
        auto b = item.find_first_not_of(' ');
        auto e = item.find_last_not_of(' ');
        c.roots.push_back(item.substr(b, e - b + 1));
      }
    }
  }
  if (c.roots.empty()) {
    c.ground = hop::ground_instantiation(c.program, c.depth);
  } else {
    std::vector<hop::Expr> roots;
    for (const std::string &r : c.roots)
      roots.push_back(hop::parse_ground_atom(r, c.program.signature));
    c.ground = hop::relevant_grounding(c.program, roots, c.depth);
  }
  return c;
}

std::vector<CorpusCase> load_corpus() {
  std::vector<CorpusCase> out;
  for (const std::string &f : corpus_files())
    out.push_back(load_case(f));
  return out;
}

} // namespace hoptest
