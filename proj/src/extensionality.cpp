#include "hop/extensionality.hpp"

#include "hop/perfect.hpp"
#include "hop/wfs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace hop {

std::string_view to_string(ExtResult r) {
  switch (r) {
  case ExtResult::Equal: return "equal";
  case ExtResult::NotEqual: return "not-equal";
  case ExtResult::Unknown: return "unknown";
  }
  return "?";
}

std::string verdict_text(const ExtReport &r) {
  switch (r.verdict) {
  case ExtReport::Verdict::Extensional:
    return "extensional-at-depth-" + std::to_string(r.depth);
  case ExtReport::Verdict::NonExtensional:
    return "non-extensional";
  case ExtReport::Verdict::Inconclusive:
    return "inconclusive-at-depth-" + std::to_string(r.depth);
  }
  return "?";
}

namespace {

void add_type_closure(const Type &t, std::set<Type> &out) {
  for (const Type &s : t.suffixes()) {
    if (!out.insert(s).second)
      continue;
    if (s.is_arrow())
      add_type_closure(s.argument(), out);
  }
}

bool simpler(const Type &a, const Type &b) {
  std::string x = a.to_string(), y = b.to_string();
  return x.size() != y.size() ? x.size() < y.size() : x < y;
}

} // namespace

ExtChecker::ExtChecker(const Program &program, ExtOptions options)
    : program_(program), options_(options), index_(program_, options.depth) {
  if (options_.depth < 1)
    throw Error(ErrorKind::Usage, "depth must be at least 1");
  std::set<Type> closure;
  for (const Symbol *s : program.signature.of_kind(SymbolKind::PredicateConstant))
    add_type_closure(s->type, closure);
  types_.assign(closure.begin(), closure.end());
  std::sort(types_.begin(), types_.end(), simpler);

  // Every atom the relations can consult: each universe element of a
  // predicate type applied to universe elements of its argument types.
  std::vector<Expr> roots;
  std::set<std::string> seen;
  std::size_t largest = 0;
  for (const Type &rho : types_) {
    if (!rho.is_predicate())
      continue;
    std::vector<Type> args = rho.arguments();
    std::vector<const std::vector<Expr> *> pools;
    bool empty = false;
    for (const Type &a : args) {
      pools.push_back(&universe(a));
      empty = empty || pools.back()->empty();
    }
    if (empty)
      continue;
    for (const Expr &e : universe(rho)) {
      std::vector<std::size_t> idx(args.size(), 0);
      for (;;) {
        Expr atom = e;
        for (std::size_t j = 0; j < args.size(); ++j)
          atom = Expr::app(atom, (*pools[j])[idx[j]]);
        largest = std::max(largest, atom.symbol_count());
        if (seen.insert(atom.key()).second)
          roots.push_back(atom);
        std::size_t j = args.size();
        while (j > 0 && ++idx[j - 1] == pools[j - 1]->size())
          idx[--j] = 0;
        if (j == 0)
          break;
      }
    }
  }
  for (const Expr &r : options_.extra_roots)
    if (seen.insert(r.key()).second)
      roots.push_back(r);
  std::size_t budget = options_.budget
                           ? options_.budget
                           : std::max(default_budget(options_.depth), largest);
  gp_ = relevant_grounding(program, roots, options_.depth, budget);

  if (options_.model == ModelKind::Perfect) {
    StratifyResult s = stratify(program);
    if (!s.ok())
      throw Error(ErrorKind::Usage,
                  "the perfect model is unavailable: the program is not "
                  "stratified");
    LocalStratification ls = localize(*s.stratification, gp_);
    model_ = std::make_unique<PartialInterpretation>(
        perfect_model(gp_, ls, options_.exec).model);
  } else {
    WfsOptions wo;
    wo.exec = options_.exec;
    model_ = std::make_unique<PartialInterpretation>(
        well_founded_model(gp_, wo).model);
  }
}

ExtChecker::~ExtChecker() = default;

const std::vector<Expr> &ExtChecker::universe(const Type &rho) {
  static const std::vector<Expr> none;
  if (rho.is_iota() &&
      program_.signature.of_kind(SymbolKind::IndividualConstant).empty())
    return none;
  return index_.terms(rho);
}

std::optional<TruthValue> ExtChecker::value(const Expr &atom) const {
  AtomId id;
  if (!gp_.atoms->find(atom.key(), id))
    throw Error(ErrorKind::UnknownAtom,
                "'" + atom.key() + "' is outside the demand grounding");
  if (gp_.tainted[id])
    return std::nullopt;
  return (*model_)[id];
}

const ExtChecker::Outcome &ExtChecker::compare(const Type &rho, const Expr &d,
                                               const Expr &d2) {
  auto key = std::make_tuple(rho, d.key(), d2.key());
  auto it = memo_.find(key);
  if (it != memo_.end())
    return it->second;

  Outcome out{ExtResult::Equal, {}, {}, {}, {}};
  if (rho.is_iota()) {
    out.result = d == d2 ? ExtResult::Equal : ExtResult::NotEqual;
  } else if (rho.is_omicron()) {
    auto a = value(d), b = value(d2);
    if (!a || !b)
      out.result = ExtResult::Unknown;
    else if (*a != *b)
      out = {ExtResult::NotEqual, {}, {}, d, d2};
  } else {
    const Type arg = rho.argument();
    const Type res = rho.result();
    bool unknown = false;
    const std::vector<Expr> &pool = universe(arg);
    for (const Expr &e : pool) {
      for (const Expr &e2 : pool) {
        ExtResult related = compare(arg, e, e2).result;
        if (related == ExtResult::NotEqual)
          continue;
        const Outcome &applied = compare(res, Expr::app(d, e), Expr::app(d2, e2));
        if (applied.result == ExtResult::Equal)
          continue;
        if (related == ExtResult::Equal &&
            applied.result == ExtResult::NotEqual) {
          out = {ExtResult::NotEqual, e, e2, applied.lhs, applied.rhs};
          break;
        }
        unknown = true;
      }
      if (out.result == ExtResult::NotEqual)
        break;
    }
    if (out.result != ExtResult::NotEqual && unknown)
      out.result = ExtResult::Unknown;
  }
  return memo_.emplace(std::move(key), std::move(out)).first->second;
}

ExtResult ExtChecker::equal(const Type &rho, const Expr &d, const Expr &d2) {
  if (d.type() != rho || d2.type() != rho)
    throw Error(ErrorKind::TypeMismatch,
                "'" + d.key() + "' and '" + d2.key() + "' must have type " +
                    rho.to_string());
  return compare(rho, d, d2).result;
}

bool ExtChecker::replay(ExtWitness &w) const {
  // The recorded atoms must be E applied to the pair (plus equal trailing
  // arguments), and the model must still give them the recorded values.
  auto starts_with = [](const Expr &atom, const Expr &head) {
    const Expr *cur = &atom;
    while (cur->kind() == ExprKind::App) {
      if (*cur == head)
        return true;
      cur = &cur->op();
    }
    return *cur == head;
  };
  if (!starts_with(w.lhs_atom, Expr::app(w.term, w.left)) ||
      !starts_with(w.rhs_atom, Expr::app(w.term, w.right)))
    return false;
  auto a = value(w.lhs_atom), b = value(w.rhs_atom);
  return a && b && *a == w.lhs_value && *b == w.rhs_value && *a != *b;
}

ExtReport ExtChecker::reflexivity_check() {
  ExtReport r;
  r.depth = options_.depth;
  r.atoms = gp_.atom_count();
  for (const Type &rho : types_) {
    for (const Expr &e : universe(rho)) {
      const Outcome &o = compare(rho, e, e);
      if (o.result == ExtResult::Unknown) {
        r.unknown.emplace_back(rho, e);
      } else if (o.result == ExtResult::NotEqual && rho.is_arrow()) {
        ExtWitness w{rho,       e,
                     *o.left,   *o.right,
                     *o.lhs,    *o.rhs,
                     *value(*o.lhs), *value(*o.rhs),
                     false};
        w.replayed = replay(w);
        r.witnesses.push_back(std::move(w));
      }
    }
    if (options_.relations && !rho.is_iota()) {
      const std::vector<Expr> &pool = universe(rho);
      std::vector<std::size_t> parent(pool.size());
      std::iota(parent.begin(), parent.end(), 0);
      std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
      };
      std::vector<bool> self(pool.size());
      for (std::size_t i = 0; i < pool.size(); ++i)
        self[i] = compare(rho, pool[i], pool[i]).result == ExtResult::Equal;
      for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j)
          if (self[i] && self[j] &&
              compare(rho, pool[i], pool[j]).result == ExtResult::Equal) {
            std::size_t a = find(i), b = find(j);
            if (a != b)
              parent[std::max(a, b)] = std::min(a, b);
          }
      std::map<std::size_t, std::vector<Expr>> groups;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (self[i])
          groups[find(i)].push_back(pool[i]);
      ExtClasses c{rho, {}};
      for (auto &[_, g] : groups)
        c.classes.push_back(std::move(g));
      r.relations.push_back(std::move(c));
    }
  }
  if (!r.witnesses.empty())
    r.verdict = ExtReport::Verdict::NonExtensional;
  else if (!r.unknown.empty())
    r.verdict = ExtReport::Verdict::Inconclusive;
  return r;
}

ExtReport reflexivity_check(const Program &program, const ExtOptions &options) {
  ExtChecker checker(program, options);
  return checker.reflexivity_check();
}

nlohmann::ordered_json report_json(const ExtReport &r, ModelKind model) {
  nlohmann::ordered_json j;
  j["verdict"] = verdict_text(r);
  j["depth"] = r.depth;
  j["model"] = model == ModelKind::Perfect ? "perfect" : "well-founded";
  j["atoms"] = r.atoms;
  nlohmann::ordered_json ws = nlohmann::ordered_json::array();
  for (const ExtWitness &w : r.witnesses) {
    nlohmann::ordered_json x;
    x["type"] = w.type.to_string();
    x["term"] = w.term.key();
    x["pair"] = {w.left.key(), w.right.key()};
    x["lhs"] = w.lhs_atom.key();
    x["rhs"] = w.rhs_atom.key();
    x["lhs_value"] = std::string(to_string(w.lhs_value));
    x["rhs_value"] = std::string(to_string(w.rhs_value));
    x["replayed"] = w.replayed;
    ws.push_back(std::move(x));
  }
  j["witnesses"] = std::move(ws);
  nlohmann::ordered_json unk = nlohmann::ordered_json::array();
  for (const auto &[t, e] : r.unknown)
    unk.push_back({{"type", t.to_string()}, {"term", e.key()}});
  j["unknown"] = std::move(unk);
  if (!r.relations.empty()) {
    nlohmann::ordered_json rel = nlohmann::ordered_json::array();
    for (const ExtClasses &c : r.relations) {
      nlohmann::ordered_json classes = nlohmann::ordered_json::array();
      for (const auto &g : c.classes) {
        nlohmann::ordered_json names = nlohmann::ordered_json::array();
        for (const Expr &e : g)
          names.push_back(e.key());
        classes.push_back(std::move(names));
      }
      rel.push_back({{"type", c.type.to_string()}, {"classes", classes}});
    }
    j["relations"] = std::move(rel);
  }
  return j;
}

} // namespace hop
