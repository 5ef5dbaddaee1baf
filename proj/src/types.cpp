#include "hop/types.hpp"

namespace hop {

Type Type::iota() {
  static const Type t(std::make_shared<const Node>(Node{Kind::Iota, {}, {}}));
  return t;
}

Type Type::omicron() {
  static const Type t(
      std::make_shared<const Node>(Node{Kind::Omicron, {}, {}}));
  return t;
}

Type Type::arrow(Type argument, Type result) {
  return Type(std::make_shared<const Node>(
      Node{Kind::Arrow, std::move(argument), std::move(result)}));
}

Type Type::arrows(const std::vector<Type> &arguments, Type result) {
  for (auto it = arguments.rbegin(); it != arguments.rend(); ++it)
    result = arrow(*it, std::move(result));
  return result;
}

bool Type::is_functional() const {
  if (is_iota())
    return true;
  return is_arrow() && argument().is_iota() && result().is_functional();
}

bool Type::is_predicate() const {
  if (is_omicron())
    return true;
  return is_arrow() && argument().is_argument() && result().is_predicate();
}

bool Type::is_argument() const { return is_iota() || is_predicate(); }

std::vector<Type> Type::arguments() const {
  std::vector<Type> out;
  for (const Type *t = this; t->is_arrow(); t = &t->result())
    out.push_back(t->argument());
  return out;
}

Type Type::codomain() const {
  const Type *t = this;
  while (t->is_arrow())
    t = &t->result();
  return *t;
}

std::size_t Type::arity() const {
  std::size_t n = 0;
  for (const Type *t = this; t->is_arrow(); t = &t->result())
    ++n;
  return n;
}

bool Type::is_greater_or_equal(const Type &other) const {
  for (const Type *t = this;; t = &t->result()) {
    if (*t == other)
      return true;
    if (!t->is_arrow())
      return false;
  }
}

std::vector<Type> Type::suffixes() const {
  std::vector<Type> out{*this};
  while (out.back().is_arrow())
    out.push_back(out.back().result());
  return out;
}

std::string Type::to_string() const {
  switch (kind()) {
  case Kind::Iota:
    return "i";
  case Kind::Omicron:
    return "o";
  case Kind::Arrow: {
    std::string lhs = argument().to_string();
    if (argument().is_arrow())
      lhs = "(" + lhs + ")";
    return lhs + " -> " + result().to_string();
  }
  }
  return "?";
}

bool operator==(const Type &a, const Type &b) {
  if (a.node_ == b.node_)
    return true;
  if (a.kind() != b.kind())
    return false;
  if (!a.is_arrow())
    return true;
  return a.argument() == b.argument() && a.result() == b.result();
}

bool operator<(const Type &a, const Type &b) {
  if (a.node_ == b.node_)
    return false;
  if (a.kind() != b.kind())
    return a.kind() < b.kind();
  if (!a.is_arrow())
    return false;
  if (a.argument() != b.argument())
    return a.argument() < b.argument();
  return a.result() < b.result();
}

} // namespace hop
