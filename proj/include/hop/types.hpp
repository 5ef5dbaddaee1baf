#pragma once

#include <memory>
#include <string>
#include <vector>

namespace hop {

/// Simple types over the two base types: `i` (individuals) and `o` (truth
/// values). Immutable; copies share structure.
class Type {
public:
  enum class Kind { Iota, Omicron, Arrow };

  static Type iota();
  static Type omicron();
  static Type arrow(Type argument, Type result);
  /// rho_1 -> ... -> rho_n -> result
  static Type arrows(const std::vector<Type> &arguments, Type result);

  Kind kind() const;
  bool is_iota() const { return kind() == Kind::Iota; }
  bool is_omicron() const { return kind() == Kind::Omicron; }
  bool is_arrow() const { return kind() == Kind::Arrow; }

  /// Precondition: is_arrow().
  const Type &argument() const;
  const Type &result() const;

  /// sigma := i | i -> sigma
  bool is_functional() const;
  /// pi := o | rho -> pi
  bool is_predicate() const;
  /// rho := i | pi
  bool is_argument() const;

  /// Argument types of the arrow chain; empty for base types.
  std::vector<Type> arguments() const;
  /// Final codomain of the arrow chain.
  Type codomain() const;
  std::size_t arity() const;

  /// `*this` has the form rho_1 -> ... -> rho_n -> other, n >= 0.
  bool is_greater_or_equal(const Type &other) const;
  /// Every type obtained by stripping leading arguments, starting with *this.
  std::vector<Type> suffixes() const;

  std::string to_string() const;

  friend bool operator==(const Type &a, const Type &b);
  friend bool operator!=(const Type &a, const Type &b) { return !(a == b); }
  /// Structural total order, used for deterministic containers.
  friend bool operator<(const Type &a, const Type &b);

private:
  struct Node;
  // Empty handles only exist transiently inside Node for base types.
  Type() = default;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Type::Node {
  Kind kind;
  Type argument;
  Type result;
};

inline Type::Kind Type::kind() const { return node_->kind; }
inline const Type &Type::argument() const { return node_->argument; }
inline const Type &Type::result() const { return node_->result; }

} // namespace hop
