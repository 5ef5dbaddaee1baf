#include "hop/parser.hpp"

#include <cctype>
#include <set>

namespace hop {

namespace {

constexpr int kMaxNesting = 256;

enum class Tok {
  Name,
  LParen,
  RParen,
  Tilde,
  Equals,
  Arrow,     // <-
  TypeArrow, // ->
  Comma,
  Dot,
  Colon,
  End,
};

std::string describe(Tok t) {
  switch (t) {
  case Tok::Name: return "name";
  case Tok::LParen: return "'('";
  case Tok::RParen: return "')'";
  case Tok::Tilde: return "'~'";
  case Tok::Equals: return "'='";
  case Tok::Arrow: return "'<-'";
  case Tok::TypeArrow: return "'->'";
  case Tok::Comma: return "','";
  case Tok::Dot: return "'.'";
  case Tok::Colon: return "':'";
  case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < src.size() && src[i] != '\n')
        advance(1);
      continue;
    }
    SourcePos pos{line, col};
    auto two = [&](char a, char b) {
      return c == a && i + 1 < src.size() && src[i + 1] == b;
    };
    if (two('<', '-')) {
      out.push_back({Tok::Arrow, "<-", pos});
      advance(2);
    } else if (two('-', '>')) {
      out.push_back({Tok::TypeArrow, "->", pos});
      advance(2);
    } else if (name_char(c) && c != '\'') {
      std::size_t start = i;
      while (i < src.size() && name_char(src[i]))
        advance(1);
      out.push_back({Tok::Name, std::string(src.substr(start, i - start)), pos});
    } else {
      Tok kind;
      switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '~': kind = Tok::Tilde; break;
      case '=': kind = Tok::Equals; break;
      case ',': kind = Tok::Comma; break;
      case '.': kind = Tok::Dot; break;
      case ':': kind = Tok::Colon; break;
      default: {
        unsigned char u = static_cast<unsigned char>(c);
        std::string shown = std::isprint(u)
                                ? std::string("'") + c + "'"
                                : "byte 0x" + std::to_string(u);
        throw Error(ErrorKind::SyntaxError, "unexpected character " + shown,
                    pos);
      }
      }
      out.push_back({kind, std::string(1, c), pos});
      advance(1);
    }
  }
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  SourceProgram program() {
    SourceProgram out;
    std::set<std::string> declared;
    while (peek().kind != Tok::End) {
      if (peek().kind == Tok::Name && peek().text == "type") {
        RawDeclaration d = declaration();
        if (!declared.insert(d.name).second)
          throw Error(ErrorKind::DuplicateDeclaration,
                      "'" + d.name + "' is declared more than once", d.pos);
        out.declarations.push_back(std::move(d));
      } else {
        out.clauses.push_back(clause());
      }
    }
    return out;
  }

  Type whole_type() {
    Type t = type();
    expect(Tok::End, "after type");
    return t;
  }

  RawTerm whole_literal() {
    RawTerm t = literal();
    if (peek().kind == Tok::Dot)
      next();
    expect(Tok::End, "after literal");
    return t;
  }

private:
  const Token &peek() const { return toks_[pos_]; }
  const Token &next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  const Token &expect(Tok kind, const std::string &context) {
    if (peek().kind != kind)
      throw Error(ErrorKind::SyntaxError,
                  "expected " + describe(kind) + " " + context + ", found " +
                      (peek().kind == Tok::Name ? "'" + peek().text + "'"
                                                : describe(peek().kind)),
                  peek().pos);
    return next();
  }

  struct DepthGuard {
    int &depth;
    DepthGuard(int &d, SourcePos pos) : depth(d) {
      if (++depth > kMaxNesting)
        throw Error(ErrorKind::SyntaxError, "nesting too deep", pos);
    }
    ~DepthGuard() { --depth; }
  };

  RawDeclaration declaration() {
    SourcePos pos = next().pos; // "type"
    const Token &name = expect(Tok::Name, "after 'type'");
    RawDeclaration d{name.text, Type::iota(), name.pos};
    expect(Tok::Colon, "after declared name");
    d.type = type();
    expect(Tok::Dot, "at end of declaration");
    (void)pos;
    return d;
  }

  Type type() {
    DepthGuard guard(depth_, peek().pos);
    Type lhs = atomic_type();
    if (peek().kind == Tok::TypeArrow) {
      next();
      return Type::arrow(lhs, type());
    }
    return lhs;
  }

  Type atomic_type() {
    const Token &t = peek();
    if (t.kind == Tok::LParen) {
      next();
      Type inner = type();
      expect(Tok::RParen, "to close type");
      return inner;
    }
    if (t.kind == Tok::Name && (t.text == "i" || t.text == "o")) {
      next();
      return t.text == "i" ? Type::iota() : Type::omicron();
    }
    throw Error(ErrorKind::SyntaxError,
                "expected type 'i', 'o' or '(', found " +
                    (t.kind == Tok::Name ? "'" + t.text + "'"
                                         : describe(t.kind)),
                t.pos);
  }

  RawClause clause() {
    RawClause c;
    c.pos = peek().pos;
    c.head = literal();
    if (peek().kind == Tok::Arrow) {
      next();
      // `p <- .` is accepted as a fact with an explicitly empty body.
      if (peek().kind != Tok::Dot) {
        c.body.push_back(literal());
        while (peek().kind == Tok::Comma) {
          next();
          c.body.push_back(literal());
        }
      }
    }
    expect(Tok::Dot, "at end of clause");
    return c;
  }

  RawTerm literal() {
    DepthGuard guard(depth_, peek().pos);
    if (peek().kind == Tok::Tilde) {
      SourcePos pos = next().pos;
      RawTerm n;
      n.kind = RawTerm::Kind::Neg;
      n.pos = pos;
      n.items.push_back(app());
      return n;
    }
    RawTerm lhs = app();
    if (peek().kind == Tok::Equals) {
      next();
      RawTerm e;
      e.kind = RawTerm::Kind::Eq;
      e.pos = lhs.pos;
      e.items.push_back(std::move(lhs));
      e.items.push_back(app());
      return e;
    }
    return lhs;
  }

  RawTerm app() {
    RawTerm first = primary();
    if (!starts_primary())
      return first;
    RawTerm a;
    a.kind = RawTerm::Kind::Apply;
    a.pos = first.pos;
    if (first.kind == RawTerm::Kind::Apply)
      a.items = std::move(first.items);
    else
      a.items.push_back(std::move(first));
    while (starts_primary())
      a.items.push_back(primary());
    return a;
  }

  bool starts_primary() const {
    return peek().kind == Tok::Name || peek().kind == Tok::LParen;
  }

  RawTerm primary() {
    DepthGuard guard(depth_, peek().pos);
    const Token &t = peek();
    if (t.kind == Tok::Name) {
      next();
      RawTerm n;
      n.kind = RawTerm::Kind::Name;
      n.name = t.text;
      n.pos = t.pos;
      return n;
    }
    if (t.kind == Tok::LParen) {
      next();
      RawTerm inner = literal();
      expect(Tok::RParen, "to close parenthesis");
      return inner;
    }
    throw Error(ErrorKind::SyntaxError,
                "expected a name or '(', found " + describe(t.kind), t.pos);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

} // namespace

bool RawTerm::is_variable_name() const {
  return kind == Kind::Name && !name.empty() &&
         (std::isupper(static_cast<unsigned char>(name[0])) || name[0] == '_');
}

std::string RawTerm::to_string() const {
  switch (kind) {
  case Kind::Name:
    return name;
  case Kind::Apply: {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i)
        out += " ";
      bool paren = i > 0 && items[i].kind != Kind::Name;
      out += paren ? "(" + items[i].to_string() + ")" : items[i].to_string();
    }
    return out;
  }
  case Kind::Neg:
    return items[0].kind == Kind::Name ? "~" + items[0].to_string()
                                       : "~(" + items[0].to_string() + ")";
  case Kind::Eq:
    return items[0].to_string() + " = " + items[1].to_string();
  }
  return {};
}

SourceProgram parse_program(std::string_view text) {
  return Parser(text).program();
}

Type parse_type(std::string_view text) { return Parser(text).whole_type(); }

RawTerm parse_literal(std::string_view text) {
  return Parser(text).whole_literal();
}

} // namespace hop
