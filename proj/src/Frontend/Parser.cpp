// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/Frontend/Parser.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

using namespace tenflow;
using namespace tenflow::frontend;

//===----------------------------------------------------------------------===//
// AST helpers
//===----------------------------------------------------------------------===//

static std::string formatReal(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), static_cast<float>(v));
  std::string s(buf, end);
  if (s.find_first_of(".e") == std::string::npos)
    s += ".0";
  return s;
}

std::string Expr::str() const {
  switch (kind) {
  case Kind::RealLiteral:
    return formatReal(real);
  case Kind::IntLiteral:
    return std::to_string(integer);
  case Kind::Variable:
    return name;
  case Kind::ArrayElement:
    return name + "(" + operands[0].str() + ")";
  case Kind::Binary:
    return "(" + operands[0].str() + " " + op + " " + operands[1].str() + ")";
  }
  return "";
}

const Param *Subroutine::param(const std::string &n) const {
  for (const Param &p : params)
    if (p.name == n)
      return &p;
  return nullptr;
}

//===----------------------------------------------------------------------===//
// Tokenizer
//===----------------------------------------------------------------------===//

namespace {

enum class Tok { Ident, Int, Real, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int64_t intValue = 0;
  double realValue = 0;
  int column = 0;
};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char &c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return std::string(s.substr(b, e - b));
}

struct Error {
  std::string message;
  int column = 0;
};

/// Splits one logical line into tokens. Identifiers are lowercased.
std::vector<Token> tokenize(std::string_view text, std::optional<Error> &err) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.column = static_cast<int>(i) + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t b = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      t.kind = Tok::Ident;
      t.text = lower(text.substr(b, i - b));
      toks.push_back(t);
      continue;
    }
    bool startsNumber = std::isdigit(static_cast<unsigned char>(c)) ||
                        (c == '.' && i + 1 < text.size() &&
                         std::isdigit(static_cast<unsigned char>(text[i + 1])));
    if (startsNumber) {
      std::size_t b = i;
      bool isReal = false;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      // A '.' followed by a letter may be an operator like `.and.`; the subset
      // has none, so treat any '.' after digits as a decimal point.
      if (i < text.size() && text[i] == '.') {
        isReal = true;
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          ++i;
      }
      if (i < text.size() && (text[i] == 'e' || text[i] == 'E' || text[i] == 'd' ||
                              text[i] == 'D')) {
        std::size_t save = i;
        bool dExp = text[i] == 'd' || text[i] == 'D';
        ++i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-'))
          ++i;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
          if (dExp) {
            err = Error{"double precision literal is not supported", t.column};
            return {};
          }
          isReal = true;
        } else {
          i = save;
        }
      }
      std::string digits(text.substr(b, i - b));
      // Kind suffix: `1.0_4`. Only the default real kind is accepted.
      if (i < text.size() && text[i] == '_') {
        std::size_t k = ++i;
        while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i])))
          ++i;
        std::string kindText(text.substr(k, i - k));
        if (kindText != "4") {
          err = Error{"unsupported literal kind '_" + kindText + "'", t.column};
          return {};
        }
      }
      if (isReal) {
        t.kind = Tok::Real;
        t.realValue = std::strtod(digits.c_str(), nullptr);
      } else {
        t.kind = Tok::Int;
        auto [p, ec] =
            std::from_chars(digits.data(), digits.data() + digits.size(), t.intValue);
        if (ec != std::errc()) {
          err = Error{"integer literal out of range", t.column};
          return {};
        }
      }
      t.text = digits;
      toks.push_back(t);
      continue;
    }
    if (text.substr(i, 2) == "::" || text.substr(i, 2) == "**") {
      t.kind = Tok::Punct;
      t.text = std::string(text.substr(i, 2));
      i += 2;
      toks.push_back(t);
      continue;
    }
    if (std::string_view("()+-*/=,:").find(c) != std::string_view::npos) {
      t.kind = Tok::Punct;
      t.text = std::string(1, c);
      ++i;
      toks.push_back(t);
      continue;
    }
    err = Error{std::string("unexpected character '") + c + "'", t.column};
    return {};
  }
  Token end;
  end.column = static_cast<int>(text.size()) + 1;
  toks.push_back(end);
  return toks;
}

class TokenStream {
public:
  explicit TokenStream(std::vector<Token> toks) : toks(std::move(toks)) {}

  const Token &peek(std::size_t ahead = 0) const {
    return toks[std::min(pos + ahead, toks.size() - 1)];
  }
  Token next() {
    Token t = peek();
    if (pos < toks.size() - 1)
      ++pos;
    return t;
  }
  bool atEnd() const { return peek().kind == Tok::End; }
  bool isPunct(std::string_view p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Punct && peek(ahead).text == p;
  }
  bool isIdent(std::string_view w, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Ident && peek(ahead).text == w;
  }
  bool consumePunct(std::string_view p) {
    if (!isPunct(p))
      return false;
    next();
    return true;
  }
  bool consumeIdent(std::string_view w) {
    if (!isIdent(w))
      return false;
    next();
    return true;
  }
  std::size_t position() const { return pos; }

private:
  std::vector<Token> toks;
  std::size_t pos = 0;
};

//===----------------------------------------------------------------------===//
// Directive parsing
//===----------------------------------------------------------------------===//

/// Strips the `!$omp` sentinel (and an accidental doubled `omp`).
std::string stripSentinel(std::string_view line) {
  std::string text = trim(line);
  std::string low = lower(text);
  if (low.rfind("!$omp", 0) == 0) {
    text = trim(std::string_view(text).substr(5));
    low = lower(text);
  }
  // `!$omp omp target ...` shows up in the wild; accept it.
  if (low.rfind("omp", 0) == 0 && (low.size() == 3 || std::isspace(
                                                           static_cast<unsigned char>(low[3]))))
    text = trim(std::string_view(text).substr(3));
  return text;
}

Result<OffloadClauses> parseDirectiveText(std::string_view raw, int line) {
  std::optional<Error> tokErr;
  std::vector<Token> toks = tokenize(stripSentinel(raw), tokErr);
  auto fail = [&](const std::string &msg) {
    return Result<OffloadClauses>(Diagnostic::error(msg, Location::atSource(line)));
  };
  if (tokErr)
    return fail("malformed directive: " + tokErr->message);

  TokenStream ts(std::move(toks));
  if (!ts.isIdent("target"))
    return fail("unsupported directive: expected 'target'");

  static const std::set<std::string> constructWords = {
      "target", "teams", "distribute", "parallel", "do", "simd"};
  OffloadClauses clauses;
  std::set<std::string> seenConstruct, seenClause, mapped;
  bool sawDo = false;

  auto parseInt = [&](const std::string &clause) -> std::optional<int64_t> {
    if (!ts.consumePunct("("))
      return std::nullopt;
    bool negative = ts.consumePunct("-");
    if (ts.peek().kind != Tok::Int)
      return std::nullopt;
    int64_t v = ts.next().intValue;
    if (!ts.consumePunct(")"))
      return std::nullopt;
    (void)clause;
    return negative ? -v : v;
  };

  while (!ts.atEnd()) {
    if (ts.consumePunct(","))
      continue;
    if (ts.peek().kind != Tok::Ident)
      return fail("malformed directive near '" + ts.peek().text + "'");
    std::string word = ts.next().text;
    if (constructWords.count(word)) {
      if (!seenConstruct.insert(word).second)
        return fail("construct '" + word + "' repeated");
      if (word == "do")
        sawDo = true;
      continue;
    }
    if (word == "num_teams" || word == "num_threads" || word == "simdlen") {
      if (!seenClause.insert(word).second)
        return fail("clause '" + word + "' repeated");
      std::optional<int64_t> v = parseInt(word);
      if (!v)
        return fail("clause '" + word + "' requires an integer literal argument");
      if (*v <= 0)
        return fail("clause '" + word + "' must be positive, got " + std::to_string(*v));
      if (word == "num_teams") {
        clauses.numTeams = *v;
        clauses.numTeamsGiven = true;
      } else if (word == "num_threads") {
        clauses.numThreads = *v;
      } else {
        clauses.simdlen = *v;
      }
      continue;
    }
    if (word == "map") {
      if (!ts.consumePunct("("))
        return fail("clause 'map' requires a parenthesised list");
      std::vector<std::string> *list = &clauses.mapTofrom;
      if (ts.peek().kind == Tok::Ident && ts.isPunct(":", 1)) {
        std::string kind = ts.next().text;
        ts.next();
        if (kind == "to")
          list = &clauses.mapTo;
        else if (kind == "from")
          list = &clauses.mapFrom;
        else if (kind == "tofrom")
          list = &clauses.mapTofrom;
        else
          return fail("unsupported map type '" + kind + "'");
      }
      do {
        if (ts.peek().kind != Tok::Ident)
          return fail("clause 'map' expects variable names");
        std::string name = ts.next().text;
        if (!mapped.insert(name).second)
          return fail("variable '" + name + "' appears in more than one map clause");
        list->push_back(name);
      } while (ts.consumePunct(","));
      if (!ts.consumePunct(")"))
        return fail("clause 'map' is missing ')'");
      continue;
    }
    return fail("unknown clause '" + word + "'");
  }
  if (!sawDo)
    return fail("unsupported directive: offload construct must include 'do'");
  return clauses;
}

//===----------------------------------------------------------------------===//
// Source lines
//===----------------------------------------------------------------------===//

struct LogicalLine {
  std::string text;
  int line = 0;
  bool directive = false;
};

bool isDirectiveLine(std::string_view trimmed) {
  return lower(trimmed.substr(0, 5)) == "!$omp";
}

std::string stripComment(std::string_view s) {
  std::size_t bang = s.find('!');
  return std::string(bang == std::string_view::npos ? s : s.substr(0, bang));
}

/// Joins `&` continuations. Directive continuations repeat the sentinel,
/// optionally followed by `&`.
std::vector<LogicalLine> splitLines(std::string_view src) {
  std::vector<std::pair<std::string, int>> physical;
  int lineNo = 0;
  std::size_t start = 0;
  while (start <= src.size()) {
    std::size_t nl = src.find('\n', start);
    std::string_view raw = src.substr(start, nl == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : nl - start);
    physical.emplace_back(std::string(raw), ++lineNo);
    if (nl == std::string_view::npos)
      break;
    start = nl + 1;
  }

  std::vector<LogicalLine> out;
  bool continuing = false;
  for (auto &[raw, no] : physical) {
    std::string t = trim(raw);
    if (!t.empty() && t.back() == '\r')
      t = trim(std::string_view(t).substr(0, t.size() - 1));
    bool directive = isDirectiveLine(t);
    std::string body;
    if (directive) {
      body = trim(std::string_view(t).substr(5));
      if (continuing && !body.empty() && body.front() == '&')
        body = trim(std::string_view(body).substr(1));
      body = trim(stripComment(body));
    } else {
      body = trim(stripComment(t));
      if (body.empty())
        continue; // Blank or comment-only lines do not break continuations.
      if (continuing && body.front() == '&')
        body = trim(std::string_view(body).substr(1));
    }
    bool continues = !body.empty() && body.back() == '&';
    if (continues)
      body = trim(std::string_view(body).substr(0, body.size() - 1));
    if (continuing && !out.empty() && out.back().directive == directive) {
      out.back().text += " " + body;
    } else {
      if (body.empty() && !directive)
        continue;
      out.push_back({body, no, directive});
    }
    continuing = continues;
  }
  return out;
}

//===----------------------------------------------------------------------===//
// Statement parser
//===----------------------------------------------------------------------===//

class FortranParser {
public:
  explicit FortranParser(std::vector<LogicalLine> lines) : lines(std::move(lines)) {}

  Result<FortranAst> run();

private:
  struct Failure {};

  [[noreturn]] void fail(const std::string &msg, int line, int column = 0) {
    diags.push_back(Diagnostic::error(msg, Location::atSource(line, column)));
    throw Failure{};
  }

  TokenStream tokens(const LogicalLine &l) {
    std::optional<Error> err;
    std::vector<Token> toks = tokenize(l.text, err);
    if (err)
      fail(err->message, l.line, err->column);
    return TokenStream(std::move(toks));
  }

  bool isEndOf(const LogicalLine &l, std::string_view what);
  Subroutine parseSubroutine();
  void parseDeclaration(TokenStream &ts, const LogicalLine &l, Subroutine &sub,
                        std::map<std::string, int> &declared);
  std::vector<Statement> parseBody(Subroutine &sub, std::string_view terminator);
  DoLoop parseDo(TokenStream &ts, const LogicalLine &l, Subroutine &sub);
  OffloadRegion parseOffload(const LogicalLine &l, Subroutine &sub);
  Assignment parseAssignment(TokenStream &ts, const LogicalLine &l);

  Expr parseExpr(TokenStream &ts, int line);
  Expr parseTerm(TokenStream &ts, int line);
  Expr parseFactor(TokenStream &ts, int line);

  void expectEnd(TokenStream &ts, int line) {
    if (!ts.atEnd())
      fail("unexpected '" + ts.peek().text + "'", line, ts.peek().column);
  }
  std::string expectIdent(TokenStream &ts, int line, const char *what) {
    if (ts.peek().kind != Tok::Ident)
      fail(std::string("expected ") + what, line, ts.peek().column);
    return ts.next().text;
  }

  std::vector<LogicalLine> lines;
  std::size_t cur = 0;
  DiagnosticList diags;
};

bool FortranParser::isEndOf(const LogicalLine &l, std::string_view what) {
  std::string low = lower(l.text);
  std::string compact;
  for (char c : low)
    if (!std::isspace(static_cast<unsigned char>(c)))
      compact += c;
  return compact.rfind("end" + std::string(what), 0) == 0;
}

Result<FortranAst> FortranParser::run() {
  FortranAst ast;
  try {
    while (cur < lines.size()) {
      const LogicalLine &l = lines[cur];
      if (l.directive)
        fail("directive outside a subroutine", l.line);
      TokenStream ts = tokens(l);
      if (!ts.isIdent("subroutine"))
        fail("unsupported program unit: expected 'subroutine'", l.line);
      ast.subroutines.push_back(parseSubroutine());
    }
    if (ast.subroutines.empty())
      fail("no subroutine found", 1);
    std::set<std::string> names;
    for (const Subroutine &s : ast.subroutines)
      if (!names.insert(s.name).second)
        fail("duplicate subroutine '" + s.name + "'", s.line);
  } catch (Failure &) {
    return diags;
  }
  return ast;
}

Subroutine FortranParser::parseSubroutine() {
  const LogicalLine &head = lines[cur++];
  TokenStream ts = tokens(head);
  ts.next(); // subroutine
  Subroutine sub;
  sub.line = head.line;
  sub.name = expectIdent(ts, head.line, "subroutine name");
  std::vector<std::string> dummies;
  if (ts.consumePunct("(")) {
    if (!ts.consumePunct(")")) {
      do {
        std::string n = expectIdent(ts, head.line, "dummy argument name");
        if (std::find(dummies.begin(), dummies.end(), n) != dummies.end())
          fail("duplicate dummy argument '" + n + "'", head.line);
        dummies.push_back(n);
      } while (ts.consumePunct(","));
      if (!ts.consumePunct(")"))
        fail("expected ')' after dummy arguments", head.line, ts.peek().column);
    }
  }
  expectEnd(ts, head.line);
  for (const std::string &d : dummies)
    sub.params.push_back({d, ParamKind::RealScalar, 0});

  // Specification part.
  std::map<std::string, int> declared;
  while (cur < lines.size()) {
    const LogicalLine &l = lines[cur];
    if (l.directive)
      break;
    TokenStream ds = tokens(l);
    if (ds.isIdent("implicit")) {
      ds.next();
      if (!ds.consumeIdent("none"))
        fail("only 'implicit none' is supported", l.line);
      expectEnd(ds, l.line);
      ++cur;
      continue;
    }
    if (ds.isIdent("real") || ds.isIdent("integer") || ds.isIdent("double") ||
        ds.isIdent("logical") || ds.isIdent("complex") || ds.isIdent("character")) {
      // `real = ...` would be an assignment to a variable named real; the
      // subset does not allow that spelling.
      parseDeclaration(ds, l, sub, declared);
      ++cur;
      continue;
    }
    break;
  }
  for (Param &p : sub.params)
    if (!declared.count(p.name))
      fail("dummy argument '" + p.name + "' has no type declaration", head.line);

  sub.body = parseBody(sub, "subroutine");
  if (cur >= lines.size())
    fail("missing 'end subroutine' for '" + sub.name + "'", head.line);
  const LogicalLine &endLine = lines[cur++];
  TokenStream es = tokens(endLine);
  es.next(); // end
  if (es.consumeIdent("subroutine") && es.peek().kind == Tok::Ident &&
      es.peek().text != sub.name)
    fail("'end subroutine " + es.peek().text + "' does not match '" + sub.name + "'",
         endLine.line);
  return sub;
}

void FortranParser::parseDeclaration(TokenStream &ts, const LogicalLine &l,
                                     Subroutine &sub,
                                     std::map<std::string, int> &declared) {
  std::string type = ts.next().text;
  if (type != "real" && type != "integer")
    fail("unsupported type '" + type + "'", l.line);
  // Kind selectors: real(4), real(kind=4), real*4.
  if (ts.consumePunct("(")) {
    if (ts.consumeIdent("kind") && !ts.consumePunct("="))
      fail("malformed kind selector", l.line);
    if (ts.peek().kind != Tok::Int || ts.peek().intValue != 4)
      fail("unsupported kind for '" + type + "': only the default 4-byte kind is "
           "supported",
           l.line);
    ts.next();
    if (!ts.consumePunct(")"))
      fail("malformed kind selector", l.line);
  } else if (ts.consumePunct("*")) {
    if (ts.peek().kind != Tok::Int || ts.peek().intValue != 4)
      fail("unsupported kind for '" + type + "': only the default 4-byte kind is "
           "supported",
           l.line);
    ts.next();
  }

  bool dimensionAttr = false;
  while (ts.consumePunct(",")) {
    std::string attr = expectIdent(ts, l.line, "attribute");
    if (attr == "intent") {
      if (!ts.consumePunct("("))
        fail("malformed intent", l.line);
      std::string mode = expectIdent(ts, l.line, "intent");
      if (mode == "in" && ts.isIdent("out"))
        mode += ts.next().text;
      if (mode != "in" && mode != "out" && mode != "inout")
        fail("unknown intent '" + mode + "'", l.line);
      if (!ts.consumePunct(")"))
        fail("malformed intent", l.line);
    } else if (attr == "dimension") {
      if (!ts.consumePunct("("))
        fail("malformed dimension", l.line);
      int depth = 1, rank = 1;
      while (depth > 0 && !ts.atEnd()) {
        Token t = ts.next();
        if (t.kind == Tok::Punct && t.text == "(")
          ++depth;
        else if (t.kind == Tok::Punct && t.text == ")")
          --depth;
        else if (depth == 1 && t.kind == Tok::Punct && t.text == ",")
          ++rank;
      }
      if (rank != 1)
        fail("only one-dimensional arrays are supported", l.line);
      dimensionAttr = true;
    } else if (attr == "value") {
      // Pass-by-value is how scalars are modelled anyway.
    } else {
      fail("unsupported attribute '" + attr + "'", l.line);
    }
  }
  ts.consumePunct("::");

  do {
    std::string name = expectIdent(ts, l.line, "variable name");
    bool isArray = dimensionAttr;
    if (ts.consumePunct("(")) {
      int depth = 1, rank = 1;
      while (depth > 0 && !ts.atEnd()) {
        Token t = ts.next();
        if (t.kind == Tok::Punct && t.text == "(")
          ++depth;
        else if (t.kind == Tok::Punct && t.text == ")")
          --depth;
        else if (depth == 1 && t.kind == Tok::Punct && t.text == ",")
          ++rank;
      }
      if (rank != 1)
        fail("only one-dimensional arrays are supported", l.line);
      isArray = true;
    }
    if (ts.isPunct("="))
      fail("initialisers in declarations are not supported", l.line);
    if (declared.count(name))
      fail("variable '" + name + "' declared twice", l.line);
    declared[name] = l.line;

    auto it = std::find_if(sub.params.begin(), sub.params.end(),
                           [&](const Param &p) { return p.name == name; });
    if (it != sub.params.end()) {
      if (type == "integer" && isArray)
        fail("integer array '" + name + "' is not supported", l.line);
      it->kind = type == "integer" ? ParamKind::IntScalar
                 : isArray         ? ParamKind::RealArray
                                   : ParamKind::RealScalar;
      it->line = l.line;
    } else {
      if (type != "integer" || isArray)
        fail("local variable '" + name +
                 "' is not supported; only integer loop counters may be local",
             l.line);
      sub.locals.push_back(name);
    }
  } while (ts.consumePunct(","));
  expectEnd(ts, l.line);
}

std::vector<Statement> FortranParser::parseBody(Subroutine &sub,
                                                std::string_view terminator) {
  std::vector<Statement> body;
  while (cur < lines.size()) {
    const LogicalLine &l = lines[cur];
    if (l.directive) {
      std::string low = lower(stripSentinel(l.text));
      if (low.rfind("end", 0) == 0)
        fail("unmatched directive: '!$omp " + low + "' has no opening directive",
             l.line);
      body.push_back({parseOffload(l, sub)});
      continue;
    }
    if (isEndOf(l, terminator))
      return body;
    TokenStream ts = tokens(l);
    if (ts.isIdent("end") || ts.isIdent("enddo")) {
      if (terminator == "do" || (ts.isIdent("end") && ts.peek(1).kind == Tok::End))
        return body;
      fail("unexpected '" + l.text + "'", l.line);
    }
    if (ts.isIdent("do") && !ts.isPunct("=", 1) && !ts.isPunct("(", 1)) {
      ts.next();
      body.push_back({parseDo(ts, l, sub)});
      continue;
    }
    if (ts.peek().kind == Tok::Ident && (ts.isPunct("=", 1) || ts.isPunct("(", 1))) {
      ++cur;
      body.push_back({parseAssignment(ts, l)});
      continue;
    }
    if (ts.isIdent("real") || ts.isIdent("integer") || ts.isIdent("implicit"))
      fail("declarations must precede executable statements", l.line);
    fail("unsupported statement '" + l.text + "'", l.line);
  }
  return body;
}

DoLoop FortranParser::parseDo(TokenStream &ts, const LogicalLine &l,
                              Subroutine &sub) {
  ++cur;
  DoLoop loop;
  loop.line = l.line;
  if (ts.peek().kind == Tok::Int)
    fail("labelled do loops are not supported", l.line);
  if (ts.isIdent("while") || ts.atEnd())
    fail("only counted do loops are supported", l.line);
  loop.var = expectIdent(ts, l.line, "loop variable");
  if (!ts.consumePunct("="))
    fail("expected '=' in do statement", l.line, ts.peek().column);
  loop.lower = parseExpr(ts, l.line);
  if (!ts.consumePunct(","))
    fail("expected ',' in do statement", l.line, ts.peek().column);
  loop.upper = parseExpr(ts, l.line);
  if (ts.consumePunct(","))
    loop.step = parseExpr(ts, l.line);
  expectEnd(ts, l.line);

  loop.body = parseBody(sub, "do");
  if (cur >= lines.size())
    fail("missing 'end do'", l.line);
  const LogicalLine &endLine = lines[cur++];
  if (!isEndOf(endLine, "do"))
    fail("expected 'end do', found '" + endLine.text + "'", endLine.line);
  return loop;
}

OffloadRegion FortranParser::parseOffload(const LogicalLine &l, Subroutine &sub) {
  Result<OffloadClauses> clauses = parseDirectiveText(l.text, l.line);
  if (!clauses) {
    for (const Diagnostic &d : clauses.diagnostics())
      diags.push_back(d);
    throw Failure{};
  }
  ++cur;
  OffloadRegion region;
  region.clauses = *clauses;
  region.beginLine = l.line;
  if (cur >= lines.size() || lines[cur].directive)
    fail("unmatched directive: offload directive must be followed by a do loop",
         l.line);
  TokenStream ts = tokens(lines[cur]);
  if (!ts.consumeIdent("do"))
    fail("offload directive must be followed by a do loop", lines[cur].line);
  region.loop = parseDo(ts, lines[cur], sub);

  // The closing `!$omp end target ...` is required and must mirror the
  // opening construct words.
  if (cur >= lines.size() || !lines[cur].directive)
    fail("unmatched directive: missing '!$omp end target' for directive", l.line);
  std::string endText = lower(stripSentinel(lines[cur].text));
  std::optional<Error> err;
  std::vector<Token> endToks = tokenize(endText, err);
  if (err || endToks.size() < 3 || endToks[0].text != "end" ||
      endToks[1].text != "target")
    fail("unmatched directive: expected '!$omp end target', found '!$omp " +
             endText + "'",
         lines[cur].line);
  region.endLine = lines[cur].line;
  ++cur;
  return region;
}

Assignment FortranParser::parseAssignment(TokenStream &ts, const LogicalLine &l) {
  Assignment a;
  a.line = l.line;
  a.target = parseFactor(ts, l.line);
  if (!ts.consumePunct("="))
    fail("expected '=' in assignment", l.line, ts.peek().column);
  a.value = parseExpr(ts, l.line);
  expectEnd(ts, l.line);
  return a;
}

Expr FortranParser::parseExpr(TokenStream &ts, int line) {
  Expr lhs = parseTerm(ts, line);
  while (ts.isPunct("+") || ts.isPunct("-")) {
    char op = ts.next().text[0];
    Expr rhs = parseTerm(ts, line);
    Expr bin;
    bin.kind = Expr::Kind::Binary;
    bin.op = op;
    bin.line = line;
    bin.operands = {std::move(lhs), std::move(rhs)};
    lhs = std::move(bin);
  }
  return lhs;
}

Expr FortranParser::parseTerm(TokenStream &ts, int line) {
  Expr lhs = parseFactor(ts, line);
  while (ts.isPunct("*") || ts.isPunct("/")) {
    char op = ts.next().text[0];
    Expr rhs = parseFactor(ts, line);
    Expr bin;
    bin.kind = Expr::Kind::Binary;
    bin.op = op;
    bin.line = line;
    bin.operands = {std::move(lhs), std::move(rhs)};
    lhs = std::move(bin);
  }
  if (ts.isPunct("**"))
    fail("operator '**' is not supported", line, ts.peek().column);
  return lhs;
}

Expr FortranParser::parseFactor(TokenStream &ts, int line) {
  Expr e;
  e.line = line;
  const Token &t = ts.peek();
  if (t.kind == Tok::Punct && (t.text == "-" || t.text == "+")) {
    bool negate = t.text == "-";
    ts.next();
    if (ts.peek().kind != Tok::Int && ts.peek().kind != Tok::Real)
      fail("unary sign is only supported on literals", line, ts.peek().column);
    e = parseFactor(ts, line);
    if (negate) {
      e.real = -e.real;
      e.integer = -e.integer;
    }
    return e;
  }
  if (t.kind == Tok::Int) {
    e.kind = Expr::Kind::IntLiteral;
    e.integer = ts.next().intValue;
    return e;
  }
  if (t.kind == Tok::Real) {
    e.kind = Expr::Kind::RealLiteral;
    e.real = ts.next().realValue;
    return e;
  }
  if (ts.consumePunct("(")) {
    e = parseExpr(ts, line);
    if (!ts.consumePunct(")"))
      fail("expected ')'", line, ts.peek().column);
    return e;
  }
  if (t.kind == Tok::Ident) {
    e.name = ts.next().text;
    if (ts.consumePunct("(")) {
      e.kind = Expr::Kind::ArrayElement;
      e.operands.push_back(parseExpr(ts, line));
      if (ts.isPunct(","))
        fail("only one-dimensional array references are supported", line,
             ts.peek().column);
      if (!ts.consumePunct(")"))
        fail("expected ')' after array index", line, ts.peek().column);
      return e;
    }
    e.kind = Expr::Kind::Variable;
    return e;
  }
  fail("expected expression", line, t.column);
}

//===----------------------------------------------------------------------===//
// Semantic checks
//===----------------------------------------------------------------------===//

class Checker {
public:
  explicit Checker(const Subroutine &sub) : sub(sub) {}

  void run() { checkBody(sub.body); }
  DiagnosticList diags;

private:
  enum class Ty { Real, Int, Bad };

  void error(const std::string &msg, int line) {
    diags.push_back(Diagnostic::error(msg, Location::atSource(line)));
  }

  bool isLoopVar(const std::string &n) const {
    return std::find(loopVars.begin(), loopVars.end(), n) != loopVars.end();
  }
  bool isLocal(const std::string &n) const {
    return std::find(sub.locals.begin(), sub.locals.end(), n) != sub.locals.end();
  }

  Ty check(const Expr &e, bool wantInt) {
    switch (e.kind) {
    case Expr::Kind::RealLiteral:
      if (wantInt) {
        error("real literal in integer expression", e.line);
        return Ty::Bad;
      }
      return Ty::Real;
    case Expr::Kind::IntLiteral:
      return wantInt ? Ty::Int : Ty::Real;
    case Expr::Kind::Variable: {
      const Param *p = sub.param(e.name);
      if (p && p->kind == ParamKind::RealArray) {
        error("whole-array reference '" + e.name + "' is not supported", e.line);
        return Ty::Bad;
      }
      bool intVar = (p && p->kind == ParamKind::IntScalar) || isLoopVar(e.name);
      if (!p && !isLoopVar(e.name)) {
        if (isLocal(e.name))
          error("integer variable '" + e.name + "' is used outside a loop over it",
                e.line);
        else
          error("undeclared variable '" + e.name + "'", e.line);
        return Ty::Bad;
      }
      if (wantInt && !intVar) {
        error("real variable '" + e.name + "' in integer expression", e.line);
        return Ty::Bad;
      }
      if (!wantInt && intVar) {
        error("integer variable '" + e.name +
                  "' in a real expression is not supported",
              e.line);
        return Ty::Bad;
      }
      return wantInt ? Ty::Int : Ty::Real;
    }
    case Expr::Kind::ArrayElement: {
      const Param *p = sub.param(e.name);
      if (!p || p->kind != ParamKind::RealArray) {
        error(p ? "'" + e.name + "' is not an array"
                : "undeclared array '" + e.name + "'",
              e.line);
        return Ty::Bad;
      }
      if (wantInt) {
        error("array element in integer expression", e.line);
        return Ty::Bad;
      }
      const Expr &idx = e.operands[0];
      if (offloadVar) {
        if (idx.kind != Expr::Kind::Variable || idx.name != *offloadVar)
          error("index must be induction variable '" + *offloadVar +
                    "' inside an offloaded loop, got '" + idx.str() + "'",
                e.line);
      } else {
        check(idx, /*wantInt=*/true);
      }
      return Ty::Real;
    }
    case Expr::Kind::Binary: {
      if (wantInt && e.op == '/') {
        error("integer division is not supported", e.line);
        return Ty::Bad;
      }
      Ty a = check(e.operands[0], wantInt);
      Ty b = check(e.operands[1], wantInt);
      return a == Ty::Bad || b == Ty::Bad ? Ty::Bad : a;
    }
    }
    return Ty::Bad;
  }

  void checkLoop(const DoLoop &loop) {
    if (!isLocal(loop.var)) {
      const Param *p = sub.param(loop.var);
      error(p ? "loop variable '" + loop.var + "' must be a local integer"
              : "undeclared loop variable '" + loop.var + "'",
            loop.line);
    }
    if (isLoopVar(loop.var))
      error("loop variable '" + loop.var + "' reused by a nested loop", loop.line);
    check(loop.lower, true);
    check(loop.upper, true);
    if (loop.step) {
      check(*loop.step, true);
      if (loop.step->kind != Expr::Kind::IntLiteral || loop.step->integer <= 0)
        error("loop step must be a positive integer literal", loop.line);
    }
    loopVars.push_back(loop.var);
    checkBody(loop.body);
    loopVars.pop_back();
  }

  void checkBody(const std::vector<Statement> &body) {
    for (const Statement &s : body) {
      if (auto *a = std::get_if<Assignment>(&s.node)) {
        if (a->target.kind != Expr::Kind::ArrayElement) {
          error("unsupported statement: assignment to scalar '" + a->target.name +
                    "'; only array elements may be assigned",
                a->line);
          continue;
        }
        check(a->target, false);
        check(a->value, false);
      } else if (auto *l = std::get_if<DoLoop>(&s.node)) {
        checkLoop(*l);
      } else {
        const auto &r = std::get<OffloadRegion>(s.node);
        if (offloadVar) {
          error("nested offload regions are not supported", r.beginLine);
          continue;
        }
        const DoLoop &loop = r.loop;
        bool lbOne = loop.lower.kind == Expr::Kind::IntLiteral && loop.lower.integer == 1;
        const Param *ub = loop.upper.kind == Expr::Kind::Variable
                              ? sub.param(loop.upper.name)
                              : nullptr;
        bool stepOne = !loop.step || (loop.step->kind == Expr::Kind::IntLiteral &&
                                      loop.step->integer == 1);
        if (!lbOne || !ub || ub->kind != ParamKind::IntScalar || !stepOne)
          error("offloaded loop must have the form 'do " + loop.var +
                    " = 1, <integer argument>'",
                loop.line);
        for (const auto *list :
             {&r.clauses.mapTo, &r.clauses.mapFrom, &r.clauses.mapTofrom})
          for (const std::string &n : *list)
            if (!sub.param(n))
              error("map clause names unknown variable '" + n + "'", r.beginLine);
        offloadVar = loop.var;
        checkLoop(loop);
        offloadVar.reset();
      }
    }
  }

  const Subroutine &sub;
  std::vector<std::string> loopVars;
  std::optional<std::string> offloadVar;
};

} // namespace

Result<OffloadClauses> frontend::parseDirective(std::string_view line) {
  return parseDirectiveText(line, 1);
}

Result<FortranAst> frontend::parseFortran(std::string_view source) {
  Result<FortranAst> ast = FortranParser(splitLines(source)).run();
  if (!ast)
    return ast;
  DiagnosticList diags;
  for (const Subroutine &sub : ast->subroutines) {
    Checker checker(sub);
    checker.run();
    diags.insert(diags.end(), checker.diags.begin(), checker.diags.end());
  }
  if (!diags.empty())
    return diags;
  return ast;
}
