// Copyright 2026 The Tenflow Authors
//
// Licensed under the Apache License v2.0 with LLVM Exceptions.
// See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include "tenflow/IR/Parser.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace tenflow::ir {

namespace {

struct ParseError {
  Diagnostic diag;
};

bool isIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '$';
}

class Parser {
public:
  explicit Parser(std::string_view text) : text(text) {}

  Module parseModule() {
    Module module;
    expectKeyword("module");
    if (tryKeyword("attributes"))
      module.attrs = parseAttrMap();
    expect('{');
    while (!tryConsume('}')) {
      if (atEnd())
        fail("expected '}' to close module");
      Function fn = parseFunction();
      module.functions.push_back(std::move(fn));
    }
    skipTrivia();
    if (!atEnd())
      fail("unexpected trailing text after module");
    return module;
  }

private:
  //===--------------------------------------------------------------------===//
  // Cursor helpers
  //===--------------------------------------------------------------------===//

  bool atEnd() const { return pos >= text.size(); }

  void skipTrivia() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '\n') {
        ++line;
        col = 1;
        ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col;
        ++pos;
      } else if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
        while (pos < text.size() && text[pos] != '\n')
          ++pos;
      } else {
        break;
      }
    }
  }

  char peek() {
    skipTrivia();
    return atEnd() ? '\0' : text[pos];
  }

  void advance(std::size_t n = 1) {
    pos += n;
    col += static_cast<int>(n);
  }

  [[noreturn]] void fail(const std::string &msg) {
    throw ParseError{Diagnostic::error(msg, Location::atSource(line, col))};
  }

  bool tryConsume(char c) {
    if (peek() != c)
      return false;
    advance();
    return true;
  }

  bool tryConsume(std::string_view s) {
    skipTrivia();
    if (text.substr(pos, s.size()) != s)
      return false;
    advance(s.size());
    return true;
  }

  void expect(char c) {
    if (!tryConsume(c))
      fail(std::string("expected '") + c + "'");
  }

  void expect(std::string_view s) {
    if (!tryConsume(s))
      fail("expected '" + std::string(s) + "'");
  }

  std::string lexIdent() {
    skipTrivia();
    std::size_t start = pos;
    while (pos < text.size() && isIdentChar(text[pos]))
      ++pos;
    col += static_cast<int>(pos - start);
    return std::string(text.substr(start, pos - start));
  }

  std::string peekIdent() {
    skipTrivia();
    std::size_t end = pos;
    while (end < text.size() && isIdentChar(text[end]))
      ++end;
    return std::string(text.substr(pos, end - pos));
  }

  bool tryKeyword(std::string_view kw) {
    if (peekIdent() != kw)
      return false;
    advance(kw.size());
    return true;
  }

  void expectKeyword(std::string_view kw) {
    if (!tryKeyword(kw))
      fail("expected '" + std::string(kw) + "'");
  }

  //===--------------------------------------------------------------------===//
  // Types and attributes
  //===--------------------------------------------------------------------===//

  Type parseType() {
    skipTrivia();
    int startCol = col;
    std::size_t start = pos;
    while (pos < text.size() && isIdentChar(text[pos]))
      ++pos;
    if (pos < text.size() && text[pos] == '<') {
      while (pos < text.size() && text[pos] != '>' && text[pos] != '\n')
        ++pos;
      if (pos < text.size() && text[pos] == '>')
        ++pos;
    }
    col += static_cast<int>(pos - start);
    std::string spelling(text.substr(start, pos - start));
    if (spelling.empty())
      fail("expected type");
    auto type = Type::parse(spelling);
    if (!type) {
      col = startCol;
      fail("unknown type '" + spelling + "'");
    }
    return *type;
  }

  std::vector<Type> parseTypeList() {
    std::vector<Type> types;
    expect('(');
    if (tryConsume(')'))
      return types;
    do {
      types.push_back(parseType());
    } while (tryConsume(','));
    expect(')');
    return types;
  }

  std::string parseString() {
    expect('"');
    std::string out;
    while (true) {
      if (atEnd() || text[pos] == '\n')
        fail("unterminated string");
      char c = text[pos];
      advance();
      if (c == '"')
        break;
      if (c == '\\') {
        if (atEnd())
          fail("unterminated string");
        char e = text[pos];
        advance();
        out += e == 'n' ? '\n' : e;
      } else {
        out += c;
      }
    }
    return out;
  }

  Attribute parseNumber() {
    skipTrivia();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
      ++pos;
    if (text.substr(pos, 3) == "inf") {
      pos += 3;
      col += static_cast<int>(pos - start);
      return Attribute(text[start] == '-' ? -std::numeric_limits<double>::infinity()
                                          : std::numeric_limits<double>::infinity());
    }
    bool isFloat = false;
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        ++pos;
      } else if (c == '.' || c == 'e' || c == 'E') {
        isFloat = true;
        ++pos;
        if ((c == 'e' || c == 'E') && pos < text.size() &&
            (text[pos] == '-' || text[pos] == '+'))
          ++pos;
      } else {
        break;
      }
    }
    std::string_view tok = text.substr(start, pos - start);
    col += static_cast<int>(tok.size());
    const char *first = tok.data();
    if (!tok.empty() && tok[0] == '+')
      ++first;
    const char *last = tok.data() + tok.size();
    if (isFloat) {
      double v = 0;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last)
        fail("malformed float '" + std::string(tok) + "'");
      return Attribute(v);
    }
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
      fail("malformed integer '" + std::string(tok) + "'");
    return Attribute(v);
  }

  Attribute parseAttrValue() {
    char c = peek();
    if (c == '"')
      return Attribute(parseString());
    if (c == '@') {
      advance();
      std::string sym = lexIdent();
      if (sym.empty())
        fail("expected symbol name after '@'");
      return Attribute(SymbolRef{sym});
    }
    if (c == '[') {
      advance();
      ArrayAttr arr;
      if (!tryConsume(']')) {
        do {
          arr.push_back(parseAttrValue());
        } while (tryConsume(','));
        expect(']');
      }
      return Attribute(std::move(arr));
    }
    if (c == '{') {
      AttrMap entries = parseAttrMap();
      DictAttr dict(entries.begin(), entries.end());
      return Attribute(std::move(dict));
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+')
      return parseNumber();
    std::string word = peekIdent();
    if (word == "nan") {
      advance(3);
      return Attribute(std::numeric_limits<double>::quiet_NaN());
    }
    if (word == "inf")
      return parseNumber();
    fail("expected attribute value");
  }

  AttrMap parseAttrMap() {
    AttrMap attrs;
    expect('{');
    if (tryConsume('}'))
      return attrs;
    do {
      int keyLine = line, keyCol = col;
      std::string key = lexIdent();
      if (key.empty())
        fail("expected attribute name");
      expect('=');
      Attribute value = parseAttrValue();
      if (!attrs.emplace(key, std::move(value)).second)
        throw ParseError{Diagnostic::error("duplicate attribute '" + key + "'",
                                           Location::atSource(keyLine, keyCol))};
    } while (tryConsume(','));
    expect('}');
    return attrs;
  }

  //===--------------------------------------------------------------------===//
  // Values
  //===--------------------------------------------------------------------===//

  std::string parseValueName() {
    expect('%');
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    col += static_cast<int>(pos - start);
    if (pos == start)
      fail("expected value name after '%'");
    return std::string(text.substr(start, pos - start));
  }

  /// Binds a definition; resolves an earlier forward reference when present.
  ValueId define(const std::string &name, const Type &type, int defLine, int defCol) {
    if (defined.count(name))
      throw ParseError{Diagnostic::error("duplicate value name '%" + name + "'",
                                         Location::atSource(defLine, defCol))};
    defined.insert({name, true});
    if (auto it = forwardRefs.find(name); it != forwardRefs.end()) {
      ValueId id = it->second;
      if (!(fn->typeOf(id) == type))
        throw ParseError{Diagnostic::error(
            "value '%" + name + "' defined with type " + type.str() +
                " but used as " + fn->typeOf(id).str(),
            Location::atSource(defLine, defCol))};
      forwardRefs.erase(it);
      values[name] = id;
      return id;
    }
    ValueId id = fn->newValue(type);
    values[name] = id;
    return id;
  }

  ValueId use(const std::string &name, const Type &type) {
    if (auto it = values.find(name); it != values.end()) {
      if (!(fn->typeOf(it->second) == type))
        fail("value '%" + name + "' has type " + fn->typeOf(it->second).str() +
             " but is used as " + type.str());
      return it->second;
    }
    ValueId id = fn->newValue(type);
    values[name] = id;
    forwardRefs[name] = id;
    return id;
  }

  //===--------------------------------------------------------------------===//
  // Functions, blocks, ops
  //===--------------------------------------------------------------------===//

  Function parseFunction() {
    expectKeyword("func");
    expect('@');
    Function result;
    fn = &result;
    values.clear();
    defined.clear();
    forwardRefs.clear();
    result.name = lexIdent();
    if (result.name.empty())
      fail("expected function name");
    result.body.blocks.emplace_back();
    expect('(');
    if (!tryConsume(')')) {
      do {
        int l = line, c = col;
        std::string name = parseValueName();
        expect(':');
        Type t = parseType();
        result.body.blocks.front().args.push_back(define(name, t, l, c));
      } while (tryConsume(','));
      expect(')');
    }
    if (tryConsume("->"))
      result.resultType = parseType();
    if (tryKeyword("attributes"))
      result.attrs = parseAttrMap();
    expect('{');
    parseBlocks(result.body, /*firstBlockExists=*/true);
    expect('}');
    if (!forwardRefs.empty())
      fail("use of undefined value '%" + forwardRefs.begin()->first + "'");
    fn = nullptr;
    return result;
  }

  /// Parses blocks up to (not including) the closing '}'.
  void parseBlocks(Region &region, bool firstBlockExists) {
    if (!firstBlockExists)
      region.blocks.emplace_back();
    bool firstLabelAllowed = !firstBlockExists;
    bool sawOps = false;
    while (peek() != '}') {
      if (atEnd())
        fail("expected '}'");
      if (peek() == '^') {
        advance();
        lexIdent();
        Block *block;
        if (firstLabelAllowed && !sawOps && region.blocks.size() == 1 &&
            region.blocks.back().args.empty()) {
          block = &region.blocks.back();
        } else {
          region.blocks.emplace_back();
          block = &region.blocks.back();
        }
        firstLabelAllowed = false;
        if (tryConsume('(')) {
          do {
            int l = line, c = col;
            std::string name = parseValueName();
            expect(':');
            Type t = parseType();
            block->args.push_back(define(name, t, l, c));
          } while (tryConsume(','));
          expect(')');
        }
        expect(':');
        continue;
      }
      sawOps = true;
      firstLabelAllowed = false;
      Operation op = parseOp();
      region.blocks.back().ops.push_back(std::move(op));
    }
    // `{ }` is a region with no blocks.
    if (!firstBlockExists && region.blocks.size() == 1 &&
        region.blocks.front().args.empty() && region.blocks.front().ops.empty())
      region.blocks.clear();
  }

  Operation parseOp() {
    struct PendingName {
      std::string name;
      int line, col;
    };
    std::vector<PendingName> resultNames;
    if (peek() == '%') {
      do {
        int l = line, c = col;
        resultNames.push_back({parseValueName(), l, c});
      } while (tryConsume(','));
      expect('=');
    }
    int opLine = line, opCol = col;
    std::string fullName = lexIdent();
    std::size_t dot = fullName.find('.');
    if (fullName.empty() || dot == std::string::npos || dot == 0 ||
        dot + 1 == fullName.size())
      throw ParseError{Diagnostic::error(
          "expected operation name of the form dialect.opname",
          Location::atSource(opLine, opCol))};
    Operation op(fullName.substr(0, dot), fullName.substr(dot + 1));

    std::vector<std::string> operandNames;
    expect('(');
    if (!tryConsume(')')) {
      do {
        operandNames.push_back(parseValueName());
      } while (tryConsume(','));
      expect(')');
    }
    if (peek() == '{')
      op.attrs = parseAttrMap();

    if (peek() == '(') {
      advance();
      do {
        expect('{');
        Region region;
        parseBlocks(region, /*firstBlockExists=*/false);
        expect('}');
        op.regions.push_back(std::move(region));
      } while (tryConsume(','));
      expect(')');
    }

    expect(':');
    std::vector<Type> operandTypes = parseTypeList();
    expect("->");
    std::vector<Type> resultTypes = parseTypeList();
    if (operandTypes.size() != operandNames.size())
      throw ParseError{Diagnostic::error(
          "operation '" + fullName + "' has " +
              std::to_string(operandNames.size()) + " operands but signature lists " +
              std::to_string(operandTypes.size()),
          Location::atSource(opLine, opCol))};
    if (resultTypes.size() != resultNames.size())
      throw ParseError{Diagnostic::error(
          "operation '" + fullName + "' defines " +
              std::to_string(resultNames.size()) + " results but signature lists " +
              std::to_string(resultTypes.size()),
          Location::atSource(opLine, opCol))};
    for (std::size_t i = 0; i < operandNames.size(); ++i)
      op.operands.push_back(use(operandNames[i], operandTypes[i]));
    for (std::size_t i = 0; i < resultNames.size(); ++i)
      op.results.push_back(define(resultNames[i].name, resultTypes[i],
                                  resultNames[i].line, resultNames[i].col));
    return op;
  }

  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  Function *fn = nullptr;
  std::unordered_map<std::string, ValueId> values;
  std::unordered_map<std::string, bool> defined;
  std::unordered_map<std::string, ValueId> forwardRefs;
};

} // namespace

Result<Module> parseModule(std::string_view text) {
  try {
    Parser parser(text);
    return parser.parseModule();
  } catch (const ParseError &err) {
    return err.diag;
  }
}

} // namespace tenflow::ir
