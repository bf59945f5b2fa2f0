#include <cctype>
#include <string>
#include <vector>

#include "mcalg/syntax.hpp"

namespace mcalg {

namespace {

enum class Tok { word, lbrace, rbrace, colon, comma, end };

struct Token {
  Tok kind;
  std::string text;
  Location loc;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::word: return "'" + t.text + "'";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::colon: return "':'";
    case Tok::comma: return "','";
    case Tok::end: return "end of input";
  }
  return "token";
}

class Lexer {
 public:
  Lexer(std::string_view text, std::vector<Diagnostic>& diags)
      : text_(text), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blank();
      Location start = here();
      if (pos_ >= text_.size()) {
        out.push_back(Token{Tok::end, "", close(start)});
        return out;
      }
      char ch = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
        std::string word;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_')) {
          word += text_[pos_];
          advance();
        }
        if (!is_identifier(word)) {
          error("invalid identifier '" + word + "'", close(start));
          continue;
        }
        out.push_back(Token{Tok::word, std::move(word), close(start)});
        continue;
      }
      advance();
      switch (ch) {
        case '{': out.push_back(Token{Tok::lbrace, "{", close(start)}); break;
        case '}': out.push_back(Token{Tok::rbrace, "}", close(start)}); break;
        case ':': out.push_back(Token{Tok::colon, ":", close(start)}); break;
        case ',': out.push_back(Token{Tok::comma, ",", close(start)}); break;
        default: {
          std::string shown = std::isprint(static_cast<unsigned char>(ch))
                                  ? std::string(1, ch)
                                  : "\\x" + hex(static_cast<unsigned char>(ch));
          error("unexpected character '" + shown + "'", close(start));
        }
      }
    }
  }

 private:
  static std::string hex(unsigned char b) {
    const char* digits = "0123456789abcdef";
    return {digits[b >> 4], digits[b & 0xf]};
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
        advance();
      } else if (ch == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  Location here() const { return Location{line_, col_, line_, col_}; }
  Location close(Location start) const {
    start.end_line = line_;
    start.end_column = col_;
    return start;
  }

  void error(std::string msg, Location loc) {
    diags_.push_back(Diagnostic{Severity::error, std::move(msg), loc});
  }

  std::string_view text_;
  std::vector<Diagnostic>& diags_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diags)
      : toks_(std::move(tokens)), diags_(diags) {}

  std::vector<Constraint> run() {
    std::vector<Constraint> out;
    while (peek().kind != Tok::end) {
      if (!decl(out)) recover();
    }
    return out;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::end) ++pos_;
    return t;
  }

  bool fail(const std::string& expected) {
    diags_.push_back(Diagnostic{Severity::error,
                                "expected " + expected + ", found " +
                                    describe(peek()),
                                peek().loc});
    return false;
  }

  // Skip past the next '}' so one broken declaration yields one diagnostic.
  void recover() {
    while (peek().kind != Tok::end) {
      if (take().kind == Tok::rbrace) return;
    }
  }

  bool word(const char* keyword) const {
    return peek().kind == Tok::word && peek().text == keyword;
  }

  bool decl(std::vector<Constraint>& out) {
    bool complete = false;
    if (word("complete")) {
      take();
      complete = true;
    }
    if (!word("class")) return fail(complete ? "'class'" : "'class' or 'complete'");
    take();
    if (peek().kind != Tok::word) return fail("class name");
    std::string cls = take().text;
    if (peek().kind != Tok::lbrace) return fail("'{'");
    take();

    AttrMap attrs;
    bool ok = true;
    if (peek().kind != Tok::rbrace) {
      while (true) {
        if (peek().kind != Tok::word) return fail("attribute name");
        const Token& name = take();
        if (peek().kind != Tok::colon) return fail("':'");
        take();
        if (peek().kind != Tok::word) return fail("type name");
        std::string type = take().text;
        bool dup = false;
        for (const auto& [a, t] : attrs) dup = dup || a == name.text;
        if (dup) {
          diags_.push_back(Diagnostic{
              Severity::error,
              "duplicate attribute '" + name.text + "' in class " + cls,
              name.loc});
          ok = false;
        } else {
          attrs.emplace_back(name.text, std::move(type));
        }
        if (peek().kind == Tok::comma) {
          take();
          continue;
        }
        break;
      }
    }
    if (peek().kind != Tok::rbrace) return fail("',' or '}'");
    take();
    if (!ok) return true;  // already reported; the closing brace is consumed

    out.push_back(ClassExists{cls});
    for (const auto& [a, t] : attrs) out.push_back(AttrTyped{cls, a, t});
    if (complete) out.push_back(AttrComplete{cls, std::move(attrs)});
    return true;
  }

  std::vector<Token> toks_;
  std::vector<Diagnostic>& diags_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseResult parse(std::string_view text) {
  ParseResult result;
  auto tokens = Lexer(text, result.diagnostics).run();
  auto constraints = Parser(std::move(tokens), result.diagnostics).run();
  bool failed = false;
  for (const auto& d : result.diagnostics) failed = failed || d.severity == Severity::error;
  if (!failed) result.model = Model(std::move(constraints));
  return result;
}

}  // namespace mcalg
