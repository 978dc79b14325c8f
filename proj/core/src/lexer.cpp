#include "lexer.hpp"

#include <cctype>

namespace ontospec::detail {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c));
}

bool ident_part(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

class Scanner {
 public:
  Scanner(const std::string& source, std::string file,
          std::vector<Diagnostic>& diags)
      : src_(source), file_(std::move(file)), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_trivia();
      if (eof()) break;
      tokens.push_back(next_token());
    }
    Token end;
    end.type = Tok::End;
    end.span = here();
    tokens.push_back(end);
    return tokens;
  }

 private:
  bool eof() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  SourceSpan here() const {
    SourceSpan s;
    s.file = file_;
    s.startLine = s.endLine = line_;
    s.startCol = s.endCol = col_;
    return s;
  }

  void skip_trivia() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void error(const SourceSpan& span, const std::string& message) {
    Diagnostic d;
    d.severity = Severity::Error;
    d.code = "P01";
    d.span = span;
    d.message = message;
    diags_.push_back(d);
  }

  Token make(Tok type, std::string text, SourceSpan span) {
    span.endLine = line_;
    span.endCol = col_ > 1 ? col_ - 1 : col_;
    Token t;
    t.type = type;
    t.text = std::move(text);
    t.span = span;
    return t;
  }

  Token next_token() {
    SourceSpan start = here();
    char c = peek();

    if (ident_start(c)) {
      std::string text;
      while (!eof() && ident_part(peek())) {
        if (peek() == '-' && peek(1) == '>') break;
        text.push_back(advance());
      }
      return make(Tok::Ident, text, start);
    }

    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        text.push_back(advance());
      }
      return make(Tok::Int, text, start);
    }

    if (c == '"') return string_token(start);

    if (c == '-' && peek(1) == '>') {
      advance();
      advance();
      return make(Tok::Arrow, "->", start);
    }

    if ((c == '+' || c == '~' || c == '-') && ident_start(peek(1))) {
      std::string text;
      text.push_back(advance());
      text.push_back(advance());
      return make(Tok::Status, text, start);
    }

    switch (c) {
      case '\'': advance(); return make(Tok::Prime, "'", start);
      case '{': advance(); return make(Tok::LBrace, "{", start);
      case '}': advance(); return make(Tok::RBrace, "}", start);
      case '[': advance(); return make(Tok::LBracket, "[", start);
      case ']': advance(); return make(Tok::RBracket, "]", start);
      case '(': advance(); return make(Tok::LParen, "(", start);
      case ')': advance(); return make(Tok::RParen, ")", start);
      case ';': advance(); return make(Tok::Semi, ";", start);
      case ':': advance(); return make(Tok::Colon, ":", start);
      case ',': advance(); return make(Tok::Comma, ",", start);
      case '/': advance(); return make(Tok::Slash, "/", start);
      case '|': advance(); return make(Tok::Pipe, "|", start);
      case '&': advance(); return make(Tok::Amp, "&", start);
      case '*': advance(); return make(Tok::Star, "*", start);
      default: break;
    }

    advance();
    error(start, std::string("unexpected character '") + c + "'");
    skip_trivia();
    if (eof()) {
      Token end;
      end.type = Tok::End;
      end.span = here();
      return end;
    }
    return next_token();
  }

  Token string_token(SourceSpan start) {
    advance();  // opening quote
    std::string value;
    while (true) {
      if (eof() || peek() == '\n') {
        error(start, "unterminated string");
        break;
      }
      char c = advance();
      if (c == '"') break;
      if (c == '\\') {
        if (eof()) {
          error(start, "unterminated string");
          break;
        }
        char esc = advance();
        switch (esc) {
          case '"': value.push_back('"'); break;
          case '\\': value.push_back('\\'); break;
          case 'n': value.push_back('\n'); break;
          case 't': value.push_back('\t'); break;
          case 'r': value.push_back('\r'); break;
          default:
            error(here(), std::string("unknown escape '\\") + esc + "'");
            value.push_back(esc);
            break;
        }
        continue;
      }
      value.push_back(c);
    }
    return make(Tok::String, value, start);
  }

  const std::string& src_;
  std::string file_;
  std::vector<Diagnostic>& diags_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<Token> lex(const std::string& source, const std::string& file,
                       std::vector<Diagnostic>& diags) {
  return Scanner(source, file, diags).run();
}

}  // namespace ontospec::detail
