#pragma once

#include <string>
#include <vector>

#include "ontospec/diagnostics.hpp"

namespace ontospec::detail {

enum class Tok {
  Ident,
  String,
  Int,
  Status,  // +R, -I, ~U, ...
  Arrow,   // ->
  Prime,   // '
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Semi,
  Colon,
  Comma,
  Slash,
  Pipe,
  Amp,
  Star,
  End,
};

struct Token {
  Tok type = Tok::End;
  std::string text;  // Ident/Int spelling, decoded String value, Status text
  SourceSpan span;
};

// Tokenizes a document; lexical problems are reported as P01 and scanning
// continues, so the parser still sees the rest of the file.
std::vector<Token> lex(const std::string& source, const std::string& file,
                       std::vector<Diagnostic>& diags);

}  // namespace ontospec::detail
