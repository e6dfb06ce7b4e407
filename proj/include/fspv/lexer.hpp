#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fspv {

enum class Tok {
    Ident, Int, String,
    KwConst, KwRange, KwProperty, KwProgress, KwWhen, KwStop,
    Eq,            // =
    Comma, Dot, DotDot, Arrow,
    Pipe, PipePipe,
    LParen, RParen, LBracket, RBracket, LBrace, RBrace,
    Colon, Slash,
    Plus, Minus, Star, Caret,
    Lt, Le, Gt, Ge, EqEq, Ne, Amp, AmpAmp, Bang,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    long value = 0;  // for Int
    int line = 1;
    int column = 1;
};

// Shared by the FSP and Gaia parsers; `//` starts a line comment. When
// `with_strings` is set, double-quoted string literals are lexed (Gaia
// safety annotations and descriptions).
std::vector<Token> lex(std::string_view source, bool with_strings = false);

const char* token_name(Tok kind);

}  // namespace fspv
