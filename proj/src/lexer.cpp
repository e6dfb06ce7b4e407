#include "fspv/lexer.hpp"

#include <cctype>
#include <unordered_map>

#include "fspv/errors.hpp"

namespace fspv {

namespace {

const std::unordered_map<std::string_view, Tok> kKeywords = {
    {"const", Tok::KwConst},     {"range", Tok::KwRange},
    {"property", Tok::KwProperty}, {"progress", Tok::KwProgress},
    {"when", Tok::KwWhen},       {"STOP", Tok::KwStop},
};

}  // namespace

std::vector<Token> lex(std::string_view src, bool with_strings) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (src[i + k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };
    auto push = [&](Tok kind, std::size_t len) {
        out.push_back(Token{kind, std::string(src.substr(i, len)), 0, line, col});
        advance(len);
    };

    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t len = 1;
            while (i + len < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i + len])) ||
                    src[i + len] == '_'))
                ++len;
            auto kw = kKeywords.find(src.substr(i, len));
            push(kw == kKeywords.end() ? Tok::Ident : kw->second, len);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t len = 1;
            while (i + len < src.size() &&
                   std::isdigit(static_cast<unsigned char>(src[i + len])))
                ++len;
            Token t{Tok::Int, std::string(src.substr(i, len)), 0, line, col};
            t.value = std::stol(t.text);
            out.push_back(std::move(t));
            advance(len);
            continue;
        }
        if (c == '"' && with_strings) {
            std::size_t len = 1;
            std::string text;
            while (i + len < src.size() && src[i + len] != '"') {
                if (src[i + len] == '\n')
                    throw SyntaxError(line, col, "unterminated string literal");
                text += src[i + len];
                ++len;
            }
            if (i + len >= src.size())
                throw SyntaxError(line, col, "unterminated string literal");
            out.push_back(Token{Tok::String, std::move(text), 0, line, col});
            advance(len + 1);
            continue;
        }
        auto two = src.substr(i, 2);
        if (two == "->") { push(Tok::Arrow, 2); continue; }
        if (two == "..") { push(Tok::DotDot, 2); continue; }
        if (two == "||") { push(Tok::PipePipe, 2); continue; }
        if (two == "&&") { push(Tok::AmpAmp, 2); continue; }
        if (two == "==") { push(Tok::EqEq, 2); continue; }
        if (two == "!=") { push(Tok::Ne, 2); continue; }
        if (two == "<=") { push(Tok::Le, 2); continue; }
        if (two == ">=") { push(Tok::Ge, 2); continue; }
        switch (c) {
            case '=': push(Tok::Eq, 1); continue;
            case ',': push(Tok::Comma, 1); continue;
            case '.': push(Tok::Dot, 1); continue;
            case '|': push(Tok::Pipe, 1); continue;
            case '(': push(Tok::LParen, 1); continue;
            case ')': push(Tok::RParen, 1); continue;
            case '[': push(Tok::LBracket, 1); continue;
            case ']': push(Tok::RBracket, 1); continue;
            case '{': push(Tok::LBrace, 1); continue;
            case '}': push(Tok::RBrace, 1); continue;
            case ':': push(Tok::Colon, 1); continue;
            case '/': push(Tok::Slash, 1); continue;
            case '+': push(Tok::Plus, 1); continue;
            case '-': push(Tok::Minus, 1); continue;
            case '*': push(Tok::Star, 1); continue;
            case '^': push(Tok::Caret, 1); continue;
            case '<': push(Tok::Lt, 1); continue;
            case '>': push(Tok::Gt, 1); continue;
            case '&': push(Tok::Amp, 1); continue;
            case '!': push(Tok::Bang, 1); continue;
            default:
                throw SyntaxError(line, col,
                                  std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back(Token{Tok::End, "", 0, line, col});
    return out;
}

const char* token_name(Tok kind) {
    switch (kind) {
        case Tok::Ident: return "identifier";
        case Tok::Int: return "integer";
        case Tok::String: return "string";
        case Tok::KwConst: return "'const'";
        case Tok::KwRange: return "'range'";
        case Tok::KwProperty: return "'property'";
        case Tok::KwProgress: return "'progress'";
        case Tok::KwWhen: return "'when'";
        case Tok::KwStop: return "'STOP'";
        case Tok::Eq: return "'='";
        case Tok::Comma: return "','";
        case Tok::Dot: return "'.'";
        case Tok::DotDot: return "'..'";
        case Tok::Arrow: return "'->'";
        case Tok::Pipe: return "'|'";
        case Tok::PipePipe: return "'||'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::Colon: return "':'";
        case Tok::Slash: return "'/'";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Caret: return "'^'";
        case Tok::Lt: return "'<'";
        case Tok::Le: return "'<='";
        case Tok::Gt: return "'>'";
        case Tok::Ge: return "'>='";
        case Tok::EqEq: return "'=='";
        case Tok::Ne: return "'!='";
        case Tok::Amp: return "'&'";
        case Tok::AmpAmp: return "'&&'";
        case Tok::Bang: return "'!'";
        case Tok::End: return "end of input";
    }
    return "?";
}

}  // namespace fspv
