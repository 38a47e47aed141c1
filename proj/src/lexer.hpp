#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "srep/text.hpp"

namespace srep::detail {

struct Token {
    enum Kind {
        Ident,
        LParen,
        RParen,
        LBrace,
        RBrace,
        LBracket,
        RBracket,
        Comma,
        Semi,
        Question,
        Star,
        Dot,
        Caret,
        Colon,
        Lt,
        Eq,
        LeqArrow, // <=
        Wedge,    // /\ (meet)
        End
    } kind = End;
    std::string text;
    int col = 0; // 1-based within the lexed string
};

class Lexer {
public:
    explicit Lexer(std::string_view text, int line = 0) : line_(line) { tokenize(text); }

    const Token& peek() const {
        return pos_ < tokens_.size() ? tokens_[pos_] : tokens_.back();
    }
    Token next() {
        const Token& t = peek();
        if (t.kind != Token::End)
            ++pos_;
        return t;
    }
    bool at_end() const { return peek().kind == Token::End; }

    Token expect(Token::Kind kind, const char* what) {
        if (peek().kind != kind)
            fail(std::string("expected ") + what);
        return next();
    }

    [[noreturn]] void fail(const std::string& message, const char* code = DIAG_SYNTAX) const {
        throw diag_error(Diagnostic{code, line_, peek().col, message});
    }

    int line() const { return line_; }

private:
    void tokenize(std::string_view text) {
        size_t i = 0;
        auto push = [&](Token::Kind k, size_t begin, size_t len) {
            tokens_.push_back(Token{k, std::string(text.substr(begin, len)),
                                    static_cast<int>(begin) + 1});
        };
        while (i < text.size()) {
            char c = text[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (c == '#')
                break; // comment to end of line
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                size_t begin = i;
                while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                           text[i] == '_'))
                    ++i;
                push(Token::Ident, begin, i - begin);
                continue;
            }
            if (c == '<' && i + 1 < text.size() && text[i + 1] == '=') {
                push(Token::LeqArrow, i, 2);
                i += 2;
                continue;
            }
            if (c == '/' && i + 1 < text.size() && text[i + 1] == '\\') {
                push(Token::Wedge, i, 2);
                i += 2;
                continue;
            }
            Token::Kind kind;
            switch (c) {
            case '(': kind = Token::LParen; break;
            case ')': kind = Token::RParen; break;
            case '{': kind = Token::LBrace; break;
            case '}': kind = Token::RBrace; break;
            case '[': kind = Token::LBracket; break;
            case ']': kind = Token::RBracket; break;
            case ',': kind = Token::Comma; break;
            case ';': kind = Token::Semi; break;
            case '?': kind = Token::Question; break;
            case '*': kind = Token::Star; break;
            case '.': kind = Token::Dot; break;
            case '^': kind = Token::Caret; break;
            case ':': kind = Token::Colon; break;
            case '<': kind = Token::Lt; break;
            case '=': kind = Token::Eq; break;
            default:
                throw diag_error(Diagnostic{DIAG_SYNTAX, line_, static_cast<int>(i) + 1,
                                            std::string("unexpected character '") + c + "'"});
            }
            push(kind, i, 1);
            ++i;
        }
        tokens_.push_back(Token{Token::End, "", static_cast<int>(text.size()) + 1});
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
    int line_;
};

// Space-directed sub-parsers shared by the standalone string parsers and the
// spec-file reader.
Code parse_code_tokens(const Space& s, Lexer& lx);
Point parse_point_tokens(const Space& s, Lexer& lx);
WordProduct parse_wp_tokens(const Space& letter_space, Lexer& lx);

} // namespace srep::detail
