#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pcent/error.hpp"
#include "pcent/expr.hpp"

namespace pcent::detail {

struct Token {
    enum class Kind { number, ident, punct, end };
    Kind kind = Kind::end;
    std::string text;
    double value = 0;
    int column = 1;
};

/// Splits one line into tokens. '#' starts a comment.
std::vector<Token> tokenize(std::string_view line, int line_no);

/// Recursive-descent cursor over a token line, shared by the expression,
/// map-file and literal parsers.
class Cursor {
public:
    Cursor(std::vector<Token> tokens, int line_no) : tokens_(std::move(tokens)), line_(line_no) {}

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
    bool at_end() const { return peek().kind == Token::Kind::end; }
    bool is_punct(char c) const { return peek().kind == Token::Kind::punct && peek().text[0] == c; }
    bool is_ident(std::string_view s) const { return peek().kind == Token::Kind::ident && peek().text == s; }

    void expect_punct(char c);
    std::string expect_ident();
    [[noreturn]] void fail(const std::string& what) const;
    int line() const { return line_; }

    Expr expr();
    double constant();

private:
    Expr term();
    Expr factor();
    Expr power();
    Expr primary();

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int line_;
};

}  // namespace pcent::detail
