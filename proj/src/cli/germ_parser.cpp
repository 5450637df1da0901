#include "lagdef/cli/germ_parser.hpp"

#include <cctype>
#include <set>

namespace lagdef::cli {

std::vector<Poly> GermFile::polys() const {
    std::vector<Poly> out;
    for (const auto &[name, f] : generators)
        out.push_back(f);
    return out;
}

const Poly &GermFile::operator[](std::string_view name) const {
    for (const auto &[n, f] : generators)
        if (n == name)
            return f;
    throw std::out_of_range("no generator named '" + std::string(name) + "'");
}

bool operator==(const GermFile &a, const GermFile &b) {
    if (!a.context || !b.context || !(*a.context == *b.context))
        return false;
    return a.generators == b.generators;
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string &message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line), column_(column), detail_(message) {}

namespace {

constexpr int kMaxExponent = 10000;

enum class Tok { Ident, Int, Sym, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip();
            Token t;
            t.line = line_;
            t.column = column_;
            if (pos_ == text_.size()) {
                out.push_back(t);
                return out;
            }
            char c = text_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                t.kind = Tok::Ident;
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                    t.text += advance();
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                t.kind = Tok::Int;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    t.text += advance();
            } else if (std::string_view("+-*^/()=;").find(c) != std::string_view::npos) {
                t.kind = Tok::Sym;
                t.text = advance();
            } else {
                throw ParseError(line_, column_,
                                 "unexpected character '" + std::string(1, c) + "'");
            }
            out.push_back(std::move(t));
        }
    }

  private:
    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

bool is_keyword(const std::string &s) { return s == "pairs" || s == "params" || s == "time"; }

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    GermFile file() {
        expect_word("pairs");
        const Token &n = expect(Tok::Int, "an integer");
        std::size_t pairs = 0;
        if (n.text.size() > 4 || (pairs = std::stoul(n.text)) == 0)
            throw error(n, "pairs must be a positive integer below 10000");
        expect_sym(";");

        std::set<std::string> declared;
        for (std::size_t i = 1; i <= pairs; ++i) {
            declared.insert("q" + std::to_string(i));
            declared.insert("p" + std::to_string(i));
        }
        auto declare = [&](const Token &t) {
            if (is_keyword(t.text))
                throw error(t, "'" + t.text + "' is a keyword");
            if (!declared.insert(t.text).second)
                throw error(t, "'" + t.text + "' is already declared");
            return t.text;
        };

        std::vector<std::string> params;
        if (at_word("params")) {
            next();
            if (peek().kind != Tok::Ident)
                throw error(peek(), "expected a parameter name");
            while (peek().kind == Tok::Ident)
                params.push_back(declare(next()));
            expect_sym(";");
        }
        std::optional<std::string> time;
        if (at_word("time")) {
            next();
            time = declare(expect(Tok::Ident, "a time variable name"));
            expect_sym(";");
        }

        GermFile germ;
        germ.context = VariableContext::make(pairs, params, time);
        ctx_ = germ.context;

        std::set<std::string> labels;
        while (peek().kind != Tok::End) {
            const Token &name = expect(Tok::Ident, "a generator name");
            if (is_keyword(name.text))
                throw error(name, "'" + name.text + "' must appear before the generators");
            if (ctx_->find(name.text))
                throw error(name, "generator name '" + name.text + "' is a variable");
            if (!labels.insert(name.text).second)
                throw error(name, "duplicate generator '" + name.text + "'");
            expect_sym("=");
            Poly f = expr();
            expect_sym(";");
            germ.generators.emplace_back(name.text, std::move(f));
        }
        if (germ.generators.empty())
            throw error(peek(), "expected at least one generator");
        return germ;
    }

  private:
    Poly expr() {
        Poly r = term();
        while (at_sym("+") || at_sym("-")) {
            bool minus = next().text == "-";
            Poly t = term();
            r = minus ? r - t : r + t;
        }
        return r;
    }

    Poly term() {
        Poly r = unary();
        while (at_sym("*")) {
            next();
            r = r * unary();
        }
        if (at_sym("/"))
            throw error(peek(), "'/' is only allowed inside a rational literal a/b");
        return r;
    }

    Poly unary() {
        if (at_sym("-")) {
            next();
            return -unary();
        }
        if (at_sym("+")) {
            next();
            return unary();
        }
        return power();
    }

    Poly power() {
        Poly base = primary();
        if (!at_sym("^"))
            return base;
        next();
        bool negative = false;
        if (at_sym("-")) {
            negative = true;
            next();
        }
        const Token &e = expect(Tok::Int, "an integer exponent");
        if (negative)
            throw error(e, "negative exponent -" + e.text);
        if (e.text.size() > 5 || std::stoi(e.text) > kMaxExponent)
            throw error(e, "exponent " + e.text + " is too large");
        return pow(base, std::stoi(e.text));
    }

    Poly primary() {
        const Token &t = peek();
        if (t.kind == Tok::Int) {
            next();
            std::string literal = t.text;
            if (at_sym("/")) {
                next();
                const Token &d = expect(Tok::Int, "a denominator");
                if (d.text.find_first_not_of('0') == std::string::npos)
                    throw error(d, "zero denominator");
                literal += "/" + d.text;
            }
            return Poly::constant(ctx_, parse_rational(literal));
        }
        if (t.kind == Tok::Ident) {
            next();
            auto v = ctx_->find(t.text);
            if (!v)
                throw error(t, "undeclared identifier " + t.text);
            return Poly::variable(ctx_, *v);
        }
        if (at_sym("(")) {
            next();
            Poly r = expr();
            expect_sym(")");
            return r;
        }
        throw error(t, "expected an expression, found " + describe(t));
    }

    static std::string describe(const Token &t) {
        return t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'";
    }
    static ParseError error(const Token &t, const std::string &msg) {
        return ParseError(t.line, t.column, msg);
    }

    const Token &peek() const { return toks_[pos_]; }
    const Token &next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool at_sym(std::string_view s) const { return peek().kind == Tok::Sym && peek().text == s; }
    bool at_word(std::string_view s) const {
        return peek().kind == Tok::Ident && peek().text == s;
    }
    const Token &expect(Tok kind, const std::string &what) {
        if (peek().kind != kind)
            throw error(peek(), "expected " + what + ", found " + describe(peek()));
        return next();
    }
    void expect_sym(std::string_view s) {
        if (!at_sym(s))
            throw error(peek(), "expected '" + std::string(s) + "', found " + describe(peek()));
        next();
    }
    void expect_word(std::string_view s) {
        if (!at_word(s))
            throw error(peek(), "expected '" + std::string(s) + "', found " + describe(peek()));
        next();
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    ContextPtr ctx_;
};

} // namespace

GermFile parse_germ(std::string_view text) { return Parser(Lexer(text).run()).file(); }

std::string print_germ(const GermFile &germ) {
    const auto &ctx = *germ.context;
    std::string out = "pairs " + std::to_string(ctx.pairs()) + ";\n";
    if (ctx.num_params() > 0) {
        out += "params";
        for (const auto &p : ctx.param_names())
            out += " " + p;
        out += ";\n";
    }
    if (auto t = ctx.time_name())
        out += "time " + *t + ";\n";
    for (const auto &[name, f] : germ.generators)
        out += name + " = " + f.to_string() + ";\n";
    return out;
}

} // namespace lagdef::cli
