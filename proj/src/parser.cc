// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#include <clsem/syntax.hh>

#include <cctype>

namespace clsem {

namespace {

enum class Tok {
    end,
    ident,      // lowercase-led identifier
    variable,   // uppercase-led identifier
    number,
    kw_inf,     // #inf or the reserved identifier inf
    kw_sup,     // #sup or the reserved identifier sup
    kw_false,   // #false
    kw_not,
    lparen,
    rparen,
    lbrace,
    rbrace,
    comma,
    semicolon,
    colon,
    if_,        // :-
    dot,
    dots,       // ..
    bar,
    plus,
    minus,
    star,
    slash,
    backslash,
    eq,
    ne,
    lt,
    gt,
    le,
    ge,
};

struct Token {
    Tok kind;
    std::string text;
    std::int64_t value = 0;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_{text} { advance(); }

    Token const &peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    [[noreturn]] void fail(std::string const &msg) const { throw ParseError(msg, line_, column_); }

    int look(size_t off = 0) const { return pos_ + off < text_.size() ? static_cast<unsigned char>(text_[pos_ + off]) : -1; }

    void bump() {
        if (pos_ < text_.size()) {
            if (text_[pos_] == '\n') {
                ++line_;
                column_ = 1;
            }
            else { ++column_; }
            ++pos_;
        }
    }

    void skip_trivia() {
        for (;;) {
            int c = look();
            if (c == '%') {
                while (look() != '\n' && look() != -1) { bump(); }
            }
            else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { bump(); }
            else { break; }
        }
    }

    void advance() {
        skip_trivia();
        current_ = Token{};
        current_.line = line_;
        current_.column = column_;
        int c = look();
        if (c == -1) {
            current_.kind = Tok::end;
            return;
        }
        if (std::isdigit(c) != 0) {
            std::uint64_t value = 0;
            while (std::isdigit(look()) != 0) {
                value = value * 10 + static_cast<std::uint64_t>(look() - '0');
                if (value > static_cast<std::uint64_t>(INT64_MAX)) { fail("numeral exceeds 64-bit signed range"); }
                bump();
            }
            current_.kind = Tok::number;
            current_.value = static_cast<std::int64_t>(value);
            return;
        }
        if (std::isalpha(c) != 0 || c == '_') {
            std::string name;
            while (std::isalnum(look()) != 0 || look() == '_') {
                name += static_cast<char>(look());
                bump();
            }
            if (name[0] == '_') { fail("identifiers may not start with '_'"); }
            if (name == "not") { current_.kind = Tok::kw_not; }
            else if (name == "inf") { current_.kind = Tok::kw_inf; }
            else if (name == "sup") { current_.kind = Tok::kw_sup; }
            else if (std::isupper(static_cast<unsigned char>(name[0])) != 0) { current_.kind = Tok::variable; }
            else { current_.kind = Tok::ident; }
            current_.text = std::move(name);
            return;
        }
        if (c == '#') {
            bump();
            std::string name;
            while (std::isalpha(look()) != 0) {
                name += static_cast<char>(look());
                bump();
            }
            if (name == "inf") { current_.kind = Tok::kw_inf; }
            else if (name == "sup") { current_.kind = Tok::kw_sup; }
            else if (name == "false") { current_.kind = Tok::kw_false; }
            else { fail("unknown directive '#" + name + "'"); }
            return;
        }
        bump();
        switch (c) {
            case '(': current_.kind = Tok::lparen; return;
            case ')': current_.kind = Tok::rparen; return;
            case '{': current_.kind = Tok::lbrace; return;
            case '}': current_.kind = Tok::rbrace; return;
            case ',': current_.kind = Tok::comma; return;
            case ';': current_.kind = Tok::semicolon; return;
            case '|': current_.kind = Tok::bar; return;
            case '+': current_.kind = Tok::plus; return;
            case '-': current_.kind = Tok::minus; return;
            case '*': current_.kind = Tok::star; return;
            case '/': current_.kind = Tok::slash; return;
            case '\\': current_.kind = Tok::backslash; return;
            case '=': current_.kind = Tok::eq; return;
            case ':':
                if (look() == '-') {
                    bump();
                    current_.kind = Tok::if_;
                }
                else { current_.kind = Tok::colon; }
                return;
            case '.':
                if (look() == '.') {
                    bump();
                    current_.kind = Tok::dots;
                }
                else { current_.kind = Tok::dot; }
                return;
            case '!':
                if (look() == '=') {
                    bump();
                    current_.kind = Tok::ne;
                    return;
                }
                fail("expected '=' after '!'");
            case '<':
                if (look() == '=') {
                    bump();
                    current_.kind = Tok::le;
                }
                else { current_.kind = Tok::lt; }
                return;
            case '>':
                if (look() == '=') {
                    bump();
                    current_.kind = Tok::ge;
                }
                else { current_.kind = Tok::gt; }
                return;
            default: fail(std::string("unexpected character '") + static_cast<char>(c) + "'");
        }
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    Token current_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_{text} {}

    Program parse() {
        Program p;
        while (lex_.peek().kind != Tok::end) { p.rules.push_back(parse_rule()); }
        return p;
    }

private:
    [[noreturn]] void fail(std::string const &msg) const {
        throw ParseError(msg, lex_.peek().line, lex_.peek().column);
    }

    Token expect(Tok kind, char const *what) {
        if (lex_.peek().kind != kind) { fail(std::string("expected ") + what); }
        return lex_.take();
    }

    bool accept(Tok kind) {
        if (lex_.peek().kind == kind) {
            lex_.take();
            return true;
        }
        return false;
    }

    Rule parse_rule() {
        Rule rule;
        if (accept(Tok::if_)) {
            rule.kind = Rule::Kind::constraint;
            parse_body(rule);
            expect(Tok::dot, "'.'");
            return rule;
        }
        if (accept(Tok::lbrace)) {
            rule.kind = Rule::Kind::choice;
            rule.head = parse_atom();
            expect(Tok::rbrace, "'}'");
        }
        else {
            rule.kind = Rule::Kind::basic;
            rule.head = parse_atom();
        }
        if (accept(Tok::if_)) { parse_body(rule); }
        expect(Tok::dot, "'.'");
        return rule;
    }

    void parse_body(Rule &rule) {
        if (lex_.peek().kind == Tok::dot) { return; } // ":-."  always-violated constraint
        for (;;) {
            rule.body.push_back(parse_conditional_literal());
            if (accept(Tok::semicolon) || accept(Tok::comma)) { continue; }
            break;
        }
    }

    ConditionalLiteral parse_conditional_literal() {
        ConditionalLiteral lit;
        lit.head = parse_cond_head();
        if (accept(Tok::colon)) {
            // after ':' commas bind to the condition list; ';' resumes the body
            for (;;) {
                lit.conditions.push_back(parse_condition());
                if (accept(Tok::comma)) { continue; }
                break;
            }
        }
        return lit;
    }

    CondHead parse_cond_head() {
        if (accept(Tok::kw_false)) { return Falsum{}; }
        auto lc = parse_literal_or_comparison();
        if (auto *lit = std::get_if<BasicLiteral>(&lc)) { return std::move(*lit); }
        return std::move(std::get<Comparison>(lc));
    }

    Condition parse_condition() { return parse_literal_or_comparison(); }

    //! Parses `not not p(t)`, `not p(t)`, `p(t)`, or `t1 rel t2`.
    Condition parse_literal_or_comparison() {
        if (lex_.peek().kind == Tok::kw_not) {
            lex_.take();
            Sign sign = Sign::negation;
            if (accept(Tok::kw_not)) { sign = Sign::double_negation; }
            return BasicLiteral{sign, parse_atom()};
        }
        // an identifier followed by '(' starts an atom; otherwise parse a term
        // and decide between a comparison and an arity-0 atom
        if (lex_.peek().kind == Tok::ident) {
            Token name = lex_.take();
            if (lex_.peek().kind == Tok::lparen) {
                Atom atom = parse_atom_args(std::move(name.text));
                if (is_rel(lex_.peek().kind)) { fail("comparisons relate terms, not atoms"); }
                return BasicLiteral{Sign::none, std::move(atom)};
            }
            TermPtr lhs = parse_term_rest(t_sym(name.text), 0);
            if (is_rel(lex_.peek().kind)) { return parse_comparison_tail(std::move(lhs)); }
            if (std::holds_alternative<SymbolicConstant>(lhs->data)) {
                return BasicLiteral{Sign::none, Atom{std::move(name.text), {}}};
            }
            fail("expected comparison operator");
        }
        TermPtr lhs = parse_term(0);
        if (!is_rel(lex_.peek().kind)) { fail("expected comparison operator"); }
        return parse_comparison_tail(std::move(lhs));
    }

    Comparison parse_comparison_tail(TermPtr lhs) {
        Rel rel = parse_rel();
        TermPtr rhs = parse_term(0);
        return Comparison{std::move(lhs), rel, std::move(rhs)};
    }

    static bool is_rel(Tok t) {
        return t == Tok::eq || t == Tok::ne || t == Tok::lt || t == Tok::gt || t == Tok::le || t == Tok::ge;
    }

    Rel parse_rel() {
        switch (lex_.take().kind) {
            case Tok::eq: return Rel::eq;
            case Tok::ne: return Rel::ne;
            case Tok::lt: return Rel::lt;
            case Tok::gt: return Rel::gt;
            case Tok::le: return Rel::le;
            case Tok::ge: return Rel::ge;
            default: fail("expected comparison operator");
        }
    }

    Atom parse_atom() {
        Token name = expect(Tok::ident, "predicate name");
        if (lex_.peek().kind == Tok::lparen) { return parse_atom_args(std::move(name.text)); }
        return Atom{std::move(name.text), {}};
    }

    Atom parse_atom_args(std::string name) {
        Atom atom{std::move(name), {}};
        expect(Tok::lparen, "'('");
        for (;;) {
            atom.args.push_back(parse_term(0));
            if (accept(Tok::comma)) { continue; }
            break;
        }
        expect(Tok::rparen, "')'");
        return atom;
    }

    // term precedence: 1 '..' | 2 '+' '-' | 3 '*' '/' '\' | 4 unary and primaries
    TermPtr parse_term(int min_prec) { return parse_term_rest(parse_primary(), min_prec); }

    TermPtr parse_term_rest(TermPtr lhs, int min_prec) {
        for (;;) {
            Tok t = lex_.peek().kind;
            int prec = 0;
            BinOp op{};
            if (t == Tok::dots) {
                prec = 1;
                op = BinOp::range;
            }
            else if (t == Tok::plus) {
                prec = 2;
                op = BinOp::add;
            }
            else if (t == Tok::minus) {
                prec = 2;
                op = BinOp::sub;
            }
            else if (t == Tok::star) {
                prec = 3;
                op = BinOp::mul;
            }
            else if (t == Tok::slash) {
                prec = 3;
                op = BinOp::div;
            }
            else if (t == Tok::backslash) {
                prec = 3;
                op = BinOp::mod;
            }
            else { break; }
            if (prec < min_prec) { break; }
            lex_.take();
            TermPtr rhs = parse_term(prec + 1);
            lhs = t_bin(op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    TermPtr parse_primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::number: return t_num(t.value);
            case Tok::ident: return t_sym(std::move(t.text));
            case Tok::variable: return t_var(std::move(t.text));
            case Tok::kw_inf: return t_inf();
            case Tok::kw_sup: return t_sup();
            case Tok::minus: return t_neg(parse_term(4));
            case Tok::bar: {
                TermPtr arg = parse_term(0);
                expect(Tok::bar, "'|'");
                return t_abs(std::move(arg));
            }
            case Tok::lparen: {
                TermPtr inner = parse_term(0);
                expect(Tok::rparen, "')'");
                return inner;
            }
            default: throw ParseError("expected term", t.line, t.column);
        }
    }

    Lexer lex_;
};

} // namespace

Program parse_program(std::string_view text) { return Parser{text}.parse(); }

} // namespace clsem
