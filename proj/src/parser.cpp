#include "asjust/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace asjust {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + msg),
      line(line),
      column(column) {}

namespace {

struct Token {
    enum Type { ident, lparen, rparen, comma, dot, minus, implied_by, eof } type;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_trivia();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Token::eof, "", line, col};
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                advance();
            return {Token::ident, std::string(text_.substr(start, pos_ - start)), line, col};
        }
        switch (c) {
            case '(': advance(); return {Token::lparen, "(", line, col};
            case ')': advance(); return {Token::rparen, ")", line, col};
            case ',': advance(); return {Token::comma, ",", line, col};
            case '.': advance(); return {Token::dot, ".", line, col};
            case '-': advance(); return {Token::minus, "-", line, col};
            case ':':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                    advance();
                    advance();
                    return {Token::implied_by, ":-", line, col};
                }
                throw ParseError("expected ':-'", line, col);
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_trivia() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

bool is_variable_name(const std::string& name) {
    return !name.empty() && std::isupper(static_cast<unsigned char>(name[0]));
}

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { shift(); }

    RawProgram parse_program() {
        RawProgram p;
        while (tok_.type != Token::eof) p.clauses.push_back(parse_clause());
        return p;
    }

private:
    void shift() { tok_ = lexer_.next(); }

    Token expect(Token::Type type, const char* what) {
        if (tok_.type != type) throw ParseError(std::string("expected ") + what, tok_.line, tok_.column);
        Token t = tok_;
        shift();
        return t;
    }

    RawClause parse_clause() {
        RawClause c;
        int head_line = tok_.line, head_col = tok_.column;
        c.head = parse_literal();
        if (c.head.naf)
            throw ParseError("negation as failure cannot appear in a clause head", head_line,
                             head_col);
        if (tok_.type == Token::implied_by) {
            shift();
            c.body.push_back(parse_literal());
            while (tok_.type == Token::comma) {
                shift();
                c.body.push_back(parse_literal());
            }
        }
        if (tok_.type != Token::dot)
            throw ParseError("clause must end with '.'", tok_.line, tok_.column);
        shift();
        return c;
    }

    RawLiteral parse_literal() {
        RawLiteral l;
        if (tok_.type == Token::ident && tok_.text == "not") {
            l.naf = true;
            shift();
            if (tok_.type == Token::ident && tok_.text == "not")
                throw ParseError("'not not' is not allowed", tok_.line, tok_.column);
        }
        if (tok_.type == Token::minus) {
            l.classically_negated = true;
            shift();
        }
        l.atom = parse_atom();
        return l;
    }

    RawAtom parse_atom() {
        Token name = expect(Token::ident, "an atom");
        if (name.text == "not")
            throw ParseError("'not' is a keyword and cannot name an atom", name.line, name.column);
        if (is_variable_name(name.text))
            throw ParseError("variable '" + name.text + "' cannot be used as an atom", name.line,
                             name.column);
        RawAtom a;
        a.predicate = name.text;
        if (tok_.type == Token::lparen) {
            shift();
            a.args.push_back(parse_term());
            while (tok_.type == Token::comma) {
                shift();
                a.args.push_back(parse_term());
            }
            expect(Token::rparen, "')'");
        }
        return a;
    }

    Term parse_term() {
        Token t = expect(Token::ident, "a constant or variable");
        if (t.text == "not")
            throw ParseError("'not' is a keyword and cannot name a term", t.line, t.column);
        return Term{t.text, is_variable_name(t.text)};
    }

    Lexer lexer_;
    Token tok_{Token::eof, "", 1, 1};
};

bool raw_literal_has_variables(const RawLiteral& l) {
    return std::any_of(l.atom.args.begin(), l.atom.args.end(),
                       [](const Term& t) { return t.is_variable; });
}

std::string render_ground_atom(const RawAtom& a,
                               const std::map<std::string, std::string>& binding) {
    std::string out = a.predicate;
    if (!a.args.empty()) {
        out += '(';
        for (size_t i = 0; i < a.args.size(); ++i) {
            if (i) out += ',';
            out += a.args[i].is_variable ? binding.at(a.args[i].name) : a.args[i].name;
        }
        out += ')';
    }
    return out;
}

Literal instantiate(const RawLiteral& l, const std::map<std::string, std::string>& binding) {
    return Literal(render_ground_atom(l.atom, binding), l.classically_negated, l.naf);
}

Clause instantiate(const RawClause& c, const std::map<std::string, std::string>& binding) {
    Clause out;
    out.head = instantiate(c.head, binding);
    for (const RawLiteral& b : c.body) out.body.push_back(instantiate(b, binding));
    return out;
}

std::vector<std::string> clause_variables(const RawClause& c) {
    std::vector<std::string> vars;
    auto collect = [&vars](const RawLiteral& l) {
        for (const Term& t : l.atom.args)
            if (t.is_variable && std::find(vars.begin(), vars.end(), t.name) == vars.end())
                vars.push_back(t.name);
    };
    collect(c.head);
    for (const RawLiteral& b : c.body) collect(b);
    return vars;  // first-occurrence order
}

}  // namespace

bool RawProgram::has_variables() const {
    for (const RawClause& c : clauses) {
        if (raw_literal_has_variables(c.head)) return true;
        for (const RawLiteral& b : c.body)
            if (raw_literal_has_variables(b)) return true;
    }
    return false;
}

std::vector<std::string> RawProgram::constants() const {
    std::set<std::string> names;
    auto collect = [&names](const RawLiteral& l) {
        for (const Term& t : l.atom.args)
            if (!t.is_variable) names.insert(t.name);
    };
    for (const RawClause& c : clauses) {
        collect(c.head);
        for (const RawLiteral& b : c.body) collect(b);
    }
    return {names.begin(), names.end()};
}

RawProgram parse_raw_program(std::string_view text) { return Parser(text).parse_program(); }

LogicProgram ground_program(const RawProgram& p) {
    const std::map<std::string, std::string> empty_binding;
    if (!p.has_variables()) {
        std::vector<Clause> ground;
        for (const RawClause& c : p.clauses) ground.push_back(instantiate(c, empty_binding));
        return LogicProgram::from_clauses(std::move(ground));
    }

    std::vector<std::string> consts = p.constants();
    if (consts.empty())
        throw GroundingError("program uses variables but mentions no constant to ground over");

    std::vector<Clause> ground;
    std::set<Clause> seen;
    auto emit = [&](const Clause& c) {
        if (seen.insert(c).second) ground.push_back(c);
    };
    for (const RawClause& c : p.clauses) {
        std::vector<std::string> vars = clause_variables(c);
        if (vars.empty()) {
            emit(instantiate(c, empty_binding));
            continue;
        }
        // Odometer over the clause's variables, last variable fastest.
        std::vector<size_t> idx(vars.size(), 0);
        while (true) {
            std::map<std::string, std::string> binding;
            for (size_t i = 0; i < vars.size(); ++i) binding[vars[i]] = consts[idx[i]];
            emit(instantiate(c, binding));
            size_t i = vars.size();
            while (i > 0 && ++idx[i - 1] == consts.size()) idx[--i] = 0;
            if (i == 0) break;
        }
    }
    return LogicProgram::from_clauses(std::move(ground));
}

LogicProgram parse_program(std::string_view text) {
    return ground_program(parse_raw_program(text));
}

}  // namespace asjust
