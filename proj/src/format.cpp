#include "lpa/format.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "lpa/errors.hpp"

namespace lpa {

std::string to_string(const Rational& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

Rational parse_rational(const std::string& text) {
    try {
        Rational q(text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw InputError("bad rational: " + text);
    }
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Token {
    enum class Kind { Ident, Int, Plus, Minus, Star, Slash, LParen, RParen, LBracket, RBracket,
                      Colon, Arrow, End };
    Kind kind;
    std::string text;
    std::size_t line;
    std::size_t col;
};

std::vector<Token> lex(const std::string& text, bool graph_mode) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto bump = [&](std::size_t n) {
        col += n;
        i += n;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            bump(1);
            continue;
        }
        if (c == '#') {  // comment to end of line
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        std::size_t tline = line, tcol = col;
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j])) ++j;
            out.push_back({Token::Kind::Ident, text.substr(i, j - i), tline, tcol});
            bump(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Kind::Int, text.substr(i, j - i), tline, tcol});
            bump(j - i);
            continue;
        }
        if (graph_mode && c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            out.push_back({Token::Kind::Arrow, "->", tline, tcol});
            bump(2);
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case '+': kind = Token::Kind::Plus; break;
            case '-': kind = Token::Kind::Minus; break;
            case '*': kind = Token::Kind::Star; break;
            case '/': kind = Token::Kind::Slash; break;
            case '(': kind = Token::Kind::LParen; break;
            case ')': kind = Token::Kind::RParen; break;
            case '[': kind = Token::Kind::LBracket; break;
            case ']': kind = Token::Kind::RBracket; break;
            case ':': kind = Token::Kind::Colon; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", tline, tcol);
        }
        out.push_back({kind, std::string(1, c), tline, tcol});
        bump(1);
    }
    out.push_back({Token::Kind::End, "", line, col});
    return out;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    Graph g;
    std::istringstream input(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(input, raw)) {
        ++line_no;
        std::vector<Token> tokens = lex(raw, true);
        // patch in the real line number (lex saw a single line)
        for (Token& t : tokens) t.line = line_no;
        std::size_t i = 0;
        if (tokens[i].kind == Token::Kind::End) continue;  // blank or comment
        const Token& head = tokens[i];
        auto expect = [&](Token::Kind k, const char* what) -> const Token& {
            if (tokens[i].kind != k)
                throw ParseError(std::string("expected ") + what, tokens[i].line, tokens[i].col);
            return tokens[i++];
        };
        if (head.kind != Token::Kind::Ident)
            throw ParseError("expected declaration keyword", head.line, head.col);
        if (head.text == "vertex") {
            ++i;
            if (tokens[i].kind != Token::Kind::Ident)
                throw ParseError("expected vertex name", tokens[i].line, tokens[i].col);
            while (tokens[i].kind == Token::Kind::Ident) {
                try {
                    g.add_vertex(tokens[i].text);
                } catch (const InputError& err) {
                    throw ParseError(err.what(), tokens[i].line, tokens[i].col);
                }
                ++i;
            }
        } else if (head.text == "edge" || head.text == "bundle") {
            ++i;
            const Token& name = expect(Token::Kind::Ident, "edge name");
            expect(Token::Kind::Colon, "':'");
            const Token& src = expect(Token::Kind::Ident, "source vertex");
            expect(Token::Kind::Arrow, "'->'");
            const Token& dst = expect(Token::Kind::Ident, "range vertex");
            if (!g.find_vertex(src.text))
                throw ParseError("undeclared vertex: " + src.text, src.line, src.col);
            if (!g.find_vertex(dst.text))
                throw ParseError("undeclared vertex: " + dst.text, dst.line, dst.col);
            try {
                if (head.text == "edge")
                    g.add_edge(name.text, src.text, dst.text);
                else
                    g.add_bundle(name.text, src.text, dst.text);
            } catch (const InputError& err) {
                throw ParseError(err.what(), name.line, name.col);
            }
        } else {
            throw ParseError("unknown declaration '" + head.text + "'", head.line, head.col);
        }
        if (tokens[i].kind != Token::Kind::End)
            throw ParseError("trailing tokens on declaration line", tokens[i].line, tokens[i].col);
    }
    return g;
}

std::string print_graph(const Graph& g) {
    std::ostringstream os;
    if (g.vertex_count() > 0) {
        os << "vertex";
        for (VertexId v = 0; v < g.vertex_count(); ++v) os << ' ' << g.vertex_name(v);
        os << '\n';
    }
    for (EdgeId e = 0; e < g.decl_count(); ++e) {
        const auto& d = g.decl(e);
        os << (d.is_bundle ? "bundle " : "edge ") << d.name << " : " << g.vertex_name(d.src)
           << " -> " << g.vertex_name(d.dst) << '\n';
    }
    return os.str();
}

namespace {

class ExprParser {
public:
    ExprParser(const Graph& g, std::vector<Token> tokens) : g_(g), tokens_(std::move(tokens)) {}

    Element parse() {
        Element e = expr();
        if (peek().kind != Token::Kind::End)
            throw ParseError("trailing input", peek().line, peek().col);
        return e;
    }

private:
    const Token& peek() const { return tokens_[i_]; }
    const Token& take() { return tokens_[i_++]; }
    bool at(Token::Kind k) const { return peek().kind == k; }

    Element expr() {
        bool negate = false;
        if (at(Token::Kind::Minus)) {
            take();
            negate = true;
        } else if (at(Token::Kind::Plus)) {
            take();
        }
        Element acc = term();
        if (negate) acc = acc.scaled(-1);
        while (at(Token::Kind::Plus) || at(Token::Kind::Minus)) {
            bool minus = take().kind == Token::Kind::Minus;
            Element t = term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    Element term() {
        Rational coeff = 1;
        bool had_rational = false;
        if (at(Token::Kind::Int)) {
            had_rational = true;
            std::string num = take().text;
            if (at(Token::Kind::Slash)) {
                take();
                if (!at(Token::Kind::Int))
                    throw ParseError("expected denominator", peek().line, peek().col);
                std::string den = take().text;
                if (Integer(den) == 0)
                    throw ParseError("zero denominator", peek().line, peek().col);
                coeff = parse_rational(num + "/" + den);
            } else {
                coeff = parse_rational(num);
            }
        }
        if (!at(Token::Kind::Ident) && !at(Token::Kind::LParen)) {
            // "0" alone denotes the zero element (the printer emits it)
            if (had_rational && coeff == 0) return Element{};
            throw ParseError("expected factor", peek().line, peek().col);
        }
        Element acc = factor();
        while (at(Token::Kind::Ident) || at(Token::Kind::LParen))
            acc = multiply(g_, acc, factor());
        return acc.scaled(coeff);
    }

    Element factor() {
        Element base;
        if (at(Token::Kind::LParen)) {
            take();
            base = expr();
            if (!at(Token::Kind::RParen))
                throw ParseError("expected ')'", peek().line, peek().col);
            take();
        } else {
            base = atom();
        }
        if (at(Token::Kind::Star)) {
            take();
            base = involution(base);
        }
        return base;
    }

    Element atom() {
        const Token& id = take();
        if (id.kind != Token::Kind::Ident)
            throw ParseError("expected identifier", id.line, id.col);
        if (at(Token::Kind::LBracket)) {
            take();
            if (!at(Token::Kind::Int))
                throw ParseError("expected bundle index", peek().line, peek().col);
            const Token& idx = take();
            if (!at(Token::Kind::RBracket))
                throw ParseError("expected ']'", peek().line, peek().col);
            take();
            auto e = g_.find_decl(id.text);
            if (!e || !g_.decl(*e).is_bundle)
                throw ParseError("unknown bundle: " + id.text, id.line, id.col);
            unsigned long member = std::stoul(idx.text);
            if (member == 0)
                throw ParseError("bundle index must be positive", idx.line, idx.col);
            return edge_element(g_, EdgeRef{*e, static_cast<std::uint32_t>(member)});
        }
        if (auto v = g_.find_vertex(id.text)) return vertex_element(g_, *v);
        if (auto e = g_.find_decl(id.text)) {
            if (g_.decl(*e).is_bundle)
                throw ParseError("bundle " + id.text + " needs an index", id.line, id.col);
            return edge_element(g_, EdgeRef{*e, 0});
        }
        throw ParseError("unknown identifier: " + id.text, id.line, id.col);
    }

    const Graph& g_;
    std::vector<Token> tokens_;
    std::size_t i_ = 0;
};

}  // namespace

Element parse_element(const Graph& g, const std::string& text) {
    return ExprParser(g, lex(text, false)).parse();
}

std::string print_path(const Graph& g, const Path& p) {
    if (p.is_vertex()) return g.vertex_name(p.source);
    std::string out;
    for (const auto& e : p.steps) {
        if (!out.empty()) out += ' ';
        out += g.edge_ref_name(e);
    }
    return out;
}

std::string print_monomial(const Graph& g, const Monomial& m) {
    if (m.is_vertex()) return g.vertex_name(m.p.source);
    std::string out;
    for (const auto& e : m.p.steps) {
        if (!out.empty()) out += ' ';
        out += g.edge_ref_name(e);
    }
    for (auto it = m.q.steps.rbegin(); it != m.q.steps.rend(); ++it) {
        if (!out.empty()) out += ' ';
        out += g.edge_ref_name(*it) + "*";
    }
    return out;
}

std::string print_element(const Graph& g, const Element& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) out += to_string(mag) + " ";
        out += print_monomial(g, m);
    }
    return out;
}

std::string token_name(const Graph& g, const GeneratorToken& t) {
    switch (t.kind) {
        case GeneratorToken::Kind::Vertex:
            return g.vertex_name(t.vertex);
        case GeneratorToken::Kind::Edge:
            return g.edge_ref_name(t.edge);
        case GeneratorToken::Kind::Ghost:
            return g.edge_ref_name(t.edge) + "*";
    }
    throw InternalError("unreachable token kind");
}

}  // namespace lpa
