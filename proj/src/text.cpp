#include "srep/text.hpp"

#include <sstream>

#include "srep/core.hpp"
#include "lexer.hpp"

namespace srep {

std::string Diagnostic::to_string() const {
    std::ostringstream out;
    out << "error[" << code << "]";
    if (line > 0)
        out << " line " << line;
    if (col > 0)
        out << (line > 0 ? ", col " : " col ") << col;
    out << ": " << message;
    return out.str();
}

namespace {

void print_code_to(const Space& s, const Code& c, std::ostream& out);
void print_wp_to(const Space& x, const WordProduct& p, std::ostream& out);

void print_set_to(const Space& s, const ClosedSet& f, std::ostream& out) {
    out << '{';
    for (size_t i = 0; i < f.size(); ++i) {
        if (i)
            out << ',';
        print_code_to(s, f[i], out);
    }
    out << '}';
}

void print_wp_to(const Space& x, const WordProduct& p, std::ostream& out) {
    if (p.empty()) {
        out << "eps";
        return;
    }
    for (size_t i = 0; i < p.atoms.size(); ++i) {
        if (i)
            out << ' ';
        const Atom& a = p.atoms[i];
        if (a.is_star) {
            print_set_to(x, a.star_set(), out);
            out << '*';
        } else {
            // A word-product code as an atom needs grouping, or its question
            // mark would attach to the last inner atom.
            bool group = x.kind() == SpaceKind::Words;
            if (group)
                out << '(';
            print_code_to(x, a.single_code(), out);
            if (group)
                out << ')';
            out << '?';
        }
    }
}

void print_code_to(const Space& s, const Code& c, std::ostream& out) {
    switch (s.kind()) {
    case SpaceKind::Base:
        out << s.poset().name(std::get<Code::Elem>(c.v).id);
        return;
    case SpaceKind::Product: {
        const auto& p = std::get<Code::Pair>(c.v);
        out << '(';
        print_code_to(s.first(), *p.first, out);
        out << ", ";
        print_code_to(s.second(), *p.second, out);
        out << ')';
        return;
    }
    case SpaceKind::Sum: {
        const auto& t = std::get<Code::Tag>(c.v);
        out << (t.right ? "R." : "L.");
        print_code_to(t.right ? s.second() : s.first(), *t.inner, out);
        return;
    }
    case SpaceKind::Words:
        print_wp_to(s.inner(), std::get<WordProduct>(c.v), out);
        return;
    case SpaceKind::Pow:
        out << "pow";
        print_set_to(s.inner(), std::get<Code::Fin>(c.v).body, out);
        return;
    case SpaceKind::FinInfWords:
    case SpaceKind::InfWords: {
        const auto& o = std::get<Code::Omega>(c.v);
        out << '(';
        print_wp_to(s.inner(), o.head, out);
        out << ", ";
        print_set_to(s.inner(), o.limit, out);
        out << ')';
        return;
    }
    }
}

bool single_char_names(const FinitePoset& poset) {
    for (ElemId e = 0; e < poset.size(); ++e)
        if (poset.name(e).size() != 1)
            return false;
    return true;
}

void print_point_to(const Space& s, const Point& p, std::ostream& out);

void print_word_point_to(const Space& y, const std::vector<Point>& letters, std::ostream& out) {
    if (letters.empty()) {
        out << "eps";
        return;
    }
    if (y.kind() == SpaceKind::Base && single_char_names(y.poset())) {
        for (const Point& letter : letters)
            out << y.poset().name(std::get<Point::Elem>(letter.v).id);
        return;
    }
    out << '[';
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i)
            out << ", ";
        print_point_to(y, letters[i], out);
    }
    out << ']';
}

void print_point_to(const Space& s, const Point& p, std::ostream& out) {
    switch (s.kind()) {
    case SpaceKind::Base:
        out << s.poset().name(std::get<Point::Elem>(p.v).id);
        return;
    case SpaceKind::Product: {
        const auto& q = std::get<Point::Pair>(p.v);
        out << '(';
        print_point_to(s.first(), *q.first, out);
        out << ", ";
        print_point_to(s.second(), *q.second, out);
        out << ')';
        return;
    }
    case SpaceKind::Sum: {
        const auto& t = std::get<Point::Tag>(p.v);
        out << (t.right ? "R." : "L.");
        print_point_to(t.right ? s.second() : s.first(), *t.inner, out);
        return;
    }
    case SpaceKind::Words:
        print_word_point_to(s.inner(), std::get<Point::Word>(p.v).letters, out);
        return;
    case SpaceKind::Pow: {
        const auto& members = std::get<Point::Set>(p.v).members;
        out << '{';
        for (size_t i = 0; i < members.size(); ++i) {
            if (i)
                out << ", ";
            print_point_to(s.inner(), members[i], out);
        }
        out << '}';
        return;
    }
    case SpaceKind::FinInfWords:
    case SpaceKind::InfWords: {
        const UPWord& w = *std::get<Point::UP>(p.v).word;
        print_word_point_to(s.inner(), w.prefix, out);
        if (!w.finite()) {
            out << ".(";
            print_word_point_to(s.inner(), w.period, out);
            out << ")^w";
        }
        return;
    }
    }
}

} // namespace

std::string print_code(const Space& s, const Code& c) {
    std::ostringstream out;
    print_code_to(s, c, out);
    return out.str();
}

std::string print_word_product(const Space& letter_space, const WordProduct& p) {
    std::ostringstream out;
    print_wp_to(letter_space, p, out);
    return out.str();
}

std::string print_closed_set(const Space& s, const ClosedSet& f) {
    std::ostringstream out;
    print_set_to(s, f, out);
    return out.str();
}

std::string print_point(const Space& s, const Point& p) {
    std::ostringstream out;
    print_point_to(s, p, out);
    return out.str();
}

namespace detail {

namespace {

ClosedSet parse_set(const Space& inner, Lexer& lx) {
    lx.expect(Token::LBrace, "'{'");
    ClosedSet out;
    if (lx.peek().kind != Token::RBrace) {
        out.push_back(parse_code_tokens(inner, lx));
        while (lx.peek().kind == Token::Comma) {
            lx.next();
            out.push_back(parse_code_tokens(inner, lx));
        }
    }
    lx.expect(Token::RBrace, "'}'");
    return out;
}

bool starts_atom(const Lexer& lx) {
    switch (lx.peek().kind) {
    case Token::LBrace:
    case Token::LParen:
        return true;
    case Token::Ident:
        return lx.peek().text != "in" && lx.peek().text != "eps";
    default:
        return false;
    }
}

WordProduct parse_wp(const Space& x, Lexer& lx) {
    if (lx.peek().kind == Token::Ident && lx.peek().text == "eps") {
        lx.next();
        return wp_epsilon();
    }
    std::vector<Atom> atoms;
    if (!starts_atom(lx))
        lx.fail("expected a word product");
    while (starts_atom(lx)) {
        if (lx.peek().kind == Token::LBrace) {
            ClosedSet f = parse_set(x, lx);
            lx.expect(Token::Star, "'*'");
            atoms.push_back(Atom::star(cs_reduce(x, f)));
        } else if (x.kind() == SpaceKind::Words && lx.peek().kind == Token::LParen) {
            // a word-product letter needs grouping so that '?' binds to it
            lx.next();
            WordProduct inner = parse_wp(x.inner(), lx);
            lx.expect(Token::RParen, "')'");
            lx.expect(Token::Question, "'?'");
            atoms.push_back(Atom::single(Code::word(std::move(inner))));
        } else {
            Code c = parse_code_tokens(x, lx);
            lx.expect(Token::Question, "'?'");
            atoms.push_back(Atom::single(std::move(c)));
        }
    }
    return wp_of(std::move(atoms));
}

} // namespace

WordProduct parse_wp_tokens(const Space& letter_space, Lexer& lx) {
    return parse_wp(letter_space, lx);
}

Code parse_code_tokens(const Space& s, Lexer& lx) {
    switch (s.kind()) {
    case SpaceKind::Base: {
        Token t = lx.expect(Token::Ident, "an element name");
        auto id = s.poset().find(t.text);
        if (!id)
            throw diag_error(Diagnostic{DIAG_UNKNOWN, lx.line(), t.col,
                                        "unknown element '" + t.text + "'"});
        return Code::elem(*id);
    }
    case SpaceKind::Product: {
        lx.expect(Token::LParen, "'('");
        Code first = parse_code_tokens(s.first(), lx);
        lx.expect(Token::Comma, "','");
        Code second = parse_code_tokens(s.second(), lx);
        lx.expect(Token::RParen, "')'");
        return Code::pair(std::move(first), std::move(second));
    }
    case SpaceKind::Sum: {
        Token t = lx.expect(Token::Ident, "'L' or 'R'");
        if (t.text != "L" && t.text != "R")
            lx.fail("expected 'L' or 'R'");
        lx.expect(Token::Dot, "'.'");
        bool right = t.text == "R";
        Code inner = parse_code_tokens(right ? s.second() : s.first(), lx);
        return right ? Code::right(std::move(inner)) : Code::left(std::move(inner));
    }
    case SpaceKind::Words:
        return Code::word(parse_wp(s.inner(), lx));
    case SpaceKind::Pow: {
        Token t = lx.expect(Token::Ident, "'pow'");
        if (t.text != "pow")
            lx.fail("expected 'pow'");
        return Code::fin(cs_reduce(s.inner(), parse_set(s.inner(), lx)));
    }
    case SpaceKind::FinInfWords:
    case SpaceKind::InfWords: {
        lx.expect(Token::LParen, "'('");
        WordProduct head = parse_wp(s.inner(), lx);
        lx.expect(Token::Comma, "','");
        Token open = lx.peek();
        ClosedSet limit = cs_reduce(s.inner(), parse_set(s.inner(), lx));
        lx.expect(Token::RParen, "')'");
        if (s.kind() == SpaceKind::InfWords && limit.empty())
            throw diag_error(Diagnostic{DIAG_EMPTY_LIMIT, lx.line(), open.col,
                                        "an infinite-words code needs a non-empty limit set"});
        return Code::omega(std::move(head), std::move(limit));
    }
    }
    lx.fail("unsupported space");
}

namespace {

// Splits a compact word literal like "ab" into element names; multi-char
// names are allowed as long as the split is unique.
std::vector<Point> segment_word(const FinitePoset& poset, const std::string& text, Lexer& lx,
                                int col) {
    const size_t n = text.size();
    std::vector<int> ways(n + 1, 0);
    std::vector<std::pair<size_t, ElemId>> step(n + 1); // previous index + element
    ways[0] = 1;
    for (size_t i = 1; i <= n; ++i)
        for (ElemId e = 0; e < poset.size(); ++e) {
            const std::string& name = poset.name(e);
            if (name.size() <= i && ways[i - name.size()] &&
                text.compare(i - name.size(), name.size(), name) == 0) {
                if (ways[i - name.size()] > 1 || ways[i] > 0)
                    ways[i] = 2;
                else {
                    ways[i] = 1;
                    step[i] = {i - name.size(), e};
                }
            }
        }
    if (ways[n] == 0)
        throw diag_error(Diagnostic{DIAG_UNKNOWN, lx.line(), col,
                                    "cannot read '" + text + "' as a word over this alphabet"});
    if (ways[n] > 1)
        throw diag_error(Diagnostic{DIAG_SYNTAX, lx.line(), col,
                                    "ambiguous word literal '" + text + "'; use [a, b] form"});
    std::vector<Point> letters;
    for (size_t i = n; i > 0; i = step[i].first)
        letters.push_back(Point::elem(step[i].second));
    std::reverse(letters.begin(), letters.end());
    return letters;
}

std::vector<Point> parse_word_point(const Space& y, Lexer& lx) {
    if (lx.peek().kind == Token::Ident && lx.peek().text == "eps") {
        lx.next();
        return {};
    }
    if (lx.peek().kind == Token::LBracket) {
        lx.next();
        std::vector<Point> letters;
        if (lx.peek().kind != Token::RBracket) {
            letters.push_back(parse_point_tokens(y, lx));
            while (lx.peek().kind == Token::Comma) {
                lx.next();
                letters.push_back(parse_point_tokens(y, lx));
            }
        }
        lx.expect(Token::RBracket, "']'");
        return letters;
    }
    if (y.kind() == SpaceKind::Base && lx.peek().kind == Token::Ident) {
        Token t = lx.next();
        return segment_word(y.poset(), t.text, lx, t.col);
    }
    lx.fail("expected a word (compact letters, 'eps' or [ ... ])");
}

} // namespace

Point parse_point_tokens(const Space& s, Lexer& lx) {
    switch (s.kind()) {
    case SpaceKind::Base: {
        Token t = lx.expect(Token::Ident, "an element name");
        auto id = s.poset().find(t.text);
        if (!id)
            throw diag_error(Diagnostic{DIAG_UNKNOWN, lx.line(), t.col,
                                        "unknown element '" + t.text + "'"});
        return Point::elem(*id);
    }
    case SpaceKind::Product: {
        lx.expect(Token::LParen, "'('");
        Point first = parse_point_tokens(s.first(), lx);
        lx.expect(Token::Comma, "','");
        Point second = parse_point_tokens(s.second(), lx);
        lx.expect(Token::RParen, "')'");
        return Point::pair(std::move(first), std::move(second));
    }
    case SpaceKind::Sum: {
        Token t = lx.expect(Token::Ident, "'L' or 'R'");
        if (t.text != "L" && t.text != "R")
            lx.fail("expected 'L' or 'R'");
        lx.expect(Token::Dot, "'.'");
        bool right = t.text == "R";
        Point inner = parse_point_tokens(right ? s.second() : s.first(), lx);
        return right ? Point::right(std::move(inner)) : Point::left(std::move(inner));
    }
    case SpaceKind::Words:
        return Point::word(parse_word_point(s.inner(), lx));
    case SpaceKind::Pow: {
        lx.expect(Token::LBrace, "'{'");
        std::vector<Point> members;
        if (lx.peek().kind != Token::RBrace) {
            members.push_back(parse_point_tokens(s.inner(), lx));
            while (lx.peek().kind == Token::Comma) {
                lx.next();
                members.push_back(parse_point_tokens(s.inner(), lx));
            }
        }
        lx.expect(Token::RBrace, "'}'");
        return Point::set(std::move(members));
    }
    case SpaceKind::FinInfWords:
    case SpaceKind::InfWords: {
        Token start = lx.peek();
        UPWord w;
        w.prefix = parse_word_point(s.inner(), lx);
        if (lx.peek().kind == Token::Dot) {
            lx.next();
            lx.expect(Token::LParen, "'('");
            w.period = parse_word_point(s.inner(), lx);
            lx.expect(Token::RParen, "')'");
            lx.expect(Token::Caret, "'^'");
            Token t = lx.expect(Token::Ident, "'w'");
            if (t.text != "w")
                lx.fail("expected 'w'");
            if (w.period.empty())
                lx.fail("the period of an ultimately periodic word cannot be 'eps'");
        }
        if (s.kind() == SpaceKind::InfWords && w.finite())
            throw diag_error(Diagnostic{DIAG_BAD_VARIANT, lx.line(), start.col,
                                        "a point of an infinite-words space needs a period"});
        return Point::up(std::move(w));
    }
    }
    lx.fail("unsupported space");
}

} // namespace detail

Code parse_code(const Space& s, std::string_view text) {
    detail::Lexer lx(text);
    Code c = detail::parse_code_tokens(s, lx);
    if (!lx.at_end())
        lx.fail("trailing input after code");
    check_code(s, c);
    return c;
}

Point parse_point(const Space& s, std::string_view text) {
    detail::Lexer lx(text);
    Point p = detail::parse_point_tokens(s, lx);
    if (!lx.at_end())
        lx.fail("trailing input after point");
    check_point(s, p);
    return p;
}

} // namespace srep
