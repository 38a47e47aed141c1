#include "srep/specfile.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include "srep/core.hpp"
#include "srep/error.hpp"
#include "srep/omega.hpp"
#include "srep/words.hpp"
#include "lexer.hpp"

namespace srep {

using detail::Lexer;
using detail::Token;

namespace {

const std::set<std::string>& reserved_words() {
    static const std::set<std::string> words{
        "poset",   "space", "check",       "leq",      "meet", "member", "closure",
        "canon",   "top",   "in",          "eps",      "pow",  "words",  "infwords",
        "fininfwords", "prod", "sum"};
    return words;
}

std::string parse_fresh_name(Lexer& lx, const SpecFile& spec) {
    Token t = lx.expect(Token::Ident, "a name");
    if (reserved_words().count(t.text))
        throw diag_error(Diagnostic{DIAG_SYNTAX, lx.line(), t.col,
                                    "'" + t.text + "' is a reserved word"});
    if (spec.find_space(t.text))
        throw diag_error(Diagnostic{DIAG_DUPLICATE, lx.line(), t.col,
                                    "name '" + t.text + "' is already declared"});
    return t.text;
}

void parse_poset_decl(Lexer& lx, SpecFile& spec) {
    std::string name = parse_fresh_name(lx, spec);
    lx.expect(Token::LBrace, "'{'");
    std::vector<std::string> elems;
    std::vector<std::pair<ElemId, ElemId>> covers;
    auto elem_id = [&](const Token& t) -> ElemId {
        if (reserved_words().count(t.text))
            throw diag_error(Diagnostic{DIAG_SYNTAX, lx.line(), t.col,
                                        "'" + t.text + "' cannot name an element"});
        auto it = std::find(elems.begin(), elems.end(), t.text);
        if (it != elems.end())
            return static_cast<ElemId>(it - elems.begin());
        elems.push_back(t.text);
        return static_cast<ElemId>(elems.size() - 1);
    };
    if (lx.peek().kind != Token::RBrace) {
        for (;;) {
            ElemId lo = elem_id(lx.expect(Token::Ident, "an element name"));
            if (lx.peek().kind == Token::Lt) {
                lx.next();
                ElemId hi = elem_id(lx.expect(Token::Ident, "an element name"));
                covers.emplace_back(lo, hi);
            }
            if (lx.peek().kind != Token::Semi)
                break;
            lx.next();
        }
    }
    lx.expect(Token::RBrace, "'}'");
    try {
        spec.spaces.emplace_back(name, Space::base(FinitePoset::from_covers(elems, covers)));
    } catch (const usage_error& e) {
        throw diag_error(Diagnostic{DIAG_NOT_POSET, lx.line(), 1, e.what()});
    }
}

SpaceRef parse_space_expr(Lexer& lx, const SpecFile& spec) {
    Token t = lx.expect(Token::Ident, "a space expression");
    auto unary = [&](SpaceRef (*make)(SpaceRef)) {
        lx.expect(Token::LParen, "'('");
        SpaceRef inner = parse_space_expr(lx, spec);
        lx.expect(Token::RParen, "')'");
        return make(std::move(inner));
    };
    auto binary = [&](SpaceRef (*make)(SpaceRef, SpaceRef)) {
        lx.expect(Token::LParen, "'('");
        SpaceRef first = parse_space_expr(lx, spec);
        lx.expect(Token::Comma, "','");
        SpaceRef second = parse_space_expr(lx, spec);
        lx.expect(Token::RParen, "')'");
        return make(std::move(first), std::move(second));
    };
    if (t.text == "words")
        return unary(&Space::words);
    if (t.text == "pow")
        return unary(&Space::pow);
    if (t.text == "fininfwords")
        return unary(&Space::fin_inf_words);
    if (t.text == "infwords")
        return unary(&Space::inf_words);
    if (t.text == "prod")
        return binary(&Space::product);
    if (t.text == "sum")
        return binary(&Space::sum);
    if (SpaceRef s = spec.find_space(t.text))
        return s;
    throw diag_error(Diagnostic{DIAG_UNKNOWN, lx.line(), t.col,
                                "unknown poset or space '" + t.text + "'"});
}

Query parse_query(Lexer& lx, const SpecFile& spec, const std::string& cmd_word, int cmd_col) {
    Query q;
    q.line = lx.line();
    if (cmd_word == "leq")
        q.cmd = Command::Leq;
    else if (cmd_word == "meet")
        q.cmd = Command::Meet;
    else if (cmd_word == "member")
        q.cmd = Command::Member;
    else if (cmd_word == "closure")
        q.cmd = Command::Closure;
    else if (cmd_word == "canon")
        q.cmd = Command::Canon;
    else if (cmd_word == "top")
        q.cmd = Command::Top;
    else
        throw diag_error(Diagnostic{DIAG_SYNTAX, lx.line(), cmd_col,
                                    "unknown command '" + cmd_word + "'"});

    Token name = lx.expect(Token::Ident, "a space name");
    q.space_name = name.text;
    q.space = spec.find_space(name.text);
    if (!q.space)
        throw diag_error(Diagnostic{DIAG_UNKNOWN, lx.line(), name.col,
                                    "unknown poset or space '" + name.text + "'"});

    try {
        switch (q.cmd) {
        case Command::Leq: {
            lx.expect(Token::Colon, "':'");
            q.codes.push_back(detail::parse_code_tokens(*q.space, lx));
            lx.expect(Token::LeqArrow, "'<='");
            q.codes.push_back(detail::parse_code_tokens(*q.space, lx));
            break;
        }
        case Command::Meet: {
            lx.expect(Token::Colon, "':'");
            q.codes.push_back(detail::parse_code_tokens(*q.space, lx));
            lx.expect(Token::Wedge, "'/\\'");
            q.codes.push_back(detail::parse_code_tokens(*q.space, lx));
            break;
        }
        case Command::Member: {
            lx.expect(Token::Colon, "':'");
            q.point = detail::parse_point_tokens(*q.space, lx);
            Token kw = lx.expect(Token::Ident, "'in'");
            if (kw.text != "in")
                lx.fail("expected 'in'");
            q.codes.push_back(detail::parse_code_tokens(*q.space, lx));
            break;
        }
        case Command::Closure: {
            lx.expect(Token::Colon, "':'");
            q.point = detail::parse_point_tokens(*q.space, lx);
            break;
        }
        case Command::Canon: {
            if (q.space->kind() != SpaceKind::Words)
                throw diag_error(Diagnostic{DIAG_TYPE, lx.line(), name.col,
                                            "canon needs a words(...) space"});
            lx.expect(Token::Colon, "':'");
            q.codes.push_back(detail::parse_code_tokens(*q.space, lx));
            break;
        }
        case Command::Top:
            break;
        }
        for (const Code& c : q.codes)
            check_code(*q.space, c);
        if (q.point)
            check_point(*q.space, *q.point);
    } catch (const usage_error& e) {
        throw diag_error(Diagnostic{DIAG_TYPE, lx.line(), 1, e.what()});
    }
    if (!lx.at_end())
        lx.fail("trailing input after query");
    return q;
}

} // namespace

SpaceRef SpecFile::find_space(std::string_view name) const {
    for (const auto& [n, s] : spaces)
        if (n == name)
            return s;
    return nullptr;
}

SpecFile parse_spec(std::string_view text) {
    SpecFile spec;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        ++lineno;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        Lexer lx(line, lineno);
        if (lx.at_end())
            continue;
        Token head = lx.expect(Token::Ident, "a declaration or query");
        if (head.text == "poset") {
            parse_poset_decl(lx, spec);
            if (!lx.at_end())
                lx.fail("trailing input after poset declaration");
        } else if (head.text == "space") {
            std::string name = parse_fresh_name(lx, spec);
            lx.expect(Token::Eq, "'='");
            spec.spaces.emplace_back(name, parse_space_expr(lx, spec));
            if (!lx.at_end())
                lx.fail("trailing input after space declaration");
        } else {
            bool check = false;
            std::string cmd_word = head.text;
            int cmd_col = head.col;
            if (cmd_word == "check") {
                check = true;
                Token cmd = lx.expect(Token::Ident, "a command");
                cmd_word = cmd.text;
                cmd_col = cmd.col;
            }
            Query q = parse_query(lx, spec, cmd_word, cmd_col);
            q.check = check;
            spec.queries.push_back(std::move(q));
        }
    }
    return spec;
}

Query parse_query_line(const SpecFile& spec, std::string_view line) {
    Lexer lx(line, 0);
    Token head = lx.expect(Token::Ident, "a command");
    bool check = false;
    std::string cmd_word = head.text;
    int cmd_col = head.col;
    if (cmd_word == "check") {
        check = true;
        Token cmd = lx.expect(Token::Ident, "a command");
        cmd_word = cmd.text;
        cmd_col = cmd.col;
    }
    Query q = parse_query(lx, spec, cmd_word, cmd_col);
    q.check = check;
    return q;
}

namespace {

// ---- oracle cross-checks -------------------------------------------------

enum class OracleShape { Finite, WordsFin, PowFin, OmegaFin, None };

struct OracleCtx {
    OracleShape shape = OracleShape::None;
    oracle::FlatSpace flat; // of the space itself (Finite) or of the letter/member space
    bool omega_only = false;
};

OracleCtx classify(const Space& s) {
    OracleCtx ctx;
    if (auto flat = oracle::flatten(s)) {
        ctx.shape = OracleShape::Finite;
        ctx.flat = std::move(*flat);
        return ctx;
    }
    switch (s.kind()) {
    case SpaceKind::Words:
    case SpaceKind::Pow:
    case SpaceKind::FinInfWords:
    case SpaceKind::InfWords:
        if (auto flat = oracle::flatten(s.inner())) {
            ctx.flat = std::move(*flat);
            ctx.shape = s.kind() == SpaceKind::Words ? OracleShape::WordsFin
                        : s.kind() == SpaceKind::Pow ? OracleShape::PowFin
                                                     : OracleShape::OmegaFin;
            ctx.omega_only = s.kind() == SpaceKind::InfWords;
        }
        return ctx;
    default:
        return ctx;
    }
}

std::vector<std::vector<ElemId>> enum_subsets(int n) {
    std::vector<std::vector<ElemId>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<ElemId> sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                sub.push_back(i);
        out.push_back(std::move(sub));
    }
    return out;
}

bool sem_pow_member(const FinitePoset& poset, const std::vector<ElemId>& subset,
                    const std::vector<ElemId>& body) {
    for (ElemId x : subset) {
        bool below = false;
        for (ElemId b : body)
            if (poset.leq(x, b)) {
                below = true;
                break;
            }
        if (!below)
            return false;
    }
    return true;
}

[[noreturn]] void no_oracle(const Query& q, const char* why = nullptr) {
    throw diag_error(Diagnostic{DIAG_NO_ORACLE, q.line, 1,
                                why ? why
                                    : "oracle checks need a space whose points come from finite "
                                      "posets (base, prod, sum, or words/pow/fininfwords/infwords "
                                      "over those)"});
}

// Returns true when the decision procedures and the brute-force semantics
// agree on this query.
bool oracle_agrees(const Query& q, const RunOptions& opts, const ClosedSet& meet_result,
                   const Code* closure_result, const WordProduct* canon_result) {
    const Space& s = *q.space;
    OracleCtx ctx = classify(s);
    if (ctx.shape == OracleShape::None)
        no_oracle(q);
    const FinitePoset& poset = ctx.flat.poset;
    const oracle::EnumConfig& cfg = opts.enum_config;

    switch (q.cmd) {
    case Command::Leq: {
        bool got = code_leq(s, q.codes[0], q.codes[1]);
        switch (ctx.shape) {
        case OracleShape::Finite: {
            ElemId e1 = ctx.flat.elem_of_code(q.codes[0]);
            ElemId e2 = ctx.flat.elem_of_code(q.codes[1]);
            bool expect = true;
            for (ElemId z = 0; z < poset.size(); ++z)
                if (poset.leq(z, e1) && !poset.leq(z, e2))
                    expect = false;
            return got == expect;
        }
        case OracleShape::WordsFin:
            return got == oracle::sem_subset(poset,
                                             ctx.flat.flat_wp(std::get<WordProduct>(q.codes[0].v)),
                                             ctx.flat.flat_wp(std::get<WordProduct>(q.codes[1].v)));
        case OracleShape::PowFin: {
            auto b1 = ctx.flat.elems_of_closed_set(std::get<Code::Fin>(q.codes[0].v).body);
            auto b2 = ctx.flat.elems_of_closed_set(std::get<Code::Fin>(q.codes[1].v).body);
            bool expect = true;
            for (const auto& sub : enum_subsets(poset.size()))
                if (sem_pow_member(poset, sub, b1) && !sem_pow_member(poset, sub, b2))
                    expect = false;
            return got == expect;
        }
        case OracleShape::OmegaFin: {
            auto c1 = ctx.flat.flat_omega(std::get<Code::Omega>(q.codes[0].v));
            auto c2 = ctx.flat.flat_omega(std::get<Code::Omega>(q.codes[1].v));
            // A failed inclusion always has an ultimately periodic witness
            // with a short prefix and a period of one.
            int max_prefix = std::max(cfg.max_prefix, static_cast<int>(c2.head.size()) + 2);
            int max_period = std::max(cfg.max_period, 1);
            bool expect = true;
            for (const auto& w : oracle::enum_upwords(poset, max_prefix, max_period))
                if (oracle::sem_inf_member(poset, w, c1, ctx.omega_only) &&
                    !oracle::sem_inf_member(poset, w, c2, ctx.omega_only))
                    expect = false;
            return got == expect;
        }
        default:
            no_oracle(q);
        }
    }
    case Command::Member: {
        bool got = point_member(s, *q.point, q.codes[0]);
        switch (ctx.shape) {
        case OracleShape::Finite: {
            ElemId x = ctx.flat.elem_of_point(*q.point);
            ElemId e = ctx.flat.elem_of_code(q.codes[0]);
            return got == poset.leq(x, e);
        }
        case OracleShape::WordsFin:
            return got == oracle::sem_member(
                              poset, ctx.flat.flat_word(std::get<Point::Word>(q.point->v).letters),
                              ctx.flat.flat_wp(std::get<WordProduct>(q.codes[0].v)));
        case OracleShape::PowFin: {
            auto members = ctx.flat.flat_word(std::get<Point::Set>(q.point->v).members);
            auto body = ctx.flat.elems_of_closed_set(std::get<Code::Fin>(q.codes[0].v).body);
            return got == sem_pow_member(poset, members, body);
        }
        case OracleShape::OmegaFin:
            return got == oracle::sem_inf_member(
                              poset, ctx.flat.flat_upword(*std::get<Point::UP>(q.point->v).word),
                              ctx.flat.flat_omega(std::get<Code::Omega>(q.codes[0].v)),
                              ctx.omega_only);
        default:
            no_oracle(q);
        }
    }
    case Command::Meet: {
        switch (ctx.shape) {
        case OracleShape::Finite: {
            ElemId e1 = ctx.flat.elem_of_code(q.codes[0]);
            ElemId e2 = ctx.flat.elem_of_code(q.codes[1]);
            for (ElemId z = 0; z < poset.size(); ++z) {
                bool in_both = poset.leq(z, e1) && poset.leq(z, e2);
                bool in_meet = false;
                for (const Code& m : meet_result)
                    if (poset.leq(z, ctx.flat.elem_of_code(m)))
                        in_meet = true;
                if (in_both != in_meet)
                    return false;
            }
            return true;
        }
        case OracleShape::WordsFin: {
            auto p1 = ctx.flat.flat_wp(std::get<WordProduct>(q.codes[0].v));
            auto p2 = ctx.flat.flat_wp(std::get<WordProduct>(q.codes[1].v));
            std::vector<oracle::FlatWP> meets;
            for (const Code& m : meet_result)
                meets.push_back(ctx.flat.flat_wp(std::get<WordProduct>(m.v)));
            for (const auto& w : oracle::enum_words(poset, cfg.max_len)) {
                bool in_both = oracle::sem_member(poset, w, p1) && oracle::sem_member(poset, w, p2);
                bool in_meet = false;
                for (const auto& m : meets)
                    if (oracle::sem_member(poset, w, m))
                        in_meet = true;
                if (in_both != in_meet)
                    return false;
            }
            return true;
        }
        case OracleShape::PowFin: {
            auto b1 = ctx.flat.elems_of_closed_set(std::get<Code::Fin>(q.codes[0].v).body);
            auto b2 = ctx.flat.elems_of_closed_set(std::get<Code::Fin>(q.codes[1].v).body);
            std::vector<std::vector<ElemId>> meets;
            for (const Code& m : meet_result)
                meets.push_back(ctx.flat.elems_of_closed_set(std::get<Code::Fin>(m.v).body));
            for (const auto& sub : enum_subsets(poset.size())) {
                bool in_both =
                    sem_pow_member(poset, sub, b1) && sem_pow_member(poset, sub, b2);
                bool in_meet = false;
                for (const auto& m : meets)
                    if (sem_pow_member(poset, sub, m))
                        in_meet = true;
                if (in_both != in_meet)
                    return false;
            }
            return true;
        }
        case OracleShape::OmegaFin: {
            auto c1 = ctx.flat.flat_omega(std::get<Code::Omega>(q.codes[0].v));
            auto c2 = ctx.flat.flat_omega(std::get<Code::Omega>(q.codes[1].v));
            std::vector<oracle::FlatOmega> meets;
            for (const Code& m : meet_result)
                meets.push_back(ctx.flat.flat_omega(std::get<Code::Omega>(m.v)));
            for (const auto& w : oracle::enum_upwords(poset, cfg.max_prefix, cfg.max_period)) {
                bool in_both = oracle::sem_inf_member(poset, w, c1, ctx.omega_only) &&
                               oracle::sem_inf_member(poset, w, c2, ctx.omega_only);
                bool in_meet = false;
                for (const auto& m : meets)
                    if (oracle::sem_inf_member(poset, w, m, ctx.omega_only))
                        in_meet = true;
                if (in_both != in_meet)
                    return false;
            }
            return true;
        }
        default:
            no_oracle(q);
        }
    }
    case Command::Closure: {
        switch (ctx.shape) {
        case OracleShape::Finite: {
            ElemId ep = ctx.flat.elem_of_point(*q.point);
            ElemId ec = ctx.flat.elem_of_code(*closure_result);
            for (ElemId z = 0; z < poset.size(); ++z)
                if (poset.leq(z, ec) != poset.leq(z, ep))
                    return false;
            return true;
        }
        case OracleShape::WordsFin: {
            auto word = ctx.flat.flat_word(std::get<Point::Word>(q.point->v).letters);
            auto cl = ctx.flat.flat_wp(std::get<WordProduct>(closure_result->v));
            int bound = std::max(cfg.max_len, static_cast<int>(word.size()));
            for (const auto& w : oracle::enum_words(poset, bound))
                if (oracle::sem_member(poset, w, cl) != oracle::sem_subword(poset, w, word))
                    return false;
            return true;
        }
        case OracleShape::PowFin: {
            auto members = ctx.flat.flat_word(std::get<Point::Set>(q.point->v).members);
            auto body = ctx.flat.elems_of_closed_set(std::get<Code::Fin>(closure_result->v).body);
            for (const auto& sub : enum_subsets(poset.size()))
                if (sem_pow_member(poset, sub, body) != sem_pow_member(poset, sub, members))
                    return false;
            return true;
        }
        default:
            // Checking an omega closure would need a subword oracle on UP
            // words, which lives in the test suite only.
            no_oracle(q, "closure checks are not available for omega spaces");
        }
    }
    case Command::Canon: {
        if (ctx.shape != OracleShape::WordsFin)
            no_oracle(q);
        auto before = ctx.flat.flat_wp(std::get<WordProduct>(q.codes[0].v));
        auto after = ctx.flat.flat_wp(*canon_result);
        // A difference between two products always has a witness no longer
        // than the larger atom count plus one.
        int bound = static_cast<int>(std::max(before.size(), after.size())) + 1;
        for (const auto& w : oracle::enum_words(poset, bound))
            if (oracle::sem_member(poset, w, before) != oracle::sem_member(poset, w, after))
                return false;
        return true;
    }
    case Command::Top: {
        ClosedSet top = space_top(s);
        switch (ctx.shape) {
        case OracleShape::Finite: {
            for (ElemId z = 0; z < poset.size(); ++z) {
                bool covered = false;
                for (const Code& m : top)
                    if (poset.leq(z, ctx.flat.elem_of_code(m)))
                        covered = true;
                if (!covered)
                    return false;
            }
            return true;
        }
        case OracleShape::WordsFin: {
            auto t = ctx.flat.flat_wp(std::get<WordProduct>(top.front().v));
            for (const auto& w : oracle::enum_words(poset, cfg.max_len))
                if (!oracle::sem_member(poset, w, t))
                    return false;
            return true;
        }
        case OracleShape::PowFin: {
            auto body = ctx.flat.elems_of_closed_set(std::get<Code::Fin>(top.front().v).body);
            for (const auto& sub : enum_subsets(poset.size()))
                if (!sem_pow_member(poset, sub, body))
                    return false;
            return true;
        }
        case OracleShape::OmegaFin: {
            if (top.empty())
                return poset.size() == 0;
            auto t = ctx.flat.flat_omega(std::get<Code::Omega>(top.front().v));
            for (const auto& w : oracle::enum_upwords(poset, cfg.max_prefix, cfg.max_period)) {
                if (ctx.omega_only && w.period.empty())
                    continue;
                if (!oracle::sem_inf_member(poset, w, t, ctx.omega_only))
                    return false;
            }
            return true;
        }
        default:
            no_oracle(q);
        }
    }
    }
    no_oracle(q);
}

std::string print_result_set(const Space& s, const ClosedSet& cs) {
    if (cs.empty())
        return "{ }";
    std::string out = "{ ";
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i)
            out += " ; ";
        out += print_code(s, cs[i]);
    }
    out += " }";
    return out;
}

} // namespace

std::string run_query(const Query& q, const RunOptions& opts, bool* disagreed) {
    const Space& s = *q.space;
    std::string result;
    ClosedSet meet_result;
    std::optional<Code> closure_result;
    std::optional<WordProduct> canon_result;
    switch (q.cmd) {
    case Command::Leq:
        result = code_leq(s, q.codes[0], q.codes[1]) ? "true" : "false";
        break;
    case Command::Meet:
        meet_result = code_meet(s, q.codes[0], q.codes[1]);
        result = print_result_set(s, meet_result);
        break;
    case Command::Member:
        try {
            result = point_member(s, *q.point, q.codes[0]) ? "true" : "false";
        } catch (const usage_error& e) {
            throw diag_error(Diagnostic{DIAG_BAD_VARIANT, q.line, 1, e.what()});
        }
        break;
    case Command::Closure:
        try {
            closure_result = point_closure(s, *q.point);
        } catch (const usage_error& e) {
            throw diag_error(Diagnostic{DIAG_BAD_VARIANT, q.line, 1, e.what()});
        }
        result = print_code(s, *closure_result);
        break;
    case Command::Canon:
        canon_result = wp_canon(s.inner(), std::get<WordProduct>(q.codes[0].v));
        result = print_word_product(s.inner(), *canon_result);
        break;
    case Command::Top: {
        ClosedSet top = space_top(s);
        result = top.size() == 1 ? print_code(s, top.front()) : print_result_set(s, top);
        break;
    }
    }
    bool do_check = q.check || opts.force_check;
    if (do_check) {
        bool agree = oracle_agrees(q, opts, meet_result,
                                   closure_result ? &*closure_result : nullptr,
                                   canon_result ? &*canon_result : nullptr);
        result += agree ? " AGREE" : " DISAGREE";
        if (!agree && disagreed)
            *disagreed = true;
    }
    return result;
}

int run_spec(const SpecFile& spec, const RunOptions& opts, std::ostream& out, std::ostream& err) {
    bool any_diag = false;
    bool any_disagree = false;
    for (const Query& q : spec.queries) {
        try {
            bool disagreed = false;
            out << run_query(q, opts, &disagreed) << '\n';
            any_disagree |= disagreed;
        } catch (const diag_error& e) {
            err << e.diag.to_string() << '\n';
            any_diag = true;
        }
    }
    if (any_disagree)
        return 2;
    return any_diag ? 1 : 0;
}

} // namespace srep
