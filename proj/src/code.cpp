#include "srep/code.hpp"

#include "srep/error.hpp"

namespace srep {

Atom Atom::single(Code c) {
    Atom a;
    a.is_star = false;
    a.codes.push_back(std::move(c));
    return a;
}

Atom Atom::star(ClosedSet f) {
    Atom a;
    a.is_star = true;
    a.codes = std::move(f);
    return a;
}

Code Code::pair(Code first, Code second) {
    return Code{Pair{box<Code>(std::move(first)), box<Code>(std::move(second))}};
}

Code Code::left(Code inner) { return Code{Tag{false, box<Code>(std::move(inner))}}; }
Code Code::right(Code inner) { return Code{Tag{true, box<Code>(std::move(inner))}}; }

Code Code::fin(ClosedSet body) { return Code{Fin{std::move(body)}}; }

Code Code::omega(WordProduct head, ClosedSet limit) {
    return Code{Omega{std::move(head), std::move(limit)}};
}

namespace {

int cmp3(int a, int b) { return a < b ? -1 : (a > b ? 1 : 0); }

} // namespace

int compare(const ClosedSet& a, const ClosedSet& b) {
    const size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i)
        if (int c = compare(a[i], b[i]))
            return c;
    return cmp3(static_cast<int>(a.size()), static_cast<int>(b.size()));
}

int compare(const Atom& a, const Atom& b) {
    if (int c = cmp3(a.is_star ? 1 : 0, b.is_star ? 1 : 0))
        return c;
    return compare(a.codes, b.codes);
}

int compare(const WordProduct& a, const WordProduct& b) {
    const size_t n = std::min(a.atoms.size(), b.atoms.size());
    for (size_t i = 0; i < n; ++i)
        if (int c = compare(a.atoms[i], b.atoms[i]))
            return c;
    return cmp3(a.size(), b.size());
}

int compare(const Code& a, const Code& b) {
    if (int c = cmp3(static_cast<int>(a.v.index()), static_cast<int>(b.v.index())))
        return c;
    struct Cmp {
        const Code& b;
        int operator()(const Code::Elem& x) const { return cmp3(x.id, std::get<Code::Elem>(b.v).id); }
        int operator()(const Code::Pair& x) const {
            const auto& y = std::get<Code::Pair>(b.v);
            if (int c = compare(*x.first, *y.first))
                return c;
            return compare(*x.second, *y.second);
        }
        int operator()(const Code::Tag& x) const {
            const auto& y = std::get<Code::Tag>(b.v);
            if (int c = cmp3(x.right ? 1 : 0, y.right ? 1 : 0))
                return c;
            return compare(*x.inner, *y.inner);
        }
        int operator()(const WordProduct& x) const { return compare(x, std::get<WordProduct>(b.v)); }
        int operator()(const Code::Fin& x) const {
            return compare(x.body, std::get<Code::Fin>(b.v).body);
        }
        int operator()(const Code::Omega& x) const {
            const auto& y = std::get<Code::Omega>(b.v);
            if (int c = compare(x.head, y.head))
                return c;
            return compare(x.limit, y.limit);
        }
    };
    return std::visit(Cmp{b}, a.v);
}

bool operator==(const Code& a, const Code& b) { return compare(a, b) == 0; }
bool operator==(const Atom& a, const Atom& b) { return compare(a, b) == 0; }
bool operator==(const WordProduct& a, const WordProduct& b) { return compare(a, b) == 0; }

WordProduct wp_epsilon() { return WordProduct{}; }

WordProduct wp_of(std::vector<Atom> atoms) {
    WordProduct p;
    for (auto& a : atoms) {
        if (a.is_star && a.codes.empty())
            continue; // {}* is {eps}, the concatenation identity
        p.atoms.push_back(std::move(a));
    }
    return p;
}

WordProduct wp_concat(const WordProduct& a, const WordProduct& b) {
    WordProduct p = a;
    p.atoms.insert(p.atoms.end(), b.atoms.begin(), b.atoms.end());
    return p;
}

WordProduct wp_prepend(Atom head, const WordProduct& tail) {
    if (head.is_star && head.codes.empty())
        return tail;
    WordProduct p;
    p.atoms.reserve(tail.atoms.size() + 1);
    p.atoms.push_back(std::move(head));
    p.atoms.insert(p.atoms.end(), tail.atoms.begin(), tail.atoms.end());
    return p;
}

WordProduct wp_with_trailing_star(const WordProduct& p, const ClosedSet& f) {
    if (f.empty())
        return p;
    WordProduct q = p;
    q.atoms.push_back(Atom::star(f));
    return q;
}

} // namespace srep
