#include "quadrics/expr.hpp"

#include <cctype>

namespace quadrics {

namespace {

// One cursor type drives both parsers; only the atom rule differs.
struct Cursor {
    const std::string& s;
    size_t i{0};

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool done() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c, const char* where) {
        if (!eat(c))
            fail(std::string("expected '") + c + "' " + where);
    }
    bool eat_word(const char* w) {
        skip();
        size_t n = 0;
        while (w[n])
            ++n;
        if (s.compare(i, n, w) == 0) {
            i += n;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw parse_error(what + " at position " + std::to_string(i) + " in \"" +
                          s + "\"");
    }

    long long integer() {
        skip();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+'))
            ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (i == digits) {
            i = start;
            fail("expected an integer");
        }
        return std::stoll(s.substr(start, i - start));
    }

    // multiplicity ['*'] prefix; returns 1 when absent
    long long coefficient() {
        skip();
        size_t start = i;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            long long n = integer();
            if (eat('*'))
                return n;
            skip();
            // juxtaposed coefficient, e.g. "2O(1)"
            if (i < s.size() && (s[i] == 'O' || s[i] == 'S' || s[i] == 'T' || s[i] == 'k'))
                return n;
            i = start;
            fail("a standalone integer is not a class");
        }
        return 1;
    }
};

template <class Atom, class MakeAtom>
auto parse_sum(const std::string& text, MakeAtom&& make_atom) {
    Cursor c{text};
    decltype(make_atom(c)) result{};  // KClass3 or KClass2
    bool first = true;
    while (true) {
        long long sign = 1;
        if (c.eat('-'))
            sign = -1;
        else if (c.eat('+')) {
            if (first)
                c.fail("leading '+'");
        } else if (!first) {
            c.fail("expected '+' or '-'");
        }
        long long mult = c.coefficient();
        auto term = make_atom(c);
        long long exp = 1;
        if (c.eat('^')) {
            exp = c.integer();
            if (exp < 0)
                c.fail("negative exponent");
        }
        for (auto& [a, n] : term.c)
            n *= Int(sign) * mult * exp;
        result += term;
        first = false;
        if (c.done())
            break;
    }
    return result;
}

KClass3 atom3(Cursor& c) {
    if (c.eat_word("O_H"))
        return single3(o_hyperplane());
    if (c.eat_word("O_L"))
        return single3(o_line());
    if (c.eat_word("Om4"))
        return single3(omega_p4());
    if (c.eat_word("T4"))
        return single3(tp4());
    if (c.eat_word("k(p)"))
        return single3(skyscraper3());
    if (c.eat_word("O")) {
        if (c.eat('(')) {
            long long t = c.integer();
            c.expect(')', "after O(t");
            return single3(line3(static_cast<int>(t)));
        }
        return single3(line3(0));
    }
    if (c.eat_word("S")) {
        if (c.eat('(')) {
            long long t = c.integer();
            c.expect(')', "after S(t");
            return single3(spinor3(static_cast<int>(t)));
        }
        return single3(spinor3(0));
    }
    c.fail("expected an atom (O(t), S(t), S, T4, Om4, O_H, O_L, k(p))");
}

KClass2 atom2(Cursor& c) {
    if (c.eat_word("k(p)"))
        return single2(skyscraper2());
    if (c.eat_word("O")) {
        if (c.eat('(')) {
            long long a = c.integer();
            c.expect(',', "in O(a,b)");
            long long b = c.integer();
            c.expect(')', "after O(a,b");
            return single2(line2(static_cast<int>(a), static_cast<int>(b)));
        }
        return single2(line2(0, 0));
    }
    c.fail("expected an atom (O(a,b), k(p))");
}

}  // namespace

KClass3 parse_kclass3(const std::string& text) {
    return parse_sum<Atom3>(text, atom3);
}

KClass2 parse_kclass2(const std::string& text) {
    return parse_sum<Atom2>(text, atom2);
}

}  // namespace quadrics
