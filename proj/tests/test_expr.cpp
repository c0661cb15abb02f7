#include "quadrics/expr.hpp"

#include "testlib.hpp"

using namespace quadrics;

namespace {

void check_parse3(const std::string& text, const KClass3& want) {
    try {
        check_eq(to_string(parse_kclass3(text)), to_string(want), "parse \"" + text + "\"");
    } catch (const parse_error& e) {
        check(false, "parse \"" + text + "\" failed: " + e.what());
    }
}

void check_parse2(const std::string& text, const KClass2& want) {
    try {
        check_eq(to_string(parse_kclass2(text)), to_string(want), "parse \"" + text + "\"");
    } catch (const parse_error& e) {
        check(false, "parse \"" + text + "\" failed: " + e.what());
    }
}

void check_rejects3(const std::string& text, const std::string& label) {
    bool threw = false;
    try {
        parse_kclass3(text);
    } catch (const parse_error&) {
        threw = true;
    }
    check(threw, label + ": \"" + text + "\" should not parse");
}

void atoms() {
    check_parse3("O(0)", single3(line3(0)));
    check_parse3("O", single3(line3(0)));
    check_parse3("O(-2)", single3(line3(-2)));
    check_parse3("S", single3(spinor3(0)));
    check_parse3("S(-1)", single3(spinor3(-1)));
    check_parse3("T4", single3(tp4()));
    check_parse3("Om4", single3(omega_p4()));
    check_parse3("O_H", single3(o_hyperplane()));
    check_parse3("O_L", single3(o_line()));
    check_parse3("k(p)", single3(skyscraper3()));

    check_parse2("O(1,2)", single2(line2(1, 2)));
    check_parse2("O(-1,-1)", single2(line2(-1, -1)));
    check_parse2("O", single2(line2(0, 0)));
    check_parse2("k(p)", single2(skyscraper2()));
}

void combinations() {
    check_parse3("O(1) + S", single3(line3(1)) + single3(spinor3(0)));
    check_parse3("2*O(1) - 3*O(-1)", single3(line3(1), 2) - single3(line3(-1), 3));
    check_parse3("O^4 - 2*O(-1)", single3(line3(0), 4) - single3(line3(-1), 2));
    check_parse3("-S(1) + O", single3(line3(0)) - single3(spinor3(1)));
    check_parse3("2*S^3", single3(spinor3(0), 6));
    check_parse3("O(1)^2 + O^2", single3(line3(1), 2) + single3(line3(0), 2));
    check_parse3("O - O", KClass3{});
    check_parse3("5*O(-1) - O(-2)", single3(line3(-1), 5) - single3(line3(-2)));
    check_parse3("2O(1)", single3(line3(1), 2));

    // Cancellation across terms.
    check_parse3("S + O(1) - S", single3(line3(1)));

    check_parse2("O(2,1) + O(0,1)", single2(line2(2, 1)) + single2(line2(0, 1)));
    check_parse2("2*O(1,1) - k(p)", single2(line2(1, 1), 2) - single2(skyscraper2()));
}

void whitespace_and_format() {
    check_parse3("  O( 1 )  +  2 * S( -2 ) ", single3(line3(1)) + single3(spinor3(-2), 2));
    check_parse3("O(+1)", single3(line3(1)));
    // Round trip: to_string output parses back to the same class.
    const KClass3 samples[] = {
        single3(spinor3(-1), 4) - single3(line3(0), 6) + single3(line3(-2)),
        single3(tp4()) + single3(o_hyperplane(), 2) - single3(skyscraper3()),
        KClass3{},
    };
    for (const KClass3& x : samples) {
        if (to_string(x) == "0")
            continue;  // "0" is printer output, not grammar
        check_parse3(to_string(x), x);
    }
}

void rejects() {
    check_rejects3("", "empty input");
    check_rejects3("O(", "unclosed parenthesis");
    check_rejects3("O(1", "unclosed parenthesis");
    check_rejects3("2*", "dangling multiplier");
    check_rejects3("3", "bare integer");
    check_rejects3("O(1,2)", "surface atom in threefold grammar");
    check_rejects3("O^-2", "negative exponent");
    check_rejects3("+O", "leading plus");
    check_rejects3("O + + S", "doubled operator");
    check_rejects3("Q(1)", "unknown atom");
    check_rejects3("O(1))", "trailing garbage");
    check_rejects3("S(1,2)", "spinor with two arguments");

    bool threw = false;
    try {
        parse_kclass2("S");
    } catch (const parse_error&) {
        threw = true;
    }
    check(threw, "spinor atom rejected in surface grammar");

    // parse_error carries a position message.
    try {
        parse_kclass3("O(1) # S");
        check(false, "garbage accepted");
    } catch (const parse_error& e) {
        check(std::string(e.what()).find("position") != std::string::npos,
              "error message names a position");
    }
}

}  // namespace

int main() {
    atoms();
    combinations();
    whitespace_and_format();
    rejects();
    return finish("test_expr");
}
