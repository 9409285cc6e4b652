#include "qlat/wordexpr.hpp"

namespace qlat {

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("word syntax error at position " + std::to_string(i) + ": " + what);
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    long integer() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) fail("expected integer exponent");
        return std::stol(s.substr(start, i - start));
    }

    GenWord atom() {
        skip_ws();
        if (i >= s.size()) fail("expected a word term");
        if (s[i] == '(') {
            ++i;
            GenWord w = expr();
            if (!eat(')')) fail("expected ')'");
            return w;
        }
        if (s[i] == '[') {
            ++i;
            GenWord a = expr();
            if (!eat(',')) fail("expected ',' in commutator");
            GenWord b = expr();
            if (!eat(']')) fail("expected ']'");
            return commutator(a, b);
        }
        if (s.compare(i, 4, "Tinf") == 0) {
            i += 4;
            return GenWord::letter(Gen::Tinf);
        }
        if (s.compare(i, 2, "T0") == 0) {
            i += 2;
            return GenWord::letter(Gen::T0);
        }
        if (s.compare(i, 2, "T1") == 0) {
            i += 2;
            return GenWord::letter(Gen::T1);
        }
        fail("expected Tinf, T0, T1, '(' or '['");
    }

    GenWord factor() {
        GenWord w = atom();
        if (i < s.size() && s[i] == '^') {
            ++i;
            w = w.pow(integer());
        }
        return w;
    }

    bool at_expr_end() {
        skip_ws();
        return i >= s.size() || s[i] == ')' || s[i] == ']' || s[i] == ',';
    }

    GenWord expr() {
        GenWord w;
        while (!at_expr_end()) w = w * factor();
        return w;
    }
};

}  // namespace

GenWord parse_word_expr(const std::string& text) {
    Parser p{text};
    GenWord w = p.expr();
    p.skip_ws();
    if (p.i != text.size()) p.fail("trailing input");
    return w;
}

}  // namespace qlat
