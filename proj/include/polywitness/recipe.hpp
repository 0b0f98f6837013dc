#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "polywitness/errors.hpp"

namespace polywitness {

/**
 * Construction recipe AST.  The s-expression grammar round-trips bit-exactly:
 *
 *   recipe := (simplex d) | (cyclic d n) | (pyr recipe) | (dual recipe)
 *           | (trunc recipe [v]) | (stack recipe [f])
 *           | (prod recipe recipe) | (beyond recipe (f ...))
 *
 * Selectors are optional; omitted means the deterministic default (lowest
 * qualifying vertex or facet index).
 */
struct Recipe {
    enum class Kind { Simplex, Cyclic, Pyramid, Dual, Truncate, Stack, Product, Beyond };

    Kind kind = Kind::Simplex;
    int a = 0;                 // simplex: d | cyclic: d
    int b = 0;                 // cyclic: n
    int selector = -1;         // trunc: vertex | stack: facet; -1 = default
    std::vector<int> subset;   // beyond: target facet indices
    std::vector<Recipe> kids;  // inner recipes

    static Recipe simplex(int d) { return {Kind::Simplex, d}; }
    static Recipe cyclic(int d, int n) { return {Kind::Cyclic, d, n}; }
    static Recipe pyramid(Recipe inner) {
        Recipe r{Kind::Pyramid};
        r.kids.push_back(std::move(inner));
        return r;
    }
    static Recipe dual_of(Recipe inner) {
        Recipe r{Kind::Dual};
        r.kids.push_back(std::move(inner));
        return r;
    }
    static Recipe truncate(Recipe inner, int vertex = -1) {
        Recipe r{Kind::Truncate};
        r.selector = vertex;
        r.kids.push_back(std::move(inner));
        return r;
    }
    static Recipe stack(Recipe inner, int facet = -1) {
        Recipe r{Kind::Stack};
        r.selector = facet;
        r.kids.push_back(std::move(inner));
        return r;
    }
    static Recipe product(Recipe left, Recipe right) {
        Recipe r{Kind::Product};
        r.kids.push_back(std::move(left));
        r.kids.push_back(std::move(right));
        return r;
    }
    static Recipe beyond(Recipe inner, std::vector<int> facet_subset) {
        Recipe r{Kind::Beyond};
        r.subset = std::move(facet_subset);
        r.kids.push_back(std::move(inner));
        return r;
    }
};

inline std::string print_recipe(const Recipe& r) {
    switch (r.kind) {
        case Recipe::Kind::Simplex:
            return "(simplex " + std::to_string(r.a) + ")";
        case Recipe::Kind::Cyclic:
            return "(cyclic " + std::to_string(r.a) + " " + std::to_string(r.b) + ")";
        case Recipe::Kind::Pyramid:
            return "(pyr " + print_recipe(r.kids[0]) + ")";
        case Recipe::Kind::Dual:
            return "(dual " + print_recipe(r.kids[0]) + ")";
        case Recipe::Kind::Truncate:
            return "(trunc " + print_recipe(r.kids[0]) +
                   (r.selector >= 0 ? " " + std::to_string(r.selector) : "") + ")";
        case Recipe::Kind::Stack:
            return "(stack " + print_recipe(r.kids[0]) +
                   (r.selector >= 0 ? " " + std::to_string(r.selector) : "") + ")";
        case Recipe::Kind::Product:
            return "(prod " + print_recipe(r.kids[0]) + " " + print_recipe(r.kids[1]) + ")";
        case Recipe::Kind::Beyond: {
            std::string s = "(beyond " + print_recipe(r.kids[0]) + " (";
            for (std::size_t i = 0; i < r.subset.size(); ++i)
                s += (i ? " " : "") + std::to_string(r.subset[i]);
            return s + "))";
        }
    }
    fail("ParseError", "unknown recipe node");
}

namespace detail {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool peek_open() {
        skip_ws();
        return pos < text.size() && text[pos] == '(';
    }
    void expect(char c) {
        skip_ws();
        require(pos < text.size() && text[pos] == c, "ParseError",
                std::string("expected '") + c + "' in recipe");
        ++pos;
    }
    std::string atom() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != '(' && text[pos] != ')' &&
               !std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        require(pos > start, "ParseError", "expected atom in recipe");
        return text.substr(start, pos - start);
    }
    bool at_close() {
        skip_ws();
        return pos < text.size() && text[pos] == ')';
    }
    int integer() {
        std::string a = atom();
        try {
            std::size_t used = 0;
            int v = std::stoi(a, &used);
            require(used == a.size(), "ParseError", "bad integer '" + a + "'");
            return v;
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail("ParseError", "bad integer '" + a + "'");
        }
    }
};

inline Recipe parse_node(Lexer& lx) {
    lx.expect('(');
    std::string head = lx.atom();
    Recipe r;
    if (head == "simplex") {
        r = Recipe::simplex(lx.integer());
    } else if (head == "cyclic") {
        int d = lx.integer();
        r = Recipe::cyclic(d, lx.integer());
    } else if (head == "pyr") {
        r = Recipe::pyramid(parse_node(lx));
    } else if (head == "dual") {
        r = Recipe::dual_of(parse_node(lx));
    } else if (head == "trunc" || head == "stack") {
        Recipe inner = parse_node(lx);
        int sel = lx.at_close() ? -1 : lx.integer();
        r = head == "trunc" ? Recipe::truncate(std::move(inner), sel)
                            : Recipe::stack(std::move(inner), sel);
    } else if (head == "prod") {
        Recipe left = parse_node(lx);
        r = Recipe::product(std::move(left), parse_node(lx));
    } else if (head == "beyond") {
        Recipe inner = parse_node(lx);
        lx.expect('(');
        std::vector<int> subset;
        while (!lx.at_close()) subset.push_back(lx.integer());
        lx.expect(')');
        require(!subset.empty(), "ParseError", "beyond needs a nonempty facet list");
        r = Recipe::beyond(std::move(inner), std::move(subset));
    } else {
        fail("ParseError", "unknown recipe head '" + head + "'");
    }
    lx.expect(')');
    return r;
}

} // namespace detail

inline Recipe parse_recipe(const std::string& text) {
    detail::Lexer lx{text};
    Recipe r = detail::parse_node(lx);
    lx.skip_ws();
    require(lx.pos == text.size(), "ParseError", "trailing input after recipe");
    return r;
}

} // namespace polywitness
