#include <catch2/catch_amalgamated.hpp>

#include "idlkit/parser.hpp"
#include "idlkit/render.hpp"
#include "support/builders.hpp"

using namespace idlkit;

TEST_CASE("empty input parses to an empty model") {
    CHECK(parseIdl("").dependencies.empty());
    CHECK(parseIdl("   \n\t  ").dependencies.empty());
    CHECK(parseIdl("// only a comment\n").dependencies.empty());
}

TEST_CASE("conditional dependency with negated group") {
    Model m = parseIdl("IF p1 AND p2 THEN NOT (p3 OR p4);");
    REQUIRE(m.dependencies.size() == 1);
    const auto& dep = std::get<ConditionalDep>(m.dependencies[0]);

    Predicate cond = tb::chain({tb::term("p1"), tb::term("p2")}, {Conn::And});
    Predicate cons =
        tb::pred(tb::group(tb::chain({tb::term("p3"), tb::term("p4")}, {Conn::Or}), true));
    CHECK(dep.condition == cond);
    CHECK(dep.consequence == cons);
}

TEST_CASE("predefined with a param-value relation argument") {
    Model m = parseIdl("ZeroOrOne(radius, rankby=='distance');");
    REQUIRE(m.dependencies.size() == 1);
    const auto& dep = std::get<PredefinedDep>(m.dependencies[0]);
    CHECK(dep.form.kind == PredefKind::ZeroOrOne);
    CHECK_FALSE(dep.form.negated);
    REQUIRE(dep.form.clauses.size() == 2);
    CHECK(dep.form.clauses[0] == tb::pred(tb::term("radius")));
    CHECK(dep.form.clauses[1] == tb::pred(tb::string_eq("rankby", {"distance"})));
}

TEST_CASE("negated element inside a predefined form is a validation error") {
    CHECK_THROWS_AS(parseIdl("Or(p1, NOT p2);"), ValidationError);
    CHECK_THROWS_AS(parseIdl("AllOrNone(p1, (p2 AND NOT p3));"), ValidationError);
    // The unvalidated entry point still yields the AST.
    Model m = parseIdlUnvalidated("Or(p1, NOT p2);");
    auto diags = validateModel(m);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].rule == "negated-predefined-element");
    CHECK(diags[0].loc.line == 1);
}

TEST_CASE("negating a whole predefined dependency is valid") {
    Model m = parseIdl("NOT OnlyOne(p1, p2);");
    const auto& dep = std::get<PredefinedDep>(m.dependencies[0]);
    CHECK(dep.form.negated);
    CHECK(validateModel(m).empty());
}

TEST_CASE("arithmetic chains fold left to right") {
    Model m = parseIdl("p1 + p2 - p3 * p4 == 100;");
    const auto& dep = std::get<ArithmeticDep>(m.dependencies[0]);
    ArithExpr expect = make_arith_node(
        make_arith_node(make_arith_node(tb::leaf("p1"), ArithOp::Add, tb::leaf("p2")),
                        ArithOp::Sub, tb::leaf("p3")),
        ArithOp::Mul, tb::leaf("p4"));
    CHECK(dep.arith.expr == expect);
    CHECK(dep.arith.rel == RelOp::Eq);
    CHECK(dep.arith.value == Decimal(100));
}

TEST_CASE("parentheses override arithmetic chaining") {
    Model m = parseIdl("p1 * p2 / ((p3 - p4) * p5) < 176.89;");
    const auto& dep = std::get<ArithmeticDep>(m.dependencies[0]);
    ArithExpr inner = make_arith_node(
        make_arith_node(tb::leaf("p3"), ArithOp::Sub, tb::leaf("p4")), ArithOp::Mul,
        tb::leaf("p5"));
    ArithExpr expect = make_arith_node(
        make_arith_node(tb::leaf("p1"), ArithOp::Mul, tb::leaf("p2")), ArithOp::Div,
        std::move(inner));
    CHECK(dep.arith.expr == expect);
    CHECK(dep.arith.rel == RelOp::Lt);
    CHECK(dep.arith.value == Decimal::parse("176.89"));
}

TEST_CASE("arithmetic clause versus group disambiguation") {
    // Arithmetic clause that starts with '('.
    Model m1 = parseIdl("IF (p1 + p2) * p3 <= 100 THEN p4;");
    const auto& cond1 = std::get<ConditionalDep>(m1.dependencies[0]).condition;
    CHECK(std::holds_alternative<Arithmetic>(cond1.clauses[0]));
    // Group containing an arithmetic comparison.
    Model m2 = parseIdl("IF (p1 + p2 <= 100) AND p3 THEN p4;");
    const auto& cond2 = std::get<ConditionalDep>(m2.dependencies[0]).condition;
    REQUIRE(cond2.clauses.size() == 2);
    const auto& g = std::get<Group>(cond2.clauses[0]);
    CHECK(std::holds_alternative<Arithmetic>(g.inner.front().clauses[0]));
}

TEST_CASE("every paper snippet parses") {
    const char* corpus[] = {
        "IF p1 THEN p2=='A';",
        "IF p1 AND p2 THEN NOT (p3 OR p4);",
        "Or(p1, p2, p3);",
        "Or(p1, p3 AND p5, p6=='B');",
        "OnlyOne(p1, p2=='B');",
        "OnlyOne(p1 OR p2, p3 AND (p4 OR p5));",
        "AllOrNone(p1, p2==true);",
        "AllOrNone(p1 AND p2, p3 LIKE 'test_*' OR p4<10);",
        "ZeroOrOne(p1, p2, p3, p4);",
        "ZeroOrOne(p1, p2<=100);",
        "p1 < p2;",
        "p1 != p2;",
        "p1 + p2 - p3 * p4 == 100;",
        "p1 * p2 / ((p3 - p4) * p5) < 176.89;",
        "IF p1 THEN ZeroOrOne(p2, OnlyOne(p3, p4>p5));",
        // (closing parenthesis added; the source prints this one unbalanced)
        "AllOrNone(p1+p2<100, Or(p3=='A', Or(p4, p5>p6)));",
        "AllOrNone(p1, p2);",
        "IF p1 THEN p2;",
        "IF p2 THEN p1;",
        "NOT OnlyOne(p1, p2);",
        // Google Maps Places, all four operations, comments included.
        "// Operation: Search for places within specified area:\n"
        "ZeroOrOne(radius, rankby=='distance');\n"
        "IF rankby=='distance' THEN keyword OR name OR type;\n"
        "maxprice >= minprice;\n"
        "\n"
        "// Operation: Query information about places:\n"
        "AllOrNone(location, radius);\n"
        "Or(query, type);\n"
        "maxprice >= minprice;\n"
        "\n"
        "// Operation: Get photo of place:\n"
        "OnlyOne(maxheight, maxwidth);\n"
        "\n"
        "// Operation: Autocomplete place name:\n"
        "IF strictbounds THEN location AND radius;\n",
    };
    for (const char* src : corpus) {
        INFO(src);
        CHECK_NOTHROW(parseIdl(src));
    }
}

TEST_CASE("malformed inputs raise parse errors with positions") {
    struct Case {
        const char* src;
        int line;
    } cases[] = {
        {"IF p1 THEN;", 1},
        {"Or(p1);", 1},           // a predefined form needs two arguments
        {"p1;", 1},               // a bare term is not a dependency
        {"p1 == 'A';", 1},        // a value relation is not a dependency
        {"IF p1 THEN p2", 1},     // missing ';'
        {"IF p1 THEN p2 = 3;", 1},
        {"IF p1 THEN p2 != 'A';", 1},  // strings support only ==
        {"IF p1 THEN p2 > true;", 1},  // booleans support only ==
        {"IF p1 THEN NOT p2 < p3;", 1},
        {"NOT p1 < p2;", 1},
        {"\n\nIF p1 THEN [oops;", 3},
        {"IF p1 THEN 'A'==p2;", 1},
        {"p1 + p2;", 1},          // arithmetic needs a final comparison
        {"IF p1 + 3 < 10 THEN p2;", 1}, // literals cannot be arithmetic operands
    };
    for (const auto& c : cases) {
        INFO(c.src);
        try {
            parseIdl(c.src);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.loc().line == c.line);
        }
    }
}

TEST_CASE("bracketed names accept arbitrary text") {
    Model m = parseIdl("[owner.percentage1] + [owner.percentage2] <= 100;");
    const auto& dep = std::get<ArithmeticDep>(m.dependencies[0]);
    std::vector<std::string> names;
    forEachArithLeaf(dep.arith.expr, [&](const ParamRef& r) {
        CHECK(r.bracketed);
        names.push_back(r.name);
    });
    CHECK(names == std::vector<std::string>{"owner.percentage1", "owner.percentage2"});
}

TEST_CASE("string escapes and value alternatives") {
    Model m = parseIdl("IF p1=='it\\'s'|'a\\\\b'|'' THEN p2;");
    const auto& cond = std::get<ConditionalDep>(m.dependencies[0]).condition;
    const auto& term = std::get<Term>(cond.clauses[0]);
    const auto& se = std::get<StringEq>(std::get<ParamValueRel>(term.body));
    CHECK(se.values == std::vector<std::string>{"it's", "a\\b", ""});
}

TEST_CASE("keywords are case-sensitive") {
    // Lowercase "if" is an identifier, so this is not a conditional.
    CHECK_THROWS_AS(parseIdl("if p1 THEN p2;"), ParseError);
    // "OR" (the connective) differs from "Or" (the predefined form).
    Model m = parseIdl("Or(p1, p2 OR p3);");
    const auto& dep = std::get<PredefinedDep>(m.dependencies[0]);
    CHECK(dep.form.clauses[1].conns == std::vector<Conn>{Conn::Or});
}

TEST_CASE("predicate connectives chain right-recursively") {
    Model m = parseIdl("IF p1 AND p2 OR p3 THEN p4;");
    const auto& cond = std::get<ConditionalDep>(m.dependencies[0]).condition;
    REQUIRE(cond.clauses.size() == 3);
    CHECK(cond.conns == std::vector<Conn>{Conn::And, Conn::Or});
}

TEST_CASE("numeric relations accept negative and fractional literals") {
    Model m = parseIdl("IF p1>=-5 THEN p2<0.25;");
    const auto& dep = std::get<ConditionalDep>(m.dependencies[0]);
    const auto& lhs = std::get<Term>(dep.condition.clauses[0]);
    const auto& nr = std::get<NumRel>(std::get<ParamValueRel>(lhs.body));
    CHECK(nr.op == RelOp::Ge);
    CHECK(nr.value == Decimal(-5));
    const auto& rhs = std::get<Term>(dep.consequence.clauses[0]);
    const auto& nr2 = std::get<NumRel>(std::get<ParamValueRel>(rhs.body));
    CHECK(nr2.value == Decimal::parse("0.25"));
}
