#include "doctest.h"

#include <cstdio>

#include "mzvlab/expression.hpp"
#include "mzvlab/report_io.hpp"
#include "mzvlab/series.hpp"
#include "mzvlab/words.hpp"

using namespace mzvlab;

TEST_CASE("expression parsing") {
    const auto z = parse_expression("zeta(2,1)");
    CHECK(z.kind == ExprKind::zeta);
    CHECK(z.first == std::vector<int>{2, 1});

    const auto a = parse_expression("azeta(-2,3)");
    CHECK(a.kind == ExprKind::azeta);
    CHECK(a.first == std::vector<int>{-2, 3});

    const auto li = parse_expression("li(2,1; 1/2)");
    CHECK(li.kind == ExprKind::li);
    CHECK(li.point == Rational(1, 2));

    const auto ky = parse_expression("ky(2,1 | 1,2)");
    CHECK(ky.first == std::vector<int>{2, 1});
    CHECK(ky.second == std::vector<int>{1, 2});

    const auto hz = parse_expression("hz(3,2; a=1/4)");
    CHECK(hz.point == Rational(1, 4));

    CHECK(parse_expression("zetastar(2,1,1)").kind == ExprKind::zetastar);
    CHECK(parse_expression("dual(1,1,2,1)").kind == ExprKind::dual);
    CHECK(parse_expression("stuffle(2,1 | 1)").kind == ExprKind::stuffle);
    CHECK(parse_expression("starexpand(2,1,1)").kind == ExprKind::starexpand);
}

TEST_CASE("expression syntax errors carry positions") {
    try {
        parse_expression("zeta(2,,1)");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position == 7);
    }
    CHECK_THROWS_AS(parse_expression("nope(2)"), parse_error);
    CHECK_THROWS_AS(parse_expression("zeta(2"), parse_error);
    CHECK_THROWS_AS(parse_expression("zeta(2) junk"), parse_error);
    CHECK_THROWS_AS(parse_expression("li(2; 1/0)"), parse_error);
    CHECK_THROWS_AS(parse_expression("ky(2,1)"), parse_error);
}

TEST_CASE("canonical text round-trips") {
    for (const char* text :
         {"zeta(2,1)", "zetastar(2,1,1)", "azeta(-2,3)", "li(2,1;1/2)",
          "ky(2,1|1,2)", "zbstar(2,2,1)", "hz(3,2;a=1/4)", "dual(1,1,2,1)",
          "stuffle(2,1|1)", "starexpand(2,1,1)"}) {
        const auto e = parse_expression(text);
        CHECK(e.canonical() == text);
        const auto again = parse_expression(e.canonical());
        CHECK(again.canonical() == e.canonical());
    }
}

TEST_CASE("expression evaluation") {
    PrecisionConfig cfg;
    cfg.max_terms = 20000;
    setup_precision(cfg);
    const auto z = evaluate_expression(parse_expression("zeta(2)"), cfg);
    CHECK(abs(z.value.value - hp_pi() * hp_pi() / 6) < pow10(-30));
    const auto dual = evaluate_expression(parse_expression("dual(1,1,2,1)"), cfg);
    CHECK(!dual.is_value);
    CHECK(dual.text == "3,2");
    const auto st = evaluate_expression(parse_expression("starexpand(2,1)"), cfg);
    CHECK(st.text == "1*(2,1) + 1*(3)");
    CHECK_THROWS_AS(
        evaluate_expression(parse_expression("zeta(1,2)"), cfg),
        divergence_error);
}

TEST_CASE("value cache") {
    const std::string path = "test_cache_tmp.jsonl";
    std::remove(path.c_str());
    {
        ValueCache cache(path);
        CHECK(!cache.lookup("zeta(2)", 40));
        cache.append({"zeta(2)", 40, "1.6449", "1e-41", "rigorous", "t0"});
        cache.append({"zeta(3)", 30, "1.2020", "1e-31", "rigorous", "t1"});
        CHECK(cache.lookup("zeta(2)", 40));
        CHECK(cache.lookup("zeta(2)", 30));      // stored P >= requested
        CHECK(!cache.lookup("zeta(3)", 40));     // stored P too small
        cache.append({"zeta(2)", 40, "9.9999", "1e-41", "rigorous", "t2"});
        CHECK(cache.lookup("zeta(2)", 40)->value == "9.9999");  // last wins
    }
    {
        ValueCache reloaded(path);  // survives reload
        CHECK(reloaded.lookup("zeta(2)", 40)->value == "9.9999");
        reloaded.clear();
        CHECK(reloaded.entries().empty());
    }
    {
        ValueCache empty(path);
        CHECK(!empty.lookup("zeta(2)", 40));
    }
    std::remove(path.c_str());
}
