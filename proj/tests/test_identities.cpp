#include "doctest.h"

#include "mzvlab/identities.hpp"
#include "mzvlab/report_io.hpp"
#include "mzvlab/words.hpp"

using namespace mzvlab;

namespace {

PrecisionConfig test_cfg() {
    PrecisionConfig cfg;
    setup_precision(cfg);
    return cfg;
}

Params single(const char* name, std::vector<int> v) {
    Params p;
    p[name] = std::move(v);
    return p;
}

}  // namespace

TEST_CASE("catalog is sorted and ids are unique") {
    const auto& entries = catalog();
    for (size_t i = 1; i < entries.size(); ++i)
        CHECK(entries[i - 1].id < entries[i].id);
    for (const auto& e : entries) CHECK(!e.grid.empty());
}

TEST_CASE("list_identities filters") {
    CHECK(list_identities("").size() == catalog().size());
    CHECK(list_identities("GOLD-*").size() == 2);
    CHECK(list_identities("EQ3").size() == 2);  // EQ3.4, EQ3.5
    CHECK(list_identities("NO-SUCH").empty());
    auto duality = list_identities("DUALITY");
    REQUIRE(duality.size() == 1);
    CHECK(duality[0]->grid.size() == 63);  // admissible indices, weight <= 7
}

TEST_CASE("verify examples") {
    auto cfg = test_cfg();
    // zeta*(2,1,1,1) = 4 zeta(5)
    const auto star = verify("STAR-2-ONES", single("m", {3}), cfg);
    CHECK(star.passed);
    const auto z5 = mzv_holder(Index{5}, cfg);
    CHECK(abs(star.rhs - 4 * z5.value) < pow10(-30));

    // zeta*(2,1,1) = 3 zeta(4), via the general reduction
    Params p = single("m", {2});
    p["p"] = {1};  // redundant depth parameter is accepted
    const auto eq35 = verify("EQ3.5", p, cfg);
    CHECK(eq35.passed);
    CHECK(abs(eq35.rhs - 3 * mzv_holder(Index{4}, cfg).value) < pow10(-30));

    CHECK_THROWS_AS(verify("NOPE", {}, cfg), domain_error);
    CHECK_THROWS_AS(verify("STAR-2-ONES", single("m", {9}), cfg), domain_error);
    CHECK_THROWS_AS(verify("STAR-2-ONES", {}, cfg), domain_error);
    // p inconsistent with m
    Params bad = single("m", {2, 1});
    bad["p"] = {1};
    CHECK_THROWS_AS(verify("EQ3.5", bad, cfg), domain_error);
}

TEST_CASE("suite runs and reports deterministically") {
    auto cfg = test_cfg();
    const auto gold = run_suite("GOLD-*", cfg);
    REQUIRE(gold.size() == 2);
    for (const auto& r : gold) {
        CHECK(r.passed);
        CHECK(!r.conjecture);
    }
    CHECK(suite_passed(gold));

    const auto again = run_suite("GOLD-*", cfg);
    for (size_t i = 0; i < gold.size(); ++i) {
        CHECK(render(gold[i].lhs, cfg.digits) == render(again[i].lhs, cfg.digits));
        CHECK(render(gold[i].rhs, cfg.digits) == render(again[i].rhs, cfg.digits));
    }
}

TEST_CASE("parallel suite matches serial bit for bit") {
    auto cfg = test_cfg();
    // the CITED entries mix large exact coefficients with deep star
    // expansions, which is where cross-thread precision disturbances
    // would show up first
    for (const char* filter : {"STAR", "CITED"}) {
        const auto serial = run_suite(filter, cfg, 1);
        const auto parallel = run_suite(filter, cfg, 2);
        REQUIRE(serial.size() == parallel.size());
        for (size_t i = 0; i < serial.size(); ++i) {
            CHECK(serial[i].id == parallel[i].id);
            CHECK(render(serial[i].lhs, cfg.digits) ==
                  render(parallel[i].lhs, cfg.digits));
            CHECK(render(serial[i].rhs, cfg.digits) ==
                  render(parallel[i].rhs, cfg.digits));
        }
    }
}

TEST_CASE("conjecture entries are reported but never fail the suite") {
    auto cfg = test_cfg();
    const auto reports = run_suite("CON-ZB", cfg);
    REQUIRE(!reports.empty());
    for (const auto& r : reports) CHECK(r.conjecture);
    CHECK(suite_passed(reports));
}

TEST_CASE("report serialization") {
    auto cfg = test_cfg();
    const auto rep = verify("STAR-2-ONES", single("m", {0}), cfg);
    const auto j = report_to_json(rep, cfg.digits);
    for (const char* key : {"id", "params", "lhs", "rhs", "abs_diff",
                            "tolerance", "bound", "passed", "terms_used",
                            "seconds"})
        CHECK(j.contains(key));
    CHECK(j["id"] == "STAR-2-ONES");
    CHECK(j["passed"] == true);
    CHECK(report_csv_header() ==
          "id,params,lhs,rhs,abs_diff,tolerance,bound,passed,terms_used,seconds");
    const std::string row = report_to_csv(rep, cfg.digits);
    CHECK(row.substr(0, 12) == "STAR-2-ONES,");
    // header and row have the same field count
    const auto count = [](const std::string& s) {
        size_t n = 1;
        bool quoted = false;
        for (char c : s) {
            if (c == '"') quoted = !quoted;
            if (c == ',' && !quoted) ++n;
        }
        return n;
    };
    CHECK(count(row) == count(report_csv_header()));
}

TEST_CASE("rigorous-bound entries cover the observed difference") {
    auto cfg = test_cfg();
    // both sides of the bumped-zeta reduction go through the rigorous
    // split-integral backend
    for (const auto& r : run_suite("EQ3.5", cfg)) CHECK(r.abs_diff <= r.bound);
    for (const auto& r : run_suite("DUALITY", cfg)) CHECK(r.abs_diff <= r.bound);
}

TEST_CASE("tolerance override is honored") {
    auto cfg = test_cfg();
    cfg.tolerance = pow10(-3);
    const auto rep = verify("GOLD-ZB221", {}, cfg);
    CHECK(rep.tolerance == pow10(-3));
    CHECK(rep.passed);
}
