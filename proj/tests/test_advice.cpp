#include <doctest.h>

#include <cmath>
#include <vector>

#include "advice50/advice.hpp"
#include "advice50/json_io.hpp"
#include "oracles.hpp"

using namespace advice50;
using advice::Target;
using families::Kind;

namespace {

oracles::SolvedFn solved_fn(const families::OracleFamily& family, Target target) {
    std::vector<families::SolutionCharacter> chars;
    for (std::size_t k = 0; k < family.size(); ++k) chars.push_back(families::character(family, k));
    const int n = family.n;
    return [chars, target, n](const std::vector<std::size_t>& candidates) {
        if (target == Target::OrthogonalString) {
            // Independent route: try every nonzero s against every candidate.
            for (std::uint32_t s = 1; s < (1u << n); ++s) {
                bool orthogonal_to_all = true;
                for (std::size_t k : candidates) {
                    if (oracles::popcount_parity(s, chars[k].bits) != 0) {
                        orthogonal_to_all = false;
                        break;
                    }
                }
                if (orthogonal_to_all) return true;
            }
            return false;
        }
        for (std::size_t k : candidates) {
            if (!(chars[k] == chars[candidates.front()])) return false;
        }
        return true;
    };
}

int enumerated_minimax(const families::OracleFamily& family, Target target,
                       oracles::Strategy* strategy = nullptr) {
    std::vector<std::vector<std::uint32_t>> tables;
    for (const auto& t : family.tables) tables.push_back(t.values);
    std::vector<std::size_t> all(family.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    return oracles::minimax_enumerate(tables, solved_fn(family, target), all, strategy);
}

}  // namespace

TEST_CASE("minimax query counts match the worked values") {
    const auto deutsch = families::enumerate_family(Kind::Deutsch, 1);
    const auto dj2 = families::enumerate_family(Kind::DeutschJozsa, 2);
    const auto dj3 = families::enumerate_family(Kind::DeutschJozsa, 3);
    const auto simon2 = families::enumerate_family(Kind::Simon, 2);
    const auto grover2 = families::enumerate_family(Kind::Grover, 2);

    CHECK(advice::minimax_queries(deutsch, Target::Character) == 2);
    CHECK(advice::minimax_queries_with_advice(deutsch, Target::Character) == 1);

    CHECK(advice::minimax_queries(dj2, Target::Character) == 3);  // 2^{n-1} + 1
    CHECK(advice::minimax_queries_with_advice(dj2, Target::Character) == 1);
    CHECK(advice::minimax_queries(dj3, Target::Character) == 5);
    CHECK(advice::minimax_queries_with_advice(dj3, Target::Character) == 1);

    CHECK(advice::minimax_queries_with_advice(simon2, Target::HiddenString) == 1);
    CHECK(advice::minimax_queries_with_advice(simon2, Target::OrthogonalString) == 1);

    CHECK(advice::minimax_queries(grover2, Target::Location) == 3);  // 2^n - 1
    CHECK(advice::minimax_queries_with_advice(grover2, Target::Location) == 1);
}

TEST_CASE("memoized search equals full strategy enumeration on the small instances") {
    struct Case {
        Kind kind;
        int n;
        Target target;
    };
    for (const auto& c :
         {Case{Kind::Deutsch, 1, Target::Character}, Case{Kind::DeutschJozsa, 2, Target::Character},
          Case{Kind::Simon, 2, Target::OrthogonalString},
          Case{Kind::Simon, 2, Target::HiddenString}, Case{Kind::Grover, 2, Target::Location}}) {
        const auto family = families::enumerate_family(c.kind, c.n);
        oracles::Strategy strategy;
        const int enumerated = enumerated_minimax(family, c.target, &strategy);
        CHECK(advice::minimax_queries(family, c.target) == enumerated);

        // Every leaf of the optimal strategy really pins the target.
        std::vector<std::vector<std::uint32_t>> tables;
        for (const auto& t : family.tables) tables.push_back(t.values);
        std::vector<std::size_t> all(family.size());
        for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
        CHECK(oracles::strategy_leaves_solved(tables, solved_fn(family, c.target), all, strategy));
    }
}

TEST_CASE("advised bits scale as the square root for the search family") {
    for (int n : {2, 3, 4}) {
        const auto family = families::enumerate_family(Kind::Grover, n);
        const int missing = n - n / 2;
        CHECK(advice::minimax_queries_with_advice(family, Target::Location) ==
              (1 << missing) - 1);
    }
    // Unadvised search tries locations one by one.
    const auto grover4 = families::enumerate_family(Kind::Grover, 4);
    CHECK(advice::minimax_queries(grover4, Target::Location) == 15);
}

TEST_CASE("advice never hurts") {
    struct Case {
        Kind kind;
        int n;
    };
    for (const auto& [kind, n] : {Case{Kind::Deutsch, 1}, Case{Kind::DeutschJozsa, 2},
                                  Case{Kind::DeutschJozsa, 3}, Case{Kind::Simon, 2},
                                  Case{Kind::Simon, 3}, Case{Kind::Grover, 2},
                                  Case{Kind::Grover, 4}}) {
        const auto family = families::enumerate_family(kind, n);
        const auto target = advice::default_target(kind);
        CHECK(advice::minimax_queries_with_advice(family, target) <=
              advice::minimax_queries(family, target));
    }
}

TEST_CASE("every single good advice spec already gets the structured cases to one query") {
    struct Case {
        Kind kind;
        int n;
        Target target;
    };
    for (const auto& c :
         {Case{Kind::Deutsch, 1, Target::Character}, Case{Kind::DeutschJozsa, 2, Target::Character},
          Case{Kind::DeutschJozsa, 3, Target::Character},
          Case{Kind::Simon, 2, Target::HiddenString}, Case{Kind::Simon, 3, Target::HiddenString}}) {
        const auto family = families::enumerate_family(c.kind, c.n);
        for (std::size_t k = 0; k < family.size(); ++k) {
            for (const auto& spec : histories::enumerate_good_advice(family, k)) {
                CHECK(advice::minimax_queries(family, c.target, spec) == 1);
            }
        }
    }
}

TEST_CASE("verify_50_rule fills the expected report rows") {
    SUBCASE("deutsch") {
        const auto report = advice::verify_50_rule(Kind::Deutsch, 1);
        CHECK(report.worst_case_no_advice == 2);
        CHECK(report.worst_case_with_advice == 1);
        CHECK(report.quantum_queries == 1);
        CHECK(report.rule_holds);
    }
    SUBCASE("deutsch-jozsa n=2") {
        const auto report = advice::verify_50_rule(Kind::DeutschJozsa, 2);
        CHECK(report.worst_case_no_advice == 3);
        CHECK(report.worst_case_with_advice == 1);
        CHECK(report.quantum_queries == 1);
        CHECK(report.rule_holds);
    }
    SUBCASE("simon n=2 per-iteration counts") {
        const auto report = advice::verify_50_rule(Kind::Simon, 2);
        CHECK(report.worst_case_with_advice == 1);
        CHECK(report.quantum_queries == 1);
        CHECK(report.rule_holds);
    }
    SUBCASE("grover n=2") {
        const auto report = advice::verify_50_rule(Kind::Grover, 2);
        CHECK(report.worst_case_no_advice == 3);
        CHECK(report.worst_case_with_advice == 1);
        CHECK(report.quantum_queries == 1);
        CHECK(report.rule_holds);
    }
    SUBCASE("grover growth comparison at n=4 and n=6") {
        for (int n : {4, 6}) {
            const auto report = advice::verify_50_rule(Kind::Grover, n);
            const double scale = std::pow(2.0, n / 2.0);
            CHECK(report.rule_holds);
            CHECK(report.quantum_queries >= scale / 4.0);
            CHECK(report.quantum_queries <= scale * 4.0);
            CHECK(report.worst_case_with_advice >= scale / 4.0);
            CHECK(report.worst_case_with_advice <= scale * 4.0);
        }
    }
}

TEST_CASE("speedup summary keeps the three columns side by side") {
    std::vector<advice::QueryReport> reports{
        advice::verify_50_rule(Kind::Deutsch, 1),
        advice::verify_50_rule(Kind::DeutschJozsa, 2),
        advice::verify_50_rule(Kind::DeutschJozsa, 3),
        advice::verify_50_rule(Kind::Simon, 2),
        advice::verify_50_rule(Kind::Grover, 2),
        advice::verify_50_rule(Kind::Grover, 4),
    };
    const auto rows = advice::speedup_summary(reports);
    REQUIRE(rows.size() == reports.size());

    CHECK(rows[0].no_advice == 2);
    CHECK(rows[0].with_advice == 1);
    CHECK(rows[0].quantum == 1);

    CHECK(rows[1].no_advice == 3);
    CHECK(rows[2].no_advice == 5);
    CHECK(rows[1].quantum == 1);
    CHECK(rows[2].quantum == 1);

    CHECK(rows[4].no_advice == 3);
    CHECK(rows[4].with_advice == 1);
    CHECK(rows[5].no_advice == 15);
    CHECK(rows[5].with_advice == 3);
    CHECK(rows[5].quantum == 3);

    CHECK(rows[1].growth == "exponential");
    CHECK(rows[4].growth == "quadratic");

    const auto text = io::summary_to_text(rows);
    CHECK(text.find("deutsch") != std::string::npos);
    CHECK(text.find("exponential") != std::string::npos);
    const auto j = io::summary_to_json(rows);
    CHECK(j.size() == rows.size());
    CHECK(j[0].at("no_advice") == 2);

    CHECK_THROWS_AS(advice::speedup_summary({}), std::invalid_argument);
}

TEST_CASE("unadvised classical period finding is a birthday hunt, reported not assumed") {
    // A classical player without advice queries arguments until two values
    // collide; the collision offset is the period. Measure the empirical
    // query count at n = 3 rather than asserting a growth exponent.
    const auto family = families::enumerate_family(Kind::Simon, 3);
    advice50::SplitRng rng(31);
    double total_queries = 0.0;
    const int trials = 2000;
    for (int trial = 0; trial < trials; ++trial) {
        const auto k = static_cast<std::size_t>(rng.raw() % family.size());
        std::vector<std::uint32_t> order{0, 1, 2, 3, 4, 5, 6, 7};
        for (std::size_t i = order.size(); i > 1; --i) {
            std::swap(order[i - 1], order[rng.raw() % i]);
        }
        std::vector<std::uint32_t> seen_values;
        int queries = 0;
        for (std::uint32_t x : order) {
            ++queries;
            const std::uint32_t value = family.evaluate(k, x);
            if (std::find(seen_values.begin(), seen_values.end(), value) != seen_values.end()) {
                break;
            }
            seen_values.push_back(value);
        }
        total_queries += queries;
    }
    const double mean = total_queries / trials;
    MESSAGE("mean queries to first collision at n=3: ", mean);
    CHECK(mean > 2.0);
    CHECK(mean <= 5.0);  // five distinct values cannot exist
}

TEST_CASE("query report serialization uses the flat field names") {
    const auto report = advice::verify_50_rule(Kind::Grover, 2);
    const auto j = io::query_report_to_json(report);
    CHECK(j.at("kind") == "grover");
    CHECK(j.at("n") == 2);
    CHECK(j.at("no_advice") == 3);
    CHECK(j.at("with_advice") == 1);
    CHECK(j.at("quantum") == 1);
    CHECK(j.at("holds") == true);
}
