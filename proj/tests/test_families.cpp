#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "advice50/families.hpp"
#include "advice50/json_io.hpp"
#include "oracles.hpp"

using namespace advice50;
using families::Kind;
using families::SolutionCharacter;

TEST_CASE("deutsch family is the four one-bit tables") {
    const auto family = families::enumerate_family(Kind::Deutsch, 1);
    REQUIRE(family.size() == 4);
    const std::vector<std::string> suffixes{"00", "01", "10", "11"};
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(family.tables[k].suffix == suffixes[k]);
        CHECK(family.tables[k].index == k);
        // The suffix rows are the table: first bit f(0), second bit f(1).
        CHECK(family.evaluate(k, 0) == static_cast<std::uint32_t>(suffixes[k][0] - '0'));
        CHECK(family.evaluate(k, 1) == static_cast<std::uint32_t>(suffixes[k][1] - '0'));
    }
    CHECK(family.evaluate(1, 1) == 1);  // suffix 01
    CHECK_THROWS_AS(families::enumerate_family(Kind::Deutsch, 2), std::invalid_argument);
}

TEST_CASE("deutsch-jozsa n=2 family lists the constant and balanced tables") {
    const auto family = families::enumerate_family(Kind::DeutschJozsa, 2);
    REQUIRE(family.size() == 8);
    std::set<std::string> suffixes;
    for (const auto& table : family.tables) suffixes.insert(table.suffix);
    CHECK(suffixes == std::set<std::string>{"0000", "1111", "0011", "1100", "0101", "1010",
                                            "0110", "1001"});
    CHECK(std::is_sorted(family.tables.begin(), family.tables.end(),
                         [](const auto& a, const auto& b) { return a.suffix < b.suffix; }));
    // Sample the table contents.
    const auto find = [&](const std::string& suffix) {
        for (std::size_t k = 0; k < family.size(); ++k) {
            if (family.tables[k].suffix == suffix) return k;
        }
        FAIL("missing suffix");
        return std::size_t{0};
    };
    CHECK(family.evaluate(find("0110"), 3) == 0);
    CHECK(family.evaluate(find("0110"), 1) == 1);
    CHECK(family.evaluate(find("1001"), 0) == 1);
    CHECK(families::character(family, find("1111")) ==
          SolutionCharacter{SolutionCharacter::Tag::Constant, 0});
    CHECK(families::character(family, find("0101")) ==
          SolutionCharacter{SolutionCharacter::Tag::Balanced, 0});
}

TEST_CASE("balanced tables have exactly half zeroes") {
    for (int n : {1, 2, 3}) {
        const auto family = families::enumerate_family(Kind::DeutschJozsa, n);
        const std::size_t rows = std::size_t{1} << n;
        std::size_t constants = 0;
        for (std::size_t k = 0; k < family.size(); ++k) {
            const auto& values = family.tables[k].values;
            const auto zeros =
                static_cast<std::size_t>(std::count(values.begin(), values.end(), 0u));
            if (families::character(family, k).tag == SolutionCharacter::Tag::Constant) {
                ++constants;
                CHECK((zeros == 0 || zeros == rows));
            } else {
                CHECK(zeros == rows / 2);
            }
        }
        CHECK(constants == 2);
    }
    CHECK(families::enumerate_family(Kind::DeutschJozsa, 3).size() == 72);
    // n = 4 would need 12872 tables; the cap rejects it.
    CHECK_THROWS_AS(families::enumerate_family(Kind::DeutschJozsa, 4), std::invalid_argument);
}

TEST_CASE("simon n=2 family matches the six-table listing with its hidden strings") {
    const auto family = families::enumerate_family(Kind::Simon, 2);
    REQUIRE(family.size() == 6);
    // (suffix, h, values) straight from the textbook table.
    struct Row {
        std::string suffix;
        std::uint32_t h;
        std::vector<std::uint32_t> values;
    };
    const std::vector<Row> rows{
        {"0011", 0b01, {0, 0, 1, 1}}, {"0101", 0b10, {0, 1, 0, 1}},
        {"0110", 0b11, {0, 1, 1, 0}}, {"1001", 0b11, {1, 0, 0, 1}},
        {"1010", 0b10, {1, 0, 1, 0}}, {"1100", 0b01, {1, 1, 0, 0}},
    };
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(family.tables[k].suffix == rows[k].suffix);
        CHECK(family.tables[k].values == rows[k].values);
        const auto sol = families::character(family, k);
        CHECK(sol.tag == SolutionCharacter::Tag::HiddenString);
        CHECK(sol.bits == rows[k].h);
    }
}

TEST_CASE("simon n=3 enumeration matches the brute-force filter") {
    const auto family = families::enumerate_family(Kind::Simon, 3);
    CHECK(family.size() == 168);  // 7 * 4!

    // Independent oracle: enumerate all maps {0,1}^3 -> {0,1}^2 and keep the
    // two-to-one ones with a collision offset.
    std::set<std::vector<std::uint32_t>> brute;
    for (std::uint32_t code = 0; code < (1u << 16); ++code) {
        std::vector<std::uint32_t> values(8);
        for (std::uint32_t x = 0; x < 8; ++x) values[x] = (code >> (2 * x)) & 3u;
        const auto h = oracles::collision_offset(values);
        if (!h) continue;
        // Exactly two preimages per attained value.
        bool two_to_one = true;
        for (std::uint32_t x = 0; x < 8 && two_to_one; ++x) {
            int preimages = 0;
            for (std::uint32_t y = 0; y < 8; ++y) preimages += values[y] == values[x];
            two_to_one = preimages == 2;
        }
        if (two_to_one) brute.insert(values);
    }
    REQUIRE(brute.size() == 168);
    for (const auto& table : family.tables) {
        CHECK(brute.count(table.values) == 1);
    }

    // Collision scan is the character oracle.
    for (std::size_t k = 0; k < family.size(); ++k) {
        const auto sol = families::character(family, k);
        const auto h = oracles::collision_offset(family.tables[k].values);
        REQUIRE(h.has_value());
        CHECK(sol.bits == *h);
    }
    CHECK_THROWS_AS(families::enumerate_family(Kind::Simon, 4), std::invalid_argument);
}

TEST_CASE("simon tables satisfy the period identity everywhere") {
    for (int n : {2, 3}) {
        const auto family = families::enumerate_family(Kind::Simon, n);
        for (std::size_t k = 0; k < family.size(); ++k) {
            const std::uint32_t h = families::character(family, k).bits;
            REQUIRE(h != 0);
            for (std::uint32_t x = 0; x < (1u << n); ++x) {
                CHECK(family.evaluate(k, x) == family.evaluate(k, x ^ h));
            }
        }
    }
}

TEST_CASE("grover family evaluates the delta function") {
    const auto family = families::enumerate_family(Kind::Grover, 3);
    REQUIRE(family.size() == 8);
    for (std::size_t k = 0; k < family.size(); ++k) {
        CHECK(family.tables[k].suffix == families::bit_string(static_cast<std::uint32_t>(k), 3));
        const auto sol = families::character(family, k);
        CHECK(sol.tag == SolutionCharacter::Tag::Location);
        CHECK(sol.bits == static_cast<std::uint32_t>(k));
        for (std::uint32_t x = 0; x < 8; ++x) {
            CHECK(family.evaluate(k, x) == (x == k ? 1u : 0u));
        }
    }
}

TEST_CASE("suffixes round-trip through the value tables") {
    for (const auto& [kind, n] : std::vector<std::pair<Kind, int>>{
             {Kind::Deutsch, 1}, {Kind::DeutschJozsa, 2}, {Kind::DeutschJozsa, 3},
             {Kind::Simon, 2}, {Kind::Simon, 3}, {Kind::Grover, 2}, {Kind::Grover, 4}}) {
        const auto family = families::enumerate_family(kind, n);
        for (const auto& table : family.tables) {
            if (kind == Kind::Grover) {
                // The suffix names the marked location.
                std::uint32_t location = 0;
                for (char c : table.suffix) location = location * 2 + (c == '1');
                CHECK(table.values[location] == 1u);
                continue;
            }
            std::string rebuilt;
            for (std::uint32_t value : table.values) {
                rebuilt += families::bit_string(value, family.m);
            }
            CHECK(rebuilt == table.suffix);
        }
        // Canonical order, no duplicates.
        std::set<std::string> suffixes;
        for (const auto& table : family.tables) suffixes.insert(table.suffix);
        CHECK(suffixes.size() == family.size());
        CHECK(std::is_sorted(family.tables.begin(), family.tables.end(),
                             [](const auto& a, const auto& b) { return a.suffix < b.suffix; }));
    }
}

TEST_CASE("orthogonal_strings filters by the parity product") {
    CHECK(families::orthogonal_strings(0b01, 2) == std::vector<std::uint32_t>{0b00, 0b10});
    CHECK(families::orthogonal_strings(0b10, 2) == std::vector<std::uint32_t>{0b00, 0b01});
    CHECK(families::orthogonal_strings(0b111, 3) ==
          std::vector<std::uint32_t>{0b000, 0b011, 0b101, 0b110});
    // Independent filter over all strings.
    for (std::uint32_t h = 1; h < 8; ++h) {
        std::vector<std::uint32_t> brute;
        for (std::uint32_t s = 0; s < 8; ++s) {
            if (oracles::popcount_parity(s, h) == 0) brute.push_back(s);
        }
        CHECK(families::orthogonal_strings(h, 3) == brute);
    }
    CHECK_THROWS_AS(families::orthogonal_strings(0, 2), std::invalid_argument);
}

TEST_CASE("family json export carries kind, size and suffixes") {
    const auto family = families::enumerate_family(Kind::Simon, 2);
    const auto j = io::family_to_json(family);
    CHECK(j.at("kind") == "simon");
    CHECK(j.at("n") == 2);
    CHECK(j.at("suffixes").size() == 6);
    CHECK(j.at("suffixes")[0] == "0011");
}

TEST_CASE("evaluate rejects out-of-range indices") {
    const auto family = families::enumerate_family(Kind::Deutsch, 1);
    CHECK_THROWS_AS(family.evaluate(4, 0), std::out_of_range);
    CHECK_THROWS_AS(family.evaluate(0, 2), std::out_of_range);
    CHECK_THROWS_AS(families::character(family, 9), std::out_of_range);
}
