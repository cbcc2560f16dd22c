#include <doctest.h>

#include <stdexcept>

#include "tableaux/render.hpp"

using namespace tableaux;

TEST_CASE("format names") {
    CHECK(parse_format("plain") == OutputFormat::plain);
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("shape argument syntax") {
    CHECK(parse_shape_arg("5,4,2,1") == Shape({5, 4, 2, 1}));
    CHECK(parse_shape_arg("") == Shape{});
    CHECK(parse_shape_arg(" 3 , 1 ") == Shape({3, 1}));
    CHECK_THROWS_AS(parse_shape_arg("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_shape_arg("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_shape_arg("5,"), std::invalid_argument);
    CHECK_THROWS_AS(parse_shape_arg("5,-1"), std::invalid_argument);
    CHECK(shape_arg(Shape({5, 4, 2, 1})) == "5,4,2,1");
    CHECK(shape_arg(Shape{}) == "");
}

TEST_CASE("csv table round trip") {
    const std::vector<ImbalanceRecord> table = imbalance_table(6);
    const std::string text = render_table(table, OutputFormat::csv);
    CHECK(text.rfind("shape,imbalance,v,h,d,vs,hs,black,white\n", 0) == 0);
    CHECK(parse_table_csv(text) == table);

    const std::vector<ImbalanceRecord> empty_shape = imbalance_table(0);
    CHECK(parse_table_csv(render_table(empty_shape, OutputFormat::csv)) == empty_shape);
}

TEST_CASE("json table round trip") {
    const std::vector<ImbalanceRecord> table = imbalance_table(7);
    CHECK(parse_table_json(render_table(table, OutputFormat::json)) == table);
}

TEST_CASE("single record rendering") {
    const ImbalanceRecord rec = imbalance_record(Shape({5, 4, 2, 1}));
    const std::string plain = render_record(rec, OutputFormat::plain);
    CHECK(plain.find("imbalance=-5") != std::string::npos);
    CHECK(plain.find("v=5") != std::string::npos);

    const std::string csv = render_record(rec, OutputFormat::csv);
    CHECK(csv.find("\"5,4,2,1\",-5,5,5,2,1,1,6,6") != std::string::npos);

    const auto parsed = parse_table_csv(csv);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0] == rec);
}

TEST_CASE("report rendering") {
    const std::vector<VerificationReport> reports = run_claim("total", 0, 4, 1);
    const std::string plain = render_reports(reports, OutputFormat::plain);
    CHECK(plain.find("PASS") != std::string::npos);
    CHECK(plain.find("FAIL") == std::string::npos);

    const std::string csv = render_reports(reports, OutputFormat::csv);
    CHECK(csv.rfind("claim,parameters,computed,expected,pass,elapsed_ms\n", 0) == 0);

    const std::string json = render_reports(reports, OutputFormat::json);
    CHECK(json.find("\"pass\": true") != std::string::npos);
    CHECK(json.find("\"claim\": \"total\"") != std::string::npos);
}

TEST_CASE("rendered tables are stable across worker counts") {
    CHECK(render_table(imbalance_table(8, 1), OutputFormat::csv) ==
          render_table(imbalance_table(8, 3), OutputFormat::csv));
}
