#include <catch_amalgamated.hpp>

#include "bianchi/report.hpp"

using namespace bianchi;

TEST_CASE("report documents round trip through JSON", "[report]")
{
    for (i64 d : {1, 2, 3, 5, 7, 91, 105}) {
        const ReportDocument doc = make_document(classify(d));
        const std::string text = render_json(doc);
        const ReportDocument back = document_from_json(nlohmann::json::parse(text));
        CHECK(back == doc);
        CHECK(render_json(back) == text);
    }
}

TEST_CASE("report JSON layout", "[report]")
{
    const auto j = to_json(make_document(classify(3)));
    CHECK(j["schema_version"] == "1.0");
    CHECK(j["d"] == 3);
    REQUIRE(j["kinds"].size() == 3);
    CHECK(j["kinds"][2]["kind"] == "D2max");
    CHECK(j["kinds"][2]["gamma"].is_null());
    CHECK(j["kinds"][2]["host_split"].is_null());
    CHECK(j["kinds"][1]["gamma"] == 2);
    CHECK(j["kinds"][2]["failing_primes"] == nlohmann::json::array({3}));
    // keys come out sorted
    const std::string text = j.dump();
    CHECK(text.find("\"d\"") < text.find("\"kinds\""));
    CHECK(text.find("\"kinds\"") < text.find("\"provenance\""));
}

TEST_CASE("table rendering", "[report]")
{
    const std::string t = render_table(make_document(classify(3)));
    CHECK(t.find("D3     ✓") != std::string::npos);
    CHECK(t.find("D2max  ✗") != std::string::npos);
}
