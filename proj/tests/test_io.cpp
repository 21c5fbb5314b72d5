#include <filesystem>

#include "doctest.h"
#include "oospc/code_io.hpp"
#include "oospc/constructions.hpp"

using namespace oospc;

TEST_CASE("round trip keeps parameters and codewords") {
    for (const Code& c : {base_code(6, 6, 2), base_code(6, 6, 3), Code{GridGroup(4, 4), 2, 2, {}},
                          construct_optimal(10, 14, 2)}) {
        const CodeFile f = from_json_text(to_json_text(c, {"test", std::pair{1, 3}}));
        CHECK(f.code.group == c.group);
        CHECK(f.code.lambda_a == c.lambda_a);
        CHECK(f.code.lambda_c == c.lambda_c);
        CHECK(f.code.codewords == c.codewords);
        CHECK(f.metadata.construction == "test");
        CHECK(f.metadata.regularity == std::pair{1, 3});
    }
    const auto path = std::filesystem::temp_directory_path() / "oospc_io_test.json";
    save_code(path, base_code(2, 2, 2));
    const CodeFile f = load_code(path);
    CHECK(f.code.codewords == base_code(2, 2, 2).codewords);
    CHECK_FALSE(f.metadata.regularity.has_value());
    std::filesystem::remove(path);
}

TEST_CASE("malformed files are rejected") {
    CHECK_THROWS_AS(from_json_text("{"), std::invalid_argument);
    CHECK_THROWS_AS(from_json_text(R"({"m":2,"n":2,"lambda_a":2,"lambda_c":1})"), std::invalid_argument);
    CHECK_THROWS_AS(from_json_text(R"({"m":2,"n":2,"lambda_a":2,"lambda_c":1,"codewords":[[[0,0],[1,0]]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(from_json_text(R"({"m":2,"n":2,"lambda_a":2,"lambda_c":1,"codewords":[[[0,0],[2,0],[0,1]]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(from_json_text(R"({"m":0,"n":2,"lambda_a":2,"lambda_c":1,"codewords":[]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_code("/nonexistent/oospc.json"), std::exception);
}

TEST_CASE("matrix export") {
    const std::string text = matrix_export(base_code(2, 2, 2));
    CHECK(text == "11\n10\n");
    const Code c = base_code(6, 6, 2);
    const std::string all = matrix_export(c);
    CHECK(std::count(all.begin(), all.end(), '1') == 21);
    CHECK(std::count(all.begin(), all.end(), '\n') == 7 * 6 + 6);
}
