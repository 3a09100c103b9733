#include <gtest/gtest.h>

#include "z4v/text_io.hpp"

using namespace z4v;

TEST(TextIo, ParsesRows) {
    RMatrix m = parse_r_matrix("# comment\n1 0 2+v 2\n\n  0 1 2 2+v  \n");
    EXPECT_EQ(m.rows(), 2u);
    EXPECT_EQ(m.cols(), 4u);
    EXPECT_EQ(m(0, 2), RElement(2, 1));
    EXPECT_EQ(parse_r_matrix(format_matrix(m)), m);
    Z4Matrix z = parse_z4_matrix("1 2\n3 0\n");
    EXPECT_EQ(parse_z4_matrix(format_matrix(z)), z);
}

TEST(TextIo, Rejects) {
    EXPECT_THROW(parse_r_matrix(""), ParseError);
    EXPECT_THROW(parse_r_matrix("\n# nothing\n\n"), ParseError);
    EXPECT_THROW(parse_r_matrix("1 0\n1\n"), ParseError);
    EXPECT_THROW(parse_r_matrix("1 q\n"), ParseError);
    EXPECT_THROW(parse_z4_matrix("1 v\n"), ParseError);
    EXPECT_THROW(read_text_file("/nonexistent/file"), ParseError);
}

TEST(TextIo, MatrixJson) {
    auto j = matrix_json(parse_r_matrix("1 v\n"));
    EXPECT_EQ(j.dump(), R"([["1","v"]])");
}

TEST(TextIo, DistributionJson) {
    WeightDistribution d;
    d.metric = Metric::lee;
    d.n = 3;
    d.length_scale = 6;
    d.coeffs = {{0, 1}, {2, BigInt("123456789012345678901234567890")}};
    auto j = distribution_json(d);
    EXPECT_EQ(j["coeffs"][1][1], "123456789012345678901234567890");
    EXPECT_EQ(distribution_from_json(j), d);
    j["size"] = "5";
    EXPECT_THROW(distribution_from_json(j), ParseError);
    EXPECT_THROW(distribution_from_json(nlohmann::json::object()), ParseError);
}
