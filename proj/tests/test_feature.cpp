#include "doctest.h"

#include "mglab/feature.hpp"

using namespace mglab;

namespace {

Feature f(FeatureKind kind, const std::string& symbol) { return Feature{kind, symbol}; }

} // namespace

TEST_CASE("selectors cancel matching categories") {
    CHECK(check_match(f(FeatureKind::SelRight, "D"), f(FeatureKind::Cat, "D")));
    CHECK(check_match(f(FeatureKind::SelLeft, "D"), f(FeatureKind::Cat, "D")));
    CHECK_FALSE(check_match(f(FeatureKind::SelRight, "D"), f(FeatureKind::Cat, "V")));
    CHECK_FALSE(check_match(f(FeatureKind::SelLeft, "V"), f(FeatureKind::Cat, "D")));
}

TEST_CASE("licensors cancel matching licensees only") {
    CHECK(check_match(f(FeatureKind::LicPlus, "wh"), f(FeatureKind::LicMinus, "wh")));
    CHECK_FALSE(check_match(f(FeatureKind::LicPlus, "wh"), f(FeatureKind::LicMinus, "foc")));
    CHECK_FALSE(check_match(f(FeatureKind::LicPlus, "wh"), f(FeatureKind::Cat, "wh")));
    CHECK_FALSE(check_match(f(FeatureKind::SelRight, "wh"), f(FeatureKind::LicMinus, "wh")));
}

TEST_CASE("matching is order-independent and never pairs like with like") {
    CHECK(check_match(f(FeatureKind::Cat, "D"), f(FeatureKind::SelRight, "D")));
    CHECK(check_match(f(FeatureKind::Cat, "D"), f(FeatureKind::SelLeft, "D")));
    CHECK(check_match(f(FeatureKind::LicMinus, "wh"), f(FeatureKind::LicPlus, "wh")));
    CHECK_FALSE(check_match(f(FeatureKind::Cat, "D"), f(FeatureKind::Cat, "D")));
    CHECK_FALSE(check_match(f(FeatureKind::LicMinus, "wh"), f(FeatureKind::LicMinus, "wh")));
    CHECK_FALSE(check_match(f(FeatureKind::Cat, "D"), f(FeatureKind::LicPlus, "D")));
}

TEST_CASE("feature spelling") {
    CHECK(to_string(f(FeatureKind::Cat, "V")) == "V");
    CHECK(to_string(f(FeatureKind::SelRight, "D")) == "=D");
    CHECK(to_string(f(FeatureKind::SelLeft, "D")) == "D=");
    CHECK(to_string(f(FeatureKind::LicPlus, "wh")) == "+wh");
    CHECK(to_string(f(FeatureKind::LicMinus, "wh")) == "-wh");
    CHECK(to_string(std::vector<Feature>{f(FeatureKind::SelRight, "D"),
                                         f(FeatureKind::SelRight, "D"),
                                         f(FeatureKind::Cat, "V")}) == "=D =D V");
}

TEST_CASE("feature parsing round-trips every kind") {
    for (FeatureKind kind : {FeatureKind::Cat, FeatureKind::SelRight, FeatureKind::SelLeft,
                             FeatureKind::LicPlus, FeatureKind::LicMinus}) {
        for (const char* sym : {"D", "wh", "N_sg"}) {
            Feature in = f(kind, sym);
            Feature out;
            REQUIRE(feature_from_token(to_string(in), out));
            CHECK(out == in);
        }
    }
}

TEST_CASE("feature parsing rejects empty symbols") {
    Feature out;
    CHECK_FALSE(feature_from_token("", out));
    CHECK_FALSE(feature_from_token("=", out));
    CHECK_FALSE(feature_from_token("+", out));
    CHECK_FALSE(feature_from_token("-", out));
}
