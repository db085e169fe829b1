#include <doctest.h>

#include <stdexcept>

#include <set>

#include "spikegate/encoding.hpp"

using namespace spikegate;

TEST_CASE("all_gates enumerates the 7 partitions") {
    const auto& gates = all_gates();
    REQUIRE(gates.size() == 7);

    // XOR is case 6.
    CHECK(gates[6].class_a ==
          std::vector<InputPattern>{{0, 0}, {1, 1}});
    CHECK(gates[6].class_b ==
          std::vector<InputPattern>{{0, 1}, {1, 0}});
    CHECK(gates[6].class_a_label() == "{(0,0),(1,1)}");

    for (const auto& gate : gates) {
        CHECK(!gate.class_a.empty());
        CHECK(!gate.class_b.empty());
        CHECK(gate.class_a.size() + gate.class_b.size() == 4);
        // Every pattern lands on exactly one side.
        for (const auto& p : kAllPatterns) {
            int hits = 0;
            for (const auto& q : gate.class_a) {
                hits += q == p;
            }
            for (const auto& q : gate.class_b) {
                hits += q == p;
            }
            CHECK(hits == 1);
        }
    }

    // The 7 class-a sets are pairwise distinct.
    std::set<std::string> labels;
    for (const auto& gate : gates) {
        labels.insert(gate.class_a_label());
    }
    CHECK(labels.size() == 7);
}

TEST_CASE("default schemes match their documented shape") {
    const auto a = default_scheme(EncodingVariant::A);
    CHECK(encode(a, {0, 0}).empty());
    CHECK(format_train(encode(a, {1, 1})) == "0:1.0,2:1.0");

    const auto ap = default_scheme(EncodingVariant::APrime);
    CHECK(format_train(encode(ap, {0, 0})) == "4:1.0");
    CHECK(format_train(encode(ap, {1, 0})) == "0:1.0,4:1.0");

    const auto b = default_scheme(EncodingVariant::B);
    CHECK(format_train(encode(b, {0, 0})) == "0:1.0,2:1.0");
    CHECK(format_train(encode(b, {1, 0})) == "0:2.0,2:1.0");
    CHECK(format_train(encode(b, {1, 1})) == "0:2.0,2:2.0");

    const auto c = default_scheme(EncodingVariant::C);
    CHECK(format_train(encode(c, {1, 0})) == "0:1.0,2:-1.0,4:1.0,6:1.0");
    for (const auto& p : kAllPatterns) {
        CHECK(encode(c, p).size() == 4);
    }
}

TEST_CASE("encode is injective over the four patterns") {
    for (auto v : {EncodingVariant::A, EncodingVariant::APrime,
                   EncodingVariant::B, EncodingVariant::C}) {
        const auto scheme = default_scheme(v);
        std::set<std::string> images;
        for (const auto& p : kAllPatterns) {
            images.insert(format_train(encode(scheme, p)));
        }
        CHECK(images.size() == 4);
    }
}

TEST_CASE("event counts and time bounds per variant") {
    const auto ap = default_scheme(EncodingVariant::APrime);
    const auto b = default_scheme(EncodingVariant::B);
    for (const auto& p : kAllPatterns) {
        CHECK(encode(ap, p).size() <= 3);
        CHECK(encode(b, p).size() <= 2);
        for (const auto& scheme : {ap, b}) {
            const auto train = encode(scheme, p);
            for (const auto& ev : train.events()) {
                CHECK(ev.time <= scheme.last_time());
            }
        }
    }
}

TEST_CASE("variant B negates under bit flips") {
    const auto b = default_scheme(EncodingVariant::B);
    for (const auto& p : kAllPatterns) {
        const InputPattern flipped{1 - p.b1, 1 - p.b2};
        CHECK(encode(b, flipped) == merge({{-1.0, encode(b, p)}}));
    }
}

TEST_CASE("scheme validation and labels") {
    EncodingScheme bad = default_scheme(EncodingVariant::B);
    bad.spike_times = {3, 3};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    EncodingScheme refs_on_b = default_scheme(EncodingVariant::B);
    refs_on_b.reference_spikes = {{4, 1.0}};
    CHECK_THROWS_AS(refs_on_b.validate(), std::invalid_argument);

    CHECK(parse_encoding_variant("A'") == EncodingVariant::APrime);
    CHECK(parse_encoding_variant("Ap") == EncodingVariant::APrime);
    CHECK(variant_label(EncodingVariant::APrime) == "A'");
    CHECK_THROWS_AS(parse_encoding_variant("D"), std::invalid_argument);
}
