#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "sram9t/error.hpp"
#include "sram9t/rng.hpp"
#include "sram9t/workloads.hpp"

using namespace sram9t;

namespace {

std::vector<Logic> random_bits(DetRng& rng, std::size_t n) {
    std::vector<Logic> bits(n);
    for (Logic& b : bits) b = rng.logic_bit();
    return bits;
}

// +/-1 arithmetic oracle, independent of the array path.
int dot_oracle(const std::vector<Logic>& w, const std::vector<Logic>& a) {
    int dot = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const int wi = w[i] == Logic::L1 ? 1 : -1;
        const int ai = a[i] == Logic::L1 ? 1 : -1;
        dot += wi * ai;
    }
    return dot;
}

std::vector<Logic> xor_bits_oracle(const std::vector<Logic>& a, const std::vector<Logic>& b) {
    std::vector<Logic> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = logic_xor(a[i], b[i]);
    return out;
}

} // namespace

TEST_CASE("identical weights and activations give the full positive dot") {
    const std::vector<Logic> v = {Logic::L1, Logic::L0, Logic::L1, Logic::L1};
    const BnnLayerResult r = bnn_layer_forward({v}, v);
    CHECK(r.pre_activations == std::vector<int>{4});
    CHECK(r.outputs == std::vector<int>{1});
}

TEST_CASE("complementary weights give the full negative dot") {
    const std::vector<Logic> a = {Logic::L1, Logic::L0, Logic::L1, Logic::L0};
    std::vector<Logic> w = a;
    for (Logic& b : w) b = logic_not(b);
    const BnnLayerResult r = bnn_layer_forward({w}, a);
    CHECK(r.pre_activations == std::vector<int>{-4});
    CHECK(r.outputs == std::vector<int>{-1});
}

TEST_CASE("random layers match the arithmetic oracle") {
    DetRng rng(13);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::vector<Logic>> weights(64);
        for (auto& row : weights) row = random_bits(rng, 64);
        const std::vector<Logic> activations = random_bits(rng, 64);

        const BnnLayerResult r = bnn_layer_forward(weights, activations);
        for (std::size_t row = 0; row < weights.size(); ++row)
            CHECK(r.pre_activations[row] == dot_oracle(weights[row], activations));
    }
}

TEST_CASE("the XOR itself costs three phases regardless of row count") {
    DetRng rng(17);
    std::uint64_t expected = 0;
    for (std::size_t rows : {1u, 8u, 64u, 128u}) {
        std::vector<std::vector<Logic>> weights(rows);
        for (auto& row : weights) row = random_bits(rng, 32);
        const BnnLayerResult r = bnn_layer_forward(weights, random_bits(rng, 32));
        if (expected == 0) expected = r.xor_phase_count;
        CHECK(r.xor_phase_count == 3);
        CHECK(r.xor_phase_count == expected);
    }
}

TEST_CASE("bnn rejects mismatched dimensions") {
    const std::vector<Logic> a = {Logic::L1, Logic::L0};
    CHECK_THROWS_AS(bnn_layer_forward({{Logic::L1}}, a), protocol_error);
    CHECK_THROWS_AS(bnn_layer_forward({}, a), protocol_error);
}

TEST_CASE("all-zero key returns the plaintext") {
    DetRng rng(3);
    const std::vector<Logic> message = random_bits(rng, 100);
    const std::vector<Logic> key(100, Logic::L0);
    CHECK(otp_encrypt(message, key, 16) == message);
}

TEST_CASE("plaintext equal to the key cancels to zeros") {
    DetRng rng(4);
    const std::vector<Logic> message = random_bits(rng, 64);
    CHECK(otp_encrypt(message, message, 16) == std::vector<Logic>(64, Logic::L0));
}

TEST_CASE("1 KiB messages round-trip and match the XOR oracle") {
    DetRng rng(5);
    const std::size_t nbits = 1024 * 8;
    const std::vector<Logic> message = random_bits(rng, nbits);
    const std::vector<Logic> key = random_bits(rng, nbits);

    const std::vector<Logic> cipher = otp_encrypt(message, key);
    CHECK(cipher == xor_bits_oracle(message, key));
    CHECK(otp_decrypt(cipher, key) == message);
}

TEST_CASE("uneven tail chunks survive the array mapping") {
    DetRng rng(6);
    const std::vector<Logic> message = random_bits(rng, 61);
    const std::vector<Logic> key = random_bits(rng, 61);
    const std::vector<Logic> cipher = otp_encrypt(message, key, 16);
    CHECK(cipher.size() == 61);
    CHECK(cipher == xor_bits_oracle(message, key));
    CHECK(otp_decrypt(cipher, key, 16) == message);
}

TEST_CASE("otp rejects mismatched lengths") {
    const std::vector<Logic> a(8, Logic::L0);
    const std::vector<Logic> b(9, Logic::L0);
    CHECK_THROWS_AS(otp_encrypt(a, b), protocol_error);
}
