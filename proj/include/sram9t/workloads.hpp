#pragma once

#include <cstdint>
#include <vector>

#include "sram9t/logic.hpp"

namespace sram9t {

// One binarized layer evaluated through the array: weights are operand A,
// the activation vector is broadcast as operand B, and the XOR results are
// reduced to +/-1 dot products in modeled periphery.
struct BnnLayerResult {
    std::vector<int> pre_activations;  // cols - 2 * popcount(w XOR a) per row
    std::vector<int> outputs;          // sign threshold, +1 or -1
    std::uint64_t xor_phase_count = 0; // array phases spent on the XOR itself
};

// The in-array XOR overwrites the stored weights, so each invocation loads
// them fresh.
BnnLayerResult bnn_layer_forward(const std::vector<std::vector<Logic>>& weights,
                                 const std::vector<Logic>& activations);

// One-time pad through the array: key rows are operand A, message chunks are
// applied per row through the operand-B registers and the ciphertext is read
// back in place of the key.
std::vector<Logic> otp_encrypt(const std::vector<Logic>& plaintext,
                               const std::vector<Logic>& key, std::size_t cols = 64);
std::vector<Logic> otp_decrypt(const std::vector<Logic>& ciphertext,
                               const std::vector<Logic>& key, std::size_t cols = 64);

} // namespace sram9t
