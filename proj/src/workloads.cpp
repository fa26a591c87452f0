#include "sram9t/workloads.hpp"

#include "sram9t/array.hpp"
#include "sram9t/error.hpp"

namespace sram9t {

BnnLayerResult bnn_layer_forward(const std::vector<std::vector<Logic>>& weights,
                                 const std::vector<Logic>& activations) {
    if (weights.empty()) throw protocol_error("bnn layer: no weight rows");
    const std::size_t rows = weights.size();
    const std::size_t cols = activations.size();
    for (const auto& row : weights)
        if (row.size() != cols)
            throw protocol_error("bnn layer: weight row length does not match activations");

    Array array(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) array.write_row(r, weights[r]);

    const std::uint64_t before = array.phase_count();
    array.xor_parallel(RowMask::all(rows), activations);
    BnnLayerResult result;
    result.xor_phase_count = array.phase_count() - before;

    result.pre_activations.reserve(rows);
    result.outputs.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto bits = array.read_row(r);
        int popcount = 0;
        for (Logic b : bits) popcount += b == Logic::L1 ? 1 : 0;
        const int dot = static_cast<int>(cols) - 2 * popcount;
        result.pre_activations.push_back(dot);
        result.outputs.push_back(dot >= 0 ? 1 : -1);
    }
    return result;
}

namespace {

std::vector<Logic> otp_xor(const std::vector<Logic>& data, const std::vector<Logic>& key,
                           std::size_t cols) {
    if (data.size() != key.size())
        throw protocol_error("one-time pad: data and key lengths differ");
    if (data.empty()) throw protocol_error("one-time pad: empty message");
    if (cols == 0) throw protocol_error("one-time pad: column count must be nonzero");
    for (Logic b : data)
        if (!is_bit(b)) throw protocol_error("one-time pad: data bits must be 0 or 1");
    for (Logic b : key)
        if (!is_bit(b)) throw protocol_error("one-time pad: key bits must be 0 or 1");

    const std::size_t total = data.size();
    const std::size_t rows = (total + cols - 1) / cols;

    auto chunk = [&](const std::vector<Logic>& bits, std::size_t row) {
        std::vector<Logic> out(cols, Logic::L0);
        for (std::size_t c = 0; c < cols; ++c) {
            const std::size_t i = row * cols + c;
            if (i < total) out[c] = bits[i];
        }
        return out;
    };

    Array array(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) array.write_row(r, chunk(key, r));

    // Operand B is shared per column, so each message chunk targets its own
    // key row through a single-row mask.
    std::vector<Logic> out;
    out.reserve(total);
    for (std::size_t r = 0; r < rows; ++r) {
        array.xor_parallel(RowMask::single(rows, r), chunk(data, r));
        const auto bits = array.read_row(r);
        for (std::size_t c = 0; c < cols && r * cols + c < total; ++c)
            out.push_back(bits[c]);
    }
    return out;
}

} // namespace

std::vector<Logic> otp_encrypt(const std::vector<Logic>& plaintext,
                               const std::vector<Logic>& key, std::size_t cols) {
    return otp_xor(plaintext, key, cols);
}

std::vector<Logic> otp_decrypt(const std::vector<Logic>& ciphertext,
                               const std::vector<Logic>& key, std::size_t cols) {
    return otp_xor(ciphertext, key, cols);
}

} // namespace sram9t
