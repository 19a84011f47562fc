#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "nbldpc/codec.hpp"
#include "nbldpc/matrix.hpp"

namespace nbldpc {

/// One confidence score per candidate symbol, larger = more likely. Scores
/// are integers (negated circular distances and their max-plus sums), kept
/// normalized so that entry 0 is the reference and saturated to +-l_max.
using LlvVector = std::vector<std::int32_t>;

struct DecoderConfig {
    int max_iters = 16;
    std::int32_t l_max = 63;
    /// Default sends each variable node's full temporal vector to every
    /// check node. The extrinsic variant subtracts the target check node's
    /// own last contribution first (classic message passing); kept as a
    /// switch for comparison runs.
    bool extrinsic_vn = false;
    /// When set, one JSON object per line is written: the prior vectors at
    /// iteration 0 and every temporal vector per iteration.
    std::ostream* trace = nullptr;
};

struct DecodeResult {
    std::vector<Symbol> symbols;        ///< hard decisions, codeword order
    std::vector<std::int64_t> integers; ///< pim mode only: reinterpreted MAC values
    int iterations = 0;
    bool converged = false;
};

// --- message kernels -------------------------------------------------------

/// Prior scores for one received value: llv[k] = -distance(y, k). The top
/// entry is 0 and sits at k = y mod p.
LlvVector init_llv(std::int64_t y, const FieldSpec& spec);
std::vector<LlvVector> init_llvs(const ReceivedWord& r, const FieldSpec& spec);

/// Variable-to-check reindexing by the edge coefficient: out[k*h mod p] = in[k].
/// A belief about symbol c becomes a belief about h*c. Throws ZeroCoefficient.
LlvVector permute_to_cn(const LlvVector& v, Symbol h, const FieldSpec& spec);

/// Inverse reindexing for the return path: out[k] = in[k*h mod p].
LlvVector permute_from_cn(const LlvVector& v, Symbol h, const FieldSpec& spec);

/// Max-plus cyclic convolution, normalized (entry 0 subtracted) and saturated:
/// out[k] = max_j a[(k-j) mod p] + b[j]. Beliefs about A and B combine into a
/// belief about A+B.
LlvVector llv_combine(const LlvVector& a, const LlvVector& b, const FieldSpec& spec, std::int32_t l_max = 63);

/// out[k] = in[-k mod p]; a belief about X becomes a belief about -X.
LlvVector reflect(const LlvVector& v, const FieldSpec& spec);

/// The max-plus identity under saturation: 0 at entry 0, -l_max elsewhere.
LlvVector certain_zero(const FieldSpec& spec, std::int32_t l_max = 63);

/// Forward-backward pass over one check node's incoming (already reindexed)
/// messages. Forward chain FM_i = combine(FM_{i-1}, reflect(in_i)) tracks the
/// running belief about -(s_1+...+s_i); the backward chain mirrors it. The
/// extrinsic for edge i is combine(FM_{i-1}, BM_{deg-i}), which never sees
/// in_i. Throws DegreeMismatch for an empty node.
std::vector<LlvVector> cn_process(const std::vector<LlvVector>& incoming, const FieldSpec& spec,
                                  std::int32_t l_max = 63);

/// True iff the per-edge hard decisions of the (reindexed) messages sum to
/// zero, i.e. the check constraint holds for the current best guesses.
bool cn_local_check(const std::vector<LlvVector>& incoming, const FieldSpec& spec);

/// temporal[k] = prior[k] + sum of extrinsics[k], normalized and saturated.
LlvVector vn_update(const LlvVector& prior, const std::vector<LlvVector>& extrinsics, const FieldSpec& spec,
                    std::int32_t l_max = 63);

/// Argmax with ties broken toward the smallest symbol.
Symbol hard_decision(const LlvVector& v);

/// The integer congruent to k closest to y; recovers a corrected MAC value
/// from its decoded residue.
std::int64_t interpret_integer(std::int64_t y, Symbol k, const FieldSpec& spec);

// --- full decoder ----------------------------------------------------------

/// Flooding-schedule iterative decode. Stops as soon as the hard decisions
/// satisfy every check (including before the first iteration) or after
/// max_iters. In pim mode the result also carries reinterpreted integers.
DecodeResult decode(const ReceivedWord& r, const CheckMatrix& h, const DecoderConfig& cfg = {});

}  // namespace nbldpc
