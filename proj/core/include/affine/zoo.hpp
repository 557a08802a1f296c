#pragma once

#include "affine/afa.hpp"
#include "affine/afca.hpp"
#include "affine/rational.hpp"

#include <cstdint>
#include <string_view>

// Ready-made machines: the exact one-counter recognizer for END, the
// Las Vegas / restart automaton for PAL-NPAL, and the blind one-counter
// recognizer for MANYTWINS, together with closed-form intermediate states
// used to cross-check the simulator.
namespace affine::zoo {

/// Base-3 value of a word over {1,2}: e(ε) = 0, e(uσ) = 3e(u) + σ.
/// Throws InputError on any other symbol.
BigInt encode_base3(std::string_view word);

/// 10 product states (s1|s2) × (p0..p4), one counter, accepting state s2_p3,
/// state-only acceptance.
AfcaSpec build_end();

/// Index of product state (s_i, p_j) in build_end(); classical in {1,2}, affine in {0..4}.
std::size_t end_state(int classical, int affine);

/// Closed form of the END machine's configuration after reading ^w (before $).
/// Requires at least one symbol 2 in w; throws InputError otherwise.
ConfigVector end_prestate(std::string_view word);

/// Five-state Las Vegas AfA for PAL-NPAL with success parameter k ≥ 1.
/// Throws DefinitionError for k < 1.
LasVegasAfaSpec build_pal_npal(std::int64_t k);

/// The same machine with the neutral state turned into a restarting state.
RestartAfaSpec build_pal_npal_restart(std::int64_t k);

/// Ten-state blind one-counter AfCA for MANYTWINS with parameter k ≥ 1.
AfcaSpec build_manytwins(std::int64_t k);

/// Index of a MANYTWINS state by name: s1 s2 s3 s1' s2' s3' se se' sa sr.
std::size_t manytwins_state(std::string_view name);

/// Closed form after reading ^u1, where u1 = w_1 0 w_2 0 … 0 w_t 3 and each
/// w_i ∈ {1,2}*. Throws InputError if u1 is not of that shape.
ConfigVector manytwins_midstate(std::string_view u1, std::int64_t k);

} // namespace affine::zoo
