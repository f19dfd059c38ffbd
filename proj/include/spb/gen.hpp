#pragma once

#include <cstdint>

#include "spb/instance.hpp"
#include "spb/sefe.hpp"

namespace spb {

/// splitmix64. Tiny and platform-stable, so seeded corpora reproduce
/// byte-identically everywhere; never used for anything security-shaped.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : x_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (x_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n); n >= 1. Modulo bias is irrelevant at test sizes.
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    bool chance(double p) { return (next() >> 11) * 0x1.0p-53 < p; }

private:
    std::uint64_t x_;
};

struct RandomSpec {
    int vertices = 8;
    int stream = 4;
    int omega = 2;
    std::uint64_t seed = 1;
    double drop = 0.3;  // per-edge deletion probability for the backbone
};

/// Random valid instance: a random maximal planar graph, each edge then
/// deleted independently with probability `drop`, and the stream sampled
/// uniformly without replacement from the non-backbone pairs (the sampling
/// order is the stream order). Identical spec -> identical instance.
/// Throws ShapeViolation when fewer than `stream` non-backbone pairs exist.
StreamedInstance gen_random_instance(const RandomSpec& spec);

/// Star-shaped instance: one 2-connected block (a cycle with random planar
/// chords), `isolated` extra vertices, and a stream that touches every
/// isolated vertex but never joins two of them, so the union graph stays
/// connected and the category stays Star.
StreamedInstance gen_star_instance(int block, int isolated, int stream, int omega,
                                   std::uint64_t seed);

/// Random tree backbone with a stream over non-backbone pairs; with
/// leaves_only every stream endpoint is a leaf of the tree. Vertex k joins
/// a uniform earlier vertex, so the shape distribution is attachment-biased
/// (fine for tests, documented here).
StreamedInstance gen_tree_instance(int vertices, int stream, int omega, std::uint64_t seed,
                                   bool leaves_only = false);

/// Three-member family over a caterpillar tree: a spine of the given length
/// grows 2*(pairs1+pairs2+pairs3) leaves at random spine vertices, and
/// member i receives pairs_i random disjoint leaf pairs as exclusive edges.
/// The output satisfies every precondition of theorem1_generate.
SefeInstance gen_family_instance(int spine, int pairs1, int pairs2, int pairs3,
                                 std::uint64_t seed);

}  // namespace spb
