#pragma once

#include "scv/semiconformal.hpp"
#include "scv/variety.hpp"

#include <cstdint>
#include <vector>

namespace scv {

/// splitmix64: tiny, seedable, identical on every platform. Standard-library
/// distributions are implementation-defined, which would break the
/// bit-reproducibility contract of seeded reports.
class CorpusRng {
public:
    explicit CorpusRng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform-ish value in [0, n); n > 0. Modulo bias is irrelevant here.
    std::size_t below(std::size_t n);

private:
    std::uint64_t state_;
};

/// Deterministic elements of O(h) over Q(i): products of signed permutations,
/// Pythagorean plane rotations, and complex rotations with a^2 + b^2 = 1.
std::vector<OrthogonalElement> orthogonal_witnesses(long d, std::size_t count,
                                                    std::uint64_t seed);

/// A vector with <u,u> = 1 exactly (a column of an orthogonal witness).
Vector random_unit_vector(long d, CorpusRng& rng);

struct CorpusOptions {
    long d = 2;
    Vector lambda;  // defaults to zero when empty
    std::size_t positive_target = 30;
    std::size_t negative_target = 70;
    std::uint64_t seed = 1;
};

/// Seeded candidate corpus: verified points produced as projectors onto random
/// regular subspaces (plus fixed special points covering every rank), and
/// negatives produced by entrywise perturbation of positives.
struct Corpus {
    std::vector<QuadraticVector> candidates;  // positives and negatives mixed
    std::vector<ScPoint> positives;           // deduplicated verified points
};

Corpus make_corpus(const CorpusOptions& opt);

}  // namespace scv
