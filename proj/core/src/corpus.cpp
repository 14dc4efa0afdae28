#include "scv/corpus.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace scv {

std::uint64_t CorpusRng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::size_t CorpusRng::below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

namespace {

GaussianRational pool_entry(CorpusRng& rng) {
    static const std::vector<GaussianRational> pool = [] {
        std::vector<GaussianRational> p;
        p.push_back(GaussianRational(0));
        p.push_back(GaussianRational(0));
        p.push_back(GaussianRational(1));
        p.push_back(GaussianRational(-1));
        p.push_back(GaussianRational(2));
        p.push_back(rational_of(1, 2));
        p.push_back(rational_of(-1, 2));
        p.push_back(rational_of(1, 3));
        p.push_back(GaussianRational::i());
        p.push_back(-GaussianRational::i());
        p.push_back(GaussianRational(Rational(1), Rational(1)));   // 1+i
        p.push_back(GaussianRational(Rational(0), Rational(1) / 2));  // i/2
        p.push_back(GaussianRational(-2));
        p.push_back(GaussianRational(3));
        return p;
    }();
    return pool[rng.below(pool.size())];
}

GaussianRational nonzero_pool_entry(CorpusRng& rng) {
    for (;;) {
        GaussianRational x = pool_entry(rng);
        if (!x.is_zero()) return x;
    }
}

struct PlaneRotation {
    GaussianRational c, s;
};

const std::vector<PlaneRotation>& rotation_pool() {
    static const std::vector<PlaneRotation> pool = [] {
        std::vector<PlaneRotation> p;
        p.push_back({rational_of(3, 5), rational_of(4, 5)});
        p.push_back({rational_of(5, 13), rational_of(12, 13)});
        p.push_back({rational_of(8, 17), rational_of(15, 17)});
        p.push_back({rational_of(20, 29), rational_of(21, 29)});
        // Complex points of c^2 + s^2 = 1: c = (1-t^2)/(1+t^2), s = 2t/(1+t^2).
        p.push_back({rational_of(5, 3), GaussianRational(Rational(0), Rational(4) / 3)});   // t = i/2
        p.push_back({rational_of(5, 4), GaussianRational(Rational(0), Rational(3) / 4)});   // t = i/3
        return p;
    }();
    return pool;
}

Matrix plane_rotation(long d, long p, long q, const PlaneRotation& r) {
    Matrix m = Matrix::identity(d);
    m.at(p, p) = r.c;
    m.at(q, q) = r.c;
    m.at(p, q) = -r.s;
    m.at(q, p) = r.s;
    return m;
}

Matrix random_orthogonal_matrix(long d, CorpusRng& rng) {
    Matrix o = Matrix::identity(d);
    std::size_t factors = 1 + rng.below(4);
    for (std::size_t f = 0; f < factors; ++f) {
        switch (rng.below(3)) {
            case 0: {  // transposition
                if (d < 2) break;
                long p = static_cast<long>(rng.below(d));
                long q = static_cast<long>(rng.below(d));
                if (p == q) q = (q + 1) % d;
                Matrix t = Matrix::identity(d);
                t.at(p, p) = GaussianRational(0);
                t.at(q, q) = GaussianRational(0);
                t.at(p, q) = GaussianRational(1);
                t.at(q, p) = GaussianRational(1);
                o = o * t;
                break;
            }
            case 1: {  // sign flip
                Matrix s = Matrix::identity(d);
                long k = static_cast<long>(rng.below(d));
                s.at(k, k) = GaussianRational(-1);
                o = o * s;
                break;
            }
            default: {  // plane rotation
                if (d < 2) {
                    Matrix s = Matrix::identity(d);
                    s.at(0, 0) = GaussianRational(-1);
                    o = o * s;
                    break;
                }
                long p = static_cast<long>(rng.below(d));
                long q = static_cast<long>(rng.below(d));
                if (p == q) q = (q + 1) % d;
                const auto& rot = rotation_pool()[rng.below(rotation_pool().size())];
                o = o * plane_rotation(d, p, q, rot);
                break;
            }
        }
    }
    return o;
}

std::string matrix_key(const Matrix& a, const Vector& b) {
    std::string k;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) k += a.at(r, c).str() + ",";
    k += "|";
    for (const auto& x : b) k += x.str() + ",";
    return k;
}

Vector apply_lambda(const Matrix& a, const Vector& lambda) { return a.apply(lambda); }

}  // namespace

std::vector<OrthogonalElement> orthogonal_witnesses(long d, std::size_t count,
                                                    std::uint64_t seed) {
    CorpusRng rng(seed);
    std::vector<OrthogonalElement> out;
    out.reserve(count);
    while (out.size() < count) out.push_back(OrthogonalElement::make(random_orthogonal_matrix(d, rng)));
    return out;
}

Vector random_unit_vector(long d, CorpusRng& rng) {
    Matrix o = random_orthogonal_matrix(d, rng);
    Vector u(d);
    long col = static_cast<long>(rng.below(d));
    for (long r = 0; r < d; ++r) u[r] = o.at(r, col);
    return u;
}

Corpus make_corpus(const CorpusOptions& opt) {
    if (opt.d < 1) throw std::invalid_argument("d must be >= 1");
    Vector lambda = opt.lambda;
    if (lambda.empty()) lambda = Vector(opt.d);
    if (lambda.size() != static_cast<std::size_t>(opt.d))
        throw std::invalid_argument("lambda length must equal d");

    CorpusRng rng(opt.seed);
    Corpus corpus;
    std::set<std::string> seen;

    auto push_positive = [&](const Matrix& a) {
        QuadraticVector q{opt.d, a, apply_lambda(a, lambda), lambda};
        if (!seen.insert(matrix_key(q.A, q.B)).second) return;
        corpus.positives.push_back(ScPoint::from_quadratic(q));
        corpus.candidates.push_back(std::move(q));
    };

    // Fixed points covering every rank: 0, I and the coordinate projectors.
    const long d = opt.d;
    push_positive(Matrix(d, d));
    push_positive(Matrix::identity(d));
    for (long k = 1; k < d; ++k) {
        Matrix a(d, d);
        for (long i = 0; i < k; ++i) a.at(i, i) = GaussianRational(1);
        push_positive(a);
    }
    if (d >= 2) {
        // Projector onto span{(2, i)}: a genuinely non-real idempotent.
        std::vector<Vector> basis{Vector(d)};
        basis[0][0] = GaussianRational(2);
        basis[0][1] = GaussianRational::i();
        push_positive(projector_from_subspace(Subspace(d, basis)).A());
    }

    // Random projectors onto regular subspaces.
    std::size_t attempts = 0;
    while (corpus.positives.size() < opt.positive_target && attempts < 60 * opt.positive_target) {
        ++attempts;
        std::size_t dim = rng.below(d + 1);
        std::vector<Vector> vecs;
        for (std::size_t k = 0; k < dim; ++k) {
            Vector v(d);
            bool nonzero = false;
            for (long i = 0; i < d; ++i) {
                v[i] = pool_entry(rng);
                nonzero = nonzero || !v[i].is_zero();
            }
            if (!nonzero) v[rng.below(d)] = GaussianRational(1);
            vecs.push_back(std::move(v));
        }
        try {
            Subspace s(d, vecs);
            if (!subspace_regular(s)) continue;
            push_positive(projector_from_subspace(s).A());
        } catch (const std::invalid_argument&) {
            continue;  // dependent sample; try again
        }
    }

    // Negatives: perturb verified points, or draw symmetric junk.
    std::size_t negatives = 0;
    while (negatives < opt.negative_target) {
        QuadraticVector q;
        q.d = d;
        q.lambda = lambda;
        if (rng.below(4) != 0 && !corpus.positives.empty()) {
            const ScPoint& base = corpus.positives[rng.below(corpus.positives.size())];
            q.A = base.A();
            q.B = base.B();
            GaussianRational delta = nonzero_pool_entry(rng);
            if (rng.below(3) == 0) {
                q.B[rng.below(d)] += delta;
            } else {
                long i = static_cast<long>(rng.below(d));
                long j = static_cast<long>(rng.below(d));
                q.A.at(i, j) += delta;
                if (i != j) q.A.at(j, i) += delta;
            }
        } else {
            q.A = Matrix(d, d);
            for (long i = 0; i < d; ++i)
                for (long j = i; j < d; ++j) {
                    GaussianRational x = pool_entry(rng);
                    q.A.at(i, j) = x;
                    q.A.at(j, i) = x;
                }
            q.B = Vector(d);
            for (long i = 0; i < d; ++i) q.B[i] = pool_entry(rng);
        }
        if (check_matrix(q)) continue;  // accidentally valid; resample
        corpus.candidates.push_back(std::move(q));
        ++negatives;
    }
    return corpus;
}

}  // namespace scv
