#include "scv/variety.hpp"

#include <stdexcept>

namespace scv {

namespace {

void require_same_ambient(const ScPoint& p1, const ScPoint& p2) {
    if (p1.d() != p2.d() || !(p1.lambda() == p2.lambda()))
        throw std::invalid_argument("points must share (d, lambda)");
}

}  // namespace

ScPoint involution(const ScPoint& p) {
    QuadraticVector q = p.quadratic();
    q.A = Matrix::identity(q.d) - q.A;
    for (long i = 0; i < q.d; ++i) q.B[i] = q.lambda[i] - q.B[i];
    return ScPoint::from_quadratic(q);
}

bool leq_matrix(const ScPoint& p1, const ScPoint& p2) {
    require_same_ambient(p1, p2);
    const Matrix& a1 = p1.A();
    const Matrix& a2 = p2.A();
    return a1 * a2 == a1 && a2 * a1 == a1;
}

bool image_contained(const ScPoint& p1, const ScPoint& p2) {
    require_same_ambient(p1, p2);
    // Im A1 ⊆ Im A2 iff appending A1's columns to A2's does not raise the rank.
    const long d = p1.d();
    Matrix joint(d, 2 * d);
    for (long r = 0; r < d; ++r)
        for (long c = 0; c < d; ++c) {
            joint.at(r, c) = p2.A().at(r, c);
            joint.at(r, d + c) = p1.A().at(r, c);
        }
    return rank(joint) == rank(p2.A());
}

bool leq_direct(const ScPoint& p1, const ScPoint& p2, long tail_bound) {
    require_same_ambient(p1, p2);
    FockElement w1 = p1.state();
    VirasoroFamily l1(w1);
    VirasoroFamily l2(p2.state());
    if (!(l2.apply(0, w1) == GaussianRational(2) * w1)) return false;
    if (!l2.apply(1, w1).is_zero()) return false;
    if (!(l2.apply(2, w1) == l1.apply(2, w1))) return false;
    if (!(l2.apply(-1, w1) == l1.apply(-1, w1))) return false;
    for (long n = 3; n <= std::max<long>(4, tail_bound); ++n)
        if (!l2.apply(n, w1).is_zero()) return false;
    return true;
}

ImageKernel image_and_kernel(const ScPoint& p) {
    const long d = p.d();
    RrefResult r = rref(p.A());
    std::vector<Vector> image_basis;
    for (std::size_t c : r.pivot_cols) {
        Vector col(d);
        for (long row = 0; row < d; ++row) col[row] = p.A().at(row, c);
        image_basis.push_back(std::move(col));
    }
    ImageKernel out{Subspace(d, std::move(image_basis)), Subspace(d, kernel(p.A()))};
    if (out.image.dim() + out.kern.dim() != static_cast<std::size_t>(d))
        throw std::logic_error("image and kernel dimensions must sum to d");
    if (!subspace_regular(out.image) || !subspace_regular(out.kern))
        throw std::logic_error("image and kernel of a verified point must be regular");
    for (const Vector& u : out.image.basis())
        for (const Vector& v : out.kern.basis())
            if (!dot(u, v).is_zero())
                throw std::logic_error("image and kernel must be orthogonal");
    return out;
}

ScPoint projector_from_subspace(const Subspace& s) {
    if (!subspace_regular(s))
        throw std::invalid_argument("subspace is not regular: the form degenerates on it");
    const long d = static_cast<long>(s.ambient_dim());
    QuadraticVector q;
    q.d = d;
    q.B = Vector(d);
    q.lambda = Vector(d);
    if (s.dim() == 0) {
        q.A = Matrix(d, d);
    } else {
        Matrix v = s.basis_columns();
        Matrix g = v.transpose() * v;
        q.A = v * inverse(g) * v.transpose();
    }
    return ScPoint::from_quadratic(q);
}

OrthogonalElement OrthogonalElement::make(Matrix o) {
    if (!o.is_square()) throw std::invalid_argument("orthogonal element must be square");
    Matrix id = Matrix::identity(o.rows());
    if (!(o.transpose() * o == id) || !(o * o.transpose() == id))
        throw std::invalid_argument("matrix is not orthogonal: o^T o != I");
    return OrthogonalElement{std::move(o)};
}

ScPoint conjugate(const ScPoint& p, const OrthogonalElement& o) {
    const long d = p.d();
    if (o.o.rows() != static_cast<std::size_t>(d))
        throw std::invalid_argument("orthogonal element dimension mismatch");
    if (!p.lambda_is_zero()) {
        Vector moved = o.o.apply(p.lambda());
        if (!(moved == p.lambda()))
            throw std::invalid_argument(
                "for lambda != 0 conjugation is only supported by stabilizers of lambda");
    }
    QuadraticVector q = p.quadratic();
    q.A = o.o * p.A() * o.o.transpose();
    q.B = q.A.apply(q.lambda);
    return ScPoint::from_quadratic(q);
}

Chain build_chain(long d) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    Chain chain;
    for (long k = 0; k <= d; ++k) {
        QuadraticVector q;
        q.d = d;
        q.A = Matrix(d, d);
        for (long i = 0; i < k; ++i) q.A.at(i, i) = GaussianRational(1);
        q.B = Vector(d);
        q.lambda = Vector(d);
        chain.points.push_back(ScPoint::from_quadratic(q));
    }
    for (long k = 0; k < d; ++k) {
        if (!leq_matrix(chain.points[k], chain.points[k + 1]) ||
            !leq_direct(chain.points[k], chain.points[k + 1]))
            throw std::logic_error("coordinate chain failed an order oracle");
    }
    return chain;
}

std::vector<std::string> ExtremalClass::labels() const {
    std::vector<std::string> out;
    if (bottom) out.push_back("bottom");
    if (minimal) out.push_back("minimal");
    if (maximal) out.push_back("maximal");
    if (top) out.push_back("top");
    if (out.empty()) out.push_back("interior");
    return out;
}

ExtremalClass classify_extremal(const ScPoint& p) {
    const auto r = static_cast<long>(p.rank_of_A());
    ExtremalClass c;
    c.bottom = r == 0;
    c.top = r == p.d();
    c.minimal = r == 1;
    c.maximal = r == p.d() - 1;
    return c;
}

}  // namespace scv
