#include "hamnf/group.hpp"

#include "hamnf/errors.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <string>

namespace hamnf {

namespace {

std::string sign_text(int s) { return s > 0 ? "+1" : "-1"; }

} // namespace

Character FiniteSymmetryGroup::sigma1_sigma2() const {
    Character c(order());
    for (std::size_t i = 0; i < order(); ++i)
        c[i] = sigma1_[i] * sigma2_[i];
    return c;
}

bool FiniteSymmetryGroup::is_multiplicative(const Character& chi) const {
    if (chi.size() != order())
        return false;
    for (int v : chi)
        if (v != 1 && v != -1)
            return false;
    for (std::size_t i = 0; i < order(); ++i)
        for (std::size_t j = 0; j < order(); ++j)
            if (chi[mul_table_[i][j]] != chi[i] * chi[j])
                return false;
    return true;
}

FiniteSymmetryGroup FiniteSymmetryGroup::trivial(std::size_t dim) {
    return generate_group({SignedGenerator{Matrix::identity(dim), 1, 1}}, 1);
}

FiniteSymmetryGroup generate_group(const std::vector<SignedGenerator>& generators, std::size_t max_size) {
    require(!generators.empty(), ErrorKind::InvalidArgument, "at least one generator is required");
    const std::size_t n = generators.front().matrix.rows();
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto& g = generators[i];
        require(g.matrix.is_square() && g.matrix.rows() == n, ErrorKind::DimensionMismatch,
                "generator " + std::to_string(i) + " is not a square matrix of size " + std::to_string(n));
        require(g.s1 == 1 || g.s1 == -1, ErrorKind::InvalidArgument, "generator " + std::to_string(i) + ": s1 must be +1 or -1");
        require(g.s2 == 1 || g.s2 == -1, ErrorKind::InvalidArgument, "generator " + std::to_string(i) + ": s2 must be +1 or -1");
        if (is_zero(determinant(g.matrix)))
            fail(ErrorKind::SingularGenerator, "generator " + std::to_string(i) + " is singular");
    }

    FiniteSymmetryGroup grp;
    std::map<std::string, std::size_t> index_of;
    const auto add = [&](Matrix m, int s1, int s2) {
        index_of.emplace(m.to_string(), grp.elements_.size());
        grp.elements_.push_back(std::move(m));
        grp.sigma1_.push_back(s1);
        grp.sigma2_.push_back(s2);
    };
    add(Matrix::identity(n), 1, 1);

    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t e = queue.front();
        queue.pop_front();
        for (std::size_t gi = 0; gi < generators.size(); ++gi) {
            const auto& g = generators[gi];
            Matrix prod = grp.elements_[e] * g.matrix;
            const int s1 = grp.sigma1_[e] * g.s1;
            const int s2 = grp.sigma2_[e] * g.s2;
            const auto it = index_of.find(prod.to_string());
            if (it != index_of.end()) {
                const std::size_t k = it->second;
                if (grp.sigma1_[k] != s1 || grp.sigma2_[k] != s2)
                    fail(ErrorKind::InconsistentSigns,
                         "sign propagation conflict on element " + std::to_string(e) + " times generator " +
                             std::to_string(gi) + " = element " + std::to_string(k) + " " + prod.to_string() +
                             ": already (" + sign_text(grp.sigma1_[k]) + "," + sign_text(grp.sigma2_[k]) + "), product gives (" +
                             sign_text(s1) + "," + sign_text(s2) + ")");
                continue;
            }
            if (grp.elements_.size() >= max_size)
                fail(ErrorKind::ClosureExceeded, "group closure exceeded max_size " + std::to_string(max_size));
            add(std::move(prod), s1, s2);
            queue.push_back(grp.elements_.size() - 1);
        }
    }

    const std::size_t order = grp.elements_.size();
    grp.mul_table_.assign(order, std::vector<std::size_t>(order));
    grp.inverse_.assign(order, 0);
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) {
            const auto it = index_of.find((grp.elements_[i] * grp.elements_[j]).to_string());
            if (it == index_of.end())
                fail(ErrorKind::InvalidArgument, "generated set is not closed under products");
            grp.mul_table_[i][j] = it->second;
            if (it->second == 0)
                grp.inverse_[i] = j;
        }
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) {
            const std::size_t k = grp.mul_table_[i][j];
            if (grp.sigma1_[k] != grp.sigma1_[i] * grp.sigma1_[j] || grp.sigma2_[k] != grp.sigma2_[i] * grp.sigma2_[j])
                fail(ErrorKind::InconsistentSigns, "signs not multiplicative on pair (" + std::to_string(i) + ", " +
                                                       std::to_string(j) + ")");
        }
    return grp;
}

SemisymplecticReport verify_semisymplectic(const FiniteSymmetryGroup& g, const SymplecticForm& omega) {
    require(g.dim() == omega.dim(), ErrorKind::DimensionMismatch, "group and omega act on different dimensions");
    SemisymplecticReport report;
    std::ostringstream neither;
    std::ostringstream mismatch;
    bool any_neither = false;
    bool any_mismatch = false;
    for (std::size_t i = 0; i < g.order(); ++i) {
        const MatrixClass c = classify_matrix(g.element(i), omega);
        report.classes.push_back(c);
        if (c == MatrixClass::Neither) {
            neither << (any_neither ? ", " : "") << i << ' ' << g.element(i).to_string();
            any_neither = true;
        } else if ((c == MatrixClass::Symplectic) != (g.sigma1()[i] == 1)) {
            mismatch << (any_mismatch ? ", " : "") << i << " (" << to_string(c) << ", sigma1 " << sign_text(g.sigma1()[i])
                     << ')';
            any_mismatch = true;
        }
    }
    if (any_neither)
        fail(ErrorKind::NotSemisymplectic, "elements neither symplectic nor antisymplectic: " + neither.str());
    if (any_mismatch)
        fail(ErrorKind::SigmaMismatch, "matrix class disagrees with sigma1 on elements: " + mismatch.str());
    return report;
}

std::string_view to_string(SymmetryType t) {
    switch (t) {
    case SymmetryType::SE: return "SE";
    case SymmetryType::SR: return "SR";
    case SymmetryType::AE: return "AE";
    case SymmetryType::AR: return "AR";
    }
    return "SE";
}

SymmetryClassification classify_symmetry_types(const FiniteSymmetryGroup& g) {
    SymmetryClassification out;
    for (std::size_t i = 0; i < g.order(); ++i) {
        const bool symplectic = g.sigma1()[i] == 1;
        const bool equivariant = g.sigma2()[i] == 1;
        const SymmetryType t = symplectic ? (equivariant ? SymmetryType::SE : SymmetryType::SR)
                                          : (equivariant ? SymmetryType::AE : SymmetryType::AR);
        out.types.push_back(t);
        out.present.insert(t);
    }
    return out;
}

CosetStructure coset_structure(const FiniteSymmetryGroup& g) {
    CosetStructure cs;
    for (std::size_t i = 0; i < g.order(); ++i) {
        const int s1 = g.sigma1()[i];
        const int s2 = g.sigma2()[i];
        if (s1 == 1 && s2 == 1)
            cs.gamma_pp.push_back(i);
        else if (s1 == 1 && !cs.delta1)
            cs.delta1 = i;
        else if (s2 == 1 && s1 == -1 && !cs.delta2)
            cs.delta2 = i;
        else if (s1 == -1 && s2 == -1 && !cs.delta3)
            cs.delta3 = i;
    }
    cs.index = g.order() / cs.gamma_pp.size();
    return cs;
}

Matrix pullback_matrix(const Matrix& gamma, unsigned degree) {
    require(gamma.is_square(), ErrorKind::DimensionMismatch, "group element must be square");
    const auto basis = monomial_basis(gamma.rows(), degree);
    std::vector<Vector> cols;
    cols.reserve(basis.size());
    for (const auto& m : basis)
        cols.push_back(coordinates(pullback(Poly::term(m, 1), gamma), degree));
    return Matrix::from_columns(cols, basis.size());
}

Matrix reynolds_projection(const FiniteSymmetryGroup& g, const Character& chi, unsigned degree) {
    if (!g.is_multiplicative(chi))
        fail(ErrorKind::NonMultiplicativeCharacter, "character is not a homomorphism into {+1, -1}");
    const std::size_t n = homogeneous_dimension(g.dim(), degree);
    Matrix r(n, n);
    for (std::size_t i = 0; i < g.order(); ++i) {
        Matrix p = pullback_matrix(g.element(i), degree);
        if (chi[i] > 0)
            r += p;
        else
            r -= p;
    }
    r *= Scalar(1, static_cast<unsigned long>(g.order()));
    return r;
}

bool check_invariance(const Poly& f, const FiniteSymmetryGroup& g, const Character& chi) {
    require(f.num_vars() == g.dim(), ErrorKind::DimensionMismatch, "polynomial and group dimensions differ");
    require(chi.size() == g.order(), ErrorKind::DimensionMismatch, "character length differs from group order");
    for (std::size_t i = 0; i < g.order(); ++i)
        if (pullback(f, g.element(i)) != f * Scalar(chi[i]))
            return false;
    return true;
}

bool check_equivariance(const PolyVectorField& x, const FiniteSymmetryGroup& g, const Character& chi) {
    require(x.dim() == g.dim(), ErrorKind::DimensionMismatch, "field and group dimensions differ");
    require(chi.size() == g.order(), ErrorKind::DimensionMismatch, "character length differs from group order");
    const std::size_t n = x.dim();
    for (std::size_t e = 0; e < g.order(); ++e) {
        const Matrix& gamma = g.element(e);
        for (std::size_t i = 0; i < n; ++i) {
            require(x.components[i].num_vars() == n, ErrorKind::DimensionMismatch, "field component variable count");
            Poly rhs(n);
            for (std::size_t j = 0; j < n; ++j)
                if (!is_zero(gamma(i, j)))
                    rhs += x.components[j] * gamma(i, j);
            rhs *= Scalar(chi[e]);
            if (pullback(x.components[i], gamma) != rhs)
                return false;
        }
    }
    return true;
}

} // namespace hamnf
