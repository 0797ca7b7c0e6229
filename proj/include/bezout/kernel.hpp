#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bezout/bezout_matrix.hpp"

namespace bezout {

template <class K>
struct RootBlockSpec {
    K root;
    int multiplicity = 1; // multiplicity of the root in the gcd
};

template <class K>
struct KernelDescription {
    std::vector<RootBlockSpec<K>> blocks;
    std::size_t n = 0; // dimension of the Bezout matrix being described
};

// n x k block whose columns span the null-space contribution of a common
// root x of multiplicity k, in the monomial basis: entry (m, c) is the
// falling factorial m(m-1)...(m-c+1) times x^(m-c). Column 0 is the moment
// vector (1, x, x^2, ...); column c is its c-th derivative in x.
template <class K>
Matrix<K> monomial_block(const K& x, std::size_t k, std::size_t n) {
    if (k < 1 || k > n) fail("BadDimensions", "block multiplicity must satisfy 1 <= k <= n");
    Matrix<K> block(n, k);
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t m = c; m < n; ++m)
            block(m, c) = detail::falling_factorial<K>(m, c) * detail::kpow(x, m - c);
    return block;
}

// Same block expressed against basis phi: entry (j, i) is the i-th
// derivative of basis function j at x, equal to P(phi->St)^T times the
// monomial block.
template <class K>
Matrix<K> phi_block(const K& x, std::size_t k, const Basis<K>& phi, double tol = kDefaultTol) {
    const std::size_t n = phi.dimension();
    if (k < 1 || k > n) fail("BadDimensions", "block multiplicity must satisfy 1 <= k <= n");
    if (phi.kind() == BasisKind::Monomial) return monomial_block(x, k, n);
    return to_monomial_matrix(phi, tol).transpose() * monomial_block(x, k, n);
}

struct KernelVerdict {
    bool pass = false;
    std::optional<std::string> failed_condition; // empty on PASS
    std::size_t nullity = 0;

    static KernelVerdict passed(std::size_t nullity) { return {true, std::nullopt, nullity}; }
    static KernelVerdict failed(std::string condition, std::size_t nullity) {
        return {false, std::move(condition), nullity};
    }
};

// Checks that the blocks for the supplied roots describe the whole null
// space of b: multiplicities sum to the nullity, every block column is
// annihilated by b, and the concatenated blocks have full column rank.
template <class K>
KernelVerdict verify_kernel_structure(const BezoutMatrix<K>& b, const KernelDescription<K>& desc,
                                      double tol = kDefaultTol) {
    const std::size_t nullity = b.n - rank(b.matrix, tol);
    if (desc.n != b.n)
        return KernelVerdict::failed("dimension_mismatch", nullity);
    std::size_t total = 0;
    for (std::size_t i = 0; i < desc.blocks.size(); ++i) {
        if (desc.blocks[i].multiplicity < 1)
            return KernelVerdict::failed("bad_multiplicity", nullity);
        for (std::size_t j = i + 1; j < desc.blocks.size(); ++j)
            if (desc.blocks[i].root == desc.blocks[j].root)
                return KernelVerdict::failed("repeated_root", nullity);
        total += static_cast<std::size_t>(desc.blocks[i].multiplicity);
    }
    if (total != nullity)
        return KernelVerdict::failed("nullity_mismatch", nullity);
    if (desc.blocks.empty())
        return KernelVerdict::passed(nullity);

    std::vector<Matrix<K>> blocks;
    for (const RootBlockSpec<K>& spec : desc.blocks) {
        Matrix<K> block =
            phi_block(spec.root, static_cast<std::size_t>(spec.multiplicity), b.basis, tol);
        // |entry| <= tol * |b| * |block| in floating mode, exact zero otherwise
        const double threshold =
            detail::elimination_threshold(b.matrix, tol) * detail::elimination_threshold(block, 1.0);
        const Matrix<K> image = b.matrix * block;
        for (std::size_t i = 0; i < image.rows(); ++i)
            for (std::size_t j = 0; j < image.cols(); ++j)
                if (!ScalarTraits<K>::is_zero(image(i, j), threshold))
                    return KernelVerdict::failed("annihilation", nullity);
        blocks.push_back(std::move(block));
    }
    Matrix<K> concatenated = blocks.front();
    for (std::size_t i = 1; i < blocks.size(); ++i)
        concatenated = Matrix<K>::hstack(concatenated, blocks[i]);
    if (rank(concatenated, tol) != total)
        return KernelVerdict::failed("block_rank", nullity);
    return KernelVerdict::passed(nullity);
}

// Extracts the unique simple common root from a Bezout matrix with a
// one-dimensional null space: with u spanning the null space and (a, b) the
// coordinates of 1 and t in the basis, the root is (b . u) / (a . u).
template <class K>
K simple_common_root(const BezoutMatrix<K>& b, double tol = kDefaultTol) {
    const Matrix<K> ns = null_space_basis(b.matrix, tol);
    if (ns.cols() != 1)
        fail("NullityNotOne", "null space dimension is " + std::to_string(ns.cols()));
    const auto [ones, ts] = coords_of_one_and_t(b.basis);
    K numer(0), denom(0);
    for (std::size_t i = 0; i < b.n; ++i) {
        numer += ts[i] * ns(i, 0);
        denom += ones[i] * ns(i, 0);
    }
    const double threshold = detail::elimination_threshold(ns, tol);
    if (ScalarTraits<K>::is_zero(denom, threshold))
        fail("ZeroDenominator", "coordinates of 1 annihilate the null vector");
    return numer / denom;
}

} // namespace bezout
