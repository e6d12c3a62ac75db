// Minimal symmetric eigenvalue machinery: a dense cyclic-Jacobi solver
// for full spectra (O(n^3) per sweep, intended for moderate n) and a
// Lanczos iteration with full reorthogonalization for extremal
// eigenvalues of large sparse operators.
#ifndef GGEN_LINALG_HPP
#define GGEN_LINALG_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace ggen {

// Row-major symmetric n*n matrix; returns all eigenvalues ascending.
std::vector<double> sym_eigenvalues(std::vector<double> a, std::size_t n);

enum class WhichExtreme { largest_algebraic, smallest_algebraic, largest_magnitude };

struct LanczosOptions {
    int max_iterations = 500;
    double tolerance = 1e-8; // relative, on the extremal Ritz value
    std::uint64_t seed = 0x5eed;
    // Optional projection onto an invariant subspace; applied to the
    // start vector and after every reorthogonalization, so the Krylov
    // basis stays inside it (e.g. the complement of a known null space).
    std::function<void(std::vector<double>&)> project;
};

struct LanczosResult {
    double eigenvalue = 0;
    int iterations = 0;
    bool converged = false;
};

using LinearOperator = std::function<void(const std::vector<double>&, std::vector<double>&)>;

// Extremal eigenvalue of a symmetric operator of the given dimension.
// Converges when the Ritz value stabilizes to the requested relative
// tolerance; exhausting the space counts as converged.
LanczosResult lanczos_extreme(const LinearOperator& apply, std::size_t dim, WhichExtreme which,
                              const LanczosOptions& opts = {});

} // namespace ggen

#endif
