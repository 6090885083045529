#ifndef CFORGE_ABELIAN_HPP
#define CFORGE_ABELIAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "cforge/smith.hpp"

namespace cforge {

// Canonical presentation of a finitely generated abelian group:
// torsion factors > 1 forming a divisibility chain, then a free rank.
// Canonicity makes group equality a structural comparison.
struct FgAbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const FgAbelianGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    // "0", "Z", "Z/2", "Z^2 + Z/2 + Z/4", ...
    std::string to_string() const;
};

// Coordinates of a cohomology class in the canonical presentation.
// Torsion coordinates are reduced to [0, d_i).
struct ClassCoordinates {
    std::vector<Int> torsion;
    std::vector<Int> free_part;

    bool operator==(const ClassCoordinates& o) const {
        return torsion == o.torsion && free_part == o.free_part;
    }
    bool is_zero() const;
    ClassCoordinates negated(const FgAbelianGroup& g) const;
};

// ker(d_out) / im(d_in) for an integer cochain complex, via Smith
// reduction, together with the coordinate map on cocycles and the
// coboundary membership test.
class CohomologyPresentation {
  public:
    // Requires d_out * d_in = 0; throws otherwise.
    CohomologyPresentation(const IntMatrix& d_in, const IntMatrix& d_out);

    const FgAbelianGroup& group() const { return group_; }

    bool is_cocycle(const std::vector<Int>& z) const;
    ClassCoordinates class_coords(const std::vector<Int>& z) const;
    bool is_coboundary(const std::vector<Int>& z) const;

    // x with d_in x = z, canonical, when the class vanishes.
    std::optional<std::vector<Int>> coboundary_preimage(const std::vector<Int>& z) const;

    // A cocycle representing the i-th canonical generator (torsion
    // generators first, then free ones).
    std::vector<Int> generator(std::size_t i) const;
    std::size_t generator_count() const { return gen_cols_.size(); }

  private:
    IntMatrix d_in_, d_out_;
    SmithDecomposition d_in_snf_;
    IntMatrix kernel_;            // columns: basis of ker(d_out)
    SmithDecomposition kernel_snf_;
    SmithDecomposition rel_snf_;  // smith of relations in kernel coordinates
    std::vector<Int> diag_;       // relation diagonal per kernel coordinate (0 = free)
    std::vector<std::size_t> torsion_idx_, free_idx_;
    std::vector<std::size_t> gen_cols_;
    FgAbelianGroup group_;
};

}  // namespace cforge

#endif
