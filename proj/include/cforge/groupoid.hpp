#ifndef CFORGE_GROUPOID_HPP
#define CFORGE_GROUPOID_HPP

#include <deque>
#include <memory>
#include <vector>

#include "cforge/cover.hpp"
#include "cforge/simplicial.hpp"

namespace cforge {

// Levels of the nerve of a finite simplicial groupoid: a complex per
// level and q+1 face maps down, satisfying d_i d_j = d_{j-1} d_i for
// i < j (verified on construction of every level).
class SimplicialGroupoid {
  public:
    virtual ~SimplicialGroupoid() = default;

    void ensure_levels(int q_max) const;
    int built_levels() const { return static_cast<int>(levels_.size()) - 1; }

    const SimplicialComplex& level(int q) const;
    // Face maps level q -> level q-1, for q >= 1.
    const std::vector<SimplicialMap>& faces(int q) const;

  protected:
    virtual SimplicialComplex make_level(int q) const = 0;
    virtual std::vector<int> face_vertex_map(int q, int i) const = 0;

  private:
    void build_one() const;
    void verify_identities(int q) const;

    mutable std::deque<std::unique_ptr<SimplicialComplex>> levels_;
    mutable std::vector<std::vector<SimplicialMap>> faces_;
};

// Action groupoid G x X => X for a finite group acting simplicially.
// Level q is |G|^q labeled copies of X; the outer face moves the base
// point: s(g, x) = x and t(g, x) = g.x.
class ActionGroupoid : public SimplicialGroupoid {
  public:
    ActionGroupoid(SimplicialComplex base, std::vector<std::vector<int>> group_table,
                   std::vector<std::vector<int>> vertex_perms);

    const SimplicialComplex& base() const { return base_; }
    int group_order() const { return static_cast<int>(table_.size()); }

  protected:
    SimplicialComplex make_level(int q) const override;
    std::vector<int> face_vertex_map(int q, int i) const override;

  private:
    long blocks(int q) const;
    std::vector<int> digits(long block, int q) const;
    long pack(const std::vector<int>& d) const;

    SimplicialComplex base_;
    std::vector<std::vector<int>> table_;
    std::vector<std::vector<int>> perms_;
    int identity_ = 0;
};

// Cech groupoid of a cover: level q is the disjoint union of the
// intersections over ordered (q+1)-tuples, diagonal pieces included
// (unlike the strictly increasing CechLevels).
class CechGroupoid : public SimplicialGroupoid {
  public:
    explicit CechGroupoid(const Cover* cover);

    const Cover& cover() const { return *cover_; }
    // Tuples (ordered, repeats allowed) of the nonempty level-q pieces.
    const std::vector<std::vector<std::size_t>>& tuples(int q) const;

  protected:
    SimplicialComplex make_level(int q) const override;
    std::vector<int> face_vertex_map(int q, int i) const override;

  private:
    void ensure_tuples(int q) const;
    std::size_t tuple_index(int q, const std::vector<std::size_t>& t) const;

    const Cover* cover_;
    mutable std::vector<std::vector<std::vector<std::size_t>>> tuples_;
    mutable std::vector<std::vector<SimplicialComplex>> pieces_;
};

}  // namespace cforge

#endif
