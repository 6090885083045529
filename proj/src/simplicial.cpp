#include "cforge/simplicial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cforge {

namespace {

void check_simplex(const Simplex& s, int n_vertices) {
    if (s.empty()) throw std::invalid_argument("empty simplex");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n_vertices)
            throw std::invalid_argument("simplex vertex out of range");
        if (i > 0 && s[i] <= s[i - 1])
            throw std::invalid_argument("simplex vertices not strictly increasing");
    }
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n_vertices, const std::vector<Simplex>& maximal)
    : n_vertices_(n_vertices) {
    if (n_vertices < 0) throw std::invalid_argument("negative vertex count");
    std::set<Simplex> closure;
    for (const Simplex& top : maximal) {
        check_simplex(top, n_vertices);
        // All nonempty subsets, via bitmask; top cells here are tiny.
        const std::size_t k = top.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
            Simplex f;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::size_t(1) << b)) f.push_back(top[b]);
            closure.insert(std::move(f));
        }
    }
    for (const Simplex& s : closure) {
        const int d = static_cast<int>(s.size()) - 1;
        if (d >= static_cast<int>(by_dim_.size())) by_dim_.resize(d + 1);
        by_dim_[d].push_back(s);
    }
    index_.resize(by_dim_.size());
    for (std::size_t d = 0; d < by_dim_.size(); ++d) {
        std::sort(by_dim_[d].begin(), by_dim_[d].end());
        for (std::size_t i = 0; i < by_dim_[d].size(); ++i) index_[d][by_dim_[d][i]] = i;
    }
    build_coboundaries();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int degree) const {
    static const std::vector<Simplex> empty;
    if (degree < 0 || degree > dim()) return empty;
    return by_dim_[degree];
}

bool SimplicialComplex::contains(const Simplex& s) const {
    return index_of(s).has_value();
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    const int d = static_cast<int>(s.size()) - 1;
    if (d < 0 || d > dim()) return std::nullopt;
    auto it = index_[d].find(s);
    if (it == index_[d].end()) return std::nullopt;
    return it->second;
}

void SimplicialComplex::build_coboundaries() {
    const int top = dim();
    cob_.assign(top + 1, IntMatrix());
    for (int k = 0; k <= top; ++k) {
        IntMatrix m(count(k + 1), count(k));
        const auto& rows = simplices(k + 1);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Simplex& s = rows[r];
            int sign = 1;
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i) face.push_back(s[j]);
                m(r, *index_of(face)) = sign;
                sign = -sign;
            }
        }
        cob_[k] = std::move(m);
    }
}

const IntMatrix& SimplicialComplex::coboundary_matrix(int degree) const {
    static const IntMatrix empty;
    if (degree < 0 || degree > dim() || cob_.empty()) return empty;
    return cob_[degree];
}

IntMatrix SimplicialComplex::boundary_matrix(int degree) const {
    if (degree <= 0 || degree > dim()) return IntMatrix(count(degree - 1), count(degree));
    return coboundary_matrix(degree - 1).transposed();
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    if (n_vertices_ != other.n_vertices_) return false;
    for (int d = 0; d <= dim(); ++d)
        for (const Simplex& s : simplices(d))
            if (!other.contains(s)) return false;
    return true;
}

SimplicialComplex SimplicialComplex::intersect(const SimplicialComplex& other) const {
    if (n_vertices_ != other.n_vertices_)
        throw std::invalid_argument("intersection requires a shared ambient vertex set");
    std::vector<Simplex> common;
    for (int d = 0; d <= dim(); ++d)
        for (const Simplex& s : simplices(d))
            if (other.contains(s)) common.push_back(s);
    return SimplicialComplex(n_vertices_, common);
}

SimplicialComplex SimplicialComplex::closed_star(int vertex) const {
    std::vector<Simplex> kept;
    for (int d = 0; d <= dim(); ++d)
        for (const Simplex& s : simplices(d)) {
            Simplex with = s;
            if (!std::binary_search(with.begin(), with.end(), vertex)) {
                with.push_back(vertex);
                std::sort(with.begin(), with.end());
            }
            if (contains(with)) kept.push_back(s);
        }
    return SimplicialComplex(n_vertices_, kept);
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    std::vector<Simplex> out;
    for (int d = 0; d <= dim(); ++d)
        for (const Simplex& s : simplices(d)) {
            bool maximal = true;
            for (int v = 0; v < n_vertices_ && maximal; ++v) {
                if (std::binary_search(s.begin(), s.end(), v)) continue;
                Simplex bigger = s;
                bigger.push_back(v);
                std::sort(bigger.begin(), bigger.end());
                if (contains(bigger)) maximal = false;
            }
            if (maximal) out.push_back(s);
        }
    return out;
}

std::vector<int> SimplicialComplex::support() const {
    std::vector<int> verts;
    for (const Simplex& s : simplices(0)) verts.push_back(s[0]);
    return verts;
}

SimplicialMap::SimplicialMap(const SimplicialComplex* source, const SimplicialComplex* target,
                             std::vector<int> vertex_map)
    : source_(source), target_(target), vertex_map_(std::move(vertex_map)) {
    if (static_cast<int>(vertex_map_.size()) != source_->ambient_vertices())
        throw std::invalid_argument("vertex map size mismatch");
    for (int v : vertex_map_)
        if (v < 0 || v >= target_->ambient_vertices())
            throw std::invalid_argument("vertex map image out of range");
    for (int d = 0; d <= source_->dim(); ++d)
        for (const Simplex& s : source_->simplices(d)) {
            auto [img, sign] = image(s);
            (void)sign;
            if (!target_->contains(img))
                throw std::invalid_argument("vertex map is not simplicial");
        }
}

std::pair<Simplex, int> SimplicialMap::image(const Simplex& s) const {
    Simplex img;
    img.reserve(s.size());
    for (int v : s) img.push_back(vertex_map_[v]);
    // Insertion sort, tracking the permutation sign; repeats kill the
    // simplex (alternating extension).
    int sign = 1;
    for (std::size_t i = 1; i < img.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && img[j] < img[j - 1]) {
            std::swap(img[j], img[j - 1]);
            sign = -sign;
            --j;
        }
        if (j > 0 && img[j] == img[j - 1]) return {Simplex{}, 0};
    }
    return {img, sign};
}

SimplicialMap SimplicialMap::identity(const SimplicialComplex* c) {
    std::vector<int> vm(c->ambient_vertices());
    for (std::size_t i = 0; i < vm.size(); ++i) vm[i] = static_cast<int>(i);
    return SimplicialMap(c, c, vm);
}

SimplicialMap SimplicialMap::inclusion(const SimplicialComplex* sub,
                                       const SimplicialComplex* super) {
    if (!sub->is_subcomplex_of(*super))
        throw std::invalid_argument("inclusion source is not a subcomplex");
    std::vector<int> vm(sub->ambient_vertices());
    for (std::size_t i = 0; i < vm.size(); ++i) vm[i] = static_cast<int>(i);
    return SimplicialMap(sub, super, vm);
}

SimplicialMap SimplicialMap::compose_after(const SimplicialMap& first) const {
    if (&first.target() != source_ && !(first.target() == *source_))
        throw std::invalid_argument("maps not composable");
    std::vector<int> vm(first.vertex_map_.size());
    for (std::size_t i = 0; i < vm.size(); ++i) vm[i] = vertex_map_[first.vertex_map_[i]];
    return SimplicialMap(&first.source(), target_, vm);
}

IntMatrix SimplicialMap::pullback_matrix(int degree) const {
    IntMatrix m(source_->count(degree), target_->count(degree));
    const auto& rows = source_->simplices(degree);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto [img, sign] = image(rows[r]);
        if (sign == 0) continue;
        auto idx = target_->index_of(img);
        if (!idx) continue;  // image degenerate into lower skeleton elsewhere
        m(r, *idx) = sign;
    }
    return m;
}

}  // namespace cforge
