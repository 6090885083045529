#include "cforge/groupoid.hpp"

#include <stdexcept>

namespace cforge {

void SimplicialGroupoid::ensure_levels(int q_max) const {
    while (built_levels() < q_max) build_one();
}

void SimplicialGroupoid::build_one() const {
    const int q = built_levels() + 1;
    levels_.push_back(std::make_unique<SimplicialComplex>(make_level(q)));
    faces_.resize(q + 1);
    if (q >= 1) {
        for (int i = 0; i <= q; ++i)
            faces_[q].emplace_back(levels_[q].get(), levels_[q - 1].get(), face_vertex_map(q, i));
        verify_identities(q);
    }
}

void SimplicialGroupoid::verify_identities(int q) const {
    if (q < 2) return;
    for (int j = 1; j <= q; ++j)
        for (int i = 0; i < j; ++i) {
            SimplicialMap lhs = faces_[q - 1][i].compose_after(faces_[q][j]);
            SimplicialMap rhs = faces_[q - 1][j - 1].compose_after(faces_[q][i]);
            if (lhs.vertex_map() != rhs.vertex_map())
                throw std::logic_error("simplicial identities fail at level " + std::to_string(q));
        }
}

const SimplicialComplex& SimplicialGroupoid::level(int q) const {
    ensure_levels(q);
    return *levels_[q];
}

const std::vector<SimplicialMap>& SimplicialGroupoid::faces(int q) const {
    if (q < 1) throw std::invalid_argument("face maps start at level 1");
    ensure_levels(q);
    return faces_[q];
}

ActionGroupoid::ActionGroupoid(SimplicialComplex base, std::vector<std::vector<int>> group_table,
                               std::vector<std::vector<int>> vertex_perms)
    : base_(std::move(base)), table_(std::move(group_table)), perms_(std::move(vertex_perms)) {
    const int n = static_cast<int>(table_.size());
    if (n == 0) throw std::invalid_argument("empty group table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("group table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
    }
    // associativity and identity
    int id = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
        if (ok) { id = e; break; }
    }
    if (id < 0) throw std::invalid_argument("group table has no identity");
    identity_ = id;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw std::invalid_argument("group table is not associative");

    if (static_cast<int>(perms_.size()) != n)
        throw std::invalid_argument("one vertex permutation per group element required");
    const int nv = base_.ambient_vertices();
    for (const auto& p : perms_) {
        if (static_cast<int>(p.size()) != nv)
            throw std::invalid_argument("permutation size mismatch");
        std::vector<bool> seen(nv, false);
        for (int v : p) {
            if (v < 0 || v >= nv || seen[v])
                throw std::invalid_argument("action is not a permutation");
            seen[v] = true;
        }
    }
    for (int v = 0; v < nv; ++v)
        if (perms_[identity_][v] != v)
            throw std::invalid_argument("identity must act trivially");
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int v = 0; v < nv; ++v)
                if (perms_[table_[g][h]][v] != perms_[g][perms_[h][v]])
                    throw std::invalid_argument("action is not a homomorphism");
    // simpliciality: each g maps simplices to simplices
    for (int g = 0; g < n; ++g)
        for (int d = 0; d <= base_.dim(); ++d)
            for (const Simplex& s : base_.simplices(d)) {
                Simplex img;
                for (int v : s) img.push_back(perms_[g][v]);
                std::sort(img.begin(), img.end());
                if (!base_.contains(img))
                    throw std::invalid_argument("group element does not act simplicially");
            }
    ensure_levels(0);
}

long ActionGroupoid::blocks(int q) const {
    long b = 1;
    for (int i = 0; i < q; ++i) b *= group_order();
    return b;
}

std::vector<int> ActionGroupoid::digits(long block, int q) const {
    // g_1 is the most significant digit
    std::vector<int> d(q);
    for (int i = q - 1; i >= 0; --i) {
        d[i] = static_cast<int>(block % group_order());
        block /= group_order();
    }
    return d;
}

long ActionGroupoid::pack(const std::vector<int>& d) const {
    long b = 0;
    for (int g : d) b = b * group_order() + g;
    return b;
}

SimplicialComplex ActionGroupoid::make_level(int q) const {
    const long nb = blocks(q);
    const int nv = base_.ambient_vertices();
    std::vector<Simplex> tops;
    for (long b = 0; b < nb; ++b)
        for (const Simplex& s : base_.maximal_simplices()) {
            Simplex t;
            for (int v : s) t.push_back(static_cast<int>(b * nv + v));
            tops.push_back(t);
        }
    return SimplicialComplex(static_cast<int>(nb * nv), tops);
}

std::vector<int> ActionGroupoid::face_vertex_map(int q, int i) const {
    const long nb = blocks(q);
    const int nv = base_.ambient_vertices();
    std::vector<int> vm(nb * nv);
    for (long b = 0; b < nb; ++b) {
        std::vector<int> d = digits(b, q);
        std::vector<int> nd;
        int last = identity_;
        if (i == 0) {
            nd.assign(d.begin() + 1, d.end());
        } else if (i < q) {
            nd = d;
            nd[i - 1] = table_[d[i - 1]][d[i]];
            nd.erase(nd.begin() + i);
        } else {
            nd.assign(d.begin(), d.end() - 1);
            last = d[q - 1];
        }
        const long nb2 = pack(nd);
        for (int v = 0; v < nv; ++v)
            vm[b * nv + v] = static_cast<int>(nb2 * nv + perms_[last][v]);
    }
    return vm;
}

CechGroupoid::CechGroupoid(const Cover* cover) : cover_(cover) {
    ensure_tuples(0);
    ensure_levels(0);
}

void CechGroupoid::ensure_tuples(int q) const {
    while (static_cast<int>(tuples_.size()) <= q) {
        const int next = static_cast<int>(tuples_.size());
        std::vector<std::vector<std::size_t>> ts;
        std::vector<SimplicialComplex> ps;
        if (next == 0) {
            for (std::size_t a = 0; a < cover_->size(); ++a) {
                ts.push_back({a});
                ps.push_back(cover_->set(a));
            }
        } else {
            for (std::size_t ti = 0; ti < tuples_[next - 1].size(); ++ti)
                for (std::size_t b = 0; b < cover_->size(); ++b) {
                    SimplicialComplex inter = pieces_[next - 1][ti].intersect(cover_->set(b));
                    if (inter.dim() < 0) continue;
                    auto t = tuples_[next - 1][ti];
                    t.push_back(b);
                    ts.push_back(std::move(t));
                    ps.push_back(std::move(inter));
                }
        }
        tuples_.push_back(std::move(ts));
        pieces_.push_back(std::move(ps));
    }
}

const std::vector<std::vector<std::size_t>>& CechGroupoid::tuples(int q) const {
    ensure_tuples(q);
    return tuples_[q];
}

std::size_t CechGroupoid::tuple_index(int q, const std::vector<std::size_t>& t) const {
    ensure_tuples(q);
    const auto& ts = tuples_[q];
    std::size_t lo = 0, hi = ts.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (ts[mid] < t) lo = mid + 1;
        else hi = mid;
    }
    if (lo == ts.size() || ts[lo] != t)
        throw std::invalid_argument("missing Cech groupoid piece");
    return lo;
}

SimplicialComplex CechGroupoid::make_level(int q) const {
    ensure_tuples(q);
    const int nv = cover_->base().ambient_vertices();
    std::vector<Simplex> tops;
    for (std::size_t p = 0; p < pieces_[q].size(); ++p)
        for (const Simplex& s : pieces_[q][p].maximal_simplices()) {
            Simplex t;
            for (int v : s) t.push_back(static_cast<int>(p * nv + v));
            tops.push_back(t);
        }
    return SimplicialComplex(static_cast<int>(pieces_[q].size() * nv), tops);
}

std::vector<int> CechGroupoid::face_vertex_map(int q, int i) const {
    ensure_tuples(q);
    const int nv = cover_->base().ambient_vertices();
    std::vector<int> vm(tuples_[q].size() * nv);
    for (std::size_t p = 0; p < tuples_[q].size(); ++p) {
        auto t = tuples_[q][p];
        t.erase(t.begin() + i);
        const std::size_t p2 = tuple_index(q - 1, t);
        for (int v = 0; v < nv; ++v)
            vm[p * nv + v] = static_cast<int>(p2 * nv + v);
    }
    return vm;
}

}  // namespace cforge
