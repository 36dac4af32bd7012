#include "toric/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace toric {

std::uint64_t VertexSet::word(std::size_t w) const {
    if (w == 0)
        return lo_;
    return w - 1 < hi_.size() ? hi_[w - 1] : 0;
}

void VertexSet::set_word(std::size_t w, std::uint64_t value) {
    if (w == 0) {
        lo_ = value;
        return;
    }
    if (w - 1 >= hi_.size())
        hi_.resize(w, 0);
    hi_[w - 1] = value;
}

void VertexSet::trim() {
    while (!hi_.empty() && hi_.back() == 0)
        hi_.pop_back();
}

VertexSet VertexSet::from(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs)
        s.add(v);
    return s;
}

void VertexSet::add(int v) {
    if (v < 0)
        throw std::invalid_argument("negative vertex");
    set_word(v / 64, word(v / 64) | (std::uint64_t{1} << (v % 64)));
}

void VertexSet::erase(int v) {
    set_word(v / 64, word(v / 64) & ~(std::uint64_t{1} << (v % 64)));
    trim();
}

bool VertexSet::contains(int v) const {
    return v >= 0 && (word(v / 64) >> (v % 64)) & 1;
}

bool VertexSet::empty() const { return lo_ == 0 && hi_.empty(); }

int VertexSet::size() const {
    int n = std::popcount(lo_);
    for (std::uint64_t w : hi_)
        n += std::popcount(w);
    return n;
}

bool VertexSet::subset_of(const VertexSet& o) const {
    for (std::size_t w = 0; w < word_count(); ++w)
        if (word(w) & ~o.word(w))
            return false;
    return true;
}

VertexSet VertexSet::unite(const VertexSet& o) const {
    VertexSet s;
    const std::size_t wc = std::max(word_count(), o.word_count());
    for (std::size_t w = 0; w < wc; ++w)
        s.set_word(w, word(w) | o.word(w));
    s.trim();
    return s;
}

VertexSet VertexSet::intersect(const VertexSet& o) const {
    VertexSet s;
    const std::size_t wc = std::max(word_count(), o.word_count());
    for (std::size_t w = 0; w < wc; ++w)
        s.set_word(w, word(w) & o.word(w));
    s.trim();
    return s;
}

VertexSet VertexSet::with(int v) const {
    VertexSet s(*this);
    s.add(v);
    return s;
}

VertexSet VertexSet::without(int v) const {
    VertexSet s(*this);
    s.erase(v);
    return s;
}

std::vector<int> VertexSet::elements() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < word_count(); ++w) {
        std::uint64_t bits = word(w);
        while (bits) {
            const int b = std::countr_zero(bits);
            out.push_back(static_cast<int>(w) * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

std::string VertexSet::str() const {
    std::string s = "{";
    bool first = true;
    for (int v : elements()) {
        if (!first)
            s += ',';
        s += std::to_string(v + 1);
        first = false;
    }
    return s + "}";
}

bool VertexSet::operator==(const VertexSet& o) const {
    return lo_ == o.lo_ && hi_ == o.hi_;
}

bool VertexSet::operator<(const VertexSet& o) const {
    const std::vector<int> a = elements(), b = o.elements();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SimplicialComplex::SimplicialComplex(int m, const std::vector<std::vector<int>>& facets) : m_(m) {
    if (m < 0)
        throw std::invalid_argument("negative vertex count");
    std::set<VertexSet> fs;
    for (const auto& f : facets) {
        VertexSet s = VertexSet::from(f);
        for (int v : f)
            if (v < 0 || v >= m)
                throw std::invalid_argument("facet vertex out of range");
        fs.insert(s);
    }
    if (fs.empty())
        fs.insert(VertexSet());
    for (const VertexSet& a : fs)
        for (const VertexSet& b : fs)
            if (a != b && a.subset_of(b))
                throw std::invalid_argument("facet " + a.str() + " is contained in facet " +
                                            b.str());
    facets_.assign(fs.begin(), fs.end());
    std::sort(facets_.begin(), facets_.end());

    VertexSet covered;
    for (const VertexSet& f : facets_)
        covered = covered.unite(f);
    for (int v = 0; v < m_; ++v)
        if (!covered.contains(v))
            ghosts_.add(v);
}

std::vector<int> SimplicialComplex::nonghost_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < m_; ++v)
        if (!ghosts_.contains(v))
            out.push_back(v);
    return out;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const VertexSet& f : facets_)
        d = std::max(d, f.size() - 1);
    return d;
}

bool SimplicialComplex::is_face(const VertexSet& f) const {
    if (f.empty())
        return true;
    for (const VertexSet& facet : facets_)
        if (f.subset_of(facet))
            return true;
    return false;
}

std::vector<VertexSet> SimplicialComplex::all_faces() const {
    std::set<VertexSet> faces;
    faces.insert(VertexSet());
    for (const VertexSet& f : facets_) {
        const std::vector<int> elems = f.elements();
        const std::size_t k = elems.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
            VertexSet s;
            for (std::size_t i = 0; i < k; ++i)
                if ((mask >> i) & 1)
                    s.add(elems[i]);
            faces.insert(s);
        }
    }
    return {faces.begin(), faces.end()};
}

std::vector<VertexSet> SimplicialComplex::faces_of_size(int k) const {
    std::vector<VertexSet> out;
    for (const VertexSet& f : all_faces())
        if (f.size() == k)
            out.push_back(f);
    return out;
}

std::vector<VertexSet> SimplicialComplex::minimal_nonfaces() const {
    std::vector<VertexSet> out;
    for (int v : ghosts_.elements())
        out.push_back(VertexSet::from({v}));

    const std::vector<int> verts = nonghost_vertices();
    const int maxsize = dim() + 2;
    for (int k = 2; k <= maxsize && k <= static_cast<int>(verts.size()); ++k) {
        std::vector<int> sel(k);
        for (int i = 0; i < k; ++i)
            sel[i] = i;
        while (true) {
            VertexSet cand;
            for (int i : sel)
                cand.add(verts[i]);
            if (!is_face(cand)) {
                bool minimal = true;
                for (int i : sel) {
                    if (!is_face(cand.without(verts[i]))) {
                        minimal = false;
                        break;
                    }
                }
                if (minimal)
                    out.push_back(cand);
            }
            int i = k - 1;
            while (i >= 0 && sel[i] == static_cast<int>(verts.size()) - k + i)
                --i;
            if (i < 0)
                break;
            ++sel[i];
            for (int j = i + 1; j < k; ++j)
                sel[j] = sel[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> SimplicialComplex::f_vector() const {
    std::vector<long> f(dim() + 2, 0);
    for (const VertexSet& face : all_faces())
        ++f[face.size()];
    return f;
}

long binomial(long n, long k) {
    if (k < 0 || k > n)
        return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::vector<long> SimplicialComplex::h_vector(int n) const {
    if (dim() != n - 1)
        throw std::invalid_argument("h-vector dimension mismatch: dim K = " +
                                    std::to_string(dim()) + ", n = " + std::to_string(n));
    const std::vector<long> f = f_vector();
    std::vector<long> h(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
        long sum = 0;
        for (int j = 0; j <= i; ++j) {
            const long term = binomial(n - j, i - j) * f[j];  // f[j] = f_{j-1}
            sum += ((i - j) % 2 == 0) ? term : -term;
        }
        h[i] = sum;
    }
    return h;
}

SimplicialComplex SimplicialComplex::add_ghost_vertices(int count) const {
    if (count < 0)
        throw std::invalid_argument("negative ghost count");
    std::vector<std::vector<int>> fs;
    for (const VertexSet& f : facets_)
        fs.push_back(f.elements());
    return SimplicialComplex(m_ + count, fs);
}

bool SimplicialComplex::operator==(const SimplicialComplex& o) const {
    return m_ == o.m_ && facets_ == o.facets_;
}

namespace {

struct IsoSearch {
    const SimplicialComplex& k1;
    const SimplicialComplex& k2;
    const std::function<bool(const std::vector<int>&)>& visit;

    std::vector<int> order;        // k1 vertices in assignment order
    std::vector<int> sigma;        // image per k1 vertex, -1 unassigned/ghost
    std::vector<bool> used;        // k2 vertices already taken
    std::set<VertexSet> facets2;
    bool stopped = false;

    // fingerprint: (facet degree, sorted neighbour degrees)
    using Fp = std::pair<int, std::vector<int>>;
    std::vector<Fp> fp1, fp2;

    static std::vector<Fp> fingerprints(const SimplicialComplex& k) {
        const int m = k.vertex_count();
        std::vector<int> degree(m, 0);
        std::vector<VertexSet> nbrs(m);
        for (const VertexSet& f : k.facets()) {
            for (int v : f.elements()) {
                ++degree[v];
                nbrs[v] = nbrs[v].unite(f);
            }
        }
        std::vector<Fp> fp(m);
        for (int v = 0; v < m; ++v) {
            std::vector<int> nd;
            for (int u : nbrs[v].elements())
                if (u != v)
                    nd.push_back(degree[u]);
            std::sort(nd.begin(), nd.end());
            fp[v] = {degree[v], std::move(nd)};
        }
        return fp;
    }

    bool partial_ok(int v) const {
        // every facet through v must map into a face of k2 so far
        for (const VertexSet& f : k1.facets()) {
            if (!f.contains(v))
                continue;
            VertexSet img;
            bool complete = true;
            for (int u : f.elements()) {
                if (sigma[u] < 0) {
                    complete = false;
                    continue;
                }
                img.add(sigma[u]);
            }
            if (complete) {
                if (!facets2.count(img))
                    return false;
            } else if (!k2.is_face(img)) {
                return false;
            }
        }
        return true;
    }

    void recurse(std::size_t depth) {
        if (stopped)
            return;
        if (depth == order.size()) {
            if (!visit(sigma))
                stopped = true;
            return;
        }
        const int v = order[depth];
        for (int w : k2.nonghost_vertices()) {
            if (used[w] || fp1[v] != fp2[w])
                continue;
            sigma[v] = w;
            used[w] = true;
            if (partial_ok(v))
                recurse(depth + 1);
            used[w] = false;
            sigma[v] = -1;
            if (stopped)
                return;
        }
    }
};

}  // namespace

void for_each_complex_isomorphism(const SimplicialComplex& k1, const SimplicialComplex& k2,
                                  const std::function<bool(const std::vector<int>&)>& visit) {
    if (k1.nonghost_vertices().size() != k2.nonghost_vertices().size())
        return;
    if (k1.facets().size() != k2.facets().size())
        return;
    if (k1.f_vector() != k2.f_vector())
        return;

    IsoSearch search{k1, k2, visit, {}, {}, {}, {}, false, {}, {}};
    search.sigma.assign(k1.vertex_count(), -1);
    search.used.assign(k2.vertex_count(), false);
    search.facets2.insert(k2.facets().begin(), k2.facets().end());
    search.fp1 = IsoSearch::fingerprints(k1);
    search.fp2 = IsoSearch::fingerprints(k2);

    search.order = k1.nonghost_vertices();
    std::stable_sort(search.order.begin(), search.order.end(),
                     [&](int a, int b) { return search.fp1[a].first < search.fp1[b].first; });
    search.recurse(0);
}

std::vector<std::vector<int>> complex_isomorphisms(const SimplicialComplex& k1,
                                                   const SimplicialComplex& k2) {
    std::vector<std::vector<int>> out;
    for_each_complex_isomorphism(k1, k2, [&](const std::vector<int>& sigma) {
        out.push_back(sigma);
        return true;
    });
    return out;
}

}  // namespace toric
