#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace toric {

// Vertex subset of {0..m-1} as a bitmask. One inline 64-bit word covers the
// common case; larger vertex counts spill into extra heap words.
class VertexSet {
public:
    VertexSet() = default;
    static VertexSet from(const std::vector<int>& vs);

    void add(int v);
    void erase(int v);
    bool contains(int v) const;

    bool empty() const;
    int size() const;

    bool subset_of(const VertexSet& o) const;
    VertexSet unite(const VertexSet& o) const;
    VertexSet intersect(const VertexSet& o) const;
    VertexSet with(int v) const;
    VertexSet without(int v) const;

    std::vector<int> elements() const;  // ascending
    std::string str() const;            // "{1,3}" with 1-based labels

    bool operator==(const VertexSet& o) const;
    bool operator!=(const VertexSet& o) const { return !(*this == o); }
    // Lexicographic on the ascending element lists.
    bool operator<(const VertexSet& o) const;

private:
    std::uint64_t lo_ = 0;
    std::vector<std::uint64_t> hi_;

    std::uint64_t word(std::size_t w) const;
    void set_word(std::size_t w, std::uint64_t value);
    std::size_t word_count() const { return 1 + hi_.size(); }
    void trim();
};

// Abstract simplicial complex on {0..m-1} given by its facets. A vertex lying
// in no facet is a ghost vertex. The empty set is always a face; a complex
// with no non-ghost vertices is stored with the single facet {}.
class SimplicialComplex {
public:
    SimplicialComplex() : SimplicialComplex(0, {}) {}
    SimplicialComplex(int m, const std::vector<std::vector<int>>& facets);

    int vertex_count() const { return m_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    const VertexSet& ghost_vertices() const { return ghosts_; }
    bool is_ghost(int v) const { return ghosts_.contains(v); }
    std::vector<int> nonghost_vertices() const;
    int dim() const;  // -1 for {empty set}

    bool is_face(const VertexSet& f) const;
    std::vector<VertexSet> all_faces() const;          // includes {}
    std::vector<VertexSet> faces_of_size(int k) const;

    // Inclusion-minimal non-faces, sorted lexicographically. Ghost singletons
    // are included. Complete: a minimal non-face has size <= dim + 2.
    std::vector<VertexSet> minimal_nonfaces() const;

    // (f_{-1}, f_0, ..., f_dim)
    std::vector<long> f_vector() const;
    // h-vector relative to n; requires dim == n - 1.
    std::vector<long> h_vector(int n) const;

    SimplicialComplex add_ghost_vertices(int count) const;

    bool operator==(const SimplicialComplex& o) const;

private:
    int m_;
    std::vector<VertexSet> facets_;  // sorted antichain
    VertexSet ghosts_;
};

// Enumerates every bijection of non-ghost vertices carrying facets of k1 onto
// facets of k2, in a fixed deterministic order. The visitor receives sigma as
// a vector of length k1.vertex_count() with image vertices (ghosts map to -1)
// and returns false to stop the enumeration.
void for_each_complex_isomorphism(const SimplicialComplex& k1, const SimplicialComplex& k2,
                                  const std::function<bool(const std::vector<int>&)>& visit);

std::vector<std::vector<int>> complex_isomorphisms(const SimplicialComplex& k1,
                                                   const SimplicialComplex& k2);

long binomial(long n, long k);

}  // namespace toric
