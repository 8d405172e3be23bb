// Simplicial complexes stored by facets, faces as vertex bitmasks, and
// simplicial maps between complexes.

#ifndef SRPOS_COMPLEX_HPP
#define SRPOS_COMPLEX_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace srpos {

/// Raised when an operation's precondition is violated by its input.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Largest ground set a complex may have; faces are 64-bit masks.
inline constexpr int kMaxVertices = 64;

/// A vertex subset, indexed relative to one complex's vertex order.
struct Face
{
    std::uint64_t bits = 0;

    static Face single(int v) { return Face{std::uint64_t{1} << v}; }
    static Face of(std::initializer_list<int> vs)
    {
        Face f;
        for (int v : vs)
            f.bits |= std::uint64_t{1} << v;
        return f;
    }

    int size() const { return std::popcount(bits); }
    int dimension() const { return size() - 1; }
    bool empty() const { return bits == 0; }
    bool has(int v) const { return (bits >> v) & 1u; }
    bool subset_of(Face other) const { return (bits & ~other.bits) == 0; }

    Face with(int v) const { return Face{bits | (std::uint64_t{1} << v)}; }
    Face without(int v) const { return Face{bits & ~(std::uint64_t{1} << v)}; }
    Face operator|(Face o) const { return Face{bits | o.bits}; }
    Face operator&(Face o) const { return Face{bits & o.bits}; }

    /// Member vertex indices in increasing order.
    std::vector<int> members() const;

    friend bool operator==(Face, Face) = default;
    friend auto operator<=>(Face a, Face b)
    {
        if (auto c = a.size() <=> b.size(); c != 0)
            return c;
        return a.bits <=> b.bits;
    }
};

/// Finite abstract simplicial complex on string-named vertices.
///
/// The face family is represented by its facets. Every vertex of the ground
/// set is a face. Instances are immutable and cheap to copy.
class SimplicialComplex
{
  public:
    /// The complex with no vertices.
    SimplicialComplex();

    /// Downward closure of `faces` together with all singletons of
    /// `vertices`. Vertex order is `vertices` followed by any new names in
    /// order of first appearance in `faces`.
    static SimplicialComplex from_faces(const std::vector<std::vector<std::string>>& faces,
                                        const std::vector<std::string>& vertices = {});

    /// Builds from facet masks over a given vertex order. Masks need not be
    /// maximal; uncovered vertices become isolated.
    static SimplicialComplex from_masks(std::vector<std::string> vertices, const std::vector<Face>& faces);

    int num_vertices() const;
    const std::vector<std::string>& vertices() const;
    const std::string& name(int v) const;
    std::optional<int> find(std::string_view name) const;
    int index(std::string_view name) const;
    Face all() const;

    const std::vector<Face>& facets() const;
    bool contains(Face f) const;
    bool contains(const std::vector<std::string>& names) const;
    bool has_edge(int i, int j) const;
    bool is_facet(Face f) const;
    int dimension() const;

    /// All nonempty faces, ordered by size then mask.
    std::vector<Face> faces() const;
    /// Strict 1-skeleton as index pairs (i < j), lexicographic.
    const std::vector<std::pair<int, int>>& edges() const;
    /// Strict 2-skeleton.
    std::vector<Face> triangles() const;
    /// Closed 1-skeleton: the n diagonal pairs (i, i), then `edges()`.
    const std::vector<std::pair<int, int>>& closed_skeleton() const;
    /// Position of {i, j} in `closed_skeleton()`, or nullopt off the skeleton.
    std::optional<std::size_t> pair_index(int i, int j) const;
    std::optional<std::size_t> edge_index(int i, int j) const;
    std::vector<int> neighbors(int v) const;

    Face face_of(const std::vector<std::string>& names) const;
    std::vector<std::string> names_of(Face f) const;
    std::vector<std::vector<std::string>> facet_names() const;
    std::string to_string() const;

    /// Same vertex names and same faces, independent of vertex order.
    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

  private:
    struct Data;
    static std::shared_ptr<const Data> build(std::vector<std::string> names, std::vector<Face> faces);
    explicit SimplicialComplex(std::shared_ptr<const Data> data);
    std::shared_ptr<const Data> d_;
};

/// A vertex map between complexes. Validity (faces to faces) is reported by
/// `validate_map`, not enforced at construction.
class SimplicialMap
{
  public:
    SimplicialMap(SimplicialComplex domain, SimplicialComplex codomain, std::vector<int> vertex_map);

    /// Throws if some domain vertex is unmapped or a name is unknown.
    static SimplicialMap from_names(SimplicialComplex domain, SimplicialComplex codomain,
                                    const std::map<std::string, std::string>& vertex_map);
    static SimplicialMap identity(const SimplicialComplex& c);
    /// Inclusion of `sub` into `super` by vertex name.
    static SimplicialMap inclusion(const SimplicialComplex& sub, const SimplicialComplex& super);

    const SimplicialComplex& domain() const { return domain_; }
    const SimplicialComplex& codomain() const { return codomain_; }
    const std::vector<int>& vertex_map() const { return map_; }
    int operator()(int v) const { return map_[v]; }

    Face image(Face f) const;
    std::vector<int> fiber(int codomain_vertex) const;
    std::map<std::string, std::string> named() const;

  private:
    SimplicialComplex domain_;
    SimplicialComplex codomain_;
    std::vector<int> map_;
};

struct MapValidity
{
    bool valid = false;
    bool surjective_on_faces = false;
};

MapValidity validate_map(const SimplicialMap& m);

/// Quiver: arcs carry a name, a head node and a tail node. Loops and
/// parallel arcs are allowed.
struct Arc
{
    std::string name;
    std::string head;
    std::string tail;
};

struct DirectedGraph
{
    std::vector<std::string> nodes;
    std::vector<Arc> arcs;
};

} // namespace srpos

#endif
