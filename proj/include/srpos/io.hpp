// JSON files for complexes, partial matrices, maps, Gram vectors and
// thickening descriptions. File references inside a document resolve
// relative to the directory of the referring file; inline objects are also
// accepted wherever a file is expected.

#ifndef SRPOS_IO_HPP
#define SRPOS_IO_HPP

#include "srpos/constructions.hpp"
#include "srpos/gram.hpp"
#include "srpos/quadratic.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace srpos::io {

/// Input error naming the file and the offending key, e.g.
/// "m.json: entries[2].v: expected a number".
class IoError : public Error
{
  public:
    using Error::Error;
};

SimplicialComplex parse_complex(const std::string& text, const std::string& origin = "<string>");
std::string complex_json(const SimplicialComplex& c);

SimplicialComplex load_complex(const std::filesystem::path& p);
void save_complex(const std::filesystem::path& p, const SimplicialComplex& c);

/// Rejects missing diagonal entries, entries off the closed 1-skeleton and
/// conflicting duplicates.
PartialMatrix load_matrix(const std::filesystem::path& p);
/// With `complex_ref` the complex is written as that path; otherwise inline.
void save_matrix(const std::filesystem::path& p, const PartialMatrix& x,
                 const std::optional<std::string>& complex_ref = std::nullopt);
std::string matrix_json(const PartialMatrix& x, const std::optional<std::string>& complex_ref = std::nullopt);

/// Throws when the vertex map misses a domain vertex or names an unknown
/// codomain vertex. Validity as a simplicial map is not checked.
SimplicialMap load_map(const std::filesystem::path& p);
void save_map(const std::filesystem::path& p, const SimplicialMap& m,
              const std::optional<std::string>& domain_ref = std::nullopt,
              const std::optional<std::string>& codomain_ref = std::nullopt);

GramVectors load_gram(const std::filesystem::path& p);
void save_gram(const std::filesystem::path& p, const GramVectors& g);
std::string gram_json(const GramVectors& g);

/// {"nodes":[...],"arcs":[{"name","head","tail","block","head_vertex","tail_vertex"}]}
/// where "block" is a complex file or an inline complex.
Thickening load_thickening(const std::filesystem::path& p);

/// Path of `target` relative to the directory that will hold `file`.
std::string relative_ref(const std::filesystem::path& target, const std::filesystem::path& file);

} // namespace srpos::io

#endif
