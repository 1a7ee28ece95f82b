#ifndef PTRANK_JSON_IO_HPP
#define PTRANK_JSON_IO_HPP

#include <json.hpp>

#include <filesystem>
#include <string>
#include <variant>

#include "ptrank/bipartite.hpp"
#include "ptrank/canonical.hpp"
#include "ptrank/conjecture.hpp"
#include "ptrank/special.hpp"
#include "ptrank/tripartite.hpp"

namespace ptrank {

using Json = nlohmann::json;

using AnyMatrix = std::variant<ExactMatrix, FloatMatrix>;
using AnyBipartite = std::variant<ExactBipartite, FloatBipartite>;
using AnyState = std::variant<ExactState, FloatState>;

// Matrix format: {"rows": m, "cols": n, "scalar": "exact"|"float",
// "entries": [...]} row-major; exact entries are [re_num, re_den,
// im_num, im_den] decimal strings, float entries are [re, im] doubles.
Json matrix_to_json(const ExactMatrix& m);
Json matrix_to_json(const FloatMatrix& m);
Json matrix_to_json(const AnyMatrix& m);
AnyMatrix matrix_from_json(const Json& j, const std::string& path = "matrix");

// Bipartite format: the matrix format plus "dims": [m1, n1, m2, n2].
Json bipartite_to_json(const ExactBipartite& m);
Json bipartite_to_json(const FloatBipartite& m);
AnyBipartite bipartite_from_json(const Json& j, const std::string& path = "bipartite");
ExactBipartite exact_bipartite_from_json(const Json& j, const std::string& path = "bipartite");

// Decomposition: list of [R, S] term pairs in the matrix format.
Json decomposition_to_json(const SchmidtDecomposition& d);

Json local_equivalence_to_json(const ExactLocalEquivalence& e);
ExactLocalEquivalence local_equivalence_from_json(const Json& j,
                                                  const std::string& path = "equivalence");

Json canonical_to_json(const CanonicalForm& c);
Json verdict_to_json(const ConjectureVerdict& v);
Json bounds_to_json(const BlockRankBounds& b);
Json special_case_to_json(const SpecialCaseTag& t);

// State format: {"dims": [dA, dB, dC], "rho": <matrix>}.
Json state_to_json(const ExactState& s);
Json state_to_json(const FloatState& s);
AnyState state_from_json(const Json& j, const std::string& path = "state");

Json rank_triple_to_json(const RankTriple& t);
Json screen_verdict_to_json(const DistillabilityVerdict& v);

/// Writes content to a temp file in the target directory, then renames
/// over the final path, so no partially-written file is observable.
void atomic_write(const std::filesystem::path& path, const std::string& content);

}  // namespace ptrank

#endif  // PTRANK_JSON_IO_HPP
