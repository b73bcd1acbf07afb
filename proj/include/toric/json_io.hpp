#pragma once

#include <string>
#include <variant>

#include "toric/bouquet.hpp"
#include "toric/fiber.hpp"
#include "toric/graver.hpp"
#include "toric/walks.hpp"

#include <json.hpp>

namespace toric {

using Json = nlohmann::ordered_json;

using ParsedHypergraph = std::variant<Hypergraph, Multihypergraph>;

/// Hypergraph JSON:
///   {"n": <int>, "edges": [[<int>,...],...],
///    "labels": {"vertices": [...], "edges": [...]} (optional),
///    "multiplicity": [<int>,...] (optional, multihypergraph)}
/// Parsing canonicalizes; serialization of a canonical object round-trips
/// bit-exactly. Errors carry the offending field.
ParsedHypergraph parse_hypergraph(const std::string& bytes);
Hypergraph parse_simple_hypergraph(const std::string& bytes);

Json hypergraph_to_json(const Hypergraph& h);
Json multihypergraph_to_json(const Multihypergraph& mh);

/// Plain-text importer for hand-written fixtures: first nonempty line is
/// the vertex count, every following nonempty line one edge as whitespace
/// separated vertex indices. '#' starts a comment.
Hypergraph parse_text_hypergraph(const std::string& bytes);

/// WalkVector JSON: {"hypergraph": <inline object>, "coeffs": [<int>,...]}
WalkVector parse_walk_vector(const std::string& bytes);
Json walk_vector_to_json(const WalkVector& u, bool include_host = true);

/// Bicoloring JSON: {"hypergraph": ..., "blue": [edge indices, repeats
/// allowed], "red": [...]}
Bicoloring parse_bicoloring(const std::string& bytes);
Json bicoloring_to_json(const Bicoloring& c, bool include_host = true);

/// Binomial text form, canonical inside each monomial:
///   t_{e0}*t_{e3}^2 - t_{e1}*t_{e2}
std::string binomial_to_string(const Binomial& b);
Binomial parse_binomial(const HostPtr& host, const std::string& text);

Json certificate_to_json(const PartitionCertificate& c);
Json fiber_point_to_json(const FiberPoint& p);

} // namespace toric
