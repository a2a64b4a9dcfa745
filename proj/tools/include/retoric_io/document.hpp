#pragma once

// Serialization of equivariant fan data.  A fan document is a JSON object
//
//   {
//     "rank":  n,
//     "tau":   row-major n x n integer matrix,
//     "cones": list of maximal cones, each a list of generators (length-n
//              integer vectors),
//     "twist": length-n integer vector (optional; omitted means zero)
//   }
//
// with exact integers throughout.  Only maximal cones are stored; the face
// closure is recomputed on load.

#include <cstddef>
#include <string>
#include <vector>

#include "retoric/matrix.hpp"
#include "retoric/variety.hpp"

namespace retoric::io {

inline constexpr std::size_t kDefaultMaxRank = 8;

// Ambient-rank safety cap: the value of the RETORIC_MAX_RANK environment
// variable when it is a positive integer, kDefaultMaxRank otherwise.
std::size_t max_rank_from_env();

// Parses and fully validates a fan document.  Malformed JSON, unknown keys
// and wrong shapes raise ParseError naming the offending field; ranks above
// `max_rank` raise ValidationError; data violating a construction invariant
// (involution not of order two, cones not forming a stable fan, twist not
// anti-invariant, ...) raise ValidationError naming the violated predicate.
RealToricVariety parse_document(const std::string& text, std::size_t max_rank);

// Canonical serialization: fixed key order, primitive generators, maximal
// cones only, the "twist" key present only for a non-zero class.  Parsing
// the result reproduces the variety.
std::string emit_document(const RealToricVariety& X);

// Parses a JSON list of integer vectors, each of length `width` (generator
// lists for blow-up centers).  Raises ParseError on malformed input.
std::vector<IntVec> parse_vectors(const std::string& text, std::size_t width);

// Parses a row-major JSON integer matrix with exactly `cols` columns; the
// row count is taken from the input.  Raises ParseError on malformed input.
IntMat parse_matrix_rows(const std::string& text, std::size_t cols);

}  // namespace retoric::io
