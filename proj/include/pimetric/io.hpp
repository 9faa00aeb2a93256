#ifndef PIMETRIC_IO_HPP
#define PIMETRIC_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pimetric/autgroup.hpp"
#include "pimetric/bigint.hpp"
#include "pimetric/oracle.hpp"

namespace pimetric
{

/**
 * @file io.hpp
 * @brief Text formats.
 *
 * Vector:      element indices comma separated inside a block, blocks
 *              separated by '|', e.g. "1,0|1" for pi = (2,1).
 * Header:      "q=<q> pi=<k_1>,<k_2>,..." opens every file.
 * Map file:    header, then "<vector> -> <vector>" per input vector in
 *              enumeration order.
 * Structured:  header, "sigma: [j_1,...,j_m]" (1-based images), then
 *              "T<i>: [t_0,...]" per block in block enumeration order.
 * Linear:      header, "sigma: [...]", then "A<i>: [[row],[row],...]".
 * Generator:   header, then one vector per line.
 *
 * Blank lines and lines starting with '#' are ignored. A line "---"
 * separates documents in a stream. All parse failures throw `ParseError`.
 */

std::string format_vector(BlockVector const &v);
BlockVector parse_vector(Space const &space, std::string_view text);

std::string format_header(Space const &space);
Space parse_header(std::string_view line);

void write_map(std::ostream &out, ExplicitMap const &f);
ExplicitMap read_map(std::istream &in);

void write_structured(std::ostream &out, StructuredSymmetry const &s);
void write_linear(std::ostream &out, LinearBlockMap const &l);

using SymmetryDocument = std::variant<StructuredSymmetry, LinearBlockMap>;

/// Structured or linear document, told apart by its T<i> / A<i> keys.
SymmetryDocument read_symmetry(std::istream &in);
SymmetryDocument parse_symmetry(std::string_view text);

/// Splits a stream on "---" lines into document texts.
std::vector<std::string> split_documents(std::istream &in);

GeneratorMatrix read_generator(std::istream &in);

/// Human-readable report with the closed-form comparison.
void write_report(std::ostream &out, EnumerationReport const &report, BigInt const &formula);
/// Same content as a JSON object.
std::string report_json(EnumerationReport const &report, BigInt const &formula);

} // namespace pimetric

#endif // PIMETRIC_IO_HPP
