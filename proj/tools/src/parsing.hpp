#ifndef PADELAB_TOOLS_PARSING_HPP
#define PADELAB_TOOLS_PARSING_HPP

#include <string>
#include <vector>

#include "padelab/indices.hpp"
#include "padelab/sample_set.hpp"
#include "padelab/scalar.hpp"

namespace padelab::cli {

/// Comma-separated scalar list, constant term first: "1,0,-2/3,1e-2".
std::vector<GaussianRational> parse_scalar_list(const std::string& text);

/// Descriptor strings:
///   disk:CENTER:RADIUS[:DENSITY]
///   circle:CENTER:RADIUS:COUNT
///   annulus:CENTER:RIN:ROUT[:DENSITY]
///   points:z1,z2,...
/// CENTER and the z_i are scalar literals (no commas or colons inside).
Descriptor parse_descriptor(const std::string& text, int default_density);

/// Index-family rules: "diagonal", "row:Q", "column:P",
/// or "list:p/q,p/q,..." e.g. "list:1/1,2/1,3/2".
IndexFamily parse_index_rule(const std::string& text);

} // namespace padelab::cli

#endif
