#pragma once

// JSON and CSV encodings. Complex matrices travel as {"re": [[...]], "im": [[...]]};
// states add "dims", channels add "d_in"/"d_out" and a "kraus" list.

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qel/channels.hpp"
#include "qel/entropy.hpp"
#include "qel/lab.hpp"
#include "qel/states.hpp"

namespace qel {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const Mat& m);
/// Throws Parse on missing or ragged fields.
Mat matrix_from_json(const Json& j);

Json state_to_json(const MultipartiteState& rho);
MultipartiteState state_from_json(const Json& j);

Json channel_to_json(const KrausChannel& phi);
KrausChannel channel_from_json(const Json& j);

Json markov_spec_to_json(const MarkovSpec& spec);
/// Parses and validates; InconsistentBlocks propagates for bad block shapes.
MarkovSpec markov_spec_from_json(const Json& j);

/// A finite value, or {"infinite": true}.
Json entropy_to_json(const EntropyValue& v);

Json result_to_json(const CheckResult& r);

std::string dims_label(const Dims& dims);
/// Comma-separated list of positive integers.
Dims parse_dims(const std::string& text);
std::vector<double> parse_doubles(const std::string& text);

/// Shortest decimal text that reads back to the same double; inf/nan spelled out.
std::string format_double(double x);

/// checker,dims,seed,trial,quantity:<name>...,slack,pass with the union of
/// quantity names in order of first appearance; missing cells are empty.
void write_csv(std::ostream& out, const std::vector<CheckResult>& results);

Json read_json_file(const std::string& path);

}  // namespace qel
