#pragma once

#include <string>

#include "json.hpp"
#include "lrcomm.hpp"

namespace lrcomm::io {

using json = nlohmann::ordered_json;

// "8,6,5,4"; the empty string is the empty sequence. Negative parts allowed.
Seq parse_seq(const std::string& text);

json to_json(const SkewTableau& t);
SkewTableau tableau_from_json(const json& j);

json to_json(const Hive& h);
Hive hive_from_json(const json& j);

json to_json(const GTPattern& p);

// [{r, op, path_edges, terminating_level}, ...]
json to_json(const SigmaTrace& trace);
json to_json(const CommuterTrace& trace);

json parse(const std::string& text);
json read_file(const std::string& path);  // "-" reads stdin
void write_file(const std::string& path, const std::string& text);  // "-" writes stdout

// Compact single-line form plus newline; what every command writes.
std::string dump(const json& j);

}  // namespace lrcomm::io
