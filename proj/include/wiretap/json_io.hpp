#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wiretap/bounds.hpp"
#include "wiretap/finite_field.hpp"
#include "wiretap/network.hpp"
#include "wiretap/secure_code.hpp"

namespace wiretap {

using nlohmann::json;

/// Parse errors surface as ParseError; unknown wiretap edges as UnknownEdgeInWiretapSet.
WiretapNetwork network_from_json(const json& j);
json to_json(const WiretapNetwork& net);

json to_json(const FieldMatrix& m);
FieldMatrix field_matrix_from_json(const json& j);

json to_json(const CodeSpec& code);
CodeSpec code_from_json(const json& j);

json codewords_to_json(const CodeSpec& code, const std::vector<FieldVector>& codewords);
std::vector<FieldVector> codewords_from_json(const CodeSpec& code, const json& j);

json to_json(const WiretapNetwork& net, const MessageBoundReport& report);
json to_json(const WiretapNetwork& net, const KeyBoundReport& report);

std::string tau_string(const ExtRational& tau);
std::string method_string(Method m);

json read_json_file(const std::string& path);

}  // namespace wiretap
