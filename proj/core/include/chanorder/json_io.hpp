#ifndef CHANORDER_JSON_IO_HPP
#define CHANORDER_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "chanorder/channel.hpp"
#include "chanorder/coding.hpp"
#include "chanorder/games.hpp"
#include "chanorder/ordering.hpp"

namespace chanorder {

using Json = nlohmann::json;

/// Canonical serialization: keys sorted, floats rendered with 17
/// significant digits (always carrying a decimal marker), LF endings, and a
/// trailing newline. Canonical output re-parses to an equal value and
/// re-serializes byte-identically.
std::string canonical_dump(const Json& j);

Json symbol_to_json(const Symbol& s);
Symbol symbol_from_json(const Json& j);

Json channel_to_json(const Channel& w);
Channel channel_from_json(const Json& j);

Json characteristic_to_json(const Characteristic& c);
Characteristic characteristic_from_json(const Json& j);

Json degradedness_to_json(const DegradednessResult& r);

Json membership_to_json(const MembershipResult& m);

/// Decoder table keys are comma-joined 1-based output symbols; message ids
/// are 1-based. The encoder schema is the mirror image: message id keys map
/// to comma-joined input tuples.
Json decoder_to_json(const Decoder& d);
Decoder decoder_from_json(const Json& j);

Json encoder_to_json(const Encoder& e);
Encoder encoder_from_json(const Json& j);

Json game_to_json(const RandomizedGame& g);
RandomizedGame game_from_json(const Json& j);

Json bss_report_to_json(const BssReport& r);

Json read_json_file(const std::string& path);
void write_canonical_file(const std::string& path, const Json& j);

}  // namespace chanorder

#endif  // CHANORDER_JSON_IO_HPP
