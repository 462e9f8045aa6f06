#include "chanorder/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chanorder {

namespace {

void dump_value(const Json& j, std::string& out);

void dump_double(double v, std::string& out) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos &&
      s.find_first_of("ni") == std::string::npos) {
    s += ".0";  // keep the float/integer distinction across round trips
  }
  out += s;
}

void dump_string(const std::string& s, std::string& out) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void dump_value(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::null:
      out += "null";
      break;
    case Json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case Json::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      break;
    case Json::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      break;
    case Json::value_t::number_float:
      dump_double(j.get<double>(), out);
      break;
    case Json::value_t::string:
      dump_string(j.get<std::string>(), out);
      break;
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        dump_value(v, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.cbegin(); it != j.cend(); ++it) {  // keys already sorted
        if (!first) out += ',';
        first = false;
        dump_string(it.key(), out);
        out += ':';
        dump_value(it.value(), out);
      }
      out += '}';
      break;
    }
    default:
      throw std::invalid_argument("canonical_dump: unsupported JSON value type");
  }
}

std::vector<std::size_t> parse_tuple(const std::string& s, std::size_t expected_len) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const long v = std::stol(item);
    if (v < 1) throw std::invalid_argument("tuple symbols are 1-based");
    out.push_back(static_cast<std::size_t>(v) - 1);
  }
  if (out.size() != expected_len) {
    throw std::invalid_argument("tuple length does not match the blocklength");
  }
  return out;
}

std::string format_tuple(const std::vector<std::size_t>& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[i] + 1);
  }
  return out;
}

}  // namespace

std::string canonical_dump(const Json& j) {
  std::string out;
  dump_value(j, out);
  out += '\n';
  return out;
}

Json symbol_to_json(const Symbol& s) {
  switch (s.kind()) {
    case Symbol::Kind::kAtom:
      return Json(s.name());
    case Symbol::Kind::kLeft:
      return Json{{"side", "L"}, {"label", symbol_to_json(s.inner())}};
    case Symbol::Kind::kRight:
      return Json{{"side", "R"}, {"label", symbol_to_json(s.inner())}};
    case Symbol::Kind::kPair:
      return Json::array({symbol_to_json(s.first()), symbol_to_json(s.second())});
  }
  throw std::logic_error("symbol_to_json: unreachable");
}

Symbol symbol_from_json(const Json& j) {
  if (j.is_string()) return Symbol::atom(j.get<std::string>());
  if (j.is_array()) {
    if (j.size() != 2) throw std::invalid_argument("symbol: pair must have two components");
    return Symbol::pair(symbol_from_json(j[0]), symbol_from_json(j[1]));
  }
  if (j.is_object()) {
    const std::string side = j.at("side").get<std::string>();
    Symbol inner = symbol_from_json(j.at("label"));
    if (side == "L") return Symbol::left(std::move(inner));
    if (side == "R") return Symbol::right(std::move(inner));
    throw std::invalid_argument("symbol: side must be \"L\" or \"R\"");
  }
  throw std::invalid_argument("symbol: expected string, pair or tagged object");
}

Json channel_to_json(const Channel& w) {
  Json labels = Json::array();
  for (const Symbol& s : w.output_labels()) labels.push_back(symbol_to_json(s));
  Json rows = Json::array();
  for (const Distribution& r : w.rows()) rows.push_back(r.probs());
  return Json{{"input_size", w.input_size()}, {"output_labels", labels}, {"rows", rows}};
}

Channel channel_from_json(const Json& j) {
  const auto input_size = j.at("input_size").get<std::size_t>();
  std::vector<Symbol> labels;
  for (const auto& l : j.at("output_labels")) labels.push_back(symbol_from_json(l));
  const auto rows = j.at("rows").get<std::vector<std::vector<double>>>();
  if (rows.size() != input_size) {
    throw std::invalid_argument("channel: input_size does not match the number of rows");
  }
  return Channel::validate(rows, std::move(labels));
}

Json characteristic_to_json(const Characteristic& c) {
  Json labels = Json::array();
  for (const Symbol& s : c.output_labels) labels.push_back(symbol_to_json(s));
  Json points = Json::array();
  for (const Distribution& p : c.points) points.push_back(p.probs());
  return Json{{"output_labels", labels}, {"points", points}};
}

Characteristic characteristic_from_json(const Json& j) {
  Characteristic c;
  for (const auto& l : j.at("output_labels")) c.output_labels.push_back(symbol_from_json(l));
  for (const auto& p : j.at("points")) c.points.emplace_back(p.get<std::vector<double>>());
  return c;
}

Json degradedness_to_json(const DegradednessResult& r) {
  Json out{{"degraded", r.degraded}};
  if (r.intertwiner) out["intertwiner"] = channel_to_json(*r.intertwiner);
  if (r.refutation) {
    out["refutation"] = Json{{"row_index", r.refutation->row_index + 1},
                             {"payoff", r.refutation->payoff},
                             {"gap", r.refutation->gap}};
  }
  return out;
}

Json membership_to_json(const MembershipResult& m) {
  Json out{{"inside", m.inside}};
  if (m.inside) {
    out["weights"] = m.weights;
  } else if (m.separator) {
    out["separator"] = Json{{"functional", m.separator->functional}, {"gap", m.separator->gap}};
  }
  return out;
}

Json decoder_to_json(const Decoder& d) {
  d.check();
  Json table = Json::object();
  std::vector<std::size_t> t(d.blocklength, 0);
  for (std::size_t code = 0; code < d.table.size(); ++code) {
    table[format_tuple(t)] = d.table[code] + 1;
    for (std::size_t i = d.blocklength; i-- > 0;) {
      if (++t[i] < d.output_size) break;
      t[i] = 0;
    }
  }
  return Json{{"n", d.blocklength}, {"M", d.message_count}, {"table", table}};
}

Decoder decoder_from_json(const Json& j) {
  Decoder d;
  d.blocklength = j.at("n").get<std::size_t>();
  d.message_count = j.at("M").get<std::size_t>();
  const Json& table = j.at("table");
  if (!table.is_object() || table.empty()) {
    throw std::invalid_argument("decoder: table must be a non-empty object");
  }
  // |Y| is determined by the largest symbol mentioned in the keys; check()
  // then verifies that the key set is exactly all |Y|^n tuples.
  std::size_t output_size = 0;
  for (auto it = table.cbegin(); it != table.cend(); ++it) {
    for (std::size_t digit : parse_tuple(it.key(), d.blocklength)) {
      output_size = std::max(output_size, digit + 1);
    }
  }
  d.output_size = output_size;
  std::size_t count = 1;
  for (std::size_t i = 0; i < d.blocklength; ++i) count *= output_size;
  if (table.size() != count) {
    throw std::invalid_argument("decoder: table must cover all |Y|^n tuples exactly once");
  }
  d.table.assign(count, 0);
  std::vector<bool> seen(count, false);
  for (auto it = table.cbegin(); it != table.cend(); ++it) {
    const auto tuple = parse_tuple(it.key(), d.blocklength);
    std::size_t code = 0;
    for (std::size_t digit : tuple) code = code * output_size + digit;
    if (seen[code]) throw std::invalid_argument("decoder: duplicate tuple key");
    seen[code] = true;
    const long id = it.value().get<long>();
    if (id < 1 || static_cast<std::size_t>(id) > d.message_count) {
      throw std::invalid_argument("decoder: message id out of range");
    }
    d.table[code] = static_cast<std::size_t>(id) - 1;
  }
  d.check();
  return d;
}

Json encoder_to_json(const Encoder& e) {
  e.check();
  Json table = Json::object();
  for (std::size_t m = 0; m < e.message_count; ++m) {
    table[std::to_string(m + 1)] = format_tuple(e.table[m]);
  }
  return Json{{"n", e.blocklength}, {"M", e.message_count}, {"table", table}};
}

Encoder encoder_from_json(const Json& j) {
  Encoder e;
  e.blocklength = j.at("n").get<std::size_t>();
  e.message_count = j.at("M").get<std::size_t>();
  const Json& table = j.at("table");
  e.table.assign(e.message_count, {});
  std::vector<bool> seen(e.message_count, false);
  if (!table.is_object() || table.size() != e.message_count) {
    throw std::invalid_argument("encoder: table must have exactly M entries");
  }
  for (auto it = table.cbegin(); it != table.cend(); ++it) {
    const long id = std::stol(it.key());
    if (id < 1 || static_cast<std::size_t>(id) > e.message_count) {
      throw std::invalid_argument("encoder: message id out of range");
    }
    if (seen[id - 1]) throw std::invalid_argument("encoder: duplicate message id");
    seen[id - 1] = true;
    e.table[id - 1] = parse_tuple(it.value().get<std::string>(), e.blocklength);
  }
  e.check();
  return e;
}

Json game_to_json(const RandomizedGame& g) {
  return Json{{"z_size", g.z_size}, {"payoff", g.payoff}, {"channel", channel_to_json(g.randomizer)}};
}

RandomizedGame game_from_json(const Json& j) {
  return RandomizedGame(j.at("z_size").get<std::size_t>(),
                        j.at("payoff").get<std::vector<std::vector<double>>>(),
                        channel_from_json(j.at("channel")));
}

Json bss_report_to_json(const BssReport& r) {
  Json out{{"degraded", r.degraded}, {"passed", r.passed}};
  Json trials = Json::array();
  for (const BssTrial& t : r.trials) {
    trials.push_back(Json{{"z_size", t.z_size},
                          {"payoff", t.payoff},
                          {"opt_payoff_lhs", t.opt_payoff_lhs},
                          {"opt_payoff_rhs", t.opt_payoff_rhs},
                          {"region_included", t.region_included},
                          {"worst_residual", t.worst_residual},
                          {"payoff_ok", t.payoff_ok}});
  }
  out["trials"] = trials;
  if (r.witness) {
    out["witness"] = Json{{"row_index", r.witness->row_index + 1},
                          {"payoff", r.witness->payoff},
                          {"gap", r.witness->gap},
                          {"opt_payoff_lhs", r.witness->opt_payoff_lhs},
                          {"opt_payoff_rhs", r.witness->opt_payoff_rhs}};
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

void write_canonical_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << canonical_dump(j);
}

}  // namespace chanorder
