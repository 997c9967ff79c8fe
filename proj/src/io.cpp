#include "sedf/io.hpp"

#include <algorithm>

#include "sedf/catalog.hpp"
#include "sedf/version.hpp"

namespace sedf {

namespace {

std::vector<std::vector<int>> blocks_from_labels(const group_ptr& g,
                                                 const std::vector<std::vector<std::string>>& labels) {
  std::vector<std::vector<int>> blocks;
  for (const auto& blk : labels) {
    std::vector<int> b;
    for (const auto& lab : blk) {
      int idx = g->index_of(lab);
      if (idx < 0) throw parse_error("unknown element label: " + lab);
      b.push_back(idx);
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

} // namespace

nlohmann::json family_to_json(const block_family& fam) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : fam.blocks) {
    nlohmann::json blk = nlohmann::json::array();
    for (int x : b) blk.push_back(fam.group->label(x));
    blocks.push_back(std::move(blk));
  }
  return {{"group", fam.group->name()}, {"blocks", std::move(blocks)}};
}

block_family family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("blocks"))
    throw parse_error("family object needs group and blocks fields");
  group_ptr g = group_from_spec(j["group"].get<std::string>());
  std::vector<std::vector<std::string>> labels;
  for (const auto& blk : j["blocks"]) {
    std::vector<std::string> cur;
    for (const auto& lab : blk) cur.push_back(lab.get<std::string>());
    labels.push_back(std::move(cur));
  }
  return make_family(g, blocks_from_labels(g, labels));
}

std::string family_to_text(const block_family& fam) {
  std::string out = fam.group->name() + ": ";
  for (std::size_t b = 0; b < fam.blocks.size(); ++b) {
    if (b) out += ",";
    out += "{";
    for (std::size_t i = 0; i < fam.blocks[b].size(); ++i) {
      if (i) out += ",";
      out += fam.group->label(fam.blocks[b][i]);
    }
    out += "}";
  }
  return out;
}

block_family family_from_text(const std::string& line) {
  auto colon = line.find(':');
  if (colon == std::string::npos) throw parse_error("family line needs '<group>: <blocks>'");
  group_ptr g = group_from_spec(trim(line.substr(0, colon)));

  std::vector<std::vector<std::string>> labels;
  std::size_t pos = colon + 1;
  while (pos < line.size()) {
    auto open = line.find('{', pos);
    if (open == std::string::npos) {
      if (trim(line.substr(pos)).empty() || trim(line.substr(pos)) == ",") break;
      throw parse_error("expected '{' in family line");
    }
    auto close = line.find('}', open);
    if (close == std::string::npos) throw parse_error("unbalanced '{' in family line");
    std::vector<std::string> cur;
    std::string body = line.substr(open + 1, close - open - 1);
    // labels may themselves be tuples "(1,0)": split on commas outside parens
    std::string piece;
    int depth = 0;
    for (char c : body) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        if (!trim(piece).empty()) cur.push_back(trim(piece));
        piece.clear();
      } else {
        piece += c;
      }
    }
    if (!trim(piece).empty()) cur.push_back(trim(piece));
    if (cur.empty()) throw parse_error("empty block in family line");
    labels.push_back(std::move(cur));
    pos = close + 1;
  }
  if (labels.empty()) throw parse_error("family line has no blocks");
  return make_family(g, blocks_from_labels(g, labels));
}

nlohmann::json make_run_report(const std::string& command, double wall_ms,
                               nlohmann::json payload) {
  return {{"command", command},
          {"version", version},
          {"wall_ms", wall_ms},
          {"payload", std::move(payload)}};
}

} // namespace sedf
