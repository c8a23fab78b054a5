// Root-datum files: `key = value` lines, `#` comments, values in JSON
// syntax (arrays may span several lines).
//
//   format = 1
//   type = "A2 sc"            # preset, or:
//   roots = [[2,-1],[-1,2], ...]
//   coroots = [[1,0],[0,1], ...]
//   pairing = [[1,0],[0,1]]   # optional, <X^* basis_i, X_* basis_j>
//   simple = [0, 1]           # optional, indices into roots

#include "chs/linalg.hpp"
#include "chs/rootdata.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace chs {

namespace {

std::string strip_comment(const std::string& line) {
  bool inString = false;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"' && (i == 0 || line[i - 1] != '\\')) inString = !inString;
    if (line[i] == '#' && !inString) return line.substr(0, i);
  }
  return line;
}

int bracket_balance(const std::string& s) {
  int d = 0;
  bool inString = false;
  for (char c : s) {
    if (c == '"') inString = !inString;
    if (inString) continue;
    if (c == '[' || c == '{') ++d;
    if (c == ']' || c == '}') --d;
  }
  return d;
}

std::vector<IVec> int_matrix(const nlohmann::json& j, const std::string& key) {
  if (!j.is_array()) fail_data("'" + key + "' must be an array of integer arrays");
  std::vector<IVec> out;
  for (auto& row : j) {
    if (!row.is_array()) fail_data("'" + key + "' must be an array of integer arrays");
    IVec v;
    for (auto& e : row) {
      if (!e.is_number_integer()) fail_data("'" + key + "' has a non-integer entry");
      v.push_back(e.get<long>());
    }
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace

RootDatum parse_root_datum(const std::string& text) {
  std::map<std::string, nlohmann::json> kv;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    line = strip_comment(line);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) fail_data("line " + std::to_string(lineNo) + ": expected key = value");
    std::string key = line.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    std::string value = line.substr(eq + 1);
    while (bracket_balance(value) > 0 && std::getline(in, line)) {
      ++lineNo;
      value += " " + strip_comment(line);
    }
    if (kv.count(key)) fail_data("duplicate key '" + key + "'");
    try {
      kv[key] = nlohmann::json::parse(value);
    } catch (const nlohmann::json::exception&) {
      fail_data("line " + std::to_string(lineNo) + ": cannot parse value of '" + key + "'");
    }
  }
  static const std::set<std::string> known{"format", "type", "name", "roots", "coroots", "pairing", "simple", "rank"};
  for (auto& [k, v] : kv)
    if (!known.count(k)) fail_data("unknown key '" + k + "'");
  if (!kv.count("format") || kv["format"] != 1) fail_data("missing or unsupported 'format' (expected 1)");
  std::string name = kv.count("name") && kv["name"].is_string() ? kv["name"].get<std::string>() : "";

  if (kv.count("type")) {
    if (kv.count("roots") || kv.count("coroots")) fail_data("give either 'type' or explicit roots, not both");
    if (!kv["type"].is_string()) fail_data("'type' must be a string");
    RootDatum rd = preset_root_datum(kv["type"].get<std::string>());
    if (!name.empty()) rd.name = name;
    return rd;
  }
  if (!kv.count("roots") || !kv.count("coroots")) fail_data("explicit root datum needs 'roots' and 'coroots'");
  auto roots = int_matrix(kv["roots"], "roots");
  auto coroots = int_matrix(kv["coroots"], "coroots");
  int rank = -1;
  if (kv.count("rank")) {
    if (!kv["rank"].is_number_integer() || kv["rank"].get<int>() < 0) fail_data("'rank' must be a nonnegative integer");
    rank = kv["rank"].get<int>();
  } else if (!roots.empty()) {
    rank = int(roots[0].size());
  } else if (kv.count("pairing")) {
    rank = int(kv["pairing"].size());
  } else {
    fail_data("cannot infer the rank; add 'rank'");
  }
  for (auto& r : roots)
    if (int(r.size()) != rank) fail_data("root has the wrong number of coordinates");
  for (auto& c : coroots)
    if (int(c.size()) != rank) fail_data("coroot has the wrong number of coordinates");
  if (kv.count("pairing")) {
    auto P = int_matrix(kv["pairing"], "pairing");
    if (int(P.size()) != rank) fail_data("pairing must be rank x rank");
    QMat Pq(rank, rank);
    for (int i = 0; i < rank; ++i) {
      if (int(P[i].size()) != rank) fail_data("pairing must be rank x rank");
      for (int j = 0; j < rank; ++j) Pq(i, j) = P[i][j];
    }
    Q d = det(Pq);
    if (d != 1 && d != -1) fail_data("pairing is not perfect (determinant " + to_string(d) + ")");
    // a root with X^* coordinates r acts on X_* coordinates x as r^T P x
    for (auto& r : roots) r = to_int(row_times(to_q(r), Pq));
  }
  std::vector<int> simple;
  if (kv.count("simple")) {
    if (!kv["simple"].is_array()) fail_data("'simple' must be an array of root indices");
    for (auto& e : kv["simple"]) {
      if (!e.is_number_integer()) fail_data("'simple' must be an array of root indices");
      simple.push_back(e.get<int>());
    }
    if (simple.empty() && !roots.empty()) fail_data("'simple' is empty");
  }
  return make_root_datum(name.empty() ? "explicit" : name, rank, roots, coroots, simple);
}

RootDatum load_root_datum(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail_data("cannot open root datum file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  RootDatum rd = parse_root_datum(ss.str());
  if (rd.name == "explicit") rd.name = std::filesystem::path(path).stem().string();
  return rd;
}

} // namespace chs
