#include "qloop/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qloop/error.hpp"

namespace qloop {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

int parse_int(const std::string& tok, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::logic_error&) {
    parse_fail(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) parse_fail(line, "expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace

LoadedLoop parse_loop(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int order = -1;
  int base = 0;
  bool base_allowed = true;
  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (order < 0) {
      if (toks[0] != "order" || toks.size() != 2) parse_fail(lineno, "expected 'order N'");
      order = parse_int(toks[1], lineno);
      if (order < 1 || order > kMaxOrder) parse_fail(lineno, "order must be in 1..64");
      continue;
    }
    if (toks[0] == "base") {
      if (!base_allowed || toks.size() != 2) parse_fail(lineno, "'base B' must directly follow the order line");
      base = parse_int(toks[1], lineno);
      if (base != 0 && base != 1) parse_fail(lineno, "base must be 0 or 1");
      base_allowed = false;
      continue;
    }
    base_allowed = false;
    if (static_cast<int>(rows.size()) == order) parse_fail(lineno, "more than " + std::to_string(order) + " rows");
    std::vector<int> row;
    for (const auto& t : toks) row.push_back(parse_int(t, lineno));
    rows.push_back(std::move(row));
  }
  if (order < 0) parse_fail(std::max(lineno, 1), "missing 'order N'");
  if (static_cast<int>(rows.size()) != order)
    parse_fail(lineno, "expected " + std::to_string(order) + " rows, found " + std::to_string(rows.size()));
  return {LoopTable::from_rows(rows, base, std::move(name)), base};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

LoadedLoop load_loop(const std::filesystem::path& path) {
  return parse_loop(read_text_file(path), path.stem().string());
}

std::string format_loop(const LoopTable& q, int base) {
  std::string out = "order " + std::to_string(q.order()) + "\nbase " + std::to_string(base) + "\n";
  for (const auto& row : q.rows(base)) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

void save_loop(const std::filesystem::path& path, const LoopTable& q, int base) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  f << format_loop(q, base);
}

std::string profile_json(const PropertyProfile& p, int base) {
  nlohmann::ordered_json j;
  for (const auto& [key, value] : p.fields(base)) {
    if (value == "true" || value == "false") {
      j[key] = value == "true";
    } else {
      nlohmann::json arr = nlohmann::json::array();
      // Sets render as "{a,b}".
      std::istringstream ss(value.substr(1, value.size() - 2));
      for (std::string tok; std::getline(ss, tok, ',');) arr.push_back(std::stoi(tok));
      j[key] = arr;
    }
  }
  return j.dump(2) + "\n";
}

}  // namespace qloop
