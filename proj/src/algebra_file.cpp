#include "artin/algebra_file.hpp"

#include "artin/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace artin {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool valid_name(const std::string &v) {
  if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
    return false;
  return std::all_of(v.begin(), v.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

} // namespace

AlgebraFile parse_algebra_file(std::string_view text) {
  AlgebraFile out;
  bool have_vars = false, in_gens = false;
  std::vector<std::pair<std::string, int>> gen_texts;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty())
      continue;
    std::string body;
    if (line.rfind("vars:", 0) == 0) {
      if (have_vars)
        throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": duplicate vars line");
      have_vars = true;
      in_gens = false;
      std::istringstream names(line.substr(5));
      std::string v;
      while (names >> v) {
        if (!valid_name(v))
          throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": bad variable name '" + v + "'");
        if (std::find(out.vars.begin(), out.vars.end(), v) != out.vars.end())
          throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": repeated variable '" + v + "'");
        out.vars.push_back(v);
      }
      continue;
    }
    if (line.rfind("gens:", 0) == 0) {
      in_gens = true;
      body = line.substr(5);
    } else if (in_gens) {
      body = line;
    } else {
      throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected 'vars:' or 'gens:'");
    }
    std::string piece;
    std::istringstream parts(body);
    while (std::getline(parts, piece, ';')) {
      piece = trim(piece);
      if (!piece.empty())
        gen_texts.emplace_back(piece, lineno);
    }
  }
  if (!have_vars)
    throw Error(ErrorCode::Parse, "missing 'vars:' line");
  for (const auto &[t, ln] : gen_texts) {
    try {
      out.gens.push_back(parse_polynomial(t, out.vars));
    } catch (const Error &e) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(ln) + ": " + e.what());
    }
  }
  return out;
}

} // namespace artin
