#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

namespace hk::detail {

struct Token {
  std::string text;
  std::size_t column; // 1-based
};

struct Line {
  std::size_t number; // 1-based
  std::vector<Token> tokens;
};

// Whitespace tokenization with '#' comments removed; blank lines dropped.
inline std::vector<Line> tokenize(const std::string &text) {
  std::vector<Line> out;
  std::size_t lineno = 0, pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    std::string raw = text.substr(pos, nl - pos);
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    Line line{lineno, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back({raw.substr(i, j - i), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (nl == text.size()) break;
    pos = nl + 1;
  }
  return out;
}

// Column just past the last token, for "missing token" errors.
inline std::size_t end_column(const Line &l) {
  const auto &t = l.tokens.back();
  return t.column + t.text.size();
}

inline bool is_json(const std::string &text) {
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) return c == '{' || c == '[';
  return false;
}

} // namespace hk::detail
