// Copyright 2026 The MARC Solver Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "marc/game_io.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "marc/errors.h"
#include "marc/rational.h"

namespace marc {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      const std::size_t begin = i;
      while (i < raw.size() &&
             !std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      if (i > begin) {
        line.tokens.push_back({std::string(raw.substr(begin, i - begin)),
                               begin + 1});
      }
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void Fail(ParseErrorKind kind, const std::string& message,
                       std::size_t line, std::size_t column) {
  std::ostringstream out;
  out << "line " << line << ", column " << column << ": " << message;
  throw ParseError(kind, out.str(), line, column);
}

void ExpectKeyword(const Line& line, const std::string& keyword) {
  if (line.tokens[0].text != keyword) {
    Fail(ParseErrorKind::kSyntax,
         "expected '" + keyword + "', found '" + line.tokens[0].text + "'",
         line.number, line.tokens[0].column);
  }
}

}  // namespace

Game ParseGameText(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  std::size_t pos = 0;
  const std::size_t last_line =
      static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
  auto need = [&](const char* what) -> const Line& {
    if (pos >= lines.size()) {
      Fail(ParseErrorKind::kSyntax,
           std::string("unexpected end of document, expected ") + what,
           last_line, 1);
    }
    return lines[pos++];
  };

  const Line& header = need("'players <n>'");
  ExpectKeyword(header, "players");
  if (header.tokens.size() != 2) {
    Fail(ParseErrorKind::kSyntax, "'players' takes exactly one count",
         header.number, header.tokens[0].column);
  }
  const Token& count_token = header.tokens[1];
  std::size_t n = 0;
  {
    const std::string& s = count_token.text;
    const bool digits =
        !s.empty() && s.size() <= 6 &&
        std::all_of(s.begin(), s.end(),
                    [](unsigned char c) { return std::isdigit(c); });
    if (!digits || (n = std::stoul(s)) < 2) {
      Fail(ParseErrorKind::kSyntax,
           "player count must be an integer of at least 2, found '" + s + "'",
           header.number, count_token.column);
    }
  }

  std::vector<std::vector<std::string>> names;
  for (std::size_t i = 0; i < n; ++i) {
    const Line& line = need("an 'actions' line");
    ExpectKeyword(line, "actions");
    if (line.tokens.size() < 2) {
      Fail(ParseErrorKind::kSyntax, "'actions' needs at least one name",
           line.number, line.tokens[0].column);
    }
    std::vector<std::string> own;
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
      const Token& tok = line.tokens[t];
      if (std::find(own.begin(), own.end(), tok.text) != own.end()) {
        Fail(ParseErrorKind::kSyntax,
             "duplicate action name '" + tok.text + "' for player " +
                 std::to_string(i + 1),
             line.number, tok.column);
      }
      own.push_back(tok.text);
    }
    names.push_back(std::move(own));
  }

  const Line& marker = need("'payoffs'");
  ExpectKeyword(marker, "payoffs");
  if (marker.tokens.size() != 1) {
    Fail(ParseErrorKind::kSyntax, "'payoffs' takes no arguments",
         marker.number, marker.tokens[1].column);
  }

  std::size_t rows = 1;
  for (const auto& own : names) rows *= own.size();
  std::vector<Rational> payoffs;
  payoffs.reserve(rows * n);
  for (std::size_t r = 0; r < rows; ++r) {
    if (pos >= lines.size()) {
      Fail(ParseErrorKind::kRowCount,
           "expected " + std::to_string(rows) + " payoff rows, found " +
               std::to_string(r),
           last_line, 1);
    }
    const Line& line = lines[pos++];
    if (line.tokens.size() != n) {
      const std::size_t column = line.tokens.size() > n
                                     ? line.tokens[n].column
                                     : line.tokens.back().column;
      Fail(ParseErrorKind::kRowCount,
           "payoff row has " + std::to_string(line.tokens.size()) +
               " entries, expected " + std::to_string(n),
           line.number, column);
    }
    for (const Token& tok : line.tokens) {
      try {
        payoffs.push_back(Rational::Parse(tok.text));
      } catch (const ParseError& e) {
        Fail(ParseErrorKind::kBadRational,
             "bad rational literal '" + tok.text + "'", line.number,
             tok.column);
      }
    }
  }
  if (pos < lines.size()) {
    Fail(ParseErrorKind::kRowCount,
         "more than " + std::to_string(rows) + " payoff rows",
         lines[pos].number, lines[pos].tokens[0].column);
  }
  return Game(std::move(names), std::move(payoffs));
}

Game ParseGameFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(ParseErrorKind::kMissingFile,
                     "cannot open game file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseGameText(buffer.str());
}

std::string WriteGame(const Game& game) {
  std::ostringstream out;
  const std::size_t n = game.num_players();
  out << "players " << n << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "actions";
    for (const auto& name : game.action_names(i)) out << ' ' << name;
    out << "\n";
  }
  out << "payoffs\n";
  for (std::size_t p = 0; p < game.num_profiles(); ++p) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i) out << ' ';
      out << game.payoff(p, i).ToString();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace marc
