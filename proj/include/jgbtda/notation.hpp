#pragma once

// Jeongganbo scores in the JGB-v1 text encoding.
//
// One body line is one Jeonggan (one beat). Rows inside a Jeonggan are split by
// '/', slots inside a row by whitespace; a slot lasts 1/(rows * slots_in_row).
//
//   #title Example
//   #jeonggan-per-column 6
//   hwang            % (D#4, 1)
//   hwang tae        % (D#4, 1/2) (F4, 1/2)
//   nam / - jung'    % rejected: lengths 3/4 and 1/4 are not multiples of 1/6
//   |                % column break, checked against jeonggan-per-column

#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jgbtda/error.hpp"
#include "jgbtda/rational.hpp"

namespace jgbtda::notation {

inline constexpr int kScaleSize = 11;

namespace detail {
inline constexpr std::array<std::string_view, 5> kBaseTokens{"jung", "im", "nam", "hwang", "tae"};
inline constexpr std::array<std::string_view, 5> kBaseNames{"Jung", "Im", "Nam", "Hwang", "Tae"};
inline constexpr std::array<std::string_view, kScaleSize> kScientific{
    "G#3", "A#3", "C4", "D#4", "F4", "G#4", "A#4", "C5", "D#5", "F5", "G#5"};
}  // namespace detail

/// One of the eleven pitches G#3 .. G#5, by scale degree.
class Pitch {
 public:
  constexpr Pitch() = default;
  constexpr explicit Pitch(int degree) : degree_(degree) {
    if (!valid(degree)) throw std::out_of_range("pitch degree outside the 11-pitch scale");
  }

  static constexpr bool valid(int degree) { return degree >= 0 && degree < kScaleSize; }

  constexpr int degree() const { return degree_; }
  /// Number of octave marks in the token ("jung''" has 2).
  constexpr int octave() const { return degree_ / 5; }
  std::string_view name() const { return detail::kBaseNames[static_cast<std::size_t>(degree_ % 5)]; }
  std::string_view scientific() const { return detail::kScientific[static_cast<std::size_t>(degree_)]; }

  std::string token() const {
    std::string t(detail::kBaseTokens[static_cast<std::size_t>(degree_ % 5)]);
    t.append(static_cast<std::size_t>(octave()), '\'');
    return t;
  }

  static std::optional<Pitch> from_token(std::string_view token) {
    std::size_t marks = 0;
    while (marks < token.size() && token[token.size() - 1 - marks] == '\'') ++marks;
    auto base = token.substr(0, token.size() - marks);
    for (std::size_t i = 0; i < detail::kBaseTokens.size(); ++i) {
      if (detail::kBaseTokens[i] != base) continue;
      int degree = static_cast<int>(i) + 5 * static_cast<int>(marks);
      if (marks > 2 || !valid(degree)) return std::nullopt;
      return Pitch(degree);
    }
    return std::nullopt;
  }

  friend constexpr auto operator<=>(Pitch, Pitch) = default;

 private:
  int degree_ = 0;
};

struct NoteEvent {
  Pitch pitch;
  Duration duration;
  Duration onset;

  bool operator==(const NoteEvent& o) const {
    return pitch == o.pitch && duration == o.duration && onset == o.onset;
  }
};

struct Score {
  std::string title;
  int jeonggan_per_column = 6;
  std::vector<NoteEvent> events;
};

enum class Symbol {
  Up,        // ^   one degree above the previous note
  UpTwo,     // ^^  two degrees above
  DownPair,  // vv  one then two degrees below, sharing the slot
  Repeat,    // =   previous pitch again
  Ingeojil,  // !   previous note held, then a short note one degree above
};

inline std::optional<Symbol> symbol_from_token(std::string_view token) {
  if (token == "^") return Symbol::Up;
  if (token == "^^") return Symbol::UpTwo;
  if (token == "vv") return Symbol::DownPair;
  if (token == "=") return Symbol::Repeat;
  if (token == "!") return Symbol::Ingeojil;
  return std::nullopt;
}

inline std::string_view symbol_token(Symbol s) {
  switch (s) {
    case Symbol::Up: return "^";
    case Symbol::UpTwo: return "^^";
    case Symbol::DownPair: return "vv";
    case Symbol::Repeat: return "=";
    case Symbol::Ingeojil: return "!";
  }
  return "?";
}

/// Raised by resolve_symbol; the parser rethrows it as a positioned ParseError.
class SymbolError : public Error {
 public:
  using Error::Error;
};

struct SymbolResolution {
  /// Time added to the previous note before `notes` are played (ingeojil only).
  Duration extend_previous{0};
  std::vector<std::pair<Pitch, Duration>> notes;
};

/// Default short-note length of an ingeojil, in Jeonggans.
inline const Duration kDefaultIngeojilShort{1, 6};

inline SymbolResolution resolve_symbol(Symbol symbol, Pitch previous, Duration slot,
                                       Duration ingeojil_short = kDefaultIngeojilShort) {
  if (slot <= 0) throw SymbolError("slot duration must be positive");
  auto shifted = [&](int delta) {
    int degree = previous.degree() + delta;
    if (!Pitch::valid(degree)) {
      throw SymbolError("'" + std::string(symbol_token(symbol)) + "' after " +
                        std::string(previous.scientific()) + " leaves the 11-pitch scale");
    }
    return Pitch(degree);
  };

  SymbolResolution out;
  switch (symbol) {
    case Symbol::Up:
      out.notes.emplace_back(shifted(1), slot);
      break;
    case Symbol::UpTwo:
      out.notes.emplace_back(shifted(2), slot);
      break;
    case Symbol::DownPair:
      out.notes.emplace_back(shifted(-1), slot / 2);
      out.notes.emplace_back(shifted(-2), slot / 2);
      break;
    case Symbol::Repeat:
      out.notes.emplace_back(previous, slot);
      break;
    case Symbol::Ingeojil: {
      Pitch upper = shifted(1);
      if (slot - ingeojil_short <= 0) {
        throw SymbolError("ingeojil slot " + to_string(slot) + " is not longer than the short note " +
                          to_string(ingeojil_short));
      }
      out.extend_previous = slot - ingeojil_short;
      out.notes.emplace_back(upper, ingeojil_short);
      break;
    }
  }
  return out;
}

struct ParseOptions {
  Duration ingeojil_short = kDefaultIngeojilShort;
};

inline Duration total_duration(const Score& score) {
  Duration total{0};
  for (const auto& e : score.events) total += e.duration;
  return total;
}

inline bool divides_six(const Duration& d) { return 6 % d.denominator() == 0; }

namespace detail {

inline bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

class Parser {
 public:
  Parser(std::string_view source, const ParseOptions& options) : source_(source), options_(options) {
    if (options_.ingeojil_short <= 0 || !divides_six(options_.ingeojil_short)) {
      throw std::invalid_argument("ingeojil short note must be a positive multiple of 1/6, got " +
                                  to_string(options_.ingeojil_short));
    }
  }

  Score run() {
    if (source_.substr(0, 3) == "\xEF\xBB\xBF") source_.remove_prefix(3);
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= source_.size()) {
      auto nl = source_.find('\n', pos);
      if (nl == std::string_view::npos) nl = source_.size();
      ++line_no;
      handle_line(source_.substr(pos, nl - pos), line_no);
      pos = nl + 1;
    }
    for (std::size_t i = 0; i < score_.events.size(); ++i) {
      const auto& e = score_.events[i];
      if (!divides_six(e.duration)) {
        throw ParseError(ParseError::Kind::Semantic, origins_[i].first, origins_[i].second,
                         "note length " + to_string(e.duration) + " is not a multiple of 1/6 Jeonggan");
      }
    }
    return std::move(score_);
  }

 private:
  void handle_line(std::string_view raw, std::size_t line_no) {
    auto content = raw.substr(0, raw.find('%'));
    auto body = trim(content);
    if (body.empty()) return;
    if (body.front() == '#') return handle_header(body, line_no, column_of(raw, body));
    if (body == "|") return handle_column_break(line_no, column_of(raw, body));
    handle_jeonggan(content, line_no);
  }

  static std::size_t column_of(std::string_view line, std::string_view part) {
    return static_cast<std::size_t>(part.data() - line.data()) + 1;
  }

  void handle_header(std::string_view body, std::size_t line_no, std::size_t column) {
    auto split = body.find_first_of(" \t");
    auto key = body.substr(1, split == std::string_view::npos ? std::string_view::npos : split - 1);
    auto value = split == std::string_view::npos ? std::string_view{} : trim(body.substr(split));
    if (key == "title") {
      score_.title = std::string(value);
    } else if (key == "jeonggan-per-column") {
      if (value == "6") {
        score_.jeonggan_per_column = 6;
      } else if (value == "12") {
        score_.jeonggan_per_column = 12;
      } else {
        throw ParseError(ParseError::Kind::Syntax, line_no, column,
                         "jeonggan-per-column must be 6 or 12, got '" + std::string(value) + "'");
      }
    } else {
      throw ParseError(ParseError::Kind::Syntax, line_no, column, "unknown header '#" + std::string(key) + "'");
    }
  }

  void handle_column_break(std::size_t line_no, std::size_t column) {
    if (jeonggans_in_column_ != score_.jeonggan_per_column) {
      throw ParseError(ParseError::Kind::Syntax, line_no, column,
                       "column holds " + std::to_string(jeonggans_in_column_) + " Jeonggans, expected " +
                           std::to_string(score_.jeonggan_per_column));
    }
    jeonggans_in_column_ = 0;
  }

  void handle_jeonggan(std::string_view line, std::size_t line_no) {
    std::vector<std::vector<Token>> rows;
    std::size_t start = 0;
    while (true) {
      auto slash = line.find('/', start);
      auto seg_end = slash == std::string_view::npos ? line.size() : slash;
      auto segment = line.substr(start, seg_end - start);
      auto tokens = tokenize(segment, start);
      if (tokens.empty()) {
        throw ParseError(ParseError::Kind::Syntax, line_no, start + 1, "empty row in Jeonggan");
      }
      if (rows.size() == 3) {
        throw ParseError(ParseError::Kind::Syntax, line_no, tokens.front().column,
                         "more than 3 rows in one Jeonggan");
      }
      if (tokens.size() > 3) {
        throw ParseError(ParseError::Kind::Syntax, line_no, tokens[3].column, "more than 3 slots in one row");
      }
      rows.push_back(std::move(tokens));
      if (slash == std::string_view::npos) break;
      start = slash + 1;
    }

    for (const auto& row : rows) {
      Duration slot(1, static_cast<std::int64_t>(rows.size() * row.size()));
      for (const auto& tok : row) play(tok, slot, line_no);
    }
    ++jeonggans_in_column_;
  }

  static std::vector<Token> tokenize(std::string_view segment, std::size_t offset) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < segment.size()) {
      if (is_blank(segment[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < segment.size() && !is_blank(segment[j])) ++j;
      out.push_back({segment.substr(i, j - i), offset + i + 1});
      i = j;
    }
    return out;
  }

  void play(const Token& tok, Duration slot, std::size_t line_no) {
    if (auto pitch = Pitch::from_token(tok.text)) {
      push(*pitch, slot, line_no, tok.column);
      return;
    }
    if (tok.text == "-") {
      if (score_.events.empty()) {
        throw ParseError(ParseError::Kind::Semantic, line_no, tok.column, "continuation '-' has no preceding note");
      }
      score_.events.back().duration += slot;
      now_ += slot;
      return;
    }
    auto symbol = symbol_from_token(tok.text);
    if (!symbol) {
      throw ParseError(ParseError::Kind::Syntax, line_no, tok.column, "bad token '" + std::string(tok.text) + "'");
    }
    if (score_.events.empty()) {
      throw ParseError(ParseError::Kind::Semantic, line_no, tok.column,
                       "symbol '" + std::string(tok.text) + "' has no preceding note");
    }
    SymbolResolution res;
    try {
      res = resolve_symbol(*symbol, score_.events.back().pitch, slot, options_.ingeojil_short);
    } catch (const SymbolError& e) {
      throw ParseError(ParseError::Kind::Semantic, line_no, tok.column, e.what());
    }
    score_.events.back().duration += res.extend_previous;
    now_ += res.extend_previous;
    for (const auto& [pitch, length] : res.notes) push(pitch, length, line_no, tok.column);
  }

  void push(Pitch pitch, Duration length, std::size_t line_no, std::size_t column) {
    score_.events.push_back({pitch, length, now_});
    origins_.emplace_back(line_no, column);
    now_ += length;
  }

  std::string_view source_;
  ParseOptions options_;
  Score score_;
  std::vector<std::pair<std::size_t, std::size_t>> origins_;
  Duration now_{0};
  int jeonggans_in_column_ = 0;
};

}  // namespace detail

/// Parses JGB-v1 text. Throws ParseError with the offending line and column.
inline Score parse_score(std::string_view source, const ParseOptions& options = {}) {
  return detail::Parser(source, options).run();
}

/// Canonical JGB-v1 text: explicit pitch tokens and '-' only, each Jeonggan
/// split into the fewest equal slots (1, 2, 3 or 2x3) that hold every onset.
/// Requires gapless events starting at 0 and a whole number of Jeonggans.
inline std::string serialize_score(const Score& score) {
  Duration now{0};
  for (const auto& e : score.events) {
    if (e.onset != now || e.duration <= 0) throw std::invalid_argument("score events are not gapless from 0");
    if (!divides_six(e.duration)) throw std::invalid_argument("note length is not a multiple of 1/6");
    now += e.duration;
  }
  if (now.denominator() != 1) throw std::invalid_argument("score does not fill a whole number of Jeonggans");
  if (score.title.find('\n') != std::string::npos || score.title.find('%') != std::string::npos) {
    throw std::invalid_argument("title cannot contain newlines or '%'");
  }

  std::string out;
  if (!score.title.empty()) out += "#title " + score.title + "\n";
  out += "#jeonggan-per-column " + std::to_string(score.jeonggan_per_column) + "\n";

  const auto total = now.numerator();
  std::size_t next = 0;  // first event with onset >= current Jeonggan start
  for (std::int64_t k = 0; k < total; ++k) {
    std::vector<const NoteEvent*> starting;
    while (next < score.events.size() && score.events[next].onset < Duration(k + 1)) {
      starting.push_back(&score.events[next]);
      ++next;
    }
    int slots = 1;
    for (int candidate : {1, 2, 3, 6}) {
      bool fits = true;
      for (const auto* e : starting) fits = fits && ((e->onset - Duration(k)) * candidate).denominator() == 1;
      if (fits) {
        slots = candidate;
        break;
      }
    }
    std::vector<std::string> cells(static_cast<std::size_t>(slots), "-");
    for (const auto* e : starting) {
      auto index = boost::rational_cast<std::int64_t>((e->onset - Duration(k)) * slots);
      cells[static_cast<std::size_t>(index)] = e->pitch.token();
    }
    std::string line;
    for (int i = 0; i < slots; ++i) {
      if (i > 0) line += (slots == 6 && i == 3) ? " / " : " ";
      line += cells[static_cast<std::size_t>(i)];
    }
    out += line + "\n";
    if ((k + 1) % score.jeonggan_per_column == 0) out += "|\n";
  }
  return out;
}

}  // namespace jgbtda::notation
