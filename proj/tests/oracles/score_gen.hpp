#pragma once

// Random grammatical JGB-v1 files with their expected note events, computed
// here in whole sixths of a Jeonggan.

#include <array>
#include <random>
#include <string>
#include <vector>

namespace oracle {

inline constexpr std::array<const char*, 11> kPitchTokens{
    "jung", "im", "nam", "hwang", "tae", "jung'", "im'", "nam'", "hwang'", "tae'", "jung''"};

struct ExpectedEvent {
  int degree;
  int sixths;
};

struct GeneratedScore {
  std::string text;
  std::size_t jeonggan_lines = 0;
  int jeonggan_per_column = 6;
  std::string title;
  std::vector<ExpectedEvent> events;
};

struct ScoreGenOptions {
  std::size_t min_jeonggans = 1;
  std::size_t max_jeonggans = 40;
  bool symbols = true;
  bool decorations = true;  // comments, blank lines, odd spacing
};

inline GeneratedScore generate_score(std::mt19937_64& rng, const ScoreGenOptions& opt = {}) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto chance = [&](double p) { return std::bernoulli_distribution(p)(rng); };

  GeneratedScore g;
  g.jeonggan_per_column = chance(0.5) ? 6 : 12;
  const bool breaks = chance(0.6);
  if (chance(0.5)) {
    g.title = "piece " + std::to_string(pick(1, 999));
    g.text += "#title " + g.title + "\n";
  }
  if (g.jeonggan_per_column == 12 || chance(0.5)) {
    g.text += "#jeonggan-per-column " + std::to_string(g.jeonggan_per_column) + "\n";
  }

  auto gap = [&] { return opt.decorations && chance(0.2) ? std::string(static_cast<std::size_t>(pick(2, 4)), ' ') : " "; };
  const auto count = static_cast<std::size_t>(pick(static_cast<int>(opt.min_jeonggans), static_cast<int>(opt.max_jeonggans)));

  // Rows x slots combinations whose slots are whole sixths.
  static const std::vector<std::vector<int>> layouts{{1}, {2}, {3}, {1, 1}, {1, 3}, {3, 1}, {3, 3},
                                                     {1, 1, 1}, {2, 2, 2}, {1, 2, 1}, {2, 1, 2}};
  for (std::size_t k = 0; k < count; ++k) {
    if (opt.decorations && chance(0.1)) g.text += chance(0.5) ? "\n" : "% remark\n";
    const auto& layout = layouts[static_cast<std::size_t>(pick(0, static_cast<int>(layouts.size()) - 1))];
    std::string line;
    if (opt.decorations && chance(0.1)) line += "\t";
    for (std::size_t r = 0; r < layout.size(); ++r) {
      if (r > 0) line += " /" + gap();
      const int slots = layout[r];
      const int sixths = 6 / (static_cast<int>(layout.size()) * slots);
      for (int s = 0; s < slots; ++s) {
        if (s > 0) line += gap();
        std::vector<std::string> options{"pitch", "pitch", "pitch"};
        if (!g.events.empty()) {
          const int prev = g.events.back().degree;
          options.push_back("-");
          if (opt.symbols) {
            if (prev <= 9) options.push_back("^");
            if (prev <= 8) options.push_back("^^");
            if (prev >= 2 && sixths % 2 == 0) options.push_back("vv");
            options.push_back("=");
            if (prev <= 9 && sixths > 1) options.push_back("!");
          }
        }
        const auto& choice = options[static_cast<std::size_t>(pick(0, static_cast<int>(options.size()) - 1))];
        if (choice == "pitch") {
          int d = pick(0, 10);
          line += kPitchTokens[static_cast<std::size_t>(d)];
          g.events.push_back({d, sixths});
        } else if (choice == "-") {
          line += "-";
          g.events.back().sixths += sixths;
        } else {
          const int prev = g.events.back().degree;
          line += choice;
          if (choice == "^") g.events.push_back({prev + 1, sixths});
          if (choice == "^^") g.events.push_back({prev + 2, sixths});
          if (choice == "=") g.events.push_back({prev, sixths});
          if (choice == "vv") {
            g.events.push_back({prev - 1, sixths / 2});
            g.events.push_back({prev - 2, sixths / 2});
          }
          if (choice == "!") {
            g.events.back().sixths += sixths - 1;
            g.events.push_back({prev + 1, 1});
          }
        }
      }
    }
    if (opt.decorations && chance(0.1)) line += "   % note";
    g.text += line + "\n";
    ++g.jeonggan_lines;
    if (breaks && g.jeonggan_lines % static_cast<std::size_t>(g.jeonggan_per_column) == 0) g.text += "|\n";
  }
  return g;
}

}  // namespace oracle
