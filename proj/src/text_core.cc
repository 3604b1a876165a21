// Copyright 2026 The Stickyword Authors.
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

#include "sticky/text_core.h"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sticky/errors.h"

namespace sticky {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kResourceMissing: return "ResourceMissing";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kPositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::kIdentityReplacement: return "IdentityReplacement";
    case ErrorCode::kAlreadyReviewed: return "AlreadyReviewed";
    case ErrorCode::kUnknownCandidate: return "UnknownCandidate";
    case ErrorCode::kUnknownSession: return "UnknownSession";
    case ErrorCode::kTooFewObservations: return "TooFewObservations";
    case ErrorCode::kMissingVariant: return "MissingVariant";
    case ErrorCode::kOutOfScale: return "OutOfScale";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

std::string_view CasingName(Casing casing) {
  switch (casing) {
    case Casing::kLower: return "lower";
    case Casing::kCapitalized: return "capitalized";
    case Casing::kUpper: return "upper";
    case Casing::kMixed: return "mixed";
  }
  return "lower";
}

namespace {

struct CodePoint {
  char32_t value = 0;
  std::size_t length = 1;
  bool valid = false;
};

CodePoint DecodeAt(std::string_view s, std::size_t i) {
  const auto lead = static_cast<unsigned char>(s[i]);
  if (lead < 0x80) return {lead, 1, true};
  std::size_t len = 0;
  char32_t cp = 0;
  if ((lead & 0xE0) == 0xC0) {
    len = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
    cp = lead & 0x07;
  } else {
    return {lead, 1, false};
  }
  if (i + len > s.size()) return {lead, 1, false};
  for (std::size_t k = 1; k < len; ++k) {
    const auto cont = static_cast<unsigned char>(s[i + k]);
    if ((cont & 0xC0) != 0x80) return {lead, 1, false};
    cp = (cp << 6) | (cont & 0x3F);
  }
  return {cp, len, true};
}

bool IsAsciiAlpha(char32_t c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool IsAsciiDigit(char32_t c) { return c >= '0' && c <= '9'; }

// Typographic apostrophe (U+2019) is folded in with the ASCII one.
bool IsApostrophe(char32_t c) { return c == U'\'' || c == U'’'; }

// Non-ASCII code points count as letters except for the blocks that hold
// spaces, dashes, quotes and other punctuation.
bool IsLetter(char32_t c) {
  if (c < 0x80) return IsAsciiAlpha(c);
  if (c >= 0xA0 && c <= 0xBF) return false;
  if (c == 0xD7 || c == 0xF7) return false;
  if (c >= 0x2000 && c <= 0x206F) return false;
  if (c >= 0x3000 && c <= 0x303F) return false;
  if (c == 0xFEFF) return false;
  return true;
}

bool IsWordChar(const CodePoint& cp) {
  if (!cp.valid) return false;
  return IsLetter(cp.value) || IsAsciiDigit(cp.value) ||
         IsApostrophe(cp.value) || cp.value == U'-';
}

// Characters trimmed from the edges of a run of word characters.
bool IsEdgeTrimmed(const CodePoint& cp) {
  return cp.value == U'-' || IsApostrophe(cp.value);
}

// ASCII and Latin-1 case mapping. Other scripts pass through unchanged.
char32_t LowerCp(char32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 32;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;
  return c;
}

char32_t UpperCp(char32_t c) {
  if (c >= 'a' && c <= 'z') return c - 32;
  if (c >= 0xE0 && c <= 0xFE && c != 0xF7) return c - 32;
  return c;
}

bool IsUpperCp(char32_t c) { return LowerCp(c) != c; }
bool IsLowerCp(char32_t c) { return UpperCp(c) != c; }

void AppendUtf8(std::string& out, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

template <typename Fn>
std::string MapCodePoints(std::string_view text, Fn&& fn) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const CodePoint cp = DecodeAt(text, i);
    if (cp.valid) {
      AppendUtf8(out, fn(cp.value, i == 0));
    } else {
      out.push_back(text[i]);
    }
    i += cp.length;
  }
  return out;
}

}  // namespace

std::string ToLower(std::string_view text) {
  return MapCodePoints(text, [](char32_t c, bool) { return LowerCp(c); });
}

Casing DetectCasing(std::string_view surface) {
  std::size_t upper = 0;
  std::size_t lower = 0;
  bool first_cased_seen = false;
  bool first_upper = false;
  for (std::size_t i = 0; i < surface.size();) {
    const CodePoint cp = DecodeAt(surface, i);
    i += cp.length;
    if (!cp.valid) continue;
    const bool up = IsUpperCp(cp.value);
    const bool low = IsLowerCp(cp.value);
    if (!up && !low) continue;
    if (!first_cased_seen) {
      first_cased_seen = true;
      first_upper = up;
    }
    (up ? upper : lower) += 1;
  }
  if (upper == 0) return Casing::kLower;
  if (lower == 0) return upper > 1 ? Casing::kUpper : Casing::kCapitalized;
  if (first_upper && upper == 1) return Casing::kCapitalized;
  return Casing::kMixed;
}

std::string ApplyCasing(std::string_view word, Casing casing) {
  switch (casing) {
    case Casing::kLower:
      return ToLower(word);
    case Casing::kUpper:
      return MapCodePoints(word, [](char32_t c, bool) { return UpperCp(c); });
    case Casing::kCapitalized: {
      bool done = false;
      return MapCodePoints(word, [&done](char32_t c, bool) {
        if (done) return LowerCp(c);
        if (IsUpperCp(c) || IsLowerCp(c)) {
          done = true;
          return UpperCp(c);
        }
        return c;
      });
    }
    case Casing::kMixed:
      break;
  }
  return std::string(word);
}

std::string Title::Reconstruct() const {
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    out += separators[i];
    out += tokens[i].surface;
  }
  if (!separators.empty()) out += separators.back();
  return out;
}

Title Tokenize(std::string_view raw, std::string id) {
  Title title;
  title.id = std::move(id);
  title.raw = std::string(raw);

  // Byte offset where the current separator started.
  std::size_t sep_begin = 0;
  std::size_t i = 0;
  while (i < raw.size()) {
    CodePoint cp = DecodeAt(raw, i);
    if (!IsWordChar(cp)) {
      i += cp.length;
      continue;
    }
    // Maximal run of word characters, then trim hyphens and apostrophes
    // from both ends.
    std::vector<std::pair<std::size_t, CodePoint>> run;
    std::size_t j = i;
    while (j < raw.size()) {
      CodePoint c = DecodeAt(raw, j);
      if (!IsWordChar(c)) break;
      run.emplace_back(j, c);
      j += c.length;
    }
    std::size_t lo = 0;
    std::size_t hi = run.size();
    while (lo < hi && IsEdgeTrimmed(run[lo].second)) ++lo;
    while (hi > lo && IsEdgeTrimmed(run[hi - 1].second)) --hi;
    if (lo < hi) {
      const std::size_t begin = run[lo].first;
      const std::size_t end = run[hi - 1].first + run[hi - 1].second.length;
      title.separators.emplace_back(raw.substr(sep_begin, begin - sep_begin));
      Token token;
      token.surface = std::string(raw.substr(begin, end - begin));
      token.normal = ToLower(token.surface);
      token.position = title.tokens.size();
      token.casing = DetectCasing(token.surface);
      title.tokens.push_back(std::move(token));
      sep_begin = end;
    }
    i = j;
  }
  title.separators.emplace_back(raw.substr(sep_begin));
  return title;
}

bool IsContentWord(const Token& token, const WordSet& stopwords,
                   std::size_t min_len) {
  if (stopwords.contains(token.normal)) return false;
  std::size_t letters = 0;
  const std::string_view s = token.normal;
  for (std::size_t i = 0; i < s.size();) {
    const CodePoint cp = DecodeAt(s, i);
    if (!cp.valid || !IsLetter(cp.value)) return false;
    ++letters;
    i += cp.length;
  }
  return letters >= min_len;
}

WordSet ParseStopwords(std::string_view text) {
  WordSet words;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    words.insert(ToLower(line.substr(first, last - first + 1)));
  }
  return words;
}

WordSet LoadStopwords(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kResourceMissing, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseStopwords(buf.str());
}

const WordSet& DefaultStopwords() {
  // Same list as data/stopwords.txt.
  static const WordSet kWords = [] {
    std::istringstream in(
      "a about above across after again against all also am among an and "
      "any are around as at be because been before being below between "
      "both but by can could did do does doing down during each few for "
      "from further had has have having he her here hers herself him "
      "himself his how i if in into is it its itself just may me might "
      "more most must my myself no nor not now of off on once only onto "
      "or other ought our ours ourselves out over own same shall she "
      "should since so some such than that the their theirs them "
      "themselves then there these they this those though through to too "
      "toward towards under unless until up upon us very via was we were "
      "what when where whether which while who whom whose why will with "
      "within without would yet you your yours yourself yourselves ");
    WordSet words;
    std::string word;
    while (in >> word) words.insert(word);
    return words;
  }();
  return kWords;
}

std::string StopwordFingerprint(const WordSet& stopwords) {
  std::vector<std::string> sorted(stopwords.begin(), stopwords.end());
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const auto& word : sorted) {
    for (const unsigned char c : word) {
      hash ^= c;
      hash *= 0x100000001b3ULL;
    }
    hash ^= '\n';
    hash *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx",
                static_cast<unsigned long long>(hash));
  return out;
}

}  // namespace sticky
