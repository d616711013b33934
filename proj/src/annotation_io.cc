// Copyright 2026 The resumeann Authors.
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

#include "resumeann/annotation_io.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "resumeann/errors.h"
#include "resumeann/text.h"

namespace resumeann {
namespace {

std::string Escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

bool Unescape(std::string_view text, std::string *out) {
  out->clear();
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\') {
      out->push_back(text[i]);
      continue;
    }
    if (++i == text.size()) return false;
    switch (text[i]) {
      case '\\': out->push_back('\\'); break;
      case 't': out->push_back('\t'); break;
      case 'n': out->push_back('\n'); break;
      case 'r': out->push_back('\r'); break;
      default: return false;
    }
  }
  return true;
}

bool ParseOffset(std::string_view field, size_t *value) {
  if (field.empty()) return false;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), *value);
  return ec == std::errc() && ptr == field.data() + field.size();
}

}  // namespace

std::string FormatAnnotations(const std::vector<Annotation> &annotations) {
  std::string out;
  for (const Annotation &a : annotations) {
    out += std::to_string(a.start);
    out += '\t';
    out += std::to_string(a.end);
    out += '\t';
    out += a.class_name;
    out += '\t';
    out += Escape(a.matched_text);
    out += '\n';
  }
  return out;
}

std::vector<Annotation> ParseAnnotations(std::string_view text,
                                         const std::string &source) {
  std::vector<Annotation> result;
  int line_number = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty() || line.front() == '#') continue;

    std::string_view fields[4];
    size_t start = 0;
    for (int f = 0; f < 3; ++f) {
      size_t tab = line.find('\t', start);
      if (tab == std::string_view::npos) {
        throw SyntaxError(source, line_number,
                          "expected start<TAB>end<TAB>class<TAB>text");
      }
      fields[f] = line.substr(start, tab - start);
      start = tab + 1;
    }
    fields[3] = line.substr(start);

    Annotation a;
    if (!ParseOffset(fields[0], &a.start) || !ParseOffset(fields[1], &a.end)) {
      throw SyntaxError(source, line_number, "offsets must be integers");
    }
    if (a.end <= a.start) {
      throw SyntaxError(source, line_number, "end must be greater than start");
    }
    a.class_name = std::string(fields[2]);
    if (a.class_name.empty()) {
      throw SyntaxError(source, line_number, "empty class name");
    }
    if (!Unescape(fields[3], &a.matched_text)) {
      throw SyntaxError(source, line_number, "bad escape sequence in text");
    }
    a.recognizer = Recognizer::kExternal;
    result.push_back(std::move(a));
  }
  return result;
}

std::vector<Annotation> LoadAnnotations(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read annotation file: " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseAnnotations(buffer.str(), path.string());
}

}  // namespace resumeann
