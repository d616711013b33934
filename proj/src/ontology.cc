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

#include "resumeann/ontology.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "resumeann/text.h"

namespace resumeann {
namespace {

bool IsIdentifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

bool ValidDate(int day, int month, int year) {
  static constexpr int kDays[] = {31, 29, 31, 30, 31, 30,
                                  31, 31, 30, 31, 30, 31};
  return year >= 1 && month >= 1 && month <= 12 && day >= 1 &&
         day <= kDays[month - 1];
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Lexer for a single line of the ontology format.
struct LineToken {
  enum Kind { kWord, kString, kSymbol } kind;
  std::string text;
};

class LineLexer {
 public:
  LineLexer(std::string_view line, const std::string &source, int line_number)
      : source_(source), line_number_(line_number) {
    Tokenize(line);
  }

  bool AtEnd() const { return pos_ == tokens_.size(); }

  const LineToken *Peek() const {
    return AtEnd() ? nullptr : &tokens_[pos_];
  }

  std::string Word(const char *what) {
    if (AtEnd() || tokens_[pos_].kind != LineToken::kWord) Fail(what);
    return tokens_[pos_++].text;
  }

  std::string Identifier(const char *what) {
    std::string word = Word(what);
    if (!IsIdentifier(word)) Fail(what, word);
    return word;
  }

  std::string String(const char *what) {
    if (AtEnd() || tokens_[pos_].kind != LineToken::kString) Fail(what);
    return tokens_[pos_++].text;
  }

  bool TrySymbol(char symbol) {
    if (!AtEnd() && tokens_[pos_].kind == LineToken::kSymbol &&
        tokens_[pos_].text[0] == symbol) {
      ++pos_;
      return true;
    }
    return false;
  }

  void Symbol(char symbol) {
    if (!TrySymbol(symbol)) {
      Fail((std::string("'") + symbol + "'").c_str());
    }
  }

  void End() {
    if (!AtEnd()) {
      throw SyntaxError(source_, line_number_,
                        "unexpected trailing input '" + tokens_[pos_].text +
                            "'");
    }
  }

  [[noreturn]] void Fail(const char *what, const std::string &got = "") const {
    std::string found = !got.empty()  ? "'" + got + "'"
                        : AtEnd()     ? std::string("end of line")
                                      : "'" + tokens_[pos_].text + "'";
    throw SyntaxError(source_, line_number_,
                      std::string("expected ") + what + ", found " + found);
  }

 private:
  static bool IsSymbol(char c) {
    return c == ':' || c == '.' || c == '=' || c == '[' || c == ']' ||
           c == ',';
  }

  void Tokenize(std::string_view line) {
    size_t i = 0;
    while (i < line.size()) {
      char c = line[i];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
      } else if (c == '#') {
        break;
      } else if (c == '"') {
        std::string value;
        ++i;
        bool closed = false;
        while (i < line.size()) {
          char d = line[i++];
          if (d == '"') {
            closed = true;
            break;
          }
          if (d == '\\' && i < line.size()) d = line[i++];
          value.push_back(d);
        }
        if (!closed) {
          throw SyntaxError(source_, line_number_, "unterminated string");
        }
        tokens_.push_back({LineToken::kString, std::move(value)});
      } else if (IsSymbol(c)) {
        tokens_.push_back({LineToken::kSymbol, std::string(1, c)});
        ++i;
      } else {
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
               line[i] != '\r' && line[i] != '"' && line[i] != '#' &&
               !IsSymbol(line[i])) {
          ++i;
        }
        tokens_.push_back(
            {LineToken::kWord, std::string(line.substr(start, i - start))});
      }
    }
  }

  const std::string &source_;
  int line_number_;
  std::vector<LineToken> tokens_;
  size_t pos_ = 0;
};

struct PendingProperty {
  std::string class_name;
  PropertyDef def;
};

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error([&] {
        std::string message = "ontology validation failed:";
        for (const Violation &v : violations) message += "\n  " + v.ToString();
        return message;
      }()),
      violations_(std::move(violations)) {}

std::string_view ValueTypeName(ValueType type) {
  switch (type) {
    case ValueType::kString: return "string";
    case ValueType::kInteger: return "integer";
    case ValueType::kDate: return "date";
    case ValueType::kBoolean: return "boolean";
  }
  return "string";
}

bool LiteralMatchesType(std::string_view literal, ValueType type) {
  switch (type) {
    case ValueType::kString:
      return true;
    case ValueType::kInteger: {
      std::string_view digits = literal;
      if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
        digits.remove_prefix(1);
      }
      return AllDigits(digits) && digits.size() <= 18;
    }
    case ValueType::kBoolean:
      return literal == "true" || literal == "false";
    case ValueType::kDate: {
      if (literal.size() == 10 && literal[2] == '/' && literal[5] == '/') {
        auto d = literal.substr(0, 2), m = literal.substr(3, 2),
             y = literal.substr(6, 4);
        if (!AllDigits(d) || !AllDigits(m) || !AllDigits(y)) return false;
        return ValidDate(std::stoi(std::string(d)), std::stoi(std::string(m)),
                         std::stoi(std::string(y)));
      }
      if (literal.size() == 10 && literal[4] == '-' && literal[7] == '-') {
        auto y = literal.substr(0, 4), m = literal.substr(5, 2),
             d = literal.substr(8, 2);
        if (!AllDigits(d) || !AllDigits(m) || !AllDigits(y)) return false;
        return ValidDate(std::stoi(std::string(d)), std::stoi(std::string(m)),
                         std::stoi(std::string(y)));
      }
      return false;
    }
  }
  return false;
}

bool OntologySchema::HasClass(std::string_view name) const {
  return classes.find(std::string(name)) != classes.end();
}

const OntologyClass &OntologySchema::Class(std::string_view name) const {
  auto it = classes.find(std::string(name));
  if (it == classes.end()) throw UnknownClass(std::string(name));
  return it->second;
}

std::vector<std::string> OntologySchema::Lineage(std::string_view name) const {
  std::vector<std::string> chain;
  std::set<std::string> seen;
  std::string current(name);
  while (true) {
    auto it = classes.find(current);
    if (it == classes.end() || !seen.insert(current).second) break;
    chain.push_back(current);
    if (!it->second.parent) break;
    current = *it->second.parent;
  }
  return chain;
}

bool OntologySchema::IsA(std::string_view cls,
                         std::string_view ancestor) const {
  for (const std::string &c : Lineage(cls)) {
    if (c == ancestor) return true;
  }
  return false;
}

std::vector<PropertyDef> OntologySchema::EffectiveProperties(
    std::string_view name) const {
  Class(name);
  std::vector<std::string> chain = Lineage(name);
  std::vector<PropertyDef> result;
  std::set<std::string> names;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    for (const PropertyDef &p : classes.at(*it).properties) {
      if (names.insert(p.name).second) result.push_back(p);
    }
  }
  return result;
}

std::vector<Violation> ValidateOntology(const OntologySchema &schema) {
  std::vector<Violation> violations;

  for (std::string_view target : kTargetClasses) {
    if (!schema.HasClass(target)) {
      violations.push_back({std::string(target),
                            "required annotation class is not declared"});
    }
  }

  std::set<std::string> on_cycle;
  for (const auto &[name, cls] : schema.classes) {
    if (name != cls.name) {
      violations.push_back({name, "class key does not match its name"});
    }
    if (cls.parent && !schema.HasClass(*cls.parent)) {
      violations.push_back(
          {name, "parent class '" + *cls.parent + "' is not declared"});
    }
    // Walk up until the chain ends or repeats; a repeat at the start class
    // means this class lies on a cycle.
    std::vector<std::string> path{name};
    std::set<std::string> seen{name};
    const OntologyClass *current = &cls;
    while (current->parent) {
      auto it = schema.classes.find(*current->parent);
      if (it == schema.classes.end()) break;
      if (it->first == name) {
        if (!on_cycle.count(name)) {
          for (const std::string &member : path) on_cycle.insert(member);
          std::string message = "class hierarchy cycle: ";
          for (const std::string &member : path) message += member + " -> ";
          message += name;
          violations.push_back({name, message});
        }
        break;
      }
      if (!seen.insert(it->first).second) break;
      path.push_back(it->first);
      current = &it->second;
    }
  }

  for (const auto &[name, cls] : schema.classes) {
    std::set<std::string> own;
    std::set<std::string> inherited;
    std::vector<std::string> chain = schema.Lineage(name);
    for (size_t i = 1; i < chain.size(); ++i) {
      for (const PropertyDef &p : schema.classes.at(chain[i]).properties) {
        inherited.insert(p.name);
      }
    }
    for (const PropertyDef &p : cls.properties) {
      std::string element = name + "." + p.name;
      if (!IsIdentifier(p.name)) {
        violations.push_back({element, "property name is not an identifier"});
      }
      if (!own.insert(p.name).second) {
        violations.push_back({element, "duplicate property in class"});
      } else if (inherited.count(p.name)) {
        violations.push_back(
            {element, "duplicate property: redeclares an inherited property"});
      }
      if (p.default_value &&
          !LiteralMatchesType(*p.default_value, p.value_type)) {
        violations.push_back({element, "default '" + *p.default_value +
                                           "' is not a valid " +
                                           std::string(ValueTypeName(
                                               p.value_type))});
      }
    }
  }

  for (const InstanceEntry &instance : schema.instances) {
    std::string element = "instance \"" + instance.label + "\"";
    if (!schema.HasClass(instance.class_name)) {
      violations.push_back({element, "class '" + instance.class_name +
                                         "' is not declared"});
    }
    if (Trim(instance.label).empty()) {
      violations.push_back({element, "label is empty"});
    }
    for (const std::string &variant : instance.variants) {
      if (Trim(variant).empty()) {
        violations.push_back({element, "variant is empty"});
      }
    }
  }
  return violations;
}

OntologySchema ParseOntology(std::string_view text, const std::string &source) {
  OntologySchema schema;
  std::vector<Violation> violations;
  std::vector<PendingProperty> properties;
  bool have_version = false;

  int line_number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_number;
    try {
      DecodeUtf8(line);
    } catch (const EncodingError &e) {
      throw SyntaxError(source, line_number, e.what());
    }

    LineLexer lex(line, source, line_number);
    if (lex.AtEnd()) continue;
    const LineToken *head = lex.Peek();
    if (head->kind != LineToken::kWord) lex.Fail("a directive");
    std::string directive = lex.Word("a directive");

    if (directive == "class") {
      OntologyClass cls;
      cls.name = lex.Identifier("a class name");
      if (lex.TrySymbol(':')) cls.parent = lex.Identifier("a parent class");
      lex.End();
      std::string name = cls.name;
      if (!schema.classes.emplace(name, std::move(cls)).second) {
        violations.push_back({name, "class declared more than once (line " +
                                        std::to_string(line_number) + ")"});
      }
    } else if (directive == "property") {
      PendingProperty pending;
      pending.class_name = lex.Identifier("a class name");
      lex.Symbol('.');
      pending.def.name = lex.Identifier("a property name");
      lex.Symbol(':');
      std::string type = lex.Word("a value type");
      if (type == "string") {
        pending.def.value_type = ValueType::kString;
      } else if (type == "integer") {
        pending.def.value_type = ValueType::kInteger;
      } else if (type == "date") {
        pending.def.value_type = ValueType::kDate;
      } else if (type == "boolean") {
        pending.def.value_type = ValueType::kBoolean;
      } else {
        lex.Fail("one of string|integer|date|boolean", type);
      }
      std::string cardinality = lex.Word("a cardinality");
      if (cardinality == "single") {
        pending.def.cardinality = Cardinality::kSingle;
      } else if (cardinality == "multiple") {
        pending.def.cardinality = Cardinality::kMultiple;
      } else {
        lex.Fail("single or multiple", cardinality);
      }
      if (lex.TrySymbol('=')) {
        const LineToken *value = lex.Peek();
        if (value == nullptr || value->kind == LineToken::kSymbol) {
          lex.Fail("a default value");
        }
        pending.def.default_value = value->kind == LineToken::kString
                                        ? lex.String("a default value")
                                        : lex.Word("a default value");
      }
      lex.End();
      properties.push_back(std::move(pending));
    } else if (directive == "instance") {
      InstanceEntry instance;
      instance.class_name = lex.Identifier("a class name");
      instance.label = lex.String("a quoted label");
      if (lex.TrySymbol('[')) {
        if (!lex.TrySymbol(']')) {
          do {
            instance.variants.push_back(lex.String("a quoted variant"));
          } while (lex.TrySymbol(','));
          lex.Symbol(']');
        }
      }
      lex.End();
      schema.instances.push_back(std::move(instance));
    } else if (directive == "version") {
      const LineToken *value = lex.Peek();
      if (value == nullptr || value->kind == LineToken::kSymbol) {
        lex.Fail("a version string");
      }
      schema.version = value->kind == LineToken::kString
                           ? lex.String("a version string")
                           : lex.Word("a version string");
      lex.End();
      if (have_version) {
        throw SyntaxError(source, line_number, "version declared twice");
      }
      have_version = true;
    } else {
      throw SyntaxError(source, line_number,
                        "unknown directive '" + directive + "'");
    }
  }

  for (PendingProperty &pending : properties) {
    auto it = schema.classes.find(pending.class_name);
    if (it == schema.classes.end()) {
      violations.push_back({pending.class_name + "." + pending.def.name,
                            "property declared on undeclared class '" +
                                pending.class_name + "'"});
      continue;
    }
    it->second.properties.push_back(std::move(pending.def));
  }

  std::vector<Violation> invariants = ValidateOntology(schema);
  violations.insert(violations.end(), invariants.begin(), invariants.end());
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return schema;
}

OntologySchema LoadOntology(const std::filesystem::path &path) {
  return ParseOntology(ReadFile(path), path.string());
}

void ParseBulkInstances(std::string_view text, const std::string &source,
                        OntologySchema *schema) {
  int line_number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty() || Trim(line).front() == '#') continue;

    std::vector<std::string_view> fields;
    size_t start = 0;
    while (true) {
      size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() < 2 || fields.size() > 3) {
      throw SyntaxError(source, line_number,
                        "expected 'Class<TAB>label[<TAB>variants]'");
    }
    InstanceEntry instance;
    instance.class_name = std::string(Trim(fields[0]));
    if (!IsIdentifier(instance.class_name)) {
      throw SyntaxError(source, line_number,
                        "invalid class name '" + instance.class_name + "'");
    }
    instance.label = std::string(Trim(fields[1]));
    if (fields.size() == 3 && !Trim(fields[2]).empty()) {
      std::string_view variants = fields[2];
      size_t vstart = 0;
      while (true) {
        size_t bar = variants.find('|', vstart);
        instance.variants.emplace_back(
            Trim(variants.substr(vstart, bar - vstart)));
        if (bar == std::string_view::npos) break;
        vstart = bar + 1;
      }
    }
    instance.source = InstanceSource::kImported;
    schema->instances.push_back(std::move(instance));
  }
  std::vector<Violation> violations = ValidateOntology(*schema);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

void LoadBulkInstances(const std::filesystem::path &path,
                       OntologySchema *schema) {
  ParseBulkInstances(ReadFile(path), path.string(), schema);
}

std::vector<InstanceEntry> InstancesOf(const OntologySchema &schema,
                                       std::string_view class_name) {
  if (!schema.HasClass(class_name)) throw UnknownClass(std::string(class_name));
  std::vector<InstanceEntry> result;
  for (const InstanceEntry &instance : schema.instances) {
    if (schema.IsA(instance.class_name, class_name)) result.push_back(instance);
  }
  return result;
}

}  // namespace resumeann
