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

#ifndef RESUMEANN_ONTOLOGY_H_
#define RESUMEANN_ONTOLOGY_H_

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resumeann/errors.h"

namespace resumeann {

enum class ValueType { kString, kInteger, kDate, kBoolean };
enum class Cardinality { kSingle, kMultiple };
enum class InstanceSource { kManual, kImported };

std::string_view ValueTypeName(ValueType type);

// True if literal parses as a value of the given type. Dates are either
// dd/mm/yyyy or yyyy-mm-dd; booleans are "true" or "false".
bool LiteralMatchesType(std::string_view literal, ValueType type);

struct PropertyDef {
  std::string name;
  ValueType value_type = ValueType::kString;
  Cardinality cardinality = Cardinality::kSingle;
  std::optional<std::string> default_value;

  bool operator==(const PropertyDef &other) const = default;
};

struct OntologyClass {
  std::string name;
  std::optional<std::string> parent;
  std::vector<PropertyDef> properties;

  bool operator==(const OntologyClass &other) const = default;
};

// A gazetteer entry: one real-world instance of a class together with its
// alternate surface forms.
struct InstanceEntry {
  std::string class_name;
  std::string label;
  std::vector<std::string> variants;
  InstanceSource source = InstanceSource::kManual;

  bool operator==(const InstanceEntry &other) const = default;
};

// One violated schema invariant. element names the offending class,
// property or instance.
struct Violation {
  std::string element;
  std::string message;

  std::string ToString() const { return element + ": " + message; }
  bool operator==(const Violation &other) const = default;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation> &violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// The annotation targets every schema has to declare.
inline constexpr std::array<std::string_view, 12> kTargetClasses = {
    "Name",    "Gender",    "Nationality", "Date",     "Address",    "Phone",
    "Fax",     "Email",     "Institute",   "Language", "Competency", "Training"};

// Classes, taxonomy, properties and instances. Immutable once loaded; the
// query methods tolerate cyclic or dangling parents so that they can be used
// on schemas that fail validation.
struct OntologySchema {
  std::map<std::string, OntologyClass> classes;
  std::vector<InstanceEntry> instances;
  std::string version;

  bool HasClass(std::string_view name) const;

  // Throws UnknownClass.
  const OntologyClass &Class(std::string_view name) const;

  // name followed by its ancestors, nearest first. Stops at the first
  // dangling parent or repeated class.
  std::vector<std::string> Lineage(std::string_view name) const;

  // True if cls is ancestor or a descendant of it.
  bool IsA(std::string_view cls, std::string_view ancestor) const;

  // Own and inherited properties, root-most class first. Throws UnknownClass.
  std::vector<PropertyDef> EffectiveProperties(std::string_view name) const;
};

// Parses the line-oriented ontology format (see docs/formats.md), then
// validates. Throws SyntaxError or ValidationError.
OntologySchema ParseOntology(std::string_view text,
                             const std::string &source = "<ontology>");
OntologySchema LoadOntology(const std::filesystem::path &path);

// Appends instances from a bulk file: one "Class<TAB>label[<TAB>v1|v2|...]"
// per line, '#' comments allowed. Entries are marked kImported. The schema is
// revalidated afterwards; throws SyntaxError or ValidationError.
void LoadBulkInstances(const std::filesystem::path &path,
                       OntologySchema *schema);
void ParseBulkInstances(std::string_view text, const std::string &source,
                        OntologySchema *schema);

// Every violated invariant; empty iff the schema is valid.
std::vector<Violation> ValidateOntology(const OntologySchema &schema);

// Instances of class_name or any of its descendants, in declaration order.
// Throws UnknownClass.
std::vector<InstanceEntry> InstancesOf(const OntologySchema &schema,
                                       std::string_view class_name);

}  // namespace resumeann

#endif  // RESUMEANN_ONTOLOGY_H_
