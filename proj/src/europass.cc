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

#include "resumeann/europass.h"

#include <expat.h>

#include <map>
#include <memory>
#include <optional>
#include <set>

#include "resumeann/text.h"
#include "resumeann/tokenizer.h"

namespace resumeann {
namespace {

enum class Slot {
  kName,
  kGender,
  kNationality,
  kAddress,
  kPhone,
  kFax,
  kEmail,
  kDate,
  kInstitute,
  kTraining,
  kOccupation,
  kSkill,
};

struct Route {
  Slot slot;
  SkillCategory category = SkillCategory::kOther;
};

const std::map<std::string, Route, std::less<>> &RoutingTable() {
  static const auto *table = new std::map<std::string, Route, std::less<>>{
      {"Name", {Slot::kName}},
      {"Gender", {Slot::kGender}},
      {"Nationality", {Slot::kNationality}},
      {"Address", {Slot::kAddress}},
      {"Phone", {Slot::kPhone}},
      {"Fax", {Slot::kFax}},
      {"Email", {Slot::kEmail}},
      {"Date", {Slot::kDate}},
      {"Institute", {Slot::kInstitute}},
      {"Training", {Slot::kTraining}},
      {"Occupation", {Slot::kOccupation}},
      {"Language", {Slot::kSkill, SkillCategory::kLanguage}},
      {"Competency", {Slot::kSkill, SkillCategory::kTechnical}},
      {"SocialSkill", {Slot::kSkill, SkillCategory::kSocialOrganisational}},
      {"OrganisationalSkill",
       {Slot::kSkill, SkillCategory::kSocialOrganisational}},
      {"ComputerSkill", {Slot::kSkill, SkillCategory::kComputer}},
      {"ArtisticSkill", {Slot::kSkill, SkillCategory::kArtistic}},
      {"DrivingLicence", {Slot::kSkill, SkillCategory::kDriving}},
      {"OtherSkill", {Slot::kSkill, SkillCategory::kOther}},
  };
  return *table;
}

std::optional<Route> RouteFor(const OntologySchema &schema,
                              const std::string &class_name) {
  if (!schema.HasClass(class_name)) throw UnknownClass(class_name);
  const auto &table = RoutingTable();
  for (const std::string &cls : schema.Lineage(class_name)) {
    auto it = table.find(cls);
    if (it != table.end()) return it->second;
  }
  return std::nullopt;
}

// True if a birth keyword appears in view[from, to) as a whole word.
bool MentionsBirth(const std::string &view, size_t from, size_t to) {
  static const std::set<std::string, std::less<>> kKeywords = {
      "naissance", "ne", "nee", "birth", "born", "dob"};
  size_t i = from;
  while (i < to) {
    while (i < to && !(view[i] >= 'a' && view[i] <= 'z')) ++i;
    size_t start = i;
    while (i < to && view[i] >= 'a' && view[i] <= 'z') ++i;
    if (i > start &&
        kKeywords.count(std::string_view(view).substr(start, i - start))) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::string_view SkillElementName(SkillCategory category) {
  switch (category) {
    case SkillCategory::kLanguage: return "Language";
    case SkillCategory::kTechnical: return "Technical";
    case SkillCategory::kSocialOrganisational: return "SocialOrganisational";
    case SkillCategory::kComputer: return "Computer";
    case SkillCategory::kArtistic: return "Artistic";
    case SkillCategory::kDriving: return "Driving";
    case SkillCategory::kOther: return "Other";
  }
  return "Other";
}

EuropassResume Assemble(const SourceDocument &doc,
                        const std::vector<Annotation> &annotations,
                        const OntologySchema &schema) {
  EuropassResume resume;
  std::vector<Annotation> sorted = annotations;
  std::stable_sort(sorted.begin(), sorted.end(), AnnotationLess);

  std::vector<SentenceSpan> sentences = SplitSentences(doc);
  std::vector<std::optional<Route>> routes;
  std::set<size_t> education_sentences;
  for (const Annotation &a : sorted) {
    routes.push_back(RouteFor(schema, a.class_name));
    if (routes.back() && (routes.back()->slot == Slot::kInstitute ||
                          routes.back()->slot == Slot::kTraining)) {
      education_sentences.insert(SentenceIndexAt(sentences, a.start));
    }
  }

  std::map<size_t, size_t> education_of_sentence;
  std::map<size_t, size_t> work_of_sentence;
  auto education_for = [&](size_t sentence) -> Education & {
    auto [it, inserted] =
        education_of_sentence.emplace(sentence, resume.education.size());
    if (inserted) resume.education.emplace_back();
    return resume.education[it->second];
  };
  auto work_for = [&](size_t sentence) -> WorkExperience & {
    auto [it, inserted] =
        work_of_sentence.emplace(sentence, resume.work_experience.size());
    if (inserted) resume.work_experience.emplace_back();
    return resume.work_experience[it->second];
  };
  auto fill = [&](std::string &slot, const std::string &value) {
    if (slot.empty()) {
      slot = value;
    } else {
      resume.additional.push_back(value);
    }
  };

  for (size_t i = 0; i < sorted.size(); ++i) {
    const Annotation &a = sorted[i];
    const std::string &text = a.matched_text;
    if (!routes[i]) {
      resume.additional.push_back(text);
      continue;
    }
    size_t sentence = SentenceIndexAt(sentences, a.start);
    PersonalInformation &p = resume.personal;
    switch (routes[i]->slot) {
      case Slot::kName:
        if (p.first_name.empty()) {
          p.first_name = text;
        } else {
          fill(p.surname, text);
        }
        break;
      case Slot::kGender: fill(p.gender, text); break;
      case Slot::kNationality: fill(p.nationality, text); break;
      case Slot::kAddress: fill(p.address, text); break;
      case Slot::kPhone: fill(p.telephone, text); break;
      case Slot::kFax: fill(p.fax, text); break;
      case Slot::kEmail: fill(p.email, text); break;
      case Slot::kDate: {
        size_t from = sentence < sentences.size() ? sentences[sentence].start
                                                  : a.start;
        bool birth = a.start < kPersonalBlockChars ||
                     MentionsBirth(doc.folded_view(), from, a.start);
        if (birth && p.date_of_birth.empty()) {
          p.date_of_birth = text;
        } else if (education_sentences.count(sentence)) {
          fill(education_for(sentence).date, text);
        } else {
          fill(work_for(sentence).date, text);
        }
        break;
      }
      case Slot::kInstitute: fill(education_for(sentence).contents, text); break;
      case Slot::kTraining: fill(education_for(sentence).level, text); break;
      case Slot::kOccupation:
        fill(work_for(sentence).occupation, text);
        break;
      case Slot::kSkill:
        resume.skill(routes[i]->category).push_back(text);
        break;
    }
  }
  return resume;
}

namespace {

class XmlWriter {
 public:
  XmlWriter() { out_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"; }

  void Open(std::string_view name) {
    Indent();
    out_ += '<';
    out_ += name;
    out_ += ">\n";
    ++depth_;
  }

  void Close(std::string_view name) {
    --depth_;
    Indent();
    out_ += "</";
    out_ += name;
    out_ += ">\n";
  }

  void Empty(std::string_view name) {
    Indent();
    out_ += '<';
    out_ += name;
    out_ += "/>\n";
  }

  void Leaf(std::string_view name, std::string_view value) {
    if (value.empty()) {
      Empty(name);
      return;
    }
    Indent();
    out_ += '<';
    out_ += name;
    out_ += '>';
    AppendEscaped(value);
    out_ += "</";
    out_ += name;
    out_ += ">\n";
  }

  void List(std::string_view name, const std::vector<std::string> &items) {
    if (items.empty()) {
      Empty(name);
      return;
    }
    Open(name);
    for (const std::string &item : items) Leaf("Item", item);
    Close(name);
  }

  std::string Take() { return std::move(out_); }

 private:
  static bool IsXmlChar(char32_t c) {
    return c == 0x9 || c == 0xA || c == 0xD || (c >= 0x20 && c <= 0xD7FF) ||
           (c >= 0xE000 && c <= 0xFFFD) || (c >= 0x10000 && c <= 0x10FFFF);
  }

  void AppendEscaped(std::string_view value) {
    std::u32string chars;
    try {
      chars = DecodeUtf8(value);
    } catch (const EncodingError &) {
      chars = U"�";
    }
    for (char32_t c : chars) {
      switch (c) {
        case '&': out_ += "&amp;"; break;
        case '<': out_ += "&lt;"; break;
        case '>': out_ += "&gt;"; break;
        case '\r': out_ += "&#13;"; break;
        default: AppendUtf8(IsXmlChar(c) ? c : 0xFFFD, &out_);
      }
    }
  }

  void Indent() { out_.append(2 * depth_, ' '); }

  std::string out_;
  int depth_ = 0;
};

// Minimal element tree built from expat callbacks.
struct XmlNode {
  std::string name;
  std::string text;
  std::vector<XmlNode> children;
  int line = 0;
};

struct TreeBuilder {
  XML_Parser parser = nullptr;
  XmlNode root;
  std::vector<XmlNode *> stack;
  bool has_root = false;
  std::string layout_error;
};

void OnStart(void *data, const XML_Char *name, const XML_Char **attributes) {
  auto *b = static_cast<TreeBuilder *>(data);
  int line = static_cast<int>(XML_GetCurrentLineNumber(b->parser));
  if (attributes != nullptr && attributes[0] != nullptr &&
      b->layout_error.empty()) {
    b->layout_error = "line " + std::to_string(line) +
                      ": unexpected attribute '" + attributes[0] + "' on <" +
                      name + ">";
  }
  XmlNode *node;
  if (b->stack.empty()) {
    b->has_root = true;
    node = &b->root;
  } else {
    b->stack.back()->children.emplace_back();
    node = &b->stack.back()->children.back();
  }
  node->name = name;
  node->line = line;
  b->stack.push_back(node);
}

void OnEnd(void *data, const XML_Char *) {
  static_cast<TreeBuilder *>(data)->stack.pop_back();
}

void OnText(void *data, const XML_Char *s, int len) {
  auto *b = static_cast<TreeBuilder *>(data);
  if (!b->stack.empty()) b->stack.back()->text.append(s, len);
}

[[noreturn]] void Misplaced(const XmlNode &node, const std::string &parent) {
  throw LayoutError("line " + std::to_string(node.line) + ": unexpected <" +
                    node.name + "> in <" + parent + ">");
}

void RequireContainer(const XmlNode &node) {
  if (!Trim(node.text).empty()) {
    throw LayoutError("line " + std::to_string(node.line) + ": <" + node.name +
                      "> must not contain text");
  }
}

const std::string &LeafText(const XmlNode &node) {
  if (!node.children.empty()) {
    throw LayoutError("line " + std::to_string(node.line) + ": <" + node.name +
                      "> must not contain elements");
  }
  return node.text;
}

// Reads the fixed set of leaf children of node into the given slots.
void ReadRecord(const XmlNode &node,
                std::initializer_list<std::pair<std::string_view, std::string *>>
                    fields) {
  RequireContainer(node);
  std::set<std::string> seen;
  for (const XmlNode &child : node.children) {
    std::string *slot = nullptr;
    for (const auto &[name, target] : fields) {
      if (child.name == name) slot = target;
    }
    if (slot == nullptr) Misplaced(child, node.name);
    if (!seen.insert(child.name).second) {
      throw LayoutError("line " + std::to_string(child.line) + ": duplicate <" +
                        child.name + ">");
    }
    *slot = LeafText(child);
  }
}

std::vector<std::string> ReadItems(const XmlNode &node) {
  RequireContainer(node);
  std::vector<std::string> items;
  for (const XmlNode &child : node.children) {
    if (child.name != "Item") Misplaced(child, node.name);
    items.push_back(LeafText(child));
  }
  return items;
}

}  // namespace

std::string ToXml(const EuropassResume &resume) {
  XmlWriter w;
  w.Open("EuropassCV");

  const PersonalInformation &p = resume.personal;
  w.Open("PersonalInformation");
  w.Leaf("FirstName", p.first_name);
  w.Leaf("Surname", p.surname);
  w.Leaf("Address", p.address);
  w.Leaf("Telephone", p.telephone);
  w.Leaf("Fax", p.fax);
  w.Leaf("Email", p.email);
  w.Leaf("Nationality", p.nationality);
  w.Leaf("DateOfBirth", p.date_of_birth);
  w.Leaf("Gender", p.gender);
  w.Close("PersonalInformation");

  if (resume.work_experience.empty()) {
    w.Empty("WorkExperience");
  } else {
    w.Open("WorkExperience");
    for (const WorkExperience &e : resume.work_experience) {
      w.Open("Position");
      w.Leaf("Occupation", e.occupation);
      w.Leaf("Date", e.date);
      w.Leaf("Activities", e.activities);
      w.Close("Position");
    }
    w.Close("WorkExperience");
  }

  if (resume.education.empty()) {
    w.Empty("EducationTraining");
  } else {
    w.Open("EducationTraining");
    for (const Education &e : resume.education) {
      w.Open("Education");
      w.Leaf("Contents", e.contents);
      w.Leaf("Date", e.date);
      w.Leaf("Skills", e.skills);
      w.Leaf("Level", e.level);
      w.Close("Education");
    }
    w.Close("EducationTraining");
  }

  w.Open("Skills");
  for (size_t i = 0; i < kSkillCategoryCount; ++i) {
    w.List(SkillElementName(static_cast<SkillCategory>(i)), resume.skills[i]);
  }
  w.Close("Skills");

  w.List("AdditionalInformation", resume.additional);
  w.List("Annexes", resume.annexes);
  w.Close("EuropassCV");
  return w.Take();
}

EuropassResume FromXml(std::string_view xml) {
  TreeBuilder builder;
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)>
      parser(XML_ParserCreate("UTF-8"), &XML_ParserFree);
  if (!parser) throw Error("cannot allocate XML parser");
  builder.parser = parser.get();
  XML_SetUserData(parser.get(), &builder);
  XML_SetElementHandler(parser.get(), OnStart, OnEnd);
  XML_SetCharacterDataHandler(parser.get(), OnText);
  if (XML_Parse(parser.get(), xml.data(), static_cast<int>(xml.size()),
                XML_TRUE) == XML_STATUS_ERROR) {
    throw SyntaxError("<xml>",
                      static_cast<int>(XML_GetCurrentLineNumber(parser.get())),
                      XML_ErrorString(XML_GetErrorCode(parser.get())));
  }
  if (!builder.layout_error.empty()) throw LayoutError(builder.layout_error);

  const XmlNode &root = builder.root;
  if (root.name != "EuropassCV") {
    throw LayoutError("root element must be <EuropassCV>, found <" +
                      root.name + ">");
  }
  RequireContainer(root);

  EuropassResume resume;
  std::set<std::string> seen;
  for (const XmlNode &section : root.children) {
    if (!seen.insert(section.name).second) {
      throw LayoutError("line " + std::to_string(section.line) +
                        ": duplicate <" + section.name + ">");
    }
    if (section.name == "PersonalInformation") {
      PersonalInformation &p = resume.personal;
      ReadRecord(section, {{"FirstName", &p.first_name},
                           {"Surname", &p.surname},
                           {"Address", &p.address},
                           {"Telephone", &p.telephone},
                           {"Fax", &p.fax},
                           {"Email", &p.email},
                           {"Nationality", &p.nationality},
                           {"DateOfBirth", &p.date_of_birth},
                           {"Gender", &p.gender}});
    } else if (section.name == "WorkExperience") {
      RequireContainer(section);
      for (const XmlNode &child : section.children) {
        if (child.name != "Position") Misplaced(child, section.name);
        WorkExperience &e = resume.work_experience.emplace_back();
        ReadRecord(child, {{"Occupation", &e.occupation},
                           {"Date", &e.date},
                           {"Activities", &e.activities}});
      }
    } else if (section.name == "EducationTraining") {
      RequireContainer(section);
      for (const XmlNode &child : section.children) {
        if (child.name != "Education") Misplaced(child, section.name);
        Education &e = resume.education.emplace_back();
        ReadRecord(child, {{"Contents", &e.contents},
                           {"Date", &e.date},
                           {"Skills", &e.skills},
                           {"Level", &e.level}});
      }
    } else if (section.name == "Skills") {
      RequireContainer(section);
      std::set<std::string> categories;
      for (const XmlNode &child : section.children) {
        size_t index = kSkillCategoryCount;
        for (size_t i = 0; i < kSkillCategoryCount; ++i) {
          if (child.name == SkillElementName(static_cast<SkillCategory>(i))) {
            index = i;
          }
        }
        if (index == kSkillCategoryCount) Misplaced(child, section.name);
        if (!categories.insert(child.name).second) {
          throw LayoutError("line " + std::to_string(child.line) +
                            ": duplicate <" + child.name + ">");
        }
        resume.skills[index] = ReadItems(child);
      }
    } else if (section.name == "AdditionalInformation") {
      resume.additional = ReadItems(section);
    } else if (section.name == "Annexes") {
      resume.annexes = ReadItems(section);
    } else {
      Misplaced(section, root.name);
    }
  }
  return resume;
}

}  // namespace resumeann
