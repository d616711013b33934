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

#ifndef RESUMEANN_ANNOTATION_IO_H_
#define RESUMEANN_ANNOTATION_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "resumeann/document.h"

namespace resumeann {

// Tab-separated annotation dump, also used for gold files:
//
//   start<TAB>end<TAB>class<TAB>text
//
// one annotation per line. Backslash, tab, newline and carriage return in
// the text are written as \\, \t, \n and \r. Lines starting with '#' and
// blank lines are ignored when reading.
std::string FormatAnnotations(const std::vector<Annotation> &annotations);

// Throws SyntaxError. Parsed annotations carry Recognizer::kExternal.
std::vector<Annotation> ParseAnnotations(std::string_view text,
                                         const std::string &source = "<ann>");
std::vector<Annotation> LoadAnnotations(const std::filesystem::path &path);

}  // namespace resumeann

#endif  // RESUMEANN_ANNOTATION_IO_H_
