// Copyright 2026 The bgc-learn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace bgc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define BGC_DEFINE_ERROR(Name)                                                 \
    class Name : public Error {                                                \
      public:                                                                  \
        explicit Name(const std::string &what) : Error(#Name ": " + what) {}   \
    }

BGC_DEFINE_ERROR(SupportCapExceeded);
BGC_DEFINE_ERROR(DimensionMismatch);
BGC_DEFINE_ERROR(TargetOutsideSubset);
BGC_DEFINE_ERROR(InvalidArgument);
BGC_DEFINE_ERROR(LengthMismatch);
BGC_DEFINE_ERROR(EnumerationCapExceeded);
BGC_DEFINE_ERROR(EmptyNet);
BGC_DEFINE_ERROR(PostselectionImpossible);
BGC_DEFINE_ERROR(InvalidRegime);
BGC_DEFINE_ERROR(EigRootFailure);
BGC_DEFINE_ERROR(IncompleteDataset);
BGC_DEFINE_ERROR(ParseError);
BGC_DEFINE_ERROR(ConfigError);
BGC_DEFINE_ERROR(IoError);

#undef BGC_DEFINE_ERROR

} // namespace bgc
