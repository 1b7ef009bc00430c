/*
 * Copyright 2026 The mscc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "mscc/errors.hpp"

namespace mscc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::PrecoderNotFound: return "PrecoderNotFound";
    case ErrorKind::IndivisibleSplit: return "IndivisibleSplit";
    case ErrorKind::NonIntegralT: return "NonIntegralT";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::InvalidProfile: return "InvalidProfile";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::InfiniteGap: return "InfiniteGap";
    case ErrorKind::DecodeFailure: return "DecodeFailure";
    case ErrorKind::SingularDecodeMatrix: return "SingularDecodeMatrix";
    case ErrorKind::LedgerOverflow: return "LedgerOverflow";
    case ErrorKind::ParameterRejected: return "ParameterRejected";
    case ErrorKind::IOError: return "IOError";
  }
  return "Unknown";
}

}  // namespace mscc
