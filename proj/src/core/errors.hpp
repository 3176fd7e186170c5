// Copyright (C) 2026 tracesync contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tsync {

enum class ErrorKind {
  kInvalidArgument,
  kIo,
  kFormat,
  kInsufficientData,
  kDegenerateInput,
  kInternal,
};

/// Exception carrying an error class plus the pipeline stage that raised it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string stage, const std::string& message)
      : std::runtime_error(stage.empty() ? message : stage + ": " + message),
        kind_(kind),
        stage_(std::move(stage)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& stage() const noexcept { return stage_; }

 private:
  ErrorKind kind_;
  std::string stage_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& stage,
                              const std::string& message) {
  throw Error(kind, stage, message);
}

}  // namespace tsync
