#pragma once

#include <stdexcept>
#include <string>

namespace clozeforge {

// Exit-code mapping for the CLI: usage/config -> 1, data -> 2, plug-in -> 3.

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PluginError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace clozeforge
