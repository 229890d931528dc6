#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "clozeforge/answers.hpp"

namespace clozeforge {

// Reads CLOZE_FORGE_PLUGIN_TIMEOUT_MS; defaults to 30000.
int plugin_timeout_ms();

// A child process speaking a line-delimited protocol: we write request
// lines to its stdin and read exactly one response line per request from
// its stdout, order-preserving. The command is run through /bin/sh -c.
class LineProcess {
 public:
  LineProcess(std::string command, std::string plugin_name);
  ~LineProcess();

  LineProcess(const LineProcess&) = delete;
  LineProcess& operator=(const LineProcess&) = delete;

  // Sends all lines, returns exactly lines.size() response lines.
  // Throws PluginError on child death, timeout, or short output.
  std::vector<std::string> exchange(const std::vector<std::string>& lines);

  const std::string& plugin_name() const { return name_; }

 private:
  void ensure_started();
  std::string command_;
  std::string name_;
  int child_stdin_ = -1;
  int child_stdout_ = -1;
  long pid_ = -1;
  std::string read_buffer_;
};

// Tagging plug-in: request {"id","text"}, response {"id","spans":[...]}.
// Span offsets are code-point indices into the request text.
class ProcessTagger final : public Tagger {
 public:
  explicit ProcessTagger(std::string command, std::string plugin_name = "tagger");
  std::vector<TaggedSpan> tag(const std::string& request_id, const std::string& text) override;
  std::string name() const override;

 private:
  LineProcess process_;
};

// Translator plug-in: request {"id","cloze","category"},
// response {"id","question"} with an optional numeric "score".
class ProcessTranslator {
 public:
  explicit ProcessTranslator(std::string command, std::string plugin_name = "translator");

  struct Response {
    std::string question;
    std::optional<double> score;
  };

  struct Request {
    std::string id;
    std::string cloze;
    std::string category;
  };

  std::vector<Response> translate(const std::vector<Request>& requests);
  std::string name() const { return process_.plugin_name(); }

 private:
  LineProcess process_;
};

}  // namespace clozeforge
