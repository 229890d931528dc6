#include "clozeforge/plugin.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>

#include "clozeforge/errors.hpp"
#include "json.hpp"

namespace clozeforge {

int plugin_timeout_ms() {
  const char* env = std::getenv("CLOZE_FORGE_PLUGIN_TIMEOUT_MS");
  if (env == nullptr || *env == '\0') return 30000;
  const long v = std::strtol(env, nullptr, 10);
  return v > 0 ? static_cast<int>(v) : 30000;
}

LineProcess::LineProcess(std::string command, std::string plugin_name)
    : command_(std::move(command)), name_(std::move(plugin_name)) {}

LineProcess::~LineProcess() {
  if (child_stdin_ >= 0) ::close(child_stdin_);
  if (child_stdout_ >= 0) ::close(child_stdout_);
  if (pid_ > 0) {
    int status = 0;
    if (::waitpid(static_cast<pid_t>(pid_), &status, WNOHANG) == 0) {
      ::kill(static_cast<pid_t>(pid_), SIGTERM);
      ::waitpid(static_cast<pid_t>(pid_), &status, 0);
    }
  }
}

void LineProcess::ensure_started() {
  if (pid_ > 0) return;
  // A dead child must surface as EPIPE, not kill us.
  static const bool sigpipe_ignored = [] {
    ::signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)sigpipe_ignored;
  int in_pipe[2];   // parent -> child
  int out_pipe[2];  // child -> parent
  if (::pipe(in_pipe) != 0 || ::pipe(out_pipe) != 0) {
    throw PluginError("plugin '" + name_ + "': cannot create pipes: " + std::strerror(errno));
  }
  const pid_t pid = ::fork();
  if (pid < 0) {
    throw PluginError("plugin '" + name_ + "': fork failed: " + std::strerror(errno));
  }
  if (pid == 0) {
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    ::close(out_pipe[0]);
    ::close(out_pipe[1]);
    ::execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  child_stdin_ = in_pipe[1];
  child_stdout_ = out_pipe[0];
  ::fcntl(child_stdin_, F_SETFL, O_NONBLOCK);
  ::fcntl(child_stdout_, F_SETFL, O_NONBLOCK);
  pid_ = pid;
}

std::vector<std::string> LineProcess::exchange(const std::vector<std::string>& lines) {
  ensure_started();

  std::string pending;
  for (const std::string& l : lines) {
    pending += l;
    pending += '\n';
  }
  std::size_t written = 0;

  std::vector<std::string> responses;
  responses.reserve(lines.size());
  const int timeout_ms = plugin_timeout_ms();

  auto take_lines = [&]() {
    std::size_t start = 0;
    for (;;) {
      const std::size_t nl = read_buffer_.find('\n', start);
      if (nl == std::string::npos) break;
      responses.push_back(read_buffer_.substr(start, nl - start));
      start = nl + 1;
      if (responses.size() == lines.size()) break;
    }
    read_buffer_.erase(0, start);
  };
  take_lines();  // lines buffered from a previous exchange would be a protocol error
  if (!responses.empty()) {
    throw PluginError("plugin '" + name_ + "' emitted unexpected extra output");
  }

  while (responses.size() < lines.size()) {
    struct pollfd fds[2];
    int nfds = 0;
    fds[nfds].fd = child_stdout_;
    fds[nfds].events = POLLIN;
    ++nfds;
    const bool want_write = written < pending.size();
    if (want_write) {
      fds[nfds].fd = child_stdin_;
      fds[nfds].events = POLLOUT;
      ++nfds;
    }
    const int rc = ::poll(fds, static_cast<nfds_t>(nfds), timeout_ms);
    if (rc < 0) {
      if (errno == EINTR) continue;
      throw PluginError("plugin '" + name_ + "': poll failed: " + std::strerror(errno));
    }
    if (rc == 0) {
      throw PluginError("plugin '" + name_ + "' timed out after " + std::to_string(timeout_ms) +
                        " ms waiting for line " + std::to_string(responses.size() + 1));
    }
    if (fds[0].revents & POLLIN) {
      char buf[65536];
      const ssize_t n = ::read(child_stdout_, buf, sizeof buf);
      if (n > 0) {
        read_buffer_.append(buf, static_cast<std::size_t>(n));
        take_lines();
        continue;
      }
      if (n == 0) {
        throw PluginError("plugin '" + name_ + "' exited after line " +
                          std::to_string(responses.size()) + " of " + std::to_string(lines.size()));
      }
      if (errno != EAGAIN && errno != EWOULDBLOCK) {
        throw PluginError("plugin '" + name_ + "': read failed: " + std::strerror(errno));
      }
    }
    if (fds[0].revents & (POLLHUP | POLLERR)) {
      // Drain whatever is left before declaring the child dead.
      char buf[65536];
      ssize_t n;
      while ((n = ::read(child_stdout_, buf, sizeof buf)) > 0) {
        read_buffer_.append(buf, static_cast<std::size_t>(n));
      }
      take_lines();
      if (responses.size() < lines.size()) {
        throw PluginError("plugin '" + name_ + "' exited after line " +
                          std::to_string(responses.size()) + " of " + std::to_string(lines.size()));
      }
      break;
    }
    if (want_write && nfds > 1 && (fds[1].revents & (POLLOUT | POLLERR))) {
      const ssize_t n = ::write(child_stdin_, pending.data() + written, pending.size() - written);
      if (n > 0) {
        written += static_cast<std::size_t>(n);
      } else if (n < 0 && errno == EPIPE) {
        throw PluginError("plugin '" + name_ + "' closed its input early");
      } else if (n < 0 && errno != EAGAIN && errno != EWOULDBLOCK) {
        throw PluginError("plugin '" + name_ + "': write failed: " + std::strerror(errno));
      }
    }
  }
  return responses;
}

ProcessTagger::ProcessTagger(std::string command, std::string plugin_name)
    : process_(std::move(command), std::move(plugin_name)) {}

std::string ProcessTagger::name() const { return process_.plugin_name(); }

std::vector<TaggedSpan> ProcessTagger::tag(const std::string& request_id, const std::string& text) {
  nlohmann::json req = {{"id", request_id}, {"text", text}};
  const std::vector<std::string> replies = process_.exchange({req.dump()});

  nlohmann::json j = nlohmann::json::parse(replies[0], nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("spans") || !j["spans"].is_array()) {
    throw PluginError("tagger '" + name() + "' returned a malformed response line 1");
  }
  if (!j.contains("id") || j["id"].get<std::string>() != request_id) {
    throw PluginError("tagger '" + name() + "' returned a mismatched id on line 1");
  }
  std::vector<TaggedSpan> spans;
  for (const auto& s : j["spans"]) {
    if (!s.is_object() || !s.contains("start") || !s.contains("end") || !s.contains("label")) {
      throw PluginError("tagger '" + name() + "' returned a malformed span");
    }
    const long long start = s["start"].get<long long>();
    const long long end = s["end"].get<long long>();
    if (start < 0 || end < start) {
      throw PluginError("tagger '" + name() + "' returned a negative span");
    }
    spans.push_back({static_cast<std::size_t>(start), static_cast<std::size_t>(end),
                     s["label"].get<std::string>()});
  }
  return spans;
}

ProcessTranslator::ProcessTranslator(std::string command, std::string plugin_name)
    : process_(std::move(command), std::move(plugin_name)) {}

std::vector<ProcessTranslator::Response> ProcessTranslator::translate(
    const std::vector<Request>& requests) {
  std::vector<std::string> lines;
  lines.reserve(requests.size());
  for (const Request& r : requests) {
    nlohmann::json req = {{"id", r.id}, {"cloze", r.cloze}, {"category", r.category}};
    lines.push_back(req.dump());
  }
  const std::vector<std::string> replies = process_.exchange(lines);

  std::vector<Response> out;
  out.reserve(replies.size());
  for (std::size_t i = 0; i < replies.size(); ++i) {
    nlohmann::json j = nlohmann::json::parse(replies[i], nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("question") ||
        !j["question"].is_string()) {
      throw PluginError("translator '" + name() + "' returned a malformed response on line " +
                        std::to_string(i + 1));
    }
    if (!j.contains("id") || !j["id"].is_string() ||
        j["id"].get<std::string>() != requests[i].id) {
      throw PluginError("translator '" + name() + "' returned a mismatched id on line " +
                        std::to_string(i + 1));
    }
    Response r;
    r.question = j["question"].get<std::string>();
    if (j.contains("score") && j["score"].is_number()) r.score = j["score"].get<double>();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace clozeforge
