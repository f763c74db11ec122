// Copyright 2026 The typedrift Authors
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

#include "typedrift/util/subprocess.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <stdexcept>

namespace typedrift::util {

namespace {

void drain(int fd, std::string& sink) {
  char buf[4096];
  for (;;) {
    ssize_t n = read(fd, buf, sizeof buf);
    if (n > 0) {
      sink.append(buf, static_cast<size_t>(n));
    } else if (n == 0 || (n < 0 && errno != EINTR && errno != EAGAIN)) {
      return;
    } else if (n < 0 && errno == EAGAIN) {
      return;
    }
  }
}

}  // namespace

ProcessResult run_process(const std::vector<std::string>& argv,
                          const std::string& working_dir,
                          double timeout_seconds) {
  if (argv.empty()) throw std::invalid_argument("empty argv");

  int out_pipe[2];
  int err_pipe[2];
  if (pipe(out_pipe) != 0 || pipe(err_pipe) != 0) {
    throw std::runtime_error("pipe() failed");
  }

  pid_t pid = fork();
  if (pid < 0) throw std::runtime_error("fork() failed");

  if (pid == 0) {
    // Child: own process group so a timeout can kill helpers too.
    setpgid(0, 0);
    if (!working_dir.empty() && chdir(working_dir.c_str()) != 0) _exit(127);
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(err_pipe[1], STDERR_FILENO);
    close(out_pipe[0]);
    close(out_pipe[1]);
    close(err_pipe[0]);
    close(err_pipe[1]);
    std::vector<char*> args;
    args.reserve(argv.size() + 1);
    for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
    args.push_back(nullptr);
    execvp(args[0], args.data());
    _exit(127);
  }

  close(out_pipe[1]);
  close(err_pipe[1]);
  fcntl(out_pipe[0], F_SETFL, O_NONBLOCK);
  fcntl(err_pipe[0], F_SETFL, O_NONBLOCK);

  ProcessResult result;
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration<double>(timeout_seconds);
  bool open_out = true;
  bool open_err = true;

  while (open_out || open_err) {
    struct pollfd fds[2];
    nfds_t nfds = 0;
    if (open_out) fds[nfds++] = {out_pipe[0], POLLIN, 0};
    if (open_err) fds[nfds++] = {err_pipe[0], POLLIN, 0};

    auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
                         deadline - std::chrono::steady_clock::now())
                         .count();
    if (remaining <= 0) {
      result.timed_out = true;
      kill(-pid, SIGKILL);
      break;
    }
    int rc = poll(fds, nfds, static_cast<int>(remaining > 200 ? 200 : remaining));
    if (rc < 0 && errno != EINTR) break;
    nfds_t idx = 0;
    if (open_out) {
      if (fds[idx].revents & (POLLIN | POLLHUP)) {
        size_t before = result.stdout_text.size();
        drain(out_pipe[0], result.stdout_text);
        if ((fds[idx].revents & POLLHUP) && result.stdout_text.size() == before) {
          open_out = false;
        }
      }
      ++idx;
    }
    if (open_err) {
      if (fds[idx].revents & (POLLIN | POLLHUP)) {
        size_t before = result.stderr_text.size();
        drain(err_pipe[0], result.stderr_text);
        if ((fds[idx].revents & POLLHUP) && result.stderr_text.size() == before) {
          open_err = false;
        }
      }
    }
  }

  // Final drain after EOF or kill.
  drain(out_pipe[0], result.stdout_text);
  drain(err_pipe[0], result.stderr_text);
  close(out_pipe[0]);
  close(err_pipe[0]);

  int status = 0;
  if (waitpid(pid, &status, 0) == pid) {
    if (WIFEXITED(status)) {
      result.exited = true;
      result.exit_code = WEXITSTATUS(status);
    } else if (WIFSIGNALED(status)) {
      result.term_signal = WTERMSIG(status);
    }
  }
  return result;
}

}  // namespace typedrift::util
