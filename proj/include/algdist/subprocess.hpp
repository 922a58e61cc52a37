#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

namespace algdist {

struct ProcessResult {
  int exit_code = -1;       // valid when !timed_out and the process exited normally
  bool timed_out = false;
  bool signaled = false;
  std::string out;
  std::string err;
};

/// Runs argv[0] with the given arguments in `working_dir`, capturing stdout
/// and stderr. The process is killed once `timeout` elapses. Throws
/// std::system_error if the program cannot be started.
ProcessResult run_process(const std::vector<std::string>& argv,
                          const std::filesystem::path& working_dir,
                          std::chrono::milliseconds timeout);

/// Shell-style quoting of argv for logs.
std::string format_command(const std::vector<std::string>& argv);

}  // namespace algdist
