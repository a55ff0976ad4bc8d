#pragma once

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

// Helpers for driving the command-line binary from tests. Commands run
// through /bin/sh so pipelines can be exercised as users would write them.
namespace cli {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string shell_quote(const std::string& s) {
    std::string quoted = "'";
    for (char c : s) {
        if (c == '\'')
            quoted += "'\\''";
        else
            quoted += c;
    }
    quoted += "'";
    return quoted;
}

inline std::filesystem::path temp_file(const std::string& hint) {
    static int counter = 0;
    return std::filesystem::temp_directory_path() /
           (hint + "." + std::to_string(::getpid()) + "." + std::to_string(counter++));
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline RunResult run_command(std::string command, const std::string& stdin_data = "") {
    RunResult result;
    const auto err_path = temp_file("stderr");
    std::filesystem::path in_path;
    if (!stdin_data.empty()) {
        in_path = temp_file("stdin");
        write_file(in_path, stdin_data);
        command += " < " + shell_quote(in_path.string());
    }
    command += " 2> " + shell_quote(err_path.string());
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    const int status = ::pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    result.err = read_file(err_path);
    std::filesystem::remove(err_path);
    if (!in_path.empty()) std::filesystem::remove(in_path);
    return result;
}

inline std::string binary_path() { return LINKDIM_CLI_PATH; }

inline RunResult run_cli(const std::vector<std::string>& args,
                         const std::string& stdin_data = "") {
    std::string command = shell_quote(binary_path());
    for (const auto& arg : args) command += " " + shell_quote(arg);
    return run_command(command, stdin_data);
}

} // namespace cli
