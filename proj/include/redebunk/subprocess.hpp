#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace redebunk {

// Child process speaking a line protocol over stdin/stdout. The command is
// run through /bin/sh. Destroying the object closes stdin and reaps the
// child.
class LineProcess {
public:
    explicit LineProcess(const std::string& command);  // throws on spawn failure
    ~LineProcess();

    LineProcess(const LineProcess&) = delete;
    LineProcess& operator=(const LineProcess&) = delete;

    // Appends '\n'. Returns false once the child's stdin is gone.
    bool write_line(std::string_view line);

    // One line without the terminator; nullopt on EOF.
    std::optional<std::string> read_line();

    void close_stdin();

    // Blocks until exit; returns the raw wait status.
    int wait();

private:
    int pid_ = -1;
    int to_child_ = -1;
    int from_child_ = -1;
    std::string buffer_;
    bool eof_ = false;
    bool reaped_ = false;
    int status_ = 0;
};

}  // namespace redebunk
