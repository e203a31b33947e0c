#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace quasinet::cli {

/// Exit codes: 0 success, 1 internal error, 2 input error.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kInputError = 2;

struct Options {
    std::string config;
    std::string out;
    std::string format;
    std::uint64_t seed = 1;
};

/// Each command writes its result to `out` (or to options.out when set) and
/// diagnostics to `err`, returning an exit code.
int cmd_compose(const Options& options, std::ostream& out, std::ostream& err);
int cmd_scan(const Options& options, std::ostream& out, std::ostream& err);
int cmd_certify(const Options& options, std::ostream& out, std::ostream& err);
int cmd_demo(const Options& options, std::ostream& out, std::ostream& err);

/// Full argv dispatch, as used by the quasinet binary.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace quasinet::cli
