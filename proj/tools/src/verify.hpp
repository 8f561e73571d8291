#ifndef EQLAB_TOOLS_VERIFY_HPP
#define EQLAB_TOOLS_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace eqlab::verify {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id = 0;
    std::string title;
    double limit_seconds = 0;
    std::function<Outcome(std::uint64_t seed)> run;
};

struct Result {
    int id = 0;
    std::string title;
    bool pass = false;
    double seconds = 0;
    double limit_seconds = 0;
    std::string detail;
};

/// The built-in acceptance corpus, criteria 1 through 9.
const std::vector<Criterion>& criteria();

/// Runs one criterion; exceptions and overruns of the time limit count as
/// failures.
Result run(const Criterion& c, std::uint64_t seed);

/// "PASS 2 ... (0.01 s) detail"
std::string format_line(const Result& r);

} // namespace eqlab::verify

#endif
