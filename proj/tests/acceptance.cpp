#include <cstdlib>
#include <iostream>

#include "verify.hpp"

int main() {
    std::uint64_t seed = 1;
    if (const char* s = std::getenv("EQLAB_SEED")) seed = std::strtoull(s, nullptr, 10);
    int failed = 0;
    for (const auto& c : eqlab::verify::criteria()) {
        const auto r = eqlab::verify::run(c, seed);
        std::cout << eqlab::verify::format_line(r) << std::endl;
        if (!r.pass) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
