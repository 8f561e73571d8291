#ifndef EQLAB_TOOLS_COMMANDS_HPP
#define EQLAB_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace eqlab::cli {

enum Exit { Ok = 0, Mismatch = 1, Usage = 2, Undetermined = 3 };

struct Config {
    std::string field = "q";
    std::string format = "text";  // text | json | csv
    std::uint64_t seed = 1;
    unsigned retries = 8;
    unsigned jet_ceiling = 64;
};

struct DimsArgs {
    long n = 0;
    std::string d;
    std::string spec;
    std::string spec_file;
};

struct ScanArgs {
    long n = 0;
    std::string d_range;
    std::string type;
    bool strict = false;
};

struct HiranoArgs {
    long n = 0;
    unsigned k = 0;
    std::string m_range;
};

struct TsmoothArgs {
    long n = 0;
    std::string d;
    std::string spec;
    std::string spec_file;
};

struct VerifyArgs {
    std::vector<int> only;
};

int cmd_dims(const Config& cfg, const DimsArgs& a, std::ostream& out);
int cmd_scan(const Config& cfg, const ScanArgs& a, std::ostream& out);
int cmd_hirano(const Config& cfg, const HiranoArgs& a, std::ostream& out);
int cmd_tsmooth(const Config& cfg, const TsmoothArgs& a, std::ostream& out);
int cmd_cone(const Config& cfg, const std::string& scene_file, std::ostream& out);
int cmd_classify(const Config& cfg, const std::string& input, std::ostream& out);
int cmd_verify(const Config& cfg, const VerifyArgs& a, std::ostream& out);

} // namespace eqlab::cli

#endif
