#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <parking/cli.hpp>

namespace parking::golden {

struct outcome {
    std::string name;
    bool passed = false;
    std::string detail;
};

inline std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Runs every case in <dir>/cases.json in-process and compares stdout
/// byte-for-byte with <dir>/<name>.out. With PARKING_UPDATE_GOLDEN=1 set,
/// rewrites the .out files instead.
inline std::vector<outcome> run_all(const std::filesystem::path& dir)
{
    const bool update = std::getenv("PARKING_UPDATE_GOLDEN") != nullptr;
    const auto cases = nlohmann::json::parse(read_file(dir / "cases.json"));
    std::vector<outcome> results;
    for (const auto& c : cases) {
        outcome o{c.at("name").get<std::string>()};
        std::ostringstream out, err;
        const int code = cli::run(c.at("args").get<std::vector<std::string>>(), out, err);
        const auto path = dir / (o.name + ".out");
        if (update) std::ofstream(path, std::ios::binary) << out.str();

        const int expected_code = c.at("exit").get<int>();
        if (code != expected_code) {
            o.detail = "exit " + std::to_string(code) + ", expected " + std::to_string(expected_code) + "; " + err.str();
        } else if (!std::filesystem::exists(path)) {
            o.detail = "missing " + path.string();
        } else if (read_file(path) != out.str()) {
            o.detail = "output differs from " + path.string() + ":\n" + out.str();
        } else {
            o.passed = true;
        }
        results.push_back(std::move(o));
    }
    return results;
}

} // namespace parking::golden
