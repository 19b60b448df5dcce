#pragma once

#include <cstdlib>
#include <filesystem>
#include <string>

#include "infometer/error.hpp"

namespace infometer::baselines {

/// Private scratch directory, removed with its contents on destruction.
class TempDir {
public:
    TempDir() {
        std::string tmpl = (std::filesystem::temp_directory_path() / "infometer-XXXXXX").string();
        if (mkdtemp(tmpl.data()) == nullptr) {
            throw IoError("cannot create temporary directory " + tmpl);
        }
        path_ = tmpl;
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
};

} // namespace infometer::baselines
