// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <string>

namespace frtest {

/// Self-deleting temporary file seeded with given contents.
struct TempFile {
    std::filesystem::path path;

    TempFile(const std::string& hint, const std::string& contents) {
        static std::atomic<unsigned> counter{0};
        path = std::filesystem::temp_directory_path() /
               ("frcodes-test-" + hint + "-" + std::to_string(counter++) + ".tmp");
        std::ofstream out(path, std::ios::binary);
        out << contents;
    }

    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }

    std::string str() const { return path.string(); }
};

}  // namespace frtest
