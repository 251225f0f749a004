#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "lensfib/braid.hpp"
#include "lensfib/kirby.hpp"

namespace lensfib::testing {

inline std::string temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "lensfib_tests";
    std::filesystem::create_directories(dir);
    return dir.string();
}

inline BraidWord random_word(std::mt19937& rng, int strands, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> gen_dist(1, strands - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    BraidWord w;
    w.strands = strands;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
        int g = gen_dist(rng);
        w.letters.push_back(sign_dist(rng) ? g : -g);
    }
    return w;
}

// determinant by cofactor expansion; independent of the Bareiss route
inline long long cofactor_det(const std::vector<std::vector<long long>>& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    long long det = 0;
    for (int j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        std::vector<std::vector<long long>> minor(n - 1, std::vector<long long>(n - 1));
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = a[r][c];
            }
        }
        long long term = a[0][j] * cofactor_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

inline std::vector<std::vector<long long>> random_symmetric(std::mt19937& rng, int n,
                                                            int bound) {
    std::uniform_int_distribution<int> entry(-bound, bound);
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) rows[i][j] = rows[j][i] = entry(rng);
    return rows;
}

} // namespace lensfib::testing
