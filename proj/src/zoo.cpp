#include "mf/zoo.hpp"

namespace mf::zoo {

Multigraph complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) es.push_back({i, j});
    return Multigraph(n, es);
}

Multigraph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return Multigraph(n, es);
}

Multigraph path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return Multigraph(n, es);
}

Multigraph star(int leaves) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
    return Multigraph(leaves + 1, es);
}

Multigraph k23() { return Multigraph(2, {{0, 1}, {0, 1}, {0, 1}}); }

Multigraph k4() { return complete(4); }

Multigraph k33() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) es.push_back({i, j});
    return Multigraph(6, es);
}

Multigraph prism() {
    return Multigraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                          {0, 3}, {1, 4}, {2, 5}});
}

Multigraph cube() {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b) {
            int u = v ^ (1 << b);
            if (v < u) es.push_back({v, u});
        }
    return Multigraph(8, es);
}

Multigraph generalized_petersen(int n, int k) {
    if (n < 3 || k < 1 || 2 * k == n)
        throw std::invalid_argument("bad generalized Petersen parameters");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});          // outer
    for (int i = 0; i < n; ++i) es.push_back({i, n + i});                // spokes
    for (int i = 0; i < n; ++i) es.push_back({n + i, n + (i + k) % n});  // inner
    return Multigraph(2 * n, es);
}

Multigraph petersen() { return generalized_petersen(5, 2); }

Multigraph dodecahedron() { return generalized_petersen(10, 2); }

Multigraph heawood() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 7; ++i)
        for (int d : {0, 1, 3}) es.push_back({(i + d) % 7, 7 + i});
    return Multigraph(14, es);
}

Multigraph coxeter() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 7; ++i) {
        es.push_back({i, (i + 1) % 7});
        es.push_back({7 + i, 7 + (i + 2) % 7});
        es.push_back({14 + i, 14 + (i + 3) % 7});
    }
    for (int i = 0; i < 7; ++i) {
        es.push_back({21 + i, i});
        es.push_back({21 + i, 7 + i});
        es.push_back({21 + i, 14 + i});
    }
    return Multigraph(28, es);
}

Multigraph moebius_ladder(int n) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("moebius_ladder needs even n >= 4");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    for (int i = 0; i < n / 2; ++i) es.push_back({i, i + n / 2});
    return Multigraph(n, es);
}

}  // namespace mf::zoo
