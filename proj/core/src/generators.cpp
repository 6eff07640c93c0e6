#include "coarse/generators.hpp"

#include <limits>
#include <random>

namespace coarse {

Graph make_path(int n) {
    if (n < 1) throw InputError("path needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph make_cycle(int n) {
    if (n < 3) throw InputError("cycle needs at least three vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph::from_edges(n, edges);
}

Graph make_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw InputError("grid needs positive dimensions");
    std::vector<std::pair<int, int>> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph::from_edges(rows * cols, edges);
}

Graph make_path_universal(int n) {
    if (n < 1) throw InputError("path length must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, n);
    return Graph::from_edges(n + 1, edges);
}

Graph make_binary_tree(int n) {
    if (n < 1) throw InputError("tree needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        if (2 * i + 1 < n) edges.emplace_back(i, 2 * i + 1);
        if (2 * i + 2 < n) edges.emplace_back(i, 2 * i + 2);
    }
    return Graph::from_edges(n, edges);
}

namespace {

// Uniform draw from [0, m) by rejecting the final partial block.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t m) {
    std::uint64_t x, r;
    do {
        x = rng();
        r = x % m;
    } while (x - r > std::numeric_limits<std::uint64_t>::max() - (m - 1));
    return r;
}

} // namespace

Graph make_random_geometric(int n, int side, int threshold, std::uint64_t seed) {
    if (n < 1) throw InputError("point count must be positive");
    if (side < 1) throw InputError("grid side must be positive");
    if (threshold < 0) throw InputError("threshold must be nonnegative");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        int x = static_cast<int>(bounded_draw(rng, static_cast<std::uint64_t>(side)));
        int y = static_cast<int>(bounded_draw(rng, static_cast<std::uint64_t>(side)));
        pts.emplace_back(x, y);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int d = std::abs(pts[static_cast<size_t>(u)].first - pts[static_cast<size_t>(v)].first) +
                    std::abs(pts[static_cast<size_t>(u)].second - pts[static_cast<size_t>(v)].second);
            if (d <= threshold) edges.emplace_back(u, v);
        }
    return Graph::from_edges(n, edges);
}

Graph make_gnp(int n, const Rat& prob, std::uint64_t seed) {
    if (n < 1) throw InputError("vertex count must be positive");
    if (prob.is_negative() || prob > Rat(1)) throw InputError("probability must be in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::uint64_t num = static_cast<std::uint64_t>(prob.num());
    std::uint64_t den = static_cast<std::uint64_t>(prob.den());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::uint64_t draw = den == 1 ? 0 : bounded_draw(rng, den);
            if (draw < num) edges.emplace_back(u, v);
        }
    return Graph::from_edges(n, edges);
}

Graph generate(const FamilySpec& spec) {
    if (spec.family == "path") return make_path(spec.n);
    if (spec.family == "cycle") return make_cycle(spec.n);
    if (spec.family == "grid") return make_grid(spec.rows, spec.cols);
    if (spec.family == "path_universal") return make_path_universal(spec.n);
    if (spec.family == "binary_tree") return make_binary_tree(spec.n);
    if (spec.family == "random_geometric")
        return make_random_geometric(spec.n, spec.side, spec.threshold, spec.seed);
    if (spec.family == "gnp") return make_gnp(spec.n, spec.prob, spec.seed);
    throw InputError("unknown family: " + spec.family);
}

} // namespace coarse
