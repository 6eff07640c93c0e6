#include "coarse/builders.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "coarse/separator.hpp"

namespace coarse {

unsigned long long RoundBallSet::potential() const {
    unsigned long long phi = 0;
    for (const Ball& b : balls) {
        Rat q = b.radius / Rat(base_r);
        if (!q.is_integer() || q.num() < 1)
            throw InvariantError("ball radius " + b.radius.str() +
                                 " is not a positive multiple of " + std::to_string(base_r));
        if (q.num() >= 62) throw InvariantError("ball-set potential overflow");
        phi += 1ULL << q.num();
    }
    return phi;
}

Rat RoundBallSet::max_radius() const {
    Rat m(0);
    for (const Ball& b : balls)
        if (b.radius > m) m = b.radius;
    return m;
}

bool RoundBallSet::is_round() const {
    for (const Ball& b : balls) {
        Rat q = b.radius / Rat(base_r);
        if (!q.is_integer() || q.num() < 1) return false;
    }
    return true;
}

int crowding_alpha(int k) {
    if (k < 1) throw InputError("separator ball budget must be positive");
    return 2 + ceil_log2(2LL * k);
}

long long default_gamma_cap(int k) {
    if (k < 1) throw InputError("separator ball budget must be positive");
    if (k == 1) return 0; // 2000 * 1 * log2(1); the round builder needs k >= 2
    double v = 2000.0 * static_cast<double>(k) * static_cast<double>(k) *
               std::log2(static_cast<double>(k));
    return static_cast<long long>(std::floor(v));
}

BuilderParams make_builder_params(int k, int r, SearchMode mode) {
    if (k < 1) throw InputError("separator ball budget must be positive");
    if (r < 1) throw InputError("base radius must be positive");
    BuilderParams p;
    p.k = k;
    p.r = r;
    p.alpha = crowding_alpha(k);
    p.gamma_cap = default_gamma_cap(k);
    p.oracle_mode = mode;
    return p;
}

namespace {

bool same_ball(const Ball& a, const Ball& b) {
    return a.center == b.center && a.radius == b.radius;
}

// Appends balls not yet present, preserving first-seen order.
void append_unique(std::vector<Ball>& dst, const std::vector<Ball>& src) {
    for (const Ball& b : src) {
        bool present = false;
        for (const Ball& d : dst)
            if (same_ball(d, b)) {
                present = true;
                break;
            }
        if (!present) dst.push_back(b);
    }
}

Bits union_bits(const Graph& g, const std::vector<Ball>& balls) {
    Bits u(g.num_vertices());
    for (const Ball& b : balls) u |= ball_bits(g, b.center, static_cast<int>(b.radius.floor()));
    return u;
}

std::string frame_name(const Bits& u_set, int depth) {
    int first = -1;
    u_set.for_each([&](int v) {
        if (first < 0) first = v;
    });
    return "frame at depth " + std::to_string(depth) + " (component of " +
           std::to_string(u_set.count()) + " vertices, lowest " + std::to_string(first) + ")";
}

} // namespace

RoundBallSet uncrowd(const Graph& g, const RoundBallSet& b, const BuilderParams& params) {
    if (b.base_r != params.r) throw InputError("ball set base radius does not match params");
    if (!b.is_round()) throw InputError("uncrowd input is not round");
    int n = g.num_vertices();
    const int alpha = params.alpha;
    const long long alpha_r = static_cast<long long>(alpha) * b.base_r;
    const long long crowd_count = 1LL << alpha;

    DistanceOracle oracle(g);
    std::vector<Ball> balls = b.balls;

    // Replacement loop; restarts the (ell, x) scan after every change since
    // the new bigger ball may create crowding at a higher ell.
    for (bool changed = true; changed;) {
        changed = false;
        std::set<long long> mults;
        for (const Ball& bl : balls) mults.insert((bl.radius / Rat(b.base_r)).num());
        for (long long ell : mults) {
            Rat target(ell * b.base_r);
            for (int x = 0; x < n; ++x) {
                std::vector<size_t> hits;
                for (size_t i = 0; i < balls.size(); ++i) {
                    if (balls[i].radius != target) continue;
                    int d = oracle.dist(balls[i].center, x);
                    if (d >= 0 && d <= alpha_r) hits.push_back(i);
                }
                if (static_cast<long long>(hits.size()) < crowd_count) continue;
                std::vector<Ball> next;
                next.reserve(balls.size() - hits.size() + 1);
                size_t h = 0;
                for (size_t i = 0; i < balls.size(); ++i) {
                    if (h < hits.size() && hits[h] == i) {
                        ++h;
                        continue;
                    }
                    next.push_back(balls[i]);
                }
                next.push_back(Ball{x, Rat((ell + alpha) * b.base_r)});
                balls = std::move(next);
                changed = true;
                break;
            }
            if (changed) break;
        }
    }

    // Containment pruning on explicit vertex sets. A ball strictly inside
    // another is dropped; of equal vertex sets the canonically first
    // (center, radius) survives.
    std::sort(balls.begin(), balls.end(), [](const Ball& x, const Ball& y) {
        if (x.center != y.center) return x.center < y.center;
        return x.radius < y.radius;
    });
    std::vector<Bits> verts;
    verts.reserve(balls.size());
    for (const Ball& bl : balls)
        verts.push_back(ball_bits(g, bl.center, static_cast<int>(bl.radius.floor())));
    std::vector<Ball> kept;
    for (size_t i = 0; i < balls.size(); ++i) {
        bool drop = false;
        for (size_t j = 0; j < balls.size() && !drop; ++j) {
            if (i == j) continue;
            if (!verts[i].is_subset_of(verts[j])) continue;
            if (verts[j] == verts[i]) {
                if (j < i) drop = true;
            } else {
                drop = true;
            }
        }
        if (!drop) kept.push_back(balls[i]);
    }
    return RoundBallSet{b.base_r, std::move(kept)};
}

namespace {

struct SimpleCtx {
    const Graph& g;
    const BuilderParams& p;
    TreeDecomposition td;
};

int simple_rec(SimpleCtx& ctx, const Bits& s_set, const Bits& u_set,
               const std::vector<Ball>& cover_s, int depth) {
    const Graph& g = ctx.g;
    int n = g.num_vertices();
    if (depth > ctx.p.recursion_limit)
        throw DecomposeError("recursion limit exceeded at " + frame_name(u_set, depth));

    WeightFn mu_u = WeightFn::indicator(n, u_set.to_vector());
    auto witness = find_separator(g, mu_u, ctx.p.k, ctx.p.r, ctx.p.oracle_mode, ctx.p.budgets);
    if (!witness)
        throw DecomposeError("separator oracle failed for " + frame_name(u_set, depth) +
                             " with k=" + std::to_string(ctx.p.k) +
                             ", r=" + std::to_string(ctx.p.r));

    Bits z = Bits::of(n, witness->union_set);
    Bits bag = s_set;
    {
        Bits zu = z;
        zu &= u_set;
        bag |= zu;
    }
    std::vector<Ball> cover = cover_s;
    append_unique(cover, witness->balls);

    if (ctx.p.strict_checks) {
        Bits cov = union_bits(g, cover);
        if (!bag.is_subset_of(cov))
            throw InvariantError("bag escapes its cover at " + frame_name(u_set, depth));
    }

    int node_id = static_cast<int>(ctx.td.nodes.size());
    ctx.td.nodes.push_back(TreeNode{node_id, bag.to_vector(), cover});

    Bits alive = u_set;
    alive.subtract(z);
    int half = u_set.count();
    for (const Bits& comp : components_bits(g, alive)) {
        if (ctx.p.strict_checks) {
            if (2 * comp.count() > half)
                throw InvariantError("child component not halved at " + frame_name(u_set, depth));
            bool escapes = false;
            comp.for_each([&](int v) {
                for (int w : g.neighbors(v))
                    if (!comp.test(w) && !bag.test(w)) escapes = true;
            });
            if (escapes)
                throw InvariantError("child frame is not a full component at " +
                                     frame_name(u_set, depth));
        }
        int child = simple_rec(ctx, bag, comp, cover, depth + 1);
        ctx.td.edges.emplace_back(node_id, child);
    }
    return node_id;
}

} // namespace

TreeDecomposition decompose_simple(const Graph& g, const BuilderParams& params) {
    if (params.k < 1) throw InputError("separator ball budget must be positive");
    if (params.r < 1) throw InputError("base radius must be positive");

    SimpleCtx ctx{g, params, {}};
    int n = g.num_vertices();
    if (n == 0) {
        ctx.td.nodes.push_back(TreeNode{0, {}, std::vector<Ball>{}});
        return ctx.td;
    }

    Bits all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    int first_root = -1;
    for (const Bits& comp : components_bits(g, all)) {
        int root = simple_rec(ctx, Bits(n), comp, {}, 0);
        if (first_root < 0)
            first_root = root;
        else
            ctx.td.edges.emplace_back(first_root, root);
    }

    if (params.strict_checks) {
        auto violations = validate_tree_decomposition(g, ctx.td);
        if (!violations.empty())
            throw InvariantError("builder output invalid: " + violations.front().rule + ": " +
                                 violations.front().detail);
    }
    return ctx.td;
}

namespace {

struct RoundCtx {
    const Graph& g;
    const BuilderParams& p;
    TreeDecomposition td;
};

// Claim: after uncrowding, no vertex has more than 2*alpha*2^alpha ball
// centers within alpha*r of it.
void check_center_density(const Graph& g, const RoundBallSet& bp, const BuilderParams& p,
                          const std::string& where) {
    const long long cap = 2LL * p.alpha * (1LL << p.alpha);
    const long long alpha_r = static_cast<long long>(p.alpha) * p.r;
    DistanceOracle oracle(g);
    for (int u = 0; u < g.num_vertices(); ++u) {
        long long cnt = 0;
        for (const Ball& b : bp.balls) {
            int d = oracle.dist(b.center, u);
            if (d >= 0 && d <= alpha_r) ++cnt;
        }
        if (cnt > cap)
            throw InvariantError("center density " + std::to_string(cnt) + " above " +
                                 std::to_string(cap) + " at vertex " + std::to_string(u) +
                                 ", " + where);
    }
}

int round_rec(RoundCtx& ctx, const Bits& s_set, const Bits& u_set, const RoundBallSet& b_in,
              int depth) {
    const Graph& g = ctx.g;
    const BuilderParams& p = ctx.p;
    int n = g.num_vertices();
    if (depth > p.recursion_limit)
        throw DecomposeError("recursion limit exceeded at " + frame_name(u_set, depth));

    RoundBallSet b_prime = uncrowd(g, b_in, p);
    if (p.strict_checks) check_center_density(g, b_prime, p, frame_name(u_set, depth));

    // Separate both the active component and the ball centers.
    WeightFn mu_u = WeightFn::indicator(n, u_set.to_vector());
    auto d_u = find_separator(g, mu_u, p.k, p.r, p.oracle_mode, p.budgets);
    if (!d_u)
        throw DecomposeError("separator oracle failed (component weight) for " +
                             frame_name(u_set, depth));

    std::vector<int> centers;
    for (const Ball& b : b_prime.balls) centers.push_back(b.center);
    std::sort(centers.begin(), centers.end());
    if (p.strict_checks &&
        std::adjacent_find(centers.begin(), centers.end()) != centers.end())
        throw InvariantError("uncrowded ball set has duplicate centers at " +
                             frame_name(u_set, depth));

    std::vector<Ball> d_balls = d_u->balls;
    if (!centers.empty()) {
        WeightFn mu_o = WeightFn::indicator(n, centers);
        auto d_o = find_separator(g, mu_o, p.k, p.r, p.oracle_mode, p.budgets);
        if (!d_o)
            throw DecomposeError("separator oracle failed (center weight) for " +
                                 frame_name(u_set, depth));
        append_unique(d_balls, d_o->balls);
    }
    Bits z = union_bits(g, d_balls);

    // Balls of b_prime near any separator ball center move with every child.
    const long long alpha_r = static_cast<long long>(p.alpha) * p.r;
    DistanceOracle center_dist(g);
    std::vector<uint8_t> near_separator(b_prime.balls.size(), 0);
    for (size_t i = 0; i < b_prime.balls.size(); ++i) {
        for (const Ball& d : d_balls) {
            int dist = center_dist.dist(d.center, b_prime.balls[i].center);
            if (dist >= 0 && dist <= alpha_r) {
                near_separator[i] = 1;
                break;
            }
        }
    }

    Bits all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    Bits outside_z = all;
    outside_z.subtract(z);
    std::vector<Bits> host_comps = components_bits(g, outside_z);
    std::vector<int> host_of(static_cast<size_t>(n), -1);
    for (size_t w = 0; w < host_comps.size(); ++w)
        host_comps[w].for_each([&](int v) { host_of[static_cast<size_t>(v)] = static_cast<int>(w); });

    // B_W per host component, built on demand.
    std::vector<std::optional<RoundBallSet>> b_w_cache(host_comps.size());
    auto build_b_w = [&](int w) -> const RoundBallSet& {
        auto& slot = b_w_cache[static_cast<size_t>(w)];
        if (slot) return *slot;
        const Bits& w_verts = host_comps[static_cast<size_t>(w)];
        // Largest far-ball radius decides how much the separator balls widen.
        Rat r_w(static_cast<long long>(p.alpha - 1) * p.r);
        for (size_t i = 0; i < b_prime.balls.size(); ++i) {
            if (near_separator[i]) continue;
            if (w_verts.test(b_prime.balls[i].center)) continue;
            if (b_prime.balls[i].radius > r_w) r_w = b_prime.balls[i].radius;
        }
        Rat widened = r_w - Rat(static_cast<long long>(p.alpha - 2) * p.r);
        RoundBallSet out;
        out.base_r = p.r;
        for (size_t i = 0; i < b_prime.balls.size(); ++i)
            if (near_separator[i]) out.balls.push_back(b_prime.balls[i]);
        {
            std::vector<Ball> widened_d;
            for (const Ball& d : d_balls) widened_d.push_back(Ball{d.center, widened});
            append_unique(out.balls, widened_d);
        }
        {
            std::vector<Ball> local;
            for (size_t i = 0; i < b_prime.balls.size(); ++i)
                if (w_verts.test(b_prime.balls[i].center)) local.push_back(b_prime.balls[i]);
            append_unique(out.balls, local);
        }
        slot = std::move(out);
        return *slot;
    };

    Bits bag = s_set;
    {
        Bits zu = z;
        zu &= u_set;
        bag |= zu;
    }
    std::vector<Ball> cover = b_in.balls;
    append_unique(cover, d_balls);
    if (p.strict_checks) {
        Bits cov = union_bits(g, cover);
        if (!bag.is_subset_of(cov))
            throw InvariantError("bag escapes its cover at " + frame_name(u_set, depth));
    }

    int node_id = static_cast<int>(ctx.td.nodes.size());
    ctx.td.nodes.push_back(TreeNode{node_id, bag.to_vector(), cover});

    Bits alive = u_set;
    alive.subtract(z);
    int u_count = u_set.count();
    unsigned long long phi_in = b_in.potential();
    for (const Bits& comp : components_bits(g, alive)) {
        int first = -1;
        comp.for_each([&](int v) {
            if (first < 0) first = v;
        });
        int w = host_of[static_cast<size_t>(first)];
        const RoundBallSet& b_w = build_b_w(w);
        if (p.gamma_cap >= 0 && static_cast<long long>(b_w.balls.size()) > p.gamma_cap)
            throw DecomposeError("child cover size " + std::to_string(b_w.balls.size()) +
                                 " exceeds cap " + std::to_string(p.gamma_cap) + " at " +
                                 frame_name(u_set, depth));

        // S_A = (Z n (U u S)) u (S n W_A)
        Bits s_a = z;
        {
            Bits us = u_set;
            us |= s_set;
            s_a &= us;
        }
        {
            Bits sw = s_set;
            sw &= host_comps[static_cast<size_t>(w)];
            s_a |= sw;
        }

        if (p.strict_checks) {
            if (2 * comp.count() > u_count)
                throw InvariantError("child component not halved at " + frame_name(u_set, depth));
            Bits covered = union_bits(g, b_w.balls);
            if (!s_a.is_subset_of(covered))
                throw InvariantError("child separator escapes its cover at " +
                                     frame_name(u_set, depth));
            bool escapes = false;
            comp.for_each([&](int v) {
                for (int x : g.neighbors(v))
                    if (!comp.test(x) && !s_a.test(x)) escapes = true;
            });
            if (escapes)
                throw InvariantError("child frame is not a full component at " +
                                     frame_name(u_set, depth));
            if (b_w.potential() > phi_in + 4ULL * static_cast<unsigned long long>(p.k))
                throw InvariantError("child potential exceeds parent potential + 4k at " +
                                     frame_name(u_set, depth));
        }

        int child = round_rec(ctx, s_a, comp, b_w, depth + 1);
        ctx.td.edges.emplace_back(node_id, child);
    }
    return node_id;
}

} // namespace

TreeDecomposition decompose_round(const Graph& g, const BuilderParams& params) {
    if (params.k < 1) throw InputError("separator ball budget must be positive");
    if (params.r < 1) throw InputError("base radius must be positive");
    if (params.alpha != crowding_alpha(params.k))
        throw InputError("alpha does not match k");

    RoundCtx ctx{g, params, {}};
    int n = g.num_vertices();
    if (n == 0) {
        ctx.td.nodes.push_back(TreeNode{0, {}, std::vector<Ball>{}});
        return ctx.td;
    }

    Bits all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    int first_root = -1;
    for (const Bits& comp : components_bits(g, all)) {
        RoundBallSet empty;
        empty.base_r = params.r;
        int root = round_rec(ctx, Bits(n), comp, empty, 0);
        if (first_root < 0)
            first_root = root;
        else
            ctx.td.edges.emplace_back(first_root, root);
    }

    if (params.strict_checks) {
        auto violations = validate_tree_decomposition(g, ctx.td);
        if (!violations.empty())
            throw InvariantError("builder output invalid: " + violations.front().rule + ": " +
                                 violations.front().detail);
    }
    return ctx.td;
}

} // namespace coarse
