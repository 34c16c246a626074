#include "wenum/krawtchouk.hpp"

#include "wenum/error.hpp"

#include <algorithm>
#include <cstdint>

namespace wenum {

KrawtchoukMatrix krawtchouk_matrix(int n) {
    if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be >= 1");
    KrawtchoukMatrix k;
    k.n = n;
    k.entries.assign((static_cast<size_t>(n) + 1) * (static_cast<size_t>(n) + 1), 0);
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            Int sum = 0;
            for (int m = 0; m <= i; ++m) {
                Int term = binomial(j, m) * binomial(n - j, i - m);
                if (m % 2)
                    sum -= term;
                else
                    sum += term;
            }
            k.entries[static_cast<size_t>(i) * (static_cast<size_t>(n) + 1) +
                      static_cast<size_t>(j)] = sum;
        }
    }
    return k;
}

bool macwilliams_fixed_point(const WeightDistribution& dist) {
    int n = dist.n;
    if (n % 2 != 0) throw Error(ErrorKind::OutOfRange, "n must be even");
    KrawtchoukMatrix k = krawtchouk_matrix(n);
    Int scale = Int(1) << (n / 2);
    // (X M)[j] = sum_i X[i] M[i][j] = sum_i X[i] K[j][i]
    for (int j = 0; j <= n; ++j) {
        Int sum = 0;
        for (int i = 0; i <= n; ++i) sum += Int(dist.counts[static_cast<size_t>(i)]) * k.at(j, i);
        if (sum != scale * Int(dist.counts[static_cast<size_t>(j)])) return false;
    }
    return true;
}

std::vector<WeightDistribution> enumerate_candidates(int n) {
    if (n < 2 || n % 2 != 0 || n > 12)
        throw Error(ErrorKind::OutOfRange, "candidate enumeration supports even n in 2..12");
    KrawtchoukMatrix km = krawtchouk_matrix(n);
    int dim = n + 1;
    // Entries fit comfortably in int64: |K| <= C(12,6) = 924, X values <= 64.
    std::vector<int64_t> k(static_cast<size_t>(dim) * static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            k[static_cast<size_t>(i) * static_cast<size_t>(dim) + static_cast<size_t>(j)] =
                km.at(i, j).convert_to<int64_t>();
    auto kat = [&](int i, int j) {
        return k[static_cast<size_t>(i) * static_cast<size_t>(dim) + static_cast<size_t>(j)];
    };

    // Suffix extrema of K[j][i] over i >= d, for bounding the contribution
    // of the still-unassigned positions to column j.
    std::vector<int64_t> suffix_min(static_cast<size_t>(dim) * (static_cast<size_t>(dim) + 1));
    std::vector<int64_t> suffix_max(suffix_min.size());
    for (int j = 0; j < dim; ++j) {
        int64_t mn = INT64_MAX, mx = INT64_MIN;
        for (int i = dim; i >= 0; --i) {
            size_t idx = static_cast<size_t>(j) * (static_cast<size_t>(dim) + 1) +
                         static_cast<size_t>(i);
            if (i < dim) {
                mn = std::min(mn, kat(j, i));
                mx = std::max(mx, kat(j, i));
            }
            suffix_min[idx] = mn;
            suffix_max[idx] = mx;
        }
    }

    int64_t total = int64_t(1) << (n / 2);
    std::vector<int64_t> x(static_cast<size_t>(dim), 0);
    x[0] = 1;
    // column_sum[j] tracks sum_{i <= d} x[i] * K[j][i] for the fixed prefix.
    std::vector<int64_t> column_sum(static_cast<size_t>(dim), 0);
    for (int j = 0; j < dim; ++j) column_sum[static_cast<size_t>(j)] = kat(j, 0);

    std::vector<WeightDistribution> found;
    auto feasible = [&](int next, int64_t budget) {
        // Columns with a fixed x[j] must still be reachable by the remaining
        // budget spread over positions >= next.
        for (int j = 0; j < next; ++j) {
            int64_t need = total * x[static_cast<size_t>(j)] - column_sum[static_cast<size_t>(j)];
            size_t idx = static_cast<size_t>(j) * (static_cast<size_t>(dim) + 1) +
                         static_cast<size_t>(next);
            if (budget == 0) {
                if (need != 0) return false;
            } else if (need < budget * suffix_min[idx] || need > budget * suffix_max[idx]) {
                return false;
            }
        }
        return true;
    };

    auto record_if_solution = [&] {
        for (int j = 0; j < dim; ++j)
            if (column_sum[static_cast<size_t>(j)] != total * x[static_cast<size_t>(j)]) return;
        WeightDistribution dist(n);
        for (int i = 0; i < dim; ++i)
            dist.counts[static_cast<size_t>(i)] = static_cast<uint64_t>(x[static_cast<size_t>(i)]);
        found.push_back(std::move(dist));
    };

    // Depth-first over x[1..n]; odd weights stay zero (every codeword of a
    // binary self-dual code has even weight, and the raw equation admits
    // odd-weight solutions no code can realize). The last position absorbs
    // the whole remaining budget so the total is exactly 2^(n/2).
    auto dfs = [&](auto&& self, int pos, int64_t budget) -> void {
        if (pos == dim - 1) {
            x[static_cast<size_t>(pos)] = budget;
            for (int j = 0; j < dim; ++j)
                column_sum[static_cast<size_t>(j)] += budget * kat(j, pos);
            record_if_solution();
            for (int j = 0; j < dim; ++j)
                column_sum[static_cast<size_t>(j)] -= budget * kat(j, pos);
            x[static_cast<size_t>(pos)] = 0;
            return;
        }
        int64_t vmax = pos % 2 == 0 ? budget : 0;
        for (int64_t v = 0; v <= vmax; ++v) {
            x[static_cast<size_t>(pos)] = v;
            if (v > 0)
                for (int j = 0; j < dim; ++j) column_sum[static_cast<size_t>(j)] += kat(j, pos);
            if (feasible(pos + 1, budget - v)) self(self, pos + 1, budget - v);
        }
        for (int j = 0; j < dim; ++j)
            column_sum[static_cast<size_t>(j)] -= vmax * kat(j, pos);
        x[static_cast<size_t>(pos)] = 0;
    };
    dfs(dfs, 1, total - 1);

    std::sort(found.begin(), found.end(),
              [](const WeightDistribution& a, const WeightDistribution& b) {
                  return a.counts < b.counts;
              });
    return found;
}

} // namespace wenum
