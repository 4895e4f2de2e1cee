// times the pruned parallel model search against the serial reference on the
// same configurations and reports counts plus speedup.  not a test: both
// paths are compared for equality in the unit suite; this is for eyeballing
// scaling behaviour on multi-core machines.

#include <chrono>
#include <cstdio>
#include <vector>

#include "pbck/search.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    const auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration<double>(dt).count();
}

}  // namespace

int main() {
    std::printf("%-28s %10s %10s %10s %8s\n", "config", "models", "serial(s)", "openmp(s)", "speedup");
    for (const int size : {2, 3, 4}) {
        for (const bool iso : {false, true}) {
            pbck::search_config cfg;
            cfg.size = size;
            cfg.up_to_iso = iso;

            auto t0 = std::chrono::steady_clock::now();
            const auto serial = pbck::enumerate_models(cfg);
            const double ts = seconds_since(t0);

            t0 = std::chrono::steady_clock::now();
            const auto parallel = pbck::enumerate_models_parallel(cfg);
            const double tp = seconds_since(t0);

            if (serial != parallel) {
                std::printf("MISMATCH at size %d (iso=%d): %zu vs %zu models\n", size, int(iso),
                            serial.size(), parallel.size());
                return 1;
            }
            char label[64];
            std::snprintf(label, sizeof(label), "size=%d%s", size, iso ? " up-to-iso" : "");
            std::printf("%-28s %10zu %10.3f %10.3f %7.2fx\n", label, serial.size(), ts, tp,
                        tp > 0 ? ts / tp : 0.0);
        }
    }
    return 0;
}
