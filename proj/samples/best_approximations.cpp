// For every disc in a small sweep, the octagon that approximates it best and
// whether the relation is mutual.
//
//   best_approximations [max_octagon]

#include <cstdlib>
#include <iostream>

#include "pixoct/proximity.hpp"

int main(int argc, char** argv) {
    pixoct::SweepConfig cfg;
    cfg.d_o_max = argc > 1 ? std::atoi(argv[1]) : 60;
    const auto m = pixoct::run_sweep(cfg, std::thread::hardware_concurrency());

    for (int d_c : m.disc_diameters()) {
        const auto best = pixoct::nearest_octagon(m, d_c);
        const auto back = pixoct::nearest_disc(m, best.diameter);
        std::cout << "c" << d_c << " -> o" << best.diameter << "  J=" << pixoct::format_decimal(best.jaccard, 6)
                  << (back.diameter == d_c ? "  mutual" : "  (o" + std::to_string(best.diameter) + " prefers c" +
                                                              std::to_string(back.diameter) + ")")
                  << "\n";
    }
}
