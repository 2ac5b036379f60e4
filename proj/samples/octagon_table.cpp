// Prints measured perimeter and area of disc-like octagons next to the
// closed-form values.
//
//   octagon_table [max_d]

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "pixoct/closed_forms.hpp"
#include "pixoct/rasterizer.hpp"

int main(int argc, char** argv) {
    const int max_d = argc > 1 ? std::atoi(argv[1]) : 24;
    std::cout << std::setw(5) << "d" << std::setw(6) << "type" << std::setw(8) << "P" << std::setw(8) << "P(d)"
              << std::setw(9) << "A" << std::setw(9) << "A(d)" << "\n";
    for (int d = 1; d <= max_d; ++d) {
        const auto m = pixoct::measure(pixoct::make_octagon(pixoct::OctagonSpec(d)));
        std::cout << std::setw(5) << d << std::setw(6) << pixoct::closed_forms::octagon_type(d) << std::setw(8)
                  << m.perimeter << std::setw(8);
        if (d > 1)
            std::cout << pixoct::closed_forms::perimeter_formula(d);
        else
            std::cout << "-";
        std::cout << std::setw(9) << m.area << std::setw(9) << pixoct::closed_forms::area_formula(d) << "\n";
    }
}
