// Runs the acceptance suite; optional arguments select criteria by number.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <lsfactors/acceptance.hpp>

int main(int argc, char** argv) {
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
    return lsfactors::acceptance::run_all(std::cout, only) ? EXIT_SUCCESS : EXIT_FAILURE;
}
