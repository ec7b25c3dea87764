#include "effa/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    const auto r = effa::run_command(std::vector<std::string>(argv + 1, argv + argc));
    std::cout << r.out;
    std::cerr << r.err;
    return r.status;
}
