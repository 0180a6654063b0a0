#include <iostream>

#include "fairvoc/report/cli.hpp"

int main(int argc, char** argv) {
    return fairvoc::report::cli_main(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
