#include <string>
#include <vector>

#include "cuntz/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cuntz::cli::run(args);
}
