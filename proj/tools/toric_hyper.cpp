#include <unistd.h>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "toric/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);

    std::string input;
    if (!isatty(fileno(stdin))) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        input = ss.str();
    }

    toric::RunResult r = toric::run(args, input);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
