#include <iostream>

#include "acceptance.hpp"
#include "twistfloer/cli.hpp"

int main(int argc, char** argv) {
    return twistfloer::run_cli(argc, argv, [](const twistfloer::RunConfig&) {
        return twistfloer::verification::run_and_print(std::cout);
    });
}
