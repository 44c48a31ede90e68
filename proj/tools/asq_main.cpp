#include "asq/cli.hpp"

int main(int argc, char** argv) {
    return asq::cli_run(std::vector<std::string>(argv + 1, argv + argc));
}
