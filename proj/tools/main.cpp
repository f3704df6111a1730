#include "cdsbounds/cli.hpp"

int main(int argc, char** argv) {
    return cdsbounds::cli_main(argc, argv);
}
