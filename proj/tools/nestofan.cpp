#include "nestofan/cli.hpp"

int main(int argc, char** argv) { return nestofan::cli::run(argc, argv); }
