#include "qf/cli.hpp"

int main(int argc, char** argv) { return qf::cli::run_main(argc, argv); }
