#include "mlmap/cli.hpp"

int main(int argc, char** argv) { return mlmap::run_cli(argc, argv); }
