#include "groundkit/cli_app.hpp"

int main(int argc, char** argv) { return groundkit::cli::run_cli(argc, argv); }
