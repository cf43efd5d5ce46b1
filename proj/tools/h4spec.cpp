#include <h4spec/cli.hpp>

int main(int argc, char** argv) { return h4spec::cli_main(argc, argv); }
