#include "trileib/cli.hpp"

int main(int argc, char** argv) { return trileib::cli_dispatch(argc, argv); }
