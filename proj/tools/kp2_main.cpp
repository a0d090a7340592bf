#include "kp2/cli.hpp"

int main(int argc, char** argv) { return kp2::cli::dispatch(argc, argv); }
