#include "commands.hpp"

int main(int argc, char** argv) { return sbq::cli::run(argc, argv); }
