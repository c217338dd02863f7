#include "ncborel/cli.hpp"

int main(int argc, char** argv) { return ncborel::run(argc, argv); }
