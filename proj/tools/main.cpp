#include "levelset_lab/cli.hpp"

int main(int argc, char** argv) { return lsl::run(argc, argv); }
