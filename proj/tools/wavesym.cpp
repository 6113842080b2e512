#include "wavesym/cli.hpp"

int main(int argc, char** argv) { return wavesym::run(argc, argv); }
