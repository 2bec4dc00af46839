#include "uepframe/cli.hpp"

int main(int argc, char** argv) { return uep::run(argc, argv); }
