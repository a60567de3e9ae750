#include "t8n/cli.hpp"

int main(int argc, char** argv) { return t8n::run_cli(argc, argv); }
