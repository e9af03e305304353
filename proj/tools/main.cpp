#include "subordlab/cli.hpp"

int main(int argc, char** argv) { return subordlab::dispatch(argc, argv); }
