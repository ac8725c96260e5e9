// Amalgamated Catch2 implementation compiled once for the test suite.
#include <catch2/catch_amalgamated.cpp>
