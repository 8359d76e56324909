#include <iostream>

#include "cwsurgery/cli.hpp"

int main(int argc, char** argv) {
  return cwsurgery::cli::main_entry(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                                    std::cerr);
}
