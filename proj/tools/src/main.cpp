#include <iostream>

#include "qcat_cli/app.hpp"

int main(int argc, char** argv) {
  return qcat::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
