#include "cli.hpp"

int main(int argc, char** argv) {
  return qagent::cli::run_cli(argc, argv);
}
