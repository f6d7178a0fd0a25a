// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "swipt/cli.hpp"

int main(int argc, char** argv)
{
    return swipt::cli::parse_and_dispatch(argc, argv, std::cout, std::cerr);
}
