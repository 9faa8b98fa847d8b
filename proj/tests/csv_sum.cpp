// Prints the sum of the last column of a CSV file with a header line.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: csv_sum FILE\n";
        return 2;
    }
    std::ifstream f(argv[1]);
    std::string line;
    if (!std::getline(f, line))
        return 1;
    double sum = 0.0;
    while (std::getline(f, line))
        sum += std::stod(line.substr(line.rfind(',') + 1));
    std::printf("%.17g\n", sum);
    return 0;
}
