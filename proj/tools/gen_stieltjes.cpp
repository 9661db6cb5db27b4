// Regenerates core/data/stieltjes.txt.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ezeta/error.hpp"
#include "ezeta/numerics.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Compute enclosures of Laurent-Stieltjes constants"};
  int n_max = 20;
  int digits = 130;
  long bits = 640;
  unsigned long cutoff = 1000;
  unsigned order = 60;
  std::string output;
  app.add_option("--n-max", n_max, "Largest index")->check(CLI::Range(0, 200));
  app.add_option("--digits", digits, "Significant digits written per midpoint")->check(CLI::Range(20, 1000));
  app.add_option("--bits", bits, "Working precision in bits")->check(CLI::Range(128L, 100000L));
  app.add_option("--cutoff", cutoff, "Summation cutoff N")->check(CLI::Range(10UL, 10000000UL));
  app.add_option("--order", order, "Euler-Maclaurin order")->check(CLI::Range(1U, 500U));
  app.add_option("-o,--output", output, "Output file (default: stdout)");
  CLI11_PARSE(app, argc, argv);

  try {
    const auto values = ezeta::compute_stieltjes(n_max, bits, cutoff, order);
    std::vector<ezeta::StieltjesRecord> records;
    for (int n = 0; n <= n_max; ++n) {
      records.push_back(ezeta::to_record(n, values[static_cast<std::size_t>(n)], digits));
    }
    const std::string text =
        "# Laurent-Stieltjes constants gamma_n: true value in [mid - rad, mid + rad].\n"
        "# Euler-Maclaurin on sum (log k)^n / k, cutoff " + std::to_string(cutoff) +
        ", order " + std::to_string(order) + ", " + std::to_string(bits) + " bits.\n" +
        ezeta::StieltjesTable::from_records(std::move(records)).serialize();
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output);
      out << text;
      if (!out) {
        std::cerr << "cannot write " << output << "\n";
        return 1;
      }
    }
  } catch (const ezeta::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
