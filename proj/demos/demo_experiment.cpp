// Runs a small pivot-counting study in process and prints the growth fits.
// The same thing is available from the command line as `dglcp bench`.

#include <iostream>

#include "dglcp/experiment.hpp"
#include "dglcp/io.hpp"

using namespace dglcp;

int main() {
    const char* cfg_text = R"({
      "global_seed": 11,
      "repetitions": 20,
      "families": [
        {"family": "lemke-lower-bound", "sizes": [2, 3, 4, 5, 6]},
        {"family": "random-binary", "sizes": [3, 5, 7]}
      ],
      "variants": [
        {"algorithm": "lemke", "covering": "unit"},
        {"algorithm": "cottle-dantzig", "ordering": "identity"}
      ]
    })";

    ExperimentConfig cfg =
        config_from_json(parse_json_text(cfg_text, "demo config"));
    ExperimentReport rep = run_experiment(cfg);

    std::cout << "rows: " << rep.rows.size() << "\n\n";
    for (const SummaryEntry& se : rep.summary)
        std::cout << se.family << " n=" << se.n << " " << se.algorithm << "/"
                  << se.variant << ": median "
                  << format_rational(se.median_pivots) << " pivots (max "
                  << se.max_pivots << ", " << se.verified << "/" << se.rows
                  << " verified)\n";

    std::cout << "\n";
    for (const CurveFit& cf : rep.fits) {
        std::cout << cf.family << " / " << cf.algorithm << "/" << cf.variant
                  << ": ";
        if (!cf.fitted) {
            std::cout << "not fitted (" << cf.note << ")\n";
            continue;
        }
        std::cout << "poly degree " << cf.fit.poly_degree << " (rss "
                  << cf.fit.poly_rss << "), exp rate " << cf.fit.exp_rate
                  << " (rss " << cf.fit.exp_rss << ")\n";
        // The family is built to defeat this pivot rule, so the exponential
        // model should win there and lose on the random games.
        if (cf.family == "lemke-lower-bound" && cf.algorithm == "lemke")
            std::cout << "  exponential fit is the better model: "
                      << (cf.fit.exp_rss < cf.fit.poly_rss ? "yes" : "no")
                      << "\n";
    }
    return 0;
}
