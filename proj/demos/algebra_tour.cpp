// A short walk through the library: keyed addition, views under the
// unordered-access discipline, and tabulation.

#include <cctype>
#include <iostream>
#include <string>

#include "frab/frab.hpp"
#include "frab/tabulation.hpp"
#include "frab/text_io.hpp"
#include "frab/views.hpp"

int main() {
    using namespace frab;

    const Frab a = from_pairs({{"x", 2}, {"y", 1}, {"z", 3}});
    const Frab b = from_pairs({{"y", 3}, {"x", 3}, {"u", 1}});

    std::cout << "a:\n" << a << "\nb:\n" << b << "\na + b:\n" << a + b;

    std::cout << "\nnames of a:\n" << names_view(a);
    std::cout << "\nvalues of a:\n" << values_view(a);

    // replacement idioms: square the values, then cap everything above 5
    Frab c = with_values(a, map_elementwise(values_view(a), [](double v) { return v * v; }));
    c = replace_where(c, c > 5.0, 5.0);
    std::cout << "\nsquared and capped at 5:\n" << c;

    const Frab upper = with_names(a, map_elementwise(names_view(a), [](const Symbol& s) {
                                      std::string t = s.str();
                                      for (char& ch : t) {
                                          ch = static_cast<char>(std::toupper(
                                              static_cast<unsigned char>(ch)));
                                      }
                                      return Symbol(t);
                                  }));
    std::cout << "\nuppercased names:\n" << upper;

    // counting merges by key, never by position
    const Frab counts = tabulate(parse_token_stream("the cat sat on the mat the end"));
    std::cout << "\nword counts:\n" << counts;
    std::cout << "\nround-trip stream:\n" << render_token_stream(reconstruct(counts));
    return 0;
}
