// Walks one 132-avoiding permutation through each map and back.
#include <iostream>

#include "hatperm/bijections.hpp"

using namespace hatperm;

int main() {
  const Permutation pi{4, 5, 2, 3, 6, 1};

  const auto w = phi(pi);
  std::cout << "pi              " << to_string(pi) << '\n'
            << "phi             " << w.str() << '\n'
            << "theta           " << theta(pi.values()).str() << '\n'
            << "simion-schmidt  " << to_string(simion_schmidt(pi)) << '\n'
            << "phi^-1(phi)     " << to_string(phi_inverse(w)) << "\n\n"
            << render(w.steps()) << '\n';

  const auto m = MotzkinWord::parse("ufduududd");
  const auto sigma = psi(m);
  std::cout << "psi(" << m.str() << ") = " << to_string(sigma) << '\n'
            << "back            " << psi_inverse(sigma).str() << '\n'
            << render(m.steps());
}
