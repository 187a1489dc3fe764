#include "torusbundle/torusbundle.hpp"

#include "monodromy/monodromy.hpp"

#include <sstream>

namespace torusbundle {

std::string QuotientCohomology::to_string() const {
  std::ostringstream os;
  os << "H1 = " << h1.to_string() << ", H2 = " << h2.to_string() << " (b1 = " << b1
     << ", b2 = " << b2 << ")";
  return os.str();
}

namespace {

int genus_of(const IntMatrix& f1) {
  if (f1.rows() != f1.cols() || f1.rows() % 2 != 0)
    throw NotSymplecticError();
  return static_cast<int>(f1.rows() / 2);
}

void require_symplectic(const IntMatrix& f1) {
  if (!monodromy::preserves_intersection_form(f1, genus_of(f1))) throw NotSymplecticError();
}

}  // namespace

QuotientCohomology quotient_cohomology(const IntMatrix& f1) {
  require_symplectic(f1);
  IntMatrix reduced = f1 - IntMatrix::identity(f1.rows());

  QuotientCohomology out;
  out.h1.free_rank = exactalg::kernel_rank(reduced) + 1;
  out.h2 = exactalg::cokernel_structure(reduced);
  out.h2.free_rank += 1;
  out.b1 = out.h1.free_rank;
  out.b2 = out.h2.free_rank;
  return out;
}

bool condition_one_holds(const IntMatrix& f1) {
  require_symplectic(f1);
  IntMatrix reduced = f1 - IntMatrix::identity(f1.rows());
  return exactalg::kernel_rank(reduced) == 0;
}

}  // namespace torusbundle
