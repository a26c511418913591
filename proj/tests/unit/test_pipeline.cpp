#include <doctest.h>

#include "dcorr/correlation.hpp"
#include "dcorr/fock.hpp"
#include "dcorr/qdimension.hpp"

using namespace dcorr;

namespace {

HalfSeries projected(std::size_t l, std::size_t n, const Partition& lam, TraceOptions::Projector pr, int N) {
  auto wz = Workspace::symbolic(n, l);
  TraceOptions o;
  o.z_grading = true;
  o.projector = pr;
  return extract_module_function(oracle_trace(FockSpace{l, true}, *wz, N, o), lam, l);
}

}  // namespace

TEST_CASE("rank one, one point, even sector: formula against the projected oracle") {
  auto ws = Workspace::symbolic(1);
  CHECK(irreducible_function(*ws, BLabel{Partition({0}), false}, 1, 3) ==
        projected(1, 1, Partition({0}), TraceOptions::Projector::Even, 3));
}

TEST_CASE("rank one, no points: q-dimensions against the projected oracle") {
  CHECK(qdim_irreducible(BLabel{Partition({1}), false}, 1, 4) ==
        projected(1, 0, Partition({1}), TraceOptions::Projector::Even, 4));
  CHECK(qdim_irreducible(BLabel{Partition({1}), true}, 1, 4) ==
        projected(1, 0, Partition({1}), TraceOptions::Projector::Odd, 4));
}

TEST_CASE("rank zero, two points: both sectors against the projected oracle") {
  auto ws = Workspace::symbolic(2);
  CHECK(irreducible_function(*ws, BLabel{Partition{}, false}, 0, 3) ==
        projected(0, 2, Partition{}, TraceOptions::Projector::Even, 3));
  CHECK(irreducible_function(*ws, BLabel{Partition{}, true}, 0, 3) ==
        projected(0, 2, Partition{}, TraceOptions::Projector::Odd, 3));
}
