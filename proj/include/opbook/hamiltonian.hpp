#pragma once

#include "opbook/embedding.hpp"

namespace opbook {

// Requires d in family D with d_n = 2 and omega_2 = 2. Produces a one-page
// embedding whose page contains the full Hamiltonian cycle along the spine
// (all consecutive spine pairs plus the wrap-around edge).
BookEmbedding realize_hamiltonian(const DegreeSequence& d);

// Requires d in family D with d_{n-1} = d_n = 2 and volume <= 4n - 2*omega2 - 2.
// Shrinks the run of 2s to two, applies realize_hamiltonian, and subdivides the
// wrap-around outer-cycle edge into a path of omega2 - 2 new degree-2 vertices.
BookEmbedding realize_many_twos(const DegreeSequence& d);

}  // namespace opbook
