#include "tetra/calculus/calculus.hpp"

#include "tetra/endo/backend.hpp"
#include "tetra/free/backend.hpp"

namespace tetra {

template class Calculus<endo::EndoBackend>;
template class Calculus<free::FreeBackend>;

}  // namespace tetra
