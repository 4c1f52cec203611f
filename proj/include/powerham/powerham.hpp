#ifndef POWERHAM_POWERHAM_HPP
#define POWERHAM_POWERHAM_HPP

#include "powerham/absorber.hpp"
#include "powerham/bitset.hpp"
#include "powerham/cliques.hpp"
#include "powerham/connector.hpp"
#include "powerham/constants.hpp"
#include "powerham/error.hpp"
#include "powerham/generators.hpp"
#include "powerham/graph.hpp"
#include "powerham/hamiltonian.hpp"
#include "powerham/kpath.hpp"
#include "powerham/numeric.hpp"
#include "powerham/pathcover.hpp"
#include "powerham/properties.hpp"
#include "powerham/random.hpp"
#include "powerham/serialize.hpp"
#include "powerham/walks.hpp"

#endif /* POWERHAM_POWERHAM_HPP */
