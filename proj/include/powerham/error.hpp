#ifndef POWERHAM_ERROR_HPP
#define POWERHAM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace powerham {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-range arguments (bad vertex id, non-clique end, ...).
class InputError : public Error {
public:
    using Error::Error;
};

// An exact routine was asked to run beyond its exhaustive-search budget.
class SizeError : public Error {
public:
    using Error::Error;
};

// The clique hypergraph handed to a path extraction is empty.
class NoCliquesError : public Error {
public:
    using Error::Error;
};

// Two consecutive absorbers could not be joined while building an absorbing path.
class AssemblyError : public Error {
public:
    using Error::Error;
    AssemblyError(const std::string& what, std::size_t from_member, std::size_t to_member)
        : Error(what), from(from_member), to(to_member) {}
    std::size_t from = 0;
    std::size_t to = 0;
};

// No free absorber segment is left for some vertex.
class CapacityError : public Error {
public:
    CapacityError(const std::string& what, std::size_t vertex)
        : Error(what), vertex(vertex) {}
    std::size_t vertex;
};

// A hitting set contains no usable clique.
class InfeasibleSetError : public Error {
public:
    InfeasibleSetError(const std::string& what, std::size_t set_index)
        : Error(what), set_index(set_index) {}
    std::size_t set_index;
};

// Invalid pipeline configuration, or paper constants unsatisfiable at this n.
class ConfigError : public Error {
public:
    using Error::Error;
};

}

#endif /* POWERHAM_ERROR_HPP */
