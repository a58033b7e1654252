#pragma once

#include <random>
#include <string>

#include "gcs/moebius.hpp"

namespace gcs {

// Freely reduced words over {a, A, b, B}, with A = a^-1 and B = b^-1.
// The empty word is the identity.

bool is_letter(char c);
char inv_letter(char c);

std::string free_reduce(const std::string& letters);
std::string word_inverse(const std::string& w);
std::string word_mul(const std::string& u, const std::string& v);

// shortest representative of the conjugacy class (cyclically reduced), then
// minimal over rotations of it and of its inverse
std::string cyclic_reduce(const std::string& w, std::string* conjugator = nullptr);
std::string conjugacy_key(const std::string& w);

// w = root^k with k maximal; returns k and writes the primitive root
int primitive_root(const std::string& cyc_reduced, std::string* root);

std::string random_reduced_word(std::mt19937_64& rng, int length);

}  // namespace gcs
