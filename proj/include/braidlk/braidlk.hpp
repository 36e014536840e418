#pragma once

// Umbrella header for the whole library. Individual headers stand alone;
// serialize.hpp is excluded because it pulls in the vendored JSON library.

#include "braidlk/braid_word.hpp"
#include "braidlk/diagram.hpp"
#include "braidlk/invariant.hpp"
#include "braidlk/moves.hpp"
#include "braidlk/random_words.hpp"
#include "braidlk/search.hpp"
#include "braidlk/verify.hpp"
