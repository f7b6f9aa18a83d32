#ifndef CULAB_CULAB_HPP
#define CULAB_CULAB_HPP

#include "culab/axioms.hpp"
#include "culab/bitset.hpp"
#include "culab/certificate.hpp"
#include "culab/corpus.hpp"
#include "culab/divisibility.hpp"
#include "culab/document.hpp"
#include "culab/error.hpp"
#include "culab/glimm.hpp"
#include "culab/ideals.hpp"
#include "culab/isomorphism.hpp"
#include "culab/model.hpp"
#include "culab/rules.hpp"
#include "culab/verify.hpp"
#include "culab/witnesses.hpp"

#endif  // CULAB_CULAB_HPP
