#ifndef KHR_KHR_HPP_
#define KHR_KHR_HPP_

#include "corpus.hpp"
#include "error.hpp"
#include "hypergroup.hpp"
#include "hypermodule.hpp"
#include "hyperring.hpp"
#include "ideals.hpp"
#include "index_set.hpp"
#include "khr_format.hpp"
#include "morphisms.hpp"
#include "parallel.hpp"
#include "primitivity.hpp"
#include "report.hpp"
#include "ring_hom.hpp"
#include "search.hpp"
#include "spectrum.hpp"
#include "spectrum_io.hpp"
#include "theorem_suite.hpp"

#endif  // KHR_KHR_HPP_
