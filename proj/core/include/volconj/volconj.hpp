#ifndef VOLCONJ_VOLCONJ_HPP
#define VOLCONJ_VOLCONJ_HPP

#include "volconj/asymptotics.hpp"
#include "volconj/cusp_geometry.hpp"
#include "volconj/errors.hpp"
#include "volconj/jones.hpp"
#include "volconj/log_complex.hpp"
#include "volconj/optimistic.hpp"
#include "volconj/potential.hpp"
#include "volconj/selftest.hpp"
#include "volconj/special_fn.hpp"
#include "volconj/surgery.hpp"

#endif  // VOLCONJ_VOLCONJ_HPP
