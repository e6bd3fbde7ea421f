#ifndef WEYLCHAR_WEYLCHAR_HPP
#define WEYLCHAR_WEYLCHAR_HPP

#include "weylchar/algebra.hpp"
#include "weylchar/characters.hpp"
#include "weylchar/errors.hpp"
#include "weylchar/exact.hpp"
#include "weylchar/gamma.hpp"
#include "weylchar/laurent.hpp"
#include "weylchar/table_io.hpp"
#include "weylchar/tensor.hpp"
#include "weylchar/verify.hpp"
#include "weylchar/weyl.hpp"

#endif
