#ifndef BOXIKIT_BOXIKIT_HPP
#define BOXIKIT_BOXIKIT_HPP

#include "boxikit/bounds.hpp"
#include "boxikit/box_representation.hpp"
#include "boxikit/errors.hpp"
#include "boxikit/families.hpp"
#include "boxikit/graph.hpp"
#include "boxikit/interval.hpp"
#include "boxikit/isomorphism.hpp"
#include "boxikit/json_io.hpp"
#include "boxikit/oracle.hpp"
#include "boxikit/poset.hpp"
#include "boxikit/rational.hpp"
#include "boxikit/recognition.hpp"
#include "boxikit/tcc_construction.hpp"

#endif
