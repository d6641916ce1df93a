#pragma once

#include "padent/error.hpp"
#include "padent/bigint.hpp"
#include "padent/padic.hpp"
#include "padent/group.hpp"
#include "padent/group_ring.hpp"
#include "padent/parallel.hpp"
#include "padent/determinant.hpp"
#include "padent/fixcount.hpp"
#include "padent/detlog.hpp"
#include "padent/mahler.hpp"
#include "padent/entropy.hpp"
#include "padent/parse.hpp"
#include "padent/serialize.hpp"
