#pragma once

#include "leaper/chord.hpp"
#include "leaper/construct.hpp"
#include "leaper/embedding.hpp"
#include "leaper/error.hpp"
#include "leaper/figure.hpp"
#include "leaper/fork.hpp"
#include "leaper/halffree.hpp"
#include "leaper/io.hpp"
#include "leaper/lattice.hpp"
#include "leaper/leaper.hpp"
#include "leaper/path.hpp"
#include "leaper/render.hpp"
#include "leaper/search.hpp"
#include "leaper/suites.hpp"
#include "leaper/vec.hpp"
