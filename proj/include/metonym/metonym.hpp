#pragma once

#include "metonym/caseframe.hpp"
#include "metonym/cli.hpp"
#include "metonym/errors.hpp"
#include "metonym/hierarchy.hpp"
#include "metonym/index.hpp"
#include "metonym/interpreter.hpp"
#include "metonym/lexicon.hpp"
#include "metonym/rational.hpp"
#include "metonym/token.hpp"
