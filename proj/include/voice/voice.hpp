#pragma once

// Umbrella header for the active/passive voice conversion engine.

#include "voice/golden.hpp"
#include "voice/lexicon.hpp"
#include "voice/parser.hpp"
#include "voice/pipeline.hpp"
#include "voice/realizer.hpp"
#include "voice/tense.hpp"
#include "voice/transform.hpp"
#include "voice/tree.hpp"
