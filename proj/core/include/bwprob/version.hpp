#pragma once

#define BWPROB_VERSION "0.1.0"
