#include "hypermono/runconfig.hpp"
