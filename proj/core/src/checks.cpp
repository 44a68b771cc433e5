#include "hypermono/checks.hpp"
