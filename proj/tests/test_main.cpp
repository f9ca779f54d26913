/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
