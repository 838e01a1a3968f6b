#pragma once

#include <mindeg/counting.hpp>
#include <mindeg/errors.hpp>
#include <mindeg/formulas.hpp>
#include <mindeg/graph.hpp>
#include <mindeg/oracle.hpp>
#include <mindeg/process.hpp>
#include <mindeg/random.hpp>
#include <mindeg/rational.hpp>
#include <mindeg/verify.hpp>
