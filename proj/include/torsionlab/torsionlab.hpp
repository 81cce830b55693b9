#pragma once

#include "torsionlab/error.hpp"
#include "torsionlab/monomial.hpp"
#include "torsionlab/ring.hpp"
#include "torsionlab/linear.hpp"
#include "torsionlab/prime.hpp"
#include "torsionlab/ideal.hpp"
#include "torsionlab/assassin.hpp"
#include "torsionlab/torsion.hpp"
#include "torsionlab/harness.hpp"
#include "torsionlab/format.hpp"
#include "torsionlab/pattern.hpp"
#include "torsionlab/family.hpp"
#include "torsionlab/report.hpp"
#include "torsionlab/dsl/ast.hpp"
#include "torsionlab/dsl/lexer.hpp"
#include "torsionlab/dsl/parser.hpp"
#include "torsionlab/dsl/printer.hpp"
#include "torsionlab/dsl/execute.hpp"
