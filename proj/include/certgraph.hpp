// Copyright (c) certgraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "certgraph/contracts.hpp"
#include "certgraph/cycle_cert.hpp"
#include "certgraph/digraph.hpp"
#include "certgraph/errors.hpp"
#include "certgraph/graph_file.hpp"
#include "certgraph/graph_view.hpp"
#include "certgraph/oracle.hpp"
#include "certgraph/path_check.hpp"
#include "certgraph/path_invariants.hpp"
#include "certgraph/persistent_graph.hpp"
