#pragma once

#include "cubiccm/binforms.hpp"
#include "cubiccm/embeddings.hpp"
#include "cubiccm/errors.hpp"
#include "cubiccm/fixtures.hpp"
#include "cubiccm/frobenius.hpp"
#include "cubiccm/hecke.hpp"
#include "cubiccm/lattices.hpp"
#include "cubiccm/levelgroups.hpp"
#include "cubiccm/matrix.hpp"
#include "cubiccm/quadfield.hpp"
