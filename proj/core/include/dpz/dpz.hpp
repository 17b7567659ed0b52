#pragma once

#include "dpz/certificate.hpp"
#include "dpz/errors.hpp"
#include "dpz/int_matrix.hpp"
#include "dpz/involutions.hpp"
#include "dpz/irreducibility.hpp"
#include "dpz/json_io.hpp"
#include "dpz/lattice.hpp"
#include "dpz/named_models.hpp"
#include "dpz/normal_form.hpp"
#include "dpz/reflection_groups.hpp"
#include "dpz/short_vectors.hpp"
#include "dpz/witness_search.hpp"
