#pragma once

#include "pnarray/array.hpp"
#include "pnarray/column_sequence.hpp"
#include "pnarray/correlation.hpp"
#include "pnarray/family.hpp"
#include "pnarray/finite_field.hpp"
#include "pnarray/shift_sequence.hpp"
#include "pnarray/unfold.hpp"
#include "pnarray/watermark.hpp"
#include "pnarray/window.hpp"
