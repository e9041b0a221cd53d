#pragma once

#include "modlang/functor.hpp"
#include "modlang/subobject.hpp"
#include "modlang/fragments.hpp"
#include "modlang/semantics.hpp"
#include "modlang/typing.hpp"
#include "modlang/preservation.hpp"
#include "modlang/oracle.hpp"
#include "modlang/syntax.hpp"
#include "modlang/derivation_io.hpp"
#include "modlang/enumerate.hpp"
#include "modlang/properties.hpp"
