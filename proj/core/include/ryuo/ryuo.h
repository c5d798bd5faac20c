#ifndef RYUO_RYUO_H_
#define RYUO_RYUO_H_

#include "ryuo/closed_form.h"
#include "ryuo/error.h"
#include "ryuo/grundy_table.h"
#include "ryuo/mex.h"
#include "ryuo/move_set.h"
#include "ryuo/moves.h"
#include "ryuo/oracle.h"
#include "ryuo/pass.h"
#include "ryuo/position.h"
#include "ryuo/region.h"
#include "ryuo/rules.h"
#include "ryuo/strategy.h"
#include "ryuo/verification.h"

#endif  // RYUO_RYUO_H_
