from pgaext.mul.indexed.addressing import (  # noqa
    EffectiveAddress, index_value, resolve_address,
)
from pgaext.mul.indexed.generators import (  # noqa
    gen_inc, gen_tstne, gen_lmul4, emit_lmul4, index_zone, CounterLoop,
)
