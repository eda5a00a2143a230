from pgaext.mul.multiplication.layout import (  # noqa
    RegisterLayout, layout,
)
from pgaext.mul.multiplication.generators import (  # noqa
    LmulVariant, gen_lmul1, gen_lmul2, gen_lmul3, generate, multiply,
    lmul_offsets, expected_offsets, expected_length, measured_length,
    auto_budget,
    log2_floor, ProductOracle, LMUL4_CONSTANTS, LMUL4_TARGETS,
    MultiplicationError,
)
from pgaext.mul.indexed import gen_lmul4  # noqa
