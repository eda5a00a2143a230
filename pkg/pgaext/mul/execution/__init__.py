from pgaext.mul.execution.machine import (  # noqa
    RegisterFile, MachineState, ExecutionOutcome, Terminated, Inaction,
    BudgetExceeded, Machine, initial_state, machine_for, step, run,
    compute, ExecutionError, BudgetError, IndexedAddressingDisabledError,
    ComputationError,
)
from pgaext.mul.execution.analysis import (  # noqa
    Halts, NeverHalts, Equivalent, Witness, VerificationReport, Sampled,
    EXHAUSTIVE, EXHAUSTIVE_LIMIT, DEFAULT_STATE_BOUND_LIMIT,
    StateBound, writable_ranges, writable_count, state_bound, decide_halts,
    io_equivalent, verify_function, input_values, StateBoundError,
    ExhaustiveLimitError,
)
