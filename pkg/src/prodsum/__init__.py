"""Representations of integers by the form x1*...*xk + x1 + ... + xk."""

from .errors import (
    CheckpointCorrupt,
    InadmissibleSpec,
    InvalidArity,
    InvalidMinPart,
    InvalidRepresentation,
    NotPrime,
    ProdsumError,
    UnknownSequence,
)
from .forms import (
    count_representations,
    enumerate_representations,
    eval_form,
    iter_representations,
    lift_representation,
    nu2_is_zero,
    representation_counts,
)
from .primes import (
    Family,
    PrimeIndex,
    ProgressionSpec,
    is_prime,
    nth_prime,
    prime_count,
    primes_up_to,
    progression_term,
    progression_witness,
    scan_question1,
    scan_question2,
)
from .sequences import (
    ScanCheckpoint,
    SequenceTable,
    generate_table,
    load_checkpoint,
    save_checkpoint,
    scan_zero_terms,
)
from .smallest_k import (
    ZERO,
    MultiplicityProfile,
    SmallestKResult,
    b_value,
    kmax_bound,
    s_sequence,
    smallest_k_direct,
    smallest_k_profiles,
)

__version__ = "0.1.0"
