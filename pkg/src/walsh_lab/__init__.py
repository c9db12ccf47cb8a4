"""Walsh spectra of x -> Tr(x^d) over GF(2^m) and weight distributions of the
cyclic codes whose two nonzeros are alpha^-d and alpha^-1."""

from .errors import (
    DomainError,
    NonInvertibleError,
    ResourceLimitError,
    UnsupportedError,
    WalshLabError,
)
from .field import DEFAULT_TABLE_CAP, PRIMITIVE_POLY, Field, make_field, mod_inverse
from .walsh import (
    Spectrum,
    TruthTable,
    fwht,
    fwht_inplace,
    subfield_sum_check,
    truth_table,
    walsh_coefficient,
    walsh_coefficients,
    walsh_coefficients_naive,
    walsh_spectrum,
)
from .code import (
    Codeword,
    WeightDistribution,
    codeword,
    exhaustive_weight_histogram,
    is_degenerate_exponent,
    min_distance,
    spectrum_to_weights,
    weight_distribution,
    weight_of_pair,
)
from .analysis import (
    BoundCheck,
    CensusReport,
    CharacterSum,
    ExponentProfile,
    NoSixReport,
    PowerMultiset,
    SarwateCheck,
    SolutionSet,
    SquareIdentitySummary,
    character_sum_from_multiset,
    character_sum_square_identities,
    check_bound,
    check_no_six,
    check_sarwate,
    conjugate_power_multiset,
    dickson_is_permutation,
    dickson_value,
    exponent_profile,
    sextic_census,
    subfield_character_sum,
    walsh_from_solutions,
    walsh_solution_set,
    weighted_walsh_identity,
)
from .predict import (
    PredictedSpectrum,
    SpectrumComparison,
    compare,
    predicted_spectrum,
    predicted_spectrum_t_even,
    predicted_spectrum_t_odd,
)

__version__ = "0.1.0"
