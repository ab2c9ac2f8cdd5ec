"""Exception hierarchy.

Everything raised on bad data or bad parameters derives from
:class:`MobilityError`, itself a ``ValueError``, so callers that only care
about "the input was wrong" can catch one thing.
"""


class MobilityError(ValueError):
    """Base class for all domain and parse errors."""

    code = "mobility_error"


# -- profile construction -------------------------------------------------

class LengthMismatch(MobilityError):
    code = "length_mismatch"


class TooSmall(MobilityError):
    code = "too_small"


class NonFinite(MobilityError):
    code = "non_finite"


# -- domain of a measure --------------------------------------------------

class DomainError(MobilityError):
    """Status values outside the domain where a formula is defined."""

    code = "domain_error"


class NonPositiveForLog(DomainError):
    code = "non_positive_for_log"


class NonPositiveIncome(DomainError):
    code = "non_positive_income"


class NonPositiveOrigin(DomainError):
    code = "non_positive_origin"


class ZeroMean(DomainError):
    code = "zero_mean"


class DegenerateOrigin(DomainError):
    """Period-0 status has zero variance."""

    code = "degenerate_origin"


class DegenerateVariance(DomainError):
    code = "degenerate_variance"


class ZeroDenominator(DomainError):
    code = "zero_denominator"


class DegeneratePartition(DomainError):
    """A decomposition would leave one of its groups empty."""

    code = "degenerate_partition"


# -- parameters -----------------------------------------------------------

class ParameterError(MobilityError):
    code = "bad_parameter"


class BadAlpha(ParameterError):
    code = "bad_alpha"


class BadAlphaTilde(ParameterError):
    code = "bad_alpha_tilde"


class EvenGamma(ParameterError):
    code = "even_gamma"


class NegativeGamma(ParameterError):
    code = "negative_gamma"


# -- file input -----------------------------------------------------------

class ParseError(MobilityError):
    code = "parse_error"


class MissingHeader(ParseError):
    code = "missing_header"


class BadNumber(ParseError):
    code = "bad_number"

    def __init__(self, line, text=""):
        self.line = line
        super().__init__(f"line {line}: cannot parse number {text!r}")


class DuplicateId(ParseError):
    code = "duplicate_id"


class UnknownGroupId(ParseError):
    code = "unknown_group_id"
